"""Command line front end.

Subcommands: validate, check, gen-arg, gen-epi, ultrafilters, duality,
export-dot.  Exit codes are uniform across commands:

* 0 - success (valid model, all formulas true, duality passed or skipped)
* 1 - semantic failure: invariant violations or a false formula
* 2 - usage, file format, formula syntax, or name binding problems
* 3 - a size cap refused the operation
* 4 - the argument model is trivial (admits no ultrafilters)

Defaults (caps, output format, color, seed) can be placed in a JSON config
file named by the ``EPIARG_CONFIG`` environment variable; flags win over the
file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .dot import argument_to_dot, epistemic_to_dot
from .errors import (
    BindingError,
    FormulaSyntaxError,
    ModelFormatError,
    SizeCapExceeded,
    TrivialModelError,
)
from .formula import ARGUMENT, EPISTEMIC, parse_formula, print_formula
from .generation import generate_argument_model, generate_epistemic_model, normalize
from .harness import (
    duality_check,
    random_epistemic_corpus,
    render_duality_text,
)
from .modelio import (
    KIND_ARGUMENT,
    KIND_EPISTEMIC,
    ModelDocument,
    load_model_file,
    write_model_file,
)
from .semantics import eval_batch
from .models import (
    ArgumentModel,
    EpistemicModel,
    PointedArgumentModel,
    PointedEpistemicModel,
    validate_argument,
    validate_epistemic,
)
from .order import enumerate_ultrafilters, compute_preorder, hasse_edges, quotient_classes

CONFIG_ENV = "EPIARG_CONFIG"

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_TRIVIAL = 4


@dataclass
class CliConfig:
    max_worlds: int = 16
    max_arguments: int = 24
    format: str = "text"
    color: bool = False
    seed: int = 0

    @classmethod
    def from_environment(cls) -> "CliConfig":
        config = cls()
        path = os.environ.get(CONFIG_ENV)
        if not path:
            return config
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ModelFormatError(f"config file {path!r}: {exc}") from exc
        if not isinstance(data, dict):
            raise ModelFormatError(f"config file {path!r} must hold a JSON object")
        for key in ("max_worlds", "max_arguments", "seed"):
            if key in data:
                setattr(config, key, int(data[key]))
        if "format" in data:
            config.format = str(data["format"])
        if "color" in data:
            config.color = bool(data["color"])
        return config


def _paint(text: str, code: str, color: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if color else text


class UsageError(Exception):
    pass


class _InvalidModel(Exception):
    pass


def _load(path: str) -> ModelDocument:
    return load_model_file(path)


def _validation(doc: ModelDocument) -> tuple[bool, str]:
    if isinstance(doc.model, EpistemicModel):
        report = validate_epistemic(doc.model)
        carrier = doc.model.worlds
    else:
        report = validate_argument(doc.model)
        carrier = doc.model.arguments
    lines = [] if report.ok else [report.summary()]
    ok = report.ok
    if doc.current is not None and doc.current not in carrier:
        lines.append(f"unknown-current [{doc.current}]: designated point is not declared")
        ok = False
    return ok, "\n".join(lines)


def _require_valid(doc: ModelDocument) -> None:
    ok, text = _validation(doc)
    if not ok:
        raise _InvalidModel(text)


def _point(doc: ModelDocument, at: str | None, role: str) -> str:
    point = at or doc.current
    if point is None:
        raise UsageError(f"no designated {role}: pass --at or set 'current' in the file")
    return point


def cmd_validate(args: argparse.Namespace, config: CliConfig) -> int:
    doc = _load(args.path)
    ok, text = _validation(doc)
    if ok:
        print(f"{args.path}: ok ({doc.kind})")
        return EXIT_OK
    print(text)
    return EXIT_SEMANTIC


def cmd_check(args: argparse.Namespace, config: CliConfig) -> int:
    doc = _load(args.path)
    _require_valid(doc)
    point = _point(doc, args.at, "point")
    if args.formula is not None:
        texts = [args.formula]
    else:
        texts = []
        for raw in Path(args.formulas).read_text(encoding="utf-8").splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                texts.append(line)
    kind = EPISTEMIC if isinstance(doc.model, EpistemicModel) else ARGUMENT
    formulas = [parse_formula(text, kind, doc.model.signature) for text in texts]
    if isinstance(doc.model, EpistemicModel):
        pointed: PointedEpistemicModel | PointedArgumentModel = PointedEpistemicModel(doc.model, point)
    else:
        pointed = PointedArgumentModel(doc.model, point)
    values = eval_batch(pointed, formulas)
    for formula, value in zip(formulas, values):
        word = _paint("true", "32", config.color) if value else _paint("false", "31", config.color)
        print(f"{print_formula(formula)} = {word}")
    return EXIT_OK if all(values) else EXIT_SEMANTIC


def cmd_gen_arg(args: argparse.Namespace, config: CliConfig) -> int:
    doc = _load(args.path)
    if not isinstance(doc.model, EpistemicModel):
        raise UsageError("gen-arg expects an epistemic model file")
    _require_valid(doc)
    pointed = PointedEpistemicModel(doc.model, _point(doc, args.at, "world"))
    if pointed.current not in doc.model.worlds:
        raise BindingError(f"unknown world {pointed.current!r}")
    if args.normalize:
        pointed, flips = normalize(pointed)
        flipped = [p for p, did in flips.items() if did]
        print("normalized, flipped: " + (", ".join(flipped) if flipped else "nothing"))
    generated = generate_argument_model(pointed, max_worlds=args.max_worlds or config.max_worlds)
    model = generated.model
    print(f"arguments: {len(model.arguments)}")
    for prop in model.signature.propositions:
        print(f"attacks[{prop}]: {len(model.attack(prop))} pairs")
    for agent in model.signature.agents:
        print(f"available[{agent}]: {len(model.available_to(agent))} arguments")
    print(f"designated argument: {generated.current}")
    if args.out:
        out_doc = ModelDocument(
            KIND_ARGUMENT,
            model,
            generated.current,
            {"arguments": {name: list(worlds) for name, worlds in generated.subsets.items()}},
        )
        write_model_file(args.out, out_doc)
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_gen_epi(args: argparse.Namespace, config: CliConfig) -> int:
    doc = _load(args.path)
    if not isinstance(doc.model, ArgumentModel):
        raise UsageError("gen-epi expects an argument model file")
    _require_valid(doc)
    pointed = PointedArgumentModel(doc.model, _point(doc, args.at, "argument"))
    if pointed.current not in doc.model.arguments:
        raise BindingError(f"unknown argument {pointed.current!r}")
    generated = generate_epistemic_model(pointed, max_arguments=args.max_arguments or config.max_arguments)
    model = generated.model
    print(f"worlds (ultrafilters): {len(model.worlds)}")
    for world in model.worlds:
        trues = ", ".join(model.true_propositions(world)) or "(none)"
        print(f"  {world}: {trues}")
    if generated.current is not None:
        print(f"designated world: {generated.current}")
    else:
        print(f"no unique designated world: {generated.current_note}")
    if args.out:
        out_doc = ModelDocument(
            KIND_EPISTEMIC,
            model,
            generated.current,
            {"worlds": {name: list(members) for name, members in generated.ultrafilters.items()}},
        )
        write_model_file(args.out, out_doc)
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_ultrafilters(args: argparse.Namespace, config: CliConfig) -> int:
    doc = _load(args.path)
    if not isinstance(doc.model, ArgumentModel):
        raise UsageError("ultrafilters expects an argument model file")
    _require_valid(doc)
    ultras = enumerate_ultrafilters(doc.model, max_arguments=args.max_arguments or config.max_arguments)
    order = compute_preorder(doc.model)

    def class_name(cls: tuple[str, ...]) -> str:
        return cls[0] if len(cls) == 1 else "{" + "~".join(cls) + "}"

    print(f"strength classes: {len(quotient_classes(order))}")
    edges = hasse_edges(order)
    if edges:
        print("strength order (stronger < weaker):")
        for lower, upper in edges:
            print(f"  {class_name(lower)} < {class_name(upper)}")
    index = {name: i for i, name in enumerate(doc.model.arguments)}
    if not ultras:
        print("trivial: no ultrafilters")
        return EXIT_TRIVIAL
    print(f"ultrafilters: {len(ultras)}")
    for ultra in ultras:
        members = sorted(ultra.members, key=index.__getitem__)
        print("  {" + ",".join(members) + "}")
    return EXIT_OK


def cmd_duality(args: argparse.Namespace, config: CliConfig) -> int:
    reports = []
    labels = []
    if args.random:
        corpus = random_epistemic_corpus(args.count, args.seed if args.seed is not None else config.seed)
        for at, source in enumerate(corpus):
            reports.append(
                duality_check(
                    source,
                    max_connectives=args.depth,
                    max_worlds=args.max_worlds or config.max_worlds,
                    max_arguments=args.max_arguments or config.max_arguments,
                )
            )
            labels.append(f"random[{at}]")
    else:
        if args.path is None:
            raise UsageError("duality needs a model path or --random")
        doc = _load(args.path)
        if not isinstance(doc.model, EpistemicModel):
            raise UsageError("duality expects an epistemic model file")
        _require_valid(doc)
        pointed = PointedEpistemicModel(doc.model, _point(doc, args.at, "world"))
        reports.append(
            duality_check(
                pointed,
                max_connectives=args.depth,
                max_worlds=args.max_worlds or config.max_worlds,
                max_arguments=args.max_arguments or config.max_arguments,
            )
        )
        labels.append(args.path)

    output_format = args.format or config.format
    if output_format == "json":
        payload = [report.to_dict(include_verdicts=not args.random) for report in reports]
        print(json.dumps(payload[0] if len(payload) == 1 and not args.random else payload, indent=2))
    else:
        for label, report in zip(labels, reports):
            if len(reports) > 1:
                if report.skipped:
                    status = "skip"
                else:
                    status = "pass" if report.passed else "FAIL"
                status = _paint(status, "32" if status != "FAIL" else "31", config.color)
                print(
                    f"{label}: {status} ({report.source_worlds} worlds, "
                    f"{report.formula_count} formulas, {len(report.disagreements)} disagreements)"
                )
            else:
                print(f"== {label} ==")
                print(render_duality_text(report))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_SEMANTIC


def cmd_export_dot(args: argparse.Namespace, config: CliConfig) -> int:
    doc = _load(args.path)
    if isinstance(doc.model, EpistemicModel):
        text = epistemic_to_dot(doc.model, skip_self_loops=args.skip_self_loops)
    else:
        text = argument_to_dot(doc.model, reverse_arrows=args.reverse_arrows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epiarg",
        description="Epistemic and argument Kripke models with two-way generation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check every structural invariant of a model file")
    p.add_argument("path")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("check", help="evaluate formulas at a point of a model")
    p.add_argument("path")
    p.add_argument("--at", help="designated world/argument (default: the file's 'current')")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--formula", help="one formula")
    group.add_argument("--formulas", help="file with one formula per line, # comments")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("gen-arg", help="generate the argument model of a pointed epistemic model")
    p.add_argument("path")
    p.add_argument("--at", help="designated world")
    p.add_argument("--normalize", action="store_true", help="normalize the valuation first")
    p.add_argument("--out", help="write the generated model file here")
    p.add_argument("--max-worlds", type=int, default=None)
    p.set_defaults(run=cmd_gen_arg)

    p = sub.add_parser("gen-epi", help="generate the epistemic model of a pointed argument model")
    p.add_argument("path")
    p.add_argument("--at", help="designated argument")
    p.add_argument("--out", help="write the generated model file here")
    p.add_argument("--max-arguments", type=int, default=None)
    p.set_defaults(run=cmd_gen_epi)

    p = sub.add_parser("ultrafilters", help="print the strength order and all ultrafilters")
    p.add_argument("path")
    p.add_argument("--max-arguments", type=int, default=None)
    p.set_defaults(run=cmd_ultrafilters)

    p = sub.add_parser("duality", help="run the duality check on a model or a random corpus")
    p.add_argument("path", nargs="?")
    p.add_argument("--at", help="designated world")
    p.add_argument("--depth", type=int, default=2, help="restricted formula connective budget")
    p.add_argument("--random", action="store_true", help="run on a seeded random corpus instead of a file")
    p.add_argument("--count", type=int, default=20, help="corpus size for --random")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default=None)
    p.add_argument("--max-worlds", type=int, default=None)
    p.add_argument("--max-arguments", type=int, default=None)
    p.set_defaults(run=cmd_duality)

    p = sub.add_parser("export-dot", help="render a model file as Graphviz DOT")
    p.add_argument("path")
    p.add_argument("--out")
    p.add_argument("--reverse-arrows", action="store_true", help="draw attacker -> attacked instead")
    p.add_argument("--skip-self-loops", action="store_true")
    p.set_defaults(run=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig.from_environment()
        return args.run(args, config)
    except _InvalidModel as exc:
        print(exc, file=sys.stderr)
        return EXIT_SEMANTIC
    except (UsageError, ModelFormatError, FormulaSyntaxError, BindingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except TrivialModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRIVIAL


if __name__ == "__main__":
    sys.exit(main())

"""Executable verification of the duality between the two model classes.

``duality_check`` runs the full pipeline on one pointed epistemic model:
normalize the valuation, generate the argument model, generate the epistemic
model back from it, and compare the truth of every restricted formula up to a
connective budget at the designated world against the corresponding
principal ultrafilter.  Restricted formulas (knowledge boxes over bare
literals only) are the guaranteed fragment; a handful of unrestricted
formulas are evaluated too, reported separately as purely informational.

``lemma_suite`` checks the supporting facts the duality rests on, quantified
exhaustively over the finite structures.  ``oracle_ultrafilters`` is a
deliberately naive full subset scan used to cross-check the quotient-based
ultrafilter enumeration.  Random model generators are seeded and fully
deterministic.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import SizeCapExceeded, TrivialModelError
from .formula import (
    And,
    Formula,
    Knows,
    Prop,
    enumerate_restricted,
    print_formula,
)
from .generation import (
    GeneratedArgumentModel,
    generate_argument_model,
    generate_epistemic_model,
    normalize,
    principal_ultrafilter,
    subset_id,
    ultrafilter_id,
)
from .models import (
    ArgumentModel,
    EpistemicModel,
    PointedArgumentModel,
    PointedEpistemicModel,
    Signature,
)
from .order import ULTRAFILTER, ArgumentSet, classify_set, compute_preorder
from .semantics import eval_epistemic


@dataclass(frozen=True)
class FormulaVerdict:
    """Truth of one formula on both sides of the pipeline."""

    formula: str
    source_value: bool
    generated_value: bool
    restricted: bool

    @property
    def agree(self) -> bool:
        return self.source_value == self.generated_value


@dataclass(frozen=True)
class DualityReport:
    """Outcome of one duality run; ``passed`` means zero disagreements."""

    source_worlds: int
    propositions: int
    agents: int
    flipped: tuple[str, ...]
    skipped: bool
    skip_reason: str | None
    elapsed_seconds: float
    argument_count: int | None = None
    ultrafilter_count: int | None = None
    designated_world: str | None = None
    formula_count: int = 0
    verdicts: tuple[FormulaVerdict, ...] = ()
    informational: tuple[FormulaVerdict, ...] = ()

    @property
    def disagreements(self) -> tuple[FormulaVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.agree)

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def to_dict(self, include_verdicts: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "source_worlds": self.source_worlds,
            "propositions": self.propositions,
            "agents": self.agents,
            "flipped": list(self.flipped),
            "skipped": self.skipped,
            "skip_reason": self.skip_reason,
            "argument_count": self.argument_count,
            "ultrafilter_count": self.ultrafilter_count,
            "designated_world": self.designated_world,
            "formula_count": self.formula_count,
            "disagreement_count": len(self.disagreements),
            "passed": self.passed,
            "elapsed_seconds": self.elapsed_seconds,
        }
        if include_verdicts:
            out["verdicts"] = [
                {
                    "formula": v.formula,
                    "source": v.source_value,
                    "generated": v.generated_value,
                    "agree": v.agree,
                }
                for v in self.verdicts
            ]
        out["informational"] = [
            {
                "formula": v.formula,
                "source": v.source_value,
                "generated": v.generated_value,
                "agree": v.agree,
            }
            for v in self.informational
        ]
        return out


def render_duality_text(report: DualityReport) -> str:
    """Human-readable account of one duality run."""
    lines = [
        f"source: {report.source_worlds} worlds, {report.propositions} propositions, {report.agents} agents",
        f"normalization flipped: {', '.join(report.flipped) if report.flipped else 'nothing'}",
    ]
    if report.skipped:
        lines.append(f"skipped: {report.skip_reason}")
        return "\n".join(lines)
    lines.append(f"generated arguments: {report.argument_count}, ultrafilters: {report.ultrafilter_count}")
    lines.append(f"designated world: {report.designated_world}")
    verdict = "pass" if report.passed else "FAIL"
    lines.append(
        f"restricted formulas checked: {report.formula_count}, disagreements: {len(report.disagreements)} -> {verdict}"
    )
    for v in report.disagreements:
        lines.append(f"  DISAGREE {v.formula}: source={v.source_value} generated={v.generated_value}")
    if report.informational:
        lines.append("outside the guarantee (informational only):")
        for v in report.informational:
            mark = "agree" if v.agree else "differ"
            lines.append(f"  {mark} {v.formula}: source={v.source_value} generated={v.generated_value}")
    lines.append(f"elapsed: {report.elapsed_seconds:.3f}s")
    return "\n".join(lines)


def informational_formulas(signature: Signature) -> list[Formula]:
    """A small family of unrestricted formulas: nested boxes and boxed conjunctions."""
    out: list[Formula] = []
    props = signature.propositions
    agents = signature.agents
    if len(props) >= 2:
        for i in agents:
            out.append(Knows(i, And(Prop(props[0]), Prop(props[1]))))
    for i in agents:
        for j in agents:
            out.append(Knows(i, Knows(j, Prop(props[0]))))
    return out


def duality_check(
    source: PointedEpistemicModel,
    max_connectives: int = 2,
    max_worlds: int = 16,
    max_arguments: int = 24,
    enumeration_cap: int = 500_000,
    _drop_valuation_guard: bool = False,
) -> DualityReport:
    """Run the whole pipeline on one pointed epistemic model.

    The source is normalized first (recorded in the report), the trivial case
    is reported as a skip, and caps raise rather than truncate.
    """
    start = time.perf_counter()
    model = source.model
    summary = dict(
        source_worlds=len(model.worlds),
        propositions=len(model.signature.propositions),
        agents=len(model.signature.agents),
    )
    normalized, flips = normalize(source)
    flipped = tuple(p for p in model.signature.propositions if flips[p])

    generated_argument = generate_argument_model(normalized, max_worlds=max_worlds)
    try:
        generated_epistemic = generate_epistemic_model(
            generated_argument.pointed,
            max_arguments=max_arguments,
            _drop_valuation_guard=_drop_valuation_guard,
        )
    except TrivialModelError as exc:
        return DualityReport(
            **summary,
            flipped=flipped,
            skipped=True,
            skip_reason=str(exc),
            elapsed_seconds=time.perf_counter() - start,
        )

    tau = principal_ultrafilter(generated_argument, normalized.current)
    tau_world = ultrafilter_id(tau.members, generated_argument.model.arguments)
    if tau_world not in generated_epistemic.model.worlds:
        raise RuntimeError("principal ultrafilter missing from the generated worlds")
    if generated_epistemic.current is not None and generated_epistemic.current != tau_world:
        raise RuntimeError("designated world disagrees with the principal ultrafilter")

    source_point = normalized
    generated_point = PointedEpistemicModel(generated_epistemic.model, tau_world)
    source_cache: dict = {}
    generated_cache: dict = {}

    formulas = enumerate_restricted(model.signature, max_connectives, cap=enumeration_cap)
    verdicts = tuple(
        FormulaVerdict(
            print_formula(f),
            eval_epistemic(source_point, f, source_cache),
            eval_epistemic(generated_point, f, generated_cache),
            restricted=True,
        )
        for f in formulas
    )
    informational = tuple(
        FormulaVerdict(
            print_formula(f),
            eval_epistemic(source_point, f, source_cache),
            eval_epistemic(generated_point, f, generated_cache),
            restricted=False,
        )
        for f in informational_formulas(model.signature)
    )
    return DualityReport(
        **summary,
        flipped=flipped,
        skipped=False,
        skip_reason=None,
        elapsed_seconds=time.perf_counter() - start,
        argument_count=len(generated_argument.model.arguments),
        ultrafilter_count=len(generated_epistemic.model.worlds),
        designated_world=tau_world,
        formula_count=len(formulas),
        verdicts=verdicts,
        informational=informational,
    )


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class LemmaSuiteReport:
    checks: tuple[LemmaCheck, ...]
    skipped: bool
    skip_reason: str | None

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)


def lemma_suite(
    source: PointedEpistemicModel,
    max_worlds: int = 16,
    max_arguments: int = 24,
) -> LemmaSuiteReport:
    """Exhaustively check the supporting facts behind the duality on one model.

    The source is normalized first.  Checks, each quantified over everything
    in range: singleton arguments are order-minimal; their upward closures
    classify as ultrafilters; subset inclusion implies strength; atoms keep
    their truth across the pipeline; indistinguishability links between the
    designated world and its peers survive; and every truth value of an atom
    at a world related to the designated one is witnessed by a related source
    world.
    """
    normalized, _ = normalize(source)
    model = normalized.model
    s = normalized.current
    generated = generate_argument_model(normalized, max_worlds=max_worlds)
    order = compute_preorder(generated.model)
    try:
        epi = generate_epistemic_model(generated.pointed, max_arguments=max_arguments)
    except TrivialModelError as exc:
        return LemmaSuiteReport((), skipped=True, skip_reason=str(exc))

    carrier = generated.model.arguments
    singleton = {t: subset_id((t,)) for t in model.worlds}
    tau_world = {
        t: ultrafilter_id(order.upward(singleton[t]), carrier) for t in model.worlds
    }
    checks: list[LemmaCheck] = []

    def record(name: str, counterexample: str | None) -> None:
        checks.append(LemmaCheck(name, counterexample is None, counterexample))

    bad = None
    for t in model.worlds:
        for u in carrier:
            if order.leq(u, singleton[t]) and not order.leq(singleton[t], u):
                bad = f"{u} sits strictly below {singleton[t]}"
                break
        if bad:
            break
    record("singleton-minimality", bad)

    bad = None
    for t in model.worlds:
        outcome = classify_set(order.upward(singleton[t]), order)
        if outcome.classification != ULTRAFILTER:
            bad = f"upward closure of {singleton[t]} classifies as {outcome.classification}"
            break
    record("principal-ultrafilters", bad)

    bad = None
    for u, u_worlds in generated.subsets.items():
        for v, v_worlds in generated.subsets.items():
            if set(u_worlds) <= set(v_worlds) and not order.leq(u, v):
                bad = f"{u} is a subset of {v} but not below it"
                break
        if bad:
            break
    record("subset-strength", bad)

    bad = None
    for t in model.worlds:
        if tau_world[t] not in epi.model.worlds:
            bad = f"principal ultrafilter of {t} is not a generated world"
            break
        for p in model.signature.propositions:
            left = epi.model.holds(p, tau_world[t])
            right = model.holds(p, t)
            if left != right:
                bad = f"{p} at {tau_world[t]} is {left} but at {t} is {right}"
                break
        if bad:
            break
    record("atom-invariance", bad)

    bad = None
    for agent in model.signature.agents:
        for t in model.related(agent, s):
            if (tau_world[s], tau_world[t]) not in epi.model.relation(agent):
                bad = f"({s}, {t}) in the source relation for {agent} has no image link"
                break
        if bad:
            break
    record("class-link-preservation", bad)

    bad = None
    for agent in model.signature.agents:
        peers = model.related(agent, s)
        for other in epi.model.related(agent, tau_world[s]):
            for p in model.signature.propositions:
                value = epi.model.holds(p, other)
                if not any(model.holds(p, t) == value for t in peers):
                    bad = f"{p}={value} at {other} has no witness among {list(peers)}"
                    break
            if bad:
                break
        if bad:
            break
    record("witness-recovery", bad)

    return LemmaSuiteReport(tuple(checks), skipped=False, skip_reason=None)


def oracle_ultrafilters(model: ArgumentModel, max_arguments: int = 20) -> list[ArgumentSet]:
    """Ultrafilters by brute force: scan all subsets, apply the axioms literally.

    Independent of the quotient shortcut in ``enumerate_ultrafilters``; the
    two must agree exactly.  Exponential, hence the lower cap.
    """
    size = len(model.arguments)
    if size > max_arguments:
        raise SizeCapExceeded(f"{size} arguments exceed the oracle cap of {max_arguments}")
    order = compute_preorder(model)
    index = {name: i for i, name in enumerate(model.arguments)}
    up_masks = [0] * size
    down_masks = [0] * size
    for u, v in order.pairs:
        up_masks[index[u]] |= 1 << index[v]
        down_masks[index[v]] |= 1 << index[u]

    filters = []
    for mask in range(1, 1 << size):
        bits = [i for i in range(size) if mask >> i & 1]
        if any(up_masks[i] & ~mask for i in bits):
            continue
        if any(not (down_masks[i] & down_masks[j] & mask) for i in bits for j in bits):
            continue
        filters.append(mask)

    full = (1 << size) - 1
    ultra_masks = [
        mask
        for mask in filters
        if mask != full and not any(other != mask and other & mask == mask for other in filters)
    ]
    def members_of(mask: int) -> frozenset[str]:
        return frozenset(model.arguments[i] for i in range(size) if mask >> i & 1)

    ordered = sorted(
        (members_of(mask) for mask in ultra_masks),
        key=lambda members: tuple(sorted(members, key=index.__getitem__)),
    )
    return [ArgumentSet(members, ULTRAFILTER) for members in ordered]


@dataclass(frozen=True)
class RandomModelSpec:
    """Knobs for seeded random epistemic models.

    ``worlds`` is an inclusive size range; ``class_split`` is the chance a
    world starts a fresh indistinguishability class instead of joining an
    existing one; ``valuation_density`` is the chance a proposition holds at
    a world.
    """

    worlds: tuple[int, int] = (1, 4)
    propositions: int = 2
    agents: int = 2
    seed: int = 0
    class_split: float = 0.5
    valuation_density: float = 0.5


def random_epistemic_model(spec: RandomModelSpec) -> PointedEpistemicModel:
    """Seeded random pointed epistemic model; equal specs give equal models."""
    rng = random.Random(spec.seed)
    count = rng.randint(*spec.worlds)
    worlds = tuple(f"s{i + 1}" for i in range(count))
    props = tuple(f"p{i + 1}" for i in range(spec.propositions))
    agents = tuple(f"a{i + 1}" for i in range(spec.agents))
    relations: dict[str, set[tuple[str, str]]] = {}
    for agent in agents:
        blocks: list[list[str]] = []
        for world in worlds:
            if not blocks or rng.random() < spec.class_split:
                blocks.append([world])
            else:
                blocks[rng.randrange(len(blocks))].append(world)
        relations[agent] = {(u, v) for block in blocks for u in block for v in block}
    valuation = {
        p: frozenset(w for w in worlds if rng.random() < spec.valuation_density) for p in props
    }
    model = EpistemicModel.make(Signature(props, agents), worlds, relations, valuation)
    return PointedEpistemicModel(model, rng.choice(worlds))


@dataclass(frozen=True)
class RandomArgumentSpec:
    """Knobs for seeded random argument models."""

    arguments: tuple[int, int] = (1, 8)
    propositions: int = 2
    agents: int = 2
    seed: int = 0
    attack_density: float = 0.25
    availability_density: float = 0.5


def random_argument_model(spec: RandomArgumentSpec) -> PointedArgumentModel:
    """Seeded random pointed argument model with irreflexive attacks."""
    rng = random.Random(spec.seed)
    count = rng.randint(*spec.arguments)
    arguments = tuple(f"U{i + 1}" for i in range(count))
    props = tuple(f"p{i + 1}" for i in range(spec.propositions))
    agents = tuple(f"a{i + 1}" for i in range(spec.agents))
    attacks = {
        p: {
            (u, v)
            for u in arguments
            for v in arguments
            if u != v and rng.random() < spec.attack_density
        }
        for p in props
    }
    availability = {
        a: frozenset(u for u in arguments if rng.random() < spec.availability_density)
        for a in agents
    }
    model = ArgumentModel.make(Signature(props, agents), arguments, attacks, availability)
    return PointedArgumentModel(model, rng.choice(arguments))


def random_epistemic_corpus(
    count: int,
    seed: int,
    worlds: tuple[int, int] = (1, 4),
    max_propositions: int = 2,
    max_agents: int = 2,
) -> list[PointedEpistemicModel]:
    """A deterministic corpus: sizes and sub-seeds drawn from one master seed."""
    master = random.Random(seed)
    corpus = []
    for _ in range(count):
        spec = RandomModelSpec(
            worlds=worlds,
            propositions=master.randint(1, max_propositions),
            agents=master.randint(1, max_agents),
            seed=master.getrandbits(32),
        )
        corpus.append(random_epistemic_model(spec))
    return corpus


def random_argument_corpus(
    count: int,
    seed: int,
    arguments: tuple[int, int] = (1, 8),
    max_propositions: int = 2,
    max_agents: int = 2,
) -> list[PointedArgumentModel]:
    """A deterministic corpus of argument models from one master seed."""
    master = random.Random(seed)
    corpus = []
    for _ in range(count):
        spec = RandomArgumentSpec(
            arguments=arguments,
            propositions=master.randint(1, max_propositions),
            agents=master.randint(1, max_agents),
            seed=master.getrandbits(32),
        )
        corpus.append(random_argument_model(spec))
    return corpus

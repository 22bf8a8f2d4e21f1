"""Reading and writing model files.

A model file is a single UTF-8 JSON document:

* ``kind``: ``"epistemic"`` or ``"argument"``
* ``propositions``, ``agents``: name lists
* ``worlds`` + ``relations`` + ``valuation`` for epistemic models, or
  ``arguments`` + ``attacks`` + ``availability`` for argument models
* ``current``: optional designated world/argument
* ``provenance``: optional, added by the generators (argument id to world
  subset, or world id to ultrafilter members)

Relations and attacks are maps from name to explicit pair lists; an attack
pair ``[u, v]`` means v attacks u.  Missing relation or valuation entries are
read as empty (the validator then reports what that breaks, e.g. a missing
equivalence relation shows up as reflexivity violations).

Serialization is canonical: arrays follow declaration order and pair lists
are sorted by declaration indices, so writing the same model twice produces
identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import ModelFormatError
from .models import ArgumentModel, EpistemicModel, Signature

KIND_EPISTEMIC = "epistemic"
KIND_ARGUMENT = "argument"


@dataclass(frozen=True)
class ModelDocument:
    """One parsed model file: the model, its kind, and optional extras."""

    kind: str
    model: EpistemicModel | ArgumentModel
    current: str | None = None
    provenance: dict[str, Any] | None = None


def _require(data: dict, key: str, expected: type) -> Any:
    if key not in data:
        raise ModelFormatError(f"missing required key {key!r}")
    value = data[key]
    if not isinstance(value, expected):
        raise ModelFormatError(f"key {key!r} must be a {expected.__name__}, got {type(value).__name__}")
    return value


def _name_list(data: dict, key: str) -> tuple[str, ...]:
    raw = _require(data, key, list)
    for item in raw:
        if not isinstance(item, str):
            raise ModelFormatError(f"entries of {key!r} must be strings, got {type(item).__name__}")
    return tuple(raw)


def _pair_map(data: dict, key: str) -> dict[str, list[tuple[str, str]]]:
    raw = _require(data, key, dict)
    out: dict[str, list[tuple[str, str]]] = {}
    for name, pairs in raw.items():
        if not isinstance(pairs, list):
            raise ModelFormatError(f"{key}[{name!r}] must be a list of pairs")
        collected = []
        for pair in pairs:
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
                raise ModelFormatError(f"{key}[{name!r}] contains a malformed pair: {pair!r}")
            collected.append((pair[0], pair[1]))
        out[name] = collected
    return out


def _set_map(data: dict, key: str) -> dict[str, list[str]]:
    raw = _require(data, key, dict)
    out: dict[str, list[str]] = {}
    for name, members in raw.items():
        if not (isinstance(members, list) and all(isinstance(x, str) for x in members)):
            raise ModelFormatError(f"{key}[{name!r}] must be a list of names")
        out[name] = list(members)
    return out


def document_from_dict(data: Any) -> ModelDocument:
    if not isinstance(data, dict):
        raise ModelFormatError("model document must be a JSON object")
    kind = _require(data, "kind", str)
    signature = Signature.of(_name_list(data, "propositions"), _name_list(data, "agents"))
    current = data.get("current")
    if current is not None and not isinstance(current, str):
        raise ModelFormatError("key 'current' must be a string")
    provenance = data.get("provenance")
    if provenance is not None and not isinstance(provenance, dict):
        raise ModelFormatError("key 'provenance' must be an object")

    if kind == KIND_EPISTEMIC:
        model: EpistemicModel | ArgumentModel = EpistemicModel.make(
            signature,
            _name_list(data, "worlds"),
            _pair_map(data, "relations"),
            _set_map(data, "valuation"),
        )
    elif kind == KIND_ARGUMENT:
        model = ArgumentModel.make(
            signature,
            _name_list(data, "arguments"),
            _pair_map(data, "attacks"),
            _set_map(data, "availability"),
        )
    else:
        raise ModelFormatError(f"unknown model kind {kind!r}")
    return ModelDocument(kind, model, current, provenance)


def _index_for(carrier: tuple[str, ...]) -> dict[str, int]:
    # Undeclared names sort after declared ones; validation reports them.
    index = {name: i for i, name in enumerate(carrier)}
    return index


def _sorted_pairs(pairs: frozenset[tuple[str, str]], index: dict[str, int]) -> list[list[str]]:
    big = len(index)

    def key(pair: tuple[str, str]) -> tuple[int, int, str, str]:
        return (index.get(pair[0], big), index.get(pair[1], big), pair[0], pair[1])

    return [[u, v] for u, v in sorted(pairs, key=key)]


def _sorted_names(names: frozenset[str], index: dict[str, int]) -> list[str]:
    big = len(index)
    return sorted(names, key=lambda n: (index.get(n, big), n))


def document_to_dict(doc: ModelDocument) -> dict[str, Any]:
    model = doc.model
    out: dict[str, Any] = {
        "kind": doc.kind,
        "propositions": list(model.signature.propositions),
        "agents": list(model.signature.agents),
    }
    if isinstance(model, EpistemicModel):
        index = _index_for(model.worlds)
        out["worlds"] = list(model.worlds)
        out["relations"] = {a: _sorted_pairs(model.relation(a), index) for a in model.signature.agents}
        out["valuation"] = {p: _sorted_names(model.valuation.get(p, frozenset()), index) for p in model.signature.propositions}
    else:
        index = _index_for(model.arguments)
        out["arguments"] = list(model.arguments)
        out["attacks"] = {p: _sorted_pairs(model.attack(p), index) for p in model.signature.propositions}
        out["availability"] = {a: _sorted_names(model.available_to(a), index) for a in model.signature.agents}
    if doc.current is not None:
        out["current"] = doc.current
    if doc.provenance is not None:
        out["provenance"] = doc.provenance
    return out


def load_model_file(path: str | Path) -> ModelDocument:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"not valid JSON: {exc}") from exc
    return document_from_dict(data)


def write_model_file(path: str | Path, doc: ModelDocument) -> None:
    Path(path).write_text(dumps_document(doc), encoding="utf-8")


def dumps_document(doc: ModelDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"

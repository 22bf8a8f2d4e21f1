"""Finite Kripke structures for knowledge and for argumentation.

Two model classes share a signature of proposition and agent names:

* an epistemic model: worlds, one equivalence relation per agent, and a
  valuation assigning each proposition the set of worlds where it holds;
* an argument model: arguments, one irreflexive attack relation per
  proposition, and an availability set per agent.

Attack pairs follow the convention that ``(u, v)`` in ``attacks[p]`` means
*v attacks u* with respect to p.  Everything is immutable after construction
and all iteration respects declaration order, so equal inputs produce
byte-identical outputs downstream.

Validation never raises: it returns the full list of broken invariants as
data, which the command line renders and tests inspect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

Pair = tuple[str, str]


@dataclass(frozen=True)
class Signature:
    """Declared proposition and agent names, in declaration order."""

    propositions: tuple[str, ...]
    agents: tuple[str, ...]

    @classmethod
    def of(cls, propositions: Iterable[str], agents: Iterable[str]) -> "Signature":
        return cls(tuple(propositions), tuple(agents))


def _freeze_pairs(relations: Mapping[str, Iterable[tuple[str, str]]]) -> dict[str, frozenset[Pair]]:
    return {key: frozenset((a, b) for a, b in pairs) for key, pairs in relations.items()}


def _freeze_sets(sets: Mapping[str, Iterable[str]]) -> dict[str, frozenset[str]]:
    return {key: frozenset(values) for key, values in sets.items()}


@dataclass(frozen=True)
class EpistemicModel:
    """Worlds with per-agent equivalence relations and a valuation."""

    signature: Signature
    worlds: tuple[str, ...]
    relations: dict[str, frozenset[Pair]] = field(default_factory=dict)
    valuation: dict[str, frozenset[str]] = field(default_factory=dict)

    @classmethod
    def make(
        cls,
        signature: Signature,
        worlds: Iterable[str],
        relations: Mapping[str, Iterable[tuple[str, str]]],
        valuation: Mapping[str, Iterable[str]],
    ) -> "EpistemicModel":
        return cls(signature, tuple(worlds), _freeze_pairs(relations), _freeze_sets(valuation))

    def world_index(self, world: str) -> int:
        return self.worlds.index(world)

    def relation(self, agent: str) -> frozenset[Pair]:
        return self.relations.get(agent, frozenset())

    def related(self, agent: str, world: str) -> tuple[str, ...]:
        """Worlds the agent cannot distinguish from ``world``, in declaration order."""
        pairs = self.relation(agent)
        return tuple(t for t in self.worlds if (world, t) in pairs)

    def holds(self, prop: str, world: str) -> bool:
        return world in self.valuation.get(prop, frozenset())

    def true_propositions(self, world: str) -> tuple[str, ...]:
        return tuple(p for p in self.signature.propositions if self.holds(p, world))


@dataclass(frozen=True)
class ArgumentModel:
    """Arguments with per-proposition attack relations and per-agent availability.

    ``(u, v)`` in ``attacks[p]`` means v attacks u with respect to p.
    """

    signature: Signature
    arguments: tuple[str, ...]
    attacks: dict[str, frozenset[Pair]] = field(default_factory=dict)
    availability: dict[str, frozenset[str]] = field(default_factory=dict)

    @classmethod
    def make(
        cls,
        signature: Signature,
        arguments: Iterable[str],
        attacks: Mapping[str, Iterable[tuple[str, str]]],
        availability: Mapping[str, Iterable[str]],
    ) -> "ArgumentModel":
        return cls(signature, tuple(arguments), _freeze_pairs(attacks), _freeze_sets(availability))

    def argument_index(self, argument: str) -> int:
        return self.arguments.index(argument)

    def attack(self, prop: str) -> frozenset[Pair]:
        return self.attacks.get(prop, frozenset())

    def attackers_of(self, argument: str, prop: str) -> tuple[str, ...]:
        """Arguments that attack ``argument`` with respect to ``prop``."""
        pairs = self.attack(prop)
        return tuple(v for v in self.arguments if (argument, v) in pairs)

    def available_to(self, agent: str) -> frozenset[str]:
        return self.availability.get(agent, frozenset())


@dataclass(frozen=True)
class PointedEpistemicModel:
    model: EpistemicModel
    current: str


@dataclass(frozen=True)
class PointedArgumentModel:
    model: ArgumentModel
    current: str


@dataclass(frozen=True)
class Violation:
    """One broken invariant: a machine-checkable code plus a readable message."""

    code: str
    subject: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{v.code} [{v.subject}]: {v.message}" for v in self.violations)


def _signature_violations(signature: Signature) -> list[Violation]:
    found = []
    if not signature.propositions:
        found.append(Violation("empty-propositions", "signature", "no propositions declared"))
    if not signature.agents:
        found.append(Violation("empty-agents", "signature", "no agents declared"))
    for kind, names in (("proposition", signature.propositions), ("agent", signature.agents)):
        seen = set()
        for name in names:
            if name in seen:
                found.append(Violation("duplicate-name", kind, f"{kind} {name!r} declared twice"))
            seen.add(name)
    overlap = set(signature.propositions) & set(signature.agents)
    for name in sorted(overlap):
        found.append(Violation("name-overlap", "signature", f"{name!r} is both a proposition and an agent"))
    return found


def _carrier_violations(kind: str, carrier: tuple[str, ...]) -> list[Violation]:
    found = []
    if not carrier:
        found.append(Violation(f"empty-{kind}", kind, f"no {kind} declared"))
    seen = set()
    for name in carrier:
        if name in seen:
            found.append(Violation("duplicate-name", kind, f"{kind[:-1]} {name!r} declared twice"))
        seen.add(name)
    return found


def validate_epistemic(model: EpistemicModel) -> ValidationReport:
    """Check every structural invariant; report all failures, never raise."""
    found = _signature_violations(model.signature)
    found += _carrier_violations("worlds", model.worlds)
    worlds = set(model.worlds)
    agents = set(model.signature.agents)
    props = set(model.signature.propositions)

    for agent in sorted(model.relations):
        if agent not in agents:
            found.append(Violation("unknown-agent", agent, f"relation declared for undeclared agent {agent!r}"))
    for prop in sorted(model.valuation):
        if prop not in props:
            found.append(Violation("unknown-proposition", prop, f"valuation declared for undeclared proposition {prop!r}"))

    for agent in model.signature.agents:
        pairs = model.relation(agent)
        for s, t in sorted(pairs):
            for end in (s, t):
                if end not in worlds:
                    found.append(Violation("unknown-world", agent, f"relation pair ({s!r}, {t!r}) mentions undeclared world {end!r}"))
        for s in model.worlds:
            if (s, s) not in pairs:
                found.append(Violation("not-reflexive", agent, f"relation for {agent!r} is missing ({s!r}, {s!r})"))
        for s, t in sorted(pairs):
            if s in worlds and t in worlds and (t, s) not in pairs:
                found.append(Violation("not-symmetric", agent, f"relation for {agent!r} has ({s!r}, {t!r}) but is missing ({t!r}, {s!r})"))
        for s, t in sorted(pairs):
            for t2, u in sorted(pairs):
                if t2 == t and (s, u) not in pairs and {s, t, u} <= worlds:
                    found.append(Violation("not-transitive", agent, f"relation for {agent!r} has ({s!r}, {t!r}) and ({t!r}, {u!r}) but is missing ({s!r}, {u!r})"))

    for prop in model.signature.propositions:
        for world in sorted(model.valuation.get(prop, frozenset())):
            if world not in worlds:
                found.append(Violation("unknown-world", prop, f"valuation of {prop!r} mentions undeclared world {world!r}"))

    return ValidationReport(tuple(found))


def validate_argument(model: ArgumentModel) -> ValidationReport:
    """Check every structural invariant; report all failures, never raise."""
    found = _signature_violations(model.signature)
    found += _carrier_violations("arguments", model.arguments)
    arguments = set(model.arguments)
    agents = set(model.signature.agents)
    props = set(model.signature.propositions)

    for prop in sorted(model.attacks):
        if prop not in props:
            found.append(Violation("unknown-proposition", prop, f"attack relation declared for undeclared proposition {prop!r}"))
    for agent in sorted(model.availability):
        if agent not in agents:
            found.append(Violation("unknown-agent", agent, f"availability declared for undeclared agent {agent!r}"))

    for prop in model.signature.propositions:
        pairs = model.attack(prop)
        for u, v in sorted(pairs):
            for end in (u, v):
                if end not in arguments:
                    found.append(Violation("unknown-argument", prop, f"attack pair ({u!r}, {v!r}) mentions undeclared argument {end!r}"))
            if u == v:
                found.append(Violation("self-attack", prop, f"attack relation for {prop!r} contains the reflexive pair ({u!r}, {v!r})"))

    for agent in model.signature.agents:
        for argument in sorted(model.available_to(agent)):
            if argument not in arguments:
                found.append(Violation("unknown-argument", agent, f"availability of {agent!r} mentions undeclared argument {argument!r}"))

    return ValidationReport(tuple(found))

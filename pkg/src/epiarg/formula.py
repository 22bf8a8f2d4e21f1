"""Formulas of the two modal languages, with a shared concrete syntax.

Epistemic formulas are built from proposition atoms with ``~``, ``&`` and the
knowledge box ``K[i]``; argument formulas from agent atoms (read "the current
argument is available to i") with ``~``, ``&`` and the attack box ``A[p]``
quantifying over the current argument's attackers.

Concrete syntax: atoms are bare names, ``~x`` negates, binary connectives are
always written with parentheses as ``(x & y)``, ``(x | y)``, ``(x -> y)``,
and a modality prefixes its body as in ``K[i] ~p`` or ``A[p] (a & b)``.
``|`` and ``->`` are sugar, rewritten to ``~``/``&`` while parsing and never
stored.  The printer emits the canonical fully parenthesized form, and
parsing a printed formula returns the identical tree.

Name binding is checked twice: ``parse_formula`` rejects names the signature
does not declare for the requested language, and evaluation re-checks
programmatically built trees (see ``check_binding``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import BindingError, FormulaSyntaxError, SizeCapExceeded
from .models import Signature

EPISTEMIC = "epistemic"
ARGUMENT = "argument"


@dataclass(frozen=True)
class Prop:
    """Proposition atom (epistemic language)."""

    name: str


@dataclass(frozen=True)
class Avail:
    """Agent atom: the current argument is available to this agent (argument language)."""

    name: str


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Knows:
    """Knowledge box: the body holds at every world the agent cannot tell apart."""

    agent: str
    body: "Formula"


@dataclass(frozen=True)
class AttackBox:
    """Attack box: the body holds at every attacker of the current argument w.r.t. the proposition."""

    prop: str
    body: "Formula"


Formula = Union[Prop, Avail, Not, And, Knows, AttackBox]

_TOKEN_RE = re.compile(r"(?P<name>[A-Za-z0-9_]+)|(?P<punct>->|[~&|()\]])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Tokens as (type, value, position).  ``K[``/``A[`` become modality openers."""
    tokens = []
    pos = 0
    size = len(text)
    while True:
        while pos < size and text[pos].isspace():
            pos += 1
        if pos >= size:
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if match.group("name") is not None:
            name = match.group("name")
            end = match.end()
            if name in ("K", "A") and end < size and text[end] == "[":
                tokens.append(("kbox" if name == "K" else "abox", name, pos))
                pos = end + 1
                continue
            tokens.append(("name", name, pos))
        else:
            tokens.append((match.group("punct"), match.group("punct"), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], length: int, kind: str, signature: Signature):
        self.tokens = tokens
        self.length = length
        self.kind = kind
        self.signature = signature
        self.at = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.at] if self.at < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise FormulaSyntaxError("unexpected end of formula", self.length)
        self.at += 1
        return token

    def expect(self, ttype: str, what: str) -> tuple[str, str, int]:
        token = self.take()
        if token[0] != ttype:
            raise FormulaSyntaxError(f"expected {what}, found {token[1]!r}", token[2])
        return token

    def atom(self, name: str, position: int) -> Formula:
        if self.kind == EPISTEMIC:
            if name in self.signature.agents:
                raise BindingError(f"{name!r} is an agent, but epistemic atoms must be propositions (at position {position})")
            if name not in self.signature.propositions:
                raise BindingError(f"unknown proposition {name!r} (at position {position})")
            return Prop(name)
        if name in self.signature.propositions:
            raise BindingError(f"{name!r} is a proposition, but argument atoms must be agents (at position {position})")
        if name not in self.signature.agents:
            raise BindingError(f"unknown agent {name!r} (at position {position})")
        return Avail(name)

    def modality_index(self, ttype: str, position: int) -> str:
        token = self.expect("name", "a name inside the modality brackets")
        self.expect("]", "']'")
        name = token[1]
        if ttype == "kbox":
            if self.kind != EPISTEMIC:
                raise FormulaSyntaxError("knowledge modality K[..] is not part of the argument language", position)
            if name not in self.signature.agents:
                raise BindingError(f"unknown agent {name!r} (at position {token[2]})")
        else:
            if self.kind != ARGUMENT:
                raise FormulaSyntaxError("attack modality A[..] is not part of the epistemic language", position)
            if name not in self.signature.propositions:
                raise BindingError(f"unknown proposition {name!r} (at position {token[2]})")
        return name

    def formula(self) -> Formula:
        ttype, value, position = self.take()
        if ttype == "~":
            return Not(self.formula())
        if ttype in ("kbox", "abox"):
            index = self.modality_index(ttype, position)
            body = self.formula()
            return Knows(index, body) if ttype == "kbox" else AttackBox(index, body)
        if ttype == "name":
            return self.atom(value, position)
        if ttype == "(":
            left = self.formula()
            ttype2, value2, position2 = self.take()
            if ttype2 == ")":
                return left
            if ttype2 not in ("&", "|", "->"):
                raise FormulaSyntaxError(f"expected a binary connective or ')', found {value2!r}", position2)
            right = self.formula()
            self.expect(")", "')'")
            if ttype2 == "&":
                return And(left, right)
            if ttype2 == "|":
                return Not(And(Not(left), Not(right)))
            return Not(And(left, Not(right)))
        raise FormulaSyntaxError(f"unexpected {value!r}", position)


def parse_formula(text: str, kind: str, signature: Signature) -> Formula:
    """Parse one formula of the given language (``"epistemic"`` or ``"argument"``)."""
    if kind not in (EPISTEMIC, ARGUMENT):
        raise ValueError(f"unknown formula kind {kind!r}")
    parser = _Parser(_tokenize(text), len(text), kind, signature)
    result = parser.formula()
    leftover = parser.peek()
    if leftover is not None:
        raise FormulaSyntaxError(f"unexpected {leftover[1]!r} after the formula", leftover[2])
    return result


def print_formula(formula: Formula) -> str:
    """Canonical concrete syntax; ``parse_formula`` inverts it exactly."""
    if isinstance(formula, (Prop, Avail)):
        return formula.name
    if isinstance(formula, Not):
        return "~" + print_formula(formula.body)
    if isinstance(formula, And):
        return f"({print_formula(formula.left)} & {print_formula(formula.right)})"
    if isinstance(formula, Knows):
        return f"K[{formula.agent}] {print_formula(formula.body)}"
    if isinstance(formula, AttackBox):
        return f"A[{formula.prop}] {print_formula(formula.body)}"
    raise TypeError(f"not a formula: {formula!r}")


def kind_of(formula: Formula) -> str:
    """The language a tree belongs to, judged from its atoms and modalities."""
    kinds = set()
    for node in walk(formula):
        if isinstance(node, (Prop, Knows)):
            kinds.add(EPISTEMIC)
        elif isinstance(node, (Avail, AttackBox)):
            kinds.add(ARGUMENT)
    if len(kinds) > 1:
        raise BindingError("formula mixes epistemic and argument constructs")
    return kinds.pop() if kinds else EPISTEMIC


def walk(formula: Formula) -> Iterator[Formula]:
    yield formula
    if isinstance(formula, Not):
        yield from walk(formula.body)
    elif isinstance(formula, And):
        yield from walk(formula.left)
        yield from walk(formula.right)
    elif isinstance(formula, (Knows, AttackBox)):
        yield from walk(formula.body)


def check_binding(formula: Formula, kind: str, signature: Signature) -> None:
    """Raise ``BindingError`` unless every name is declared for its role in ``kind``."""
    for node in walk(formula):
        if isinstance(node, Prop):
            if kind != EPISTEMIC:
                raise BindingError(f"proposition atom {node.name!r} in an argument formula")
            if node.name not in signature.propositions:
                raise BindingError(f"unknown proposition {node.name!r}")
        elif isinstance(node, Avail):
            if kind != ARGUMENT:
                raise BindingError(f"agent atom {node.name!r} in an epistemic formula")
            if node.name not in signature.agents:
                raise BindingError(f"unknown agent {node.name!r}")
        elif isinstance(node, Knows):
            if kind != EPISTEMIC:
                raise BindingError("knowledge modality in an argument formula")
            if node.agent not in signature.agents:
                raise BindingError(f"unknown agent {node.agent!r}")
        elif isinstance(node, AttackBox):
            if kind != ARGUMENT:
                raise BindingError("attack modality in an epistemic formula")
            if node.prop not in signature.propositions:
                raise BindingError(f"unknown proposition {node.prop!r}")


def is_restricted(formula: Formula) -> bool:
    """True if every knowledge box guards a bare literal (``p`` or ``~p``).

    Boolean structure is unconstrained; only the bodies of ``K[i]`` are.
    """
    if isinstance(formula, Prop):
        return True
    if isinstance(formula, Not):
        return is_restricted(formula.body)
    if isinstance(formula, And):
        return is_restricted(formula.left) and is_restricted(formula.right)
    if isinstance(formula, Knows):
        body = formula.body
        return isinstance(body, Prop) or (isinstance(body, Not) and isinstance(body.body, Prop))
    return False


def restricted_atoms(signature: Signature) -> list[Formula]:
    """The literal and guarded-literal building blocks, in declaration order."""
    atoms: list[Formula] = []
    for p in signature.propositions:
        atoms.append(Prop(p))
        atoms.append(Not(Prop(p)))
    for i in signature.agents:
        for p in signature.propositions:
            atoms.append(Knows(i, Prop(p)))
            atoms.append(Knows(i, Not(Prop(p))))
    return atoms


def enumerate_restricted(signature: Signature, max_connectives: int, cap: int = 500_000) -> list[Formula]:
    """Every distinct restricted formula buildable from the atoms of
    ``restricted_atoms`` with at most ``max_connectives`` further ``~``/``&``
    applications.

    Atoms are free: the negation inside the literal ``~p`` or ``K[i] ~p`` does
    not count against the budget.  The output has no duplicate trees (note
    ``~p`` built by negating the atom ``p`` is the same tree as the atom
    ``~p``, so it appears once) and its order is deterministic.  Raises
    ``SizeCapExceeded`` once more than ``cap`` formulas would be produced.
    """
    if max_connectives < 0:
        raise ValueError("max_connectives must be nonnegative")
    levels: list[list[Formula]] = [[]]
    seen: set[Formula] = set()
    total = 0

    def admit(candidate: Formula, level: list[Formula]) -> None:
        nonlocal total
        if candidate in seen:
            return
        total += 1
        if total > cap:
            raise SizeCapExceeded(f"restricted enumeration exceeds the cap of {cap} formulas")
        seen.add(candidate)
        level.append(candidate)

    for atom in restricted_atoms(signature):
        admit(atom, levels[0])
    for budget in range(1, max_connectives + 1):
        level: list[Formula] = []
        for f in levels[budget - 1]:
            admit(Not(f), level)
        for left_cost in range(budget):
            right_cost = budget - 1 - left_cost
            for f in levels[left_cost]:
                for g in levels[right_cost]:
                    admit(And(f, g), level)
        levels.append(level)
    return [f for level in levels for f in level]


def rewrite_formula(formula: Formula, flips: dict[str, bool]) -> Formula:
    """Swap flipped proposition atoms for their negations.

    ``flips`` is the renaming map produced by valuation normalization; the
    rewrite makes evaluation commute with it.
    """
    if isinstance(formula, Prop):
        return Not(formula) if flips.get(formula.name, False) else formula
    if isinstance(formula, Avail):
        return formula
    if isinstance(formula, Not):
        return Not(rewrite_formula(formula.body, flips))
    if isinstance(formula, And):
        return And(rewrite_formula(formula.left, flips), rewrite_formula(formula.right, flips))
    if isinstance(formula, Knows):
        return Knows(formula.agent, rewrite_formula(formula.body, flips))
    if isinstance(formula, AttackBox):
        return AttackBox(formula.prop, rewrite_formula(formula.body, flips))
    raise TypeError(f"not a formula: {formula!r}")

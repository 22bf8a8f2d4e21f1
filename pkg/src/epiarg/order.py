"""The strength preorder over arguments, and its filters and ultrafilters.

An argument U is at least as strong as V (written U <= V, "smaller is
stronger") when U attacks everything V attacks, proposition by proposition.
The relation is reflexive and transitive but rarely antisymmetric, so most
questions are answered on the quotient poset of mutual-strength classes.

A filter is a nonempty, upward closed, downward directed set of arguments; it
is proper when it is not the whole carrier, and an ultrafilter when no filter
strictly contains it (the whole carrier counts as a competitor whenever it is
itself a filter, which is why chains admit no ultrafilters).  In a finite
carrier every filter is the upward closure of one mutual-strength class, so
ultrafilters are exactly the proper upward closures of minimal classes; the
harness ships a full subset-scan oracle that double-checks this shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import SizeCapExceeded
from .models import ArgumentModel

NONE = "none"
FILTER = "filter"
PROPER_FILTER = "proper-filter"
ULTRAFILTER = "ultrafilter"


@dataclass(frozen=True)
class Preorder:
    """Explicit strength preorder: ``(u, v)`` in ``pairs`` means u <= v."""

    carrier: tuple[str, ...]
    pairs: frozenset[tuple[str, str]]

    def leq(self, u: str, v: str) -> bool:
        return (u, v) in self.pairs

    def upward(self, u: str) -> frozenset[str]:
        """All v with u <= v, i.e. everything the class of u dominates upward."""
        return frozenset(v for v in self.carrier if (u, v) in self.pairs)


@dataclass(frozen=True)
class ArgumentSet:
    """A set of arguments together with its order-theoretic classification."""

    members: frozenset[str]
    classification: str


def compute_preorder(model: ArgumentModel) -> Preorder:
    """The strength preorder of an argument model.

    U <= V exactly when, for every proposition p and argument W, if V attacks
    W with respect to p then so does U.
    """
    attacks_of: dict[str, set[tuple[str, str]]] = {u: set() for u in model.arguments}
    for prop in model.signature.propositions:
        for attacked, attacker in model.attack(prop):
            if attacker in attacks_of:
                attacks_of[attacker].add((prop, attacked))
    pairs = frozenset(
        (u, v)
        for u in model.arguments
        for v in model.arguments
        if attacks_of[v] <= attacks_of[u]
    )
    return Preorder(tuple(model.arguments), pairs)


def _canonical_members(members: Iterable[str], index: dict[str, int]) -> tuple[str, ...]:
    return tuple(sorted(members, key=lambda m: index[m]))


def classify_set(candidate: Iterable[str], order: Preorder) -> ArgumentSet:
    """Strongest classification of a candidate set: none, filter,
    proper-filter, or ultrafilter."""
    members = frozenset(candidate)
    unknown = members - set(order.carrier)
    if unknown:
        raise ValueError(f"candidate mentions arguments outside the carrier: {sorted(unknown)}")
    if not members:
        return ArgumentSet(members, NONE)
    for u in members:
        for w in order.carrier:
            if order.leq(u, w) and w not in members:
                return ArgumentSet(members, NONE)
    for u in members:
        for v in members:
            if not any(order.leq(w, u) and order.leq(w, v) for w in members):
                return ArgumentSet(members, NONE)
    if len(members) == len(order.carrier):
        return ArgumentSet(members, FILTER)
    # A finite directed set has a least member; the filter is its upward
    # closure, so a strictly larger filter exists exactly when something
    # sits strictly below that least member.
    least = next((u for u in members if all(order.leq(u, v) for v in members)), None)
    if least is None:
        raise ValueError("order is not transitive: directed set has no least member")
    for x in order.carrier:
        if order.leq(x, least) and not order.leq(least, x):
            return ArgumentSet(members, PROPER_FILTER)
    return ArgumentSet(members, ULTRAFILTER)


def _minimal_elements(order: Preorder) -> list[str]:
    minimal = []
    for u in order.carrier:
        if not any(order.leq(x, u) and not order.leq(u, x) for x in order.carrier):
            minimal.append(u)
    return minimal


def ultrafilters_of_order(order: Preorder) -> list[ArgumentSet]:
    """All ultrafilters of a strength preorder, in canonical order.

    Each one is the upward closure of a minimal mutual-strength class,
    kept only when proper.
    """
    index = {name: i for i, name in enumerate(order.carrier)}
    everything = frozenset(order.carrier)
    found: set[frozenset[str]] = set()
    for u in _minimal_elements(order):
        up = order.upward(u)
        if up != everything:
            found.add(up)
    ordered = sorted(found, key=lambda members: _canonical_members(members, index))
    return [ArgumentSet(members, ULTRAFILTER) for members in ordered]


def enumerate_ultrafilters(model: ArgumentModel, max_arguments: int = 24) -> list[ArgumentSet]:
    """Every ultrafilter of the model's strength preorder, each exactly once.

    Refuses carriers above ``max_arguments``; raise the cap explicitly for
    bigger runs.
    """
    if len(model.arguments) > max_arguments:
        raise SizeCapExceeded(
            f"{len(model.arguments)} arguments exceed the ultrafilter enumeration cap of {max_arguments}"
        )
    return ultrafilters_of_order(compute_preorder(model))


def is_trivial(model: ArgumentModel, max_arguments: int = 24) -> bool:
    """True when the model admits no ultrafilters at all."""
    return not enumerate_ultrafilters(model, max_arguments)


def quotient_classes(order: Preorder) -> list[tuple[str, ...]]:
    """Mutual-strength classes, each in declaration order, ordered by first member."""
    index = {name: i for i, name in enumerate(order.carrier)}
    by_up: dict[frozenset[str], list[str]] = {}
    for u in order.carrier:
        by_up.setdefault(order.upward(u), []).append(u)
    classes = [_canonical_members(members, index) for members in by_up.values()]
    return sorted(classes, key=lambda cls: index[cls[0]])


def hasse_edges(order: Preorder) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Cover edges (lower, upper) of the quotient poset, canonically ordered."""
    classes = quotient_classes(order)
    reps = [cls[0] for cls in classes]
    strictly_below = {
        (a, b)
        for a in reps
        for b in reps
        if order.leq(a, b) and not order.leq(b, a)
    }
    edges = []
    for a_at, a in enumerate(reps):
        for b_at, b in enumerate(reps):
            if (a, b) not in strictly_below:
                continue
            if any((a, c) in strictly_below and (c, b) in strictly_below for c in reps):
                continue
            edges.append((classes[a_at], classes[b_at]))
    return edges

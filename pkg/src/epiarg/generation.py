"""Two-way generation between epistemic and argument models.

From a pointed epistemic model we build one argument per nonempty set of
worlds: a set V attacks U with respect to p exactly when some world in U
disagrees about p with every world in V (so V must be p-uniform and U must
contain a world of the opposite value).  An argument is available to an
agent when it contains everything the agent considers possible at the
designated world, and the designated argument is the singleton of that
world.

From a pointed argument model we build one world per ultrafilter of the
strength preorder.  Two ultrafilters look alike to an agent when they agree
on the agent's available arguments, and an ultrafilter satisfies p when it
contains an argument none of whose stronger-or-equal companions in the
ultrafilter is attacked by the current argument with respect to p.

Valuation normalization makes every proposition true at the designated
world by complementing the valuations that fail there; it is an explicit
step, recorded as a renaming map, and the generators never apply it behind
the caller's back.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import SizeCapExceeded, TrivialModelError
from .models import (
    ArgumentModel,
    EpistemicModel,
    PointedArgumentModel,
    PointedEpistemicModel,
    Signature,
)
from .order import ArgumentSet, Preorder, classify_set, compute_preorder, ultrafilters_of_order


class AttackStrength(enum.Enum):
    """Attack notions of increasing bite.  Only MEDIUM is implemented."""

    WEAK = "weak"
    MEDIUM = "medium"
    STRONG = "strong"


def subset_id(worlds: tuple[str, ...]) -> str:
    """Canonical name of a subset argument, members in declaration order."""
    return "{" + ",".join(worlds) + "}"


@dataclass(frozen=True)
class GeneratedArgumentModel:
    """An argument model read off an epistemic one, with its provenance map."""

    model: ArgumentModel
    current: str
    subsets: dict[str, tuple[str, ...]]

    @property
    def pointed(self) -> PointedArgumentModel:
        return PointedArgumentModel(self.model, self.current)


@dataclass(frozen=True)
class GeneratedEpistemicModel:
    """An epistemic model read off an argument one.

    ``current`` is set only when exactly one ultrafilter contains the source's
    designated argument; otherwise ``current_note`` says why it is unset.
    """

    model: EpistemicModel
    current: str | None
    current_note: str | None
    ultrafilters: dict[str, tuple[str, ...]]

    @property
    def pointed(self) -> PointedEpistemicModel:
        if self.current is None:
            raise TrivialModelError(f"no designated world: {self.current_note}")
        return PointedEpistemicModel(self.model, self.current)


def generate_argument_model(
    source: PointedEpistemicModel,
    max_worlds: int = 16,
    strength: AttackStrength = AttackStrength.MEDIUM,
) -> GeneratedArgumentModel:
    """Build the argument model over all nonempty world sets.

    Arguments are ordered by size then declaration indices.  Attack pairs
    ``(U, V)`` (V attacks U) come from the disagreement rule above; the
    relation is irreflexive by construction.  Refuses sources with more than
    ``max_worlds`` worlds since the carrier is exponential.
    """
    if strength is not AttackStrength.MEDIUM:
        raise NotImplementedError(f"{strength.value} attacks are a declared but unimplemented notion")
    model = source.model
    worlds = model.worlds
    if len(worlds) > max_worlds:
        raise SizeCapExceeded(f"{len(worlds)} worlds exceed the generation cap of {max_worlds}")
    if source.current not in worlds:
        raise ValueError(f"unknown world {source.current!r}")

    subsets: list[tuple[str, ...]] = []
    for size in range(1, len(worlds) + 1):
        for combo in combinations(range(len(worlds)), size):
            subsets.append(tuple(worlds[i] for i in combo))
    names = {subset: subset_id(subset) for subset in subsets}

    attacks: dict[str, set[tuple[str, str]]] = {}
    for prop in model.signature.propositions:
        true_at = model.valuation.get(prop, frozenset())
        uniform_true = [s for s in subsets if all(w in true_at for w in s)]
        uniform_false = [s for s in subsets if all(w not in true_at for w in s)]
        has_false = [s for s in subsets if any(w not in true_at for w in s)]
        has_true = [s for s in subsets if any(w in true_at for w in s)]
        pairs = set()
        for attacker in uniform_true:
            for attacked in has_false:
                pairs.add((names[attacked], names[attacker]))
        for attacker in uniform_false:
            for attacked in has_true:
                pairs.add((names[attacked], names[attacker]))
        attacks[prop] = pairs

    availability: dict[str, set[str]] = {}
    for agent in model.signature.agents:
        reachable = set(model.related(agent, source.current))
        availability[agent] = {names[s] for s in subsets if reachable <= set(s)}

    generated = ArgumentModel.make(
        model.signature,
        tuple(names[s] for s in subsets),
        attacks,
        availability,
    )
    current = subset_id((source.current,))
    return GeneratedArgumentModel(generated, current, {names[s]: s for s in subsets})


def normalize(source: PointedEpistemicModel) -> tuple[PointedEpistemicModel, dict[str, bool]]:
    """Complement every valuation that is false at the designated world.

    Returns the renormalized model and the renaming map (proposition ->
    flipped?).  Applying it twice changes nothing further, and rewriting
    formulas through the map (see ``rewrite_formula``) commutes with
    evaluation.
    """
    model = source.model
    if source.current not in model.worlds:
        raise ValueError(f"unknown world {source.current!r}")
    everything = frozenset(model.worlds)
    flips: dict[str, bool] = {}
    valuation: dict[str, frozenset[str]] = {}
    for prop in model.signature.propositions:
        true_at = model.valuation.get(prop, frozenset())
        flips[prop] = source.current not in true_at
        valuation[prop] = (everything - true_at) if flips[prop] else true_at
    normalized = EpistemicModel(model.signature, model.worlds, dict(model.relations), valuation)
    return PointedEpistemicModel(normalized, source.current), flips


def principal_ultrafilter(generated: GeneratedArgumentModel, world: str) -> ArgumentSet:
    """The ultrafilter of everything at least as weak as the world's singleton.

    Only defined on nontrivial generated models; there it always classifies
    as an ultrafilter.
    """
    singleton = subset_id((world,))
    if singleton not in generated.model.arguments:
        raise ValueError(f"unknown world {world!r}")
    order = compute_preorder(generated.model)
    if not ultrafilters_of_order(order):
        raise TrivialModelError("the generated argument model admits no ultrafilters")
    return classify_set(order.upward(singleton), order)


def ultrafilter_id(members: frozenset[str], carrier: tuple[str, ...]) -> str:
    index = {name: i for i, name in enumerate(carrier)}
    return "{" + ",".join(sorted(members, key=lambda m: index[m])) + "}"


def generate_epistemic_model(
    source: PointedArgumentModel,
    max_arguments: int = 24,
    _drop_valuation_guard: bool = False,
) -> GeneratedEpistemicModel:
    """Build the epistemic model whose worlds are the ultrafilters.

    Raises ``TrivialModelError`` when there are none.  The designated world
    is the unique ultrafilter containing the source's designated argument;
    when zero or several qualify it stays unset with an explanatory note.

    ``_drop_valuation_guard`` is a fault-injection hook for the verification
    harness: it removes the strength-ordering guard from the valuation
    clause, which must break the duality and prove the checks have teeth.
    """
    model = source.model
    if len(model.arguments) > max_arguments:
        raise SizeCapExceeded(
            f"{len(model.arguments)} arguments exceed the ultrafilter enumeration cap of {max_arguments}"
        )
    if source.current not in model.arguments:
        raise ValueError(f"unknown argument {source.current!r}")
    order = compute_preorder(model)
    ultras = ultrafilters_of_order(order)
    if not ultras:
        raise TrivialModelError("the argument model admits no ultrafilters")

    names: dict[str, frozenset[str]] = {}
    for ultra in ultras:
        names[ultrafilter_id(ultra.members, model.arguments)] = ultra.members
    world_ids = tuple(names)

    relations: dict[str, set[tuple[str, str]]] = {}
    for agent in model.signature.agents:
        available = model.available_to(agent)
        traces = {wid: members & available for wid, members in names.items()}
        relations[agent] = {
            (w1, w2) for w1 in world_ids for w2 in world_ids if traces[w1] == traces[w2]
        }

    valuation: dict[str, set[str]] = {}
    for prop in model.signature.propositions:
        pairs = model.attack(prop)
        holds = set()
        for wid, members in names.items():
            if _drop_valuation_guard:
                satisfied = all((v, source.current) not in pairs for v in members)
            else:
                satisfied = any(
                    all(not order.leq(v, u) or (v, source.current) not in pairs for v in members)
                    for u in members
                )
            if satisfied:
                holds.add(wid)
        valuation[prop] = holds

    containing = [wid for wid, members in names.items() if source.current in members]
    if len(containing) == 1:
        current, note = containing[0], None
    elif not containing:
        current, note = None, f"no ultrafilter contains the designated argument {source.current!r}"
    else:
        current, note = None, (
            f"{len(containing)} ultrafilters contain the designated argument {source.current!r}"
        )

    generated = EpistemicModel.make(model.signature, world_ids, relations, valuation)
    return GeneratedEpistemicModel(generated, current, note, {wid: tuple(sorted(members, key=model.argument_index)) for wid, members in names.items()})

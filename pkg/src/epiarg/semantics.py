"""Truth of formulas at a designated point of a model.

The knowledge box quantifies over the worlds an agent cannot distinguish
from the current one; the attack box quantifies over the attackers of the
current argument with respect to its proposition (so it is vacuously true
when nothing attacks).

Evaluation is pure.  An optional cache maps ``(point, formula)`` to a truth
value; results with and without a cache are identical, the cache only saves
repeated work when many formulas share subtrees.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import BindingError
from .formula import ARGUMENT, EPISTEMIC, And, AttackBox, Avail, Formula, Knows, Not, Prop, check_binding, print_formula
from .models import PointedArgumentModel, PointedEpistemicModel

Cache = dict[tuple[str, Formula], bool]


def eval_epistemic(pointed: PointedEpistemicModel, formula: Formula, cache: Optional[Cache] = None) -> bool:
    """Truth of an epistemic formula at the designated world."""
    check_binding(formula, EPISTEMIC, pointed.model.signature)
    if pointed.current not in pointed.model.worlds:
        raise BindingError(f"unknown world {pointed.current!r}")
    return _eval_epistemic(pointed.model, pointed.current, formula, cache)


def _eval_epistemic(model, world: str, formula: Formula, cache: Optional[Cache]) -> bool:
    if cache is not None:
        key = (world, formula)
        hit = cache.get(key)
        if hit is not None:
            return hit
    if isinstance(formula, Prop):
        value = model.holds(formula.name, world)
    elif isinstance(formula, Not):
        value = not _eval_epistemic(model, world, formula.body, cache)
    elif isinstance(formula, And):
        value = _eval_epistemic(model, world, formula.left, cache) and _eval_epistemic(model, world, formula.right, cache)
    elif isinstance(formula, Knows):
        value = all(_eval_epistemic(model, other, formula.body, cache) for other in model.related(formula.agent, world))
    else:
        raise BindingError(f"not an epistemic formula: {print_formula(formula)}")
    if cache is not None:
        cache[key] = value
    return value


def eval_argument(pointed: PointedArgumentModel, formula: Formula, cache: Optional[Cache] = None) -> bool:
    """Truth of an argument formula at the designated argument."""
    check_binding(formula, ARGUMENT, pointed.model.signature)
    if pointed.current not in pointed.model.arguments:
        raise BindingError(f"unknown argument {pointed.current!r}")
    return _eval_argument(pointed.model, pointed.current, formula, cache)


def _eval_argument(model, argument: str, formula: Formula, cache: Optional[Cache]) -> bool:
    if cache is not None:
        key = (argument, formula)
        hit = cache.get(key)
        if hit is not None:
            return hit
    if isinstance(formula, Avail):
        value = argument in model.available_to(formula.name)
    elif isinstance(formula, Not):
        value = not _eval_argument(model, argument, formula.body, cache)
    elif isinstance(formula, And):
        value = _eval_argument(model, argument, formula.left, cache) and _eval_argument(model, argument, formula.right, cache)
    elif isinstance(formula, AttackBox):
        value = all(_eval_argument(model, attacker, formula.body, cache) for attacker in model.attackers_of(argument, formula.prop))
    else:
        raise BindingError(f"not an argument formula: {print_formula(formula)}")
    if cache is not None:
        cache[key] = value
    return value


def eval_batch(
    pointed: PointedEpistemicModel | PointedArgumentModel,
    formulas: Sequence[Formula],
    cache: Optional[Cache] = None,
) -> list[bool]:
    """Evaluate several formulas at the same point; order is preserved.

    The first formula that fails to bind aborts the batch, with its index in
    the error message.
    """
    results = []
    for at, formula in enumerate(formulas):
        try:
            if isinstance(pointed, PointedEpistemicModel):
                results.append(eval_epistemic(pointed, formula, cache))
            else:
                results.append(eval_argument(pointed, formula, cache))
        except BindingError as exc:
            raise BindingError(f"formula {at}: {exc}") from exc
    return results

"""Evaluation of both languages, S5 properties, caching, and batches."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epiarg.errors import BindingError
from epiarg.formula import (
    ARGUMENT,
    EPISTEMIC,
    And,
    AttackBox,
    Avail,
    Knows,
    Not,
    Prop,
    enumerate_restricted,
    parse_formula,
)
from epiarg.generation import generate_epistemic_model
from epiarg.harness import RandomModelSpec, random_epistemic_model
from epiarg.models import PointedArgumentModel, PointedEpistemicModel
from epiarg.semantics import eval_argument, eval_batch, eval_epistemic

from conftest import random_formula


def ep(doc, text):
    return parse_formula(text, EPISTEMIC, doc.model.signature)


def ar(doc, text):
    return parse_formula(text, ARGUMENT, doc.model.signature)


def test_epistemic_examples(pointed_ex1, ex1):
    assert eval_epistemic(pointed_ex1, ep(ex1, "K[a] p")) is True
    assert eval_epistemic(pointed_ex1, ep(ex1, "K[a] q")) is False
    assert eval_epistemic(pointed_ex1, ep(ex1, "K[b] q")) is True
    assert eval_epistemic(pointed_ex1, ep(ex1, "(p & ~p)")) is False
    assert eval_epistemic(pointed_ex1, ep(ex1, "(p -> K[a] p)")) is True


def test_epistemic_batch(pointed_ex1, ex1):
    formulas = [ep(ex1, t) for t in ("p", "q", "K[a] p", "K[a] q")]
    assert eval_batch(pointed_ex1, formulas) == [True, True, True, False]
    assert eval_batch(pointed_ex1, []) == []


def test_argument_examples(ex2):
    n = ex2.model
    at = lambda point: PointedArgumentModel(n, point)
    assert eval_argument(at("A1"), ar(ex2, "b")) is False
    assert eval_argument(at("A1"), ar(ex2, "a")) is True
    # nothing attacks A2 w.r.t. p, so the box is vacuously true
    assert eval_argument(at("A2"), ar(ex2, "A[p] ~a")) is True
    # B's only q-attacker is A2, available to a but not b
    assert eval_argument(at("B"), ar(ex2, "A[q] ~b")) is True
    assert eval_argument(at("B"), ar(ex2, "A[q] ~a")) is False


def test_argument_batch(ex2, pointed_ex2):
    assert eval_batch(pointed_ex2, [ar(ex2, "a"), ar(ex2, "b")]) == [True, False]


def test_generated_model_knowledge(ex2):
    generated = generate_epistemic_model(PointedArgumentModel(ex2.model, "A2"))
    pointed = generated.pointed
    sig = generated.model.signature
    assert eval_epistemic(pointed, parse_formula("K[a] q", EPISTEMIC, sig)) is True
    assert eval_epistemic(pointed, parse_formula("K[b] q", EPISTEMIC, sig)) is False


def test_batch_abort_reports_index(pointed_ex1):
    good = Prop("p")
    bad = Knows("z", Prop("p"))
    with pytest.raises(BindingError) as err:
        eval_batch(pointed_ex1, [good, bad, good])
    assert str(err.value).startswith("formula 1:")


def test_unknown_point_rejected(ex1, ex2):
    with pytest.raises(BindingError):
        eval_epistemic(PointedEpistemicModel(ex1.model, "s9"), Prop("p"))
    with pytest.raises(BindingError):
        eval_argument(PointedArgumentModel(ex2.model, "C"), Avail("a"))


def test_kind_mismatch_rejected(pointed_ex1, pointed_ex2):
    with pytest.raises(BindingError):
        eval_epistemic(pointed_ex1, Avail("a"))
    with pytest.raises(BindingError):
        eval_argument(pointed_ex2, Prop("p"))


def implies(left, right):
    return Not(And(left, Not(right)))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), formula_seed=st.integers(0, 10_000))
def test_s5_validities(seed, formula_seed):
    source = random_epistemic_model(RandomModelSpec(worlds=(1, 4), seed=seed))
    model = source.model
    rng = random.Random(formula_seed)
    body = random_formula(rng, EPISTEMIC, model.signature, depth=3)
    agent = rng.choice(model.signature.agents)
    k = Knows(agent, body)
    for world in model.worlds:
        pointed = PointedEpistemicModel(model, world)
        assert eval_epistemic(pointed, implies(k, body))
        assert eval_epistemic(pointed, implies(k, Knows(agent, k)))
        assert eval_epistemic(pointed, implies(Not(k), Knows(agent, Not(k))))


@settings(max_examples=40, deadline=None)
@given(formula_seed=st.integers(0, 10_000))
def test_vacuous_attack_box(formula_seed):
    from epiarg.fixtures import example2

    doc = example2()
    rng = random.Random(formula_seed)
    body = random_formula(rng, ARGUMENT, doc.model.signature, depth=3)
    # A2 has no p-attackers in the fixture
    assert doc.model.attackers_of("A2", "p") == ()
    assert eval_argument(PointedArgumentModel(doc.model, "A2"), AttackBox("p", body))


def test_cache_is_observationally_identical(pointed_ex1, ex1):
    formulas = enumerate_restricted(ex1.model.signature, 2)
    cache: dict = {}
    plain = [eval_epistemic(pointed_ex1, f) for f in formulas]
    cached = [eval_epistemic(pointed_ex1, f, cache) for f in formulas]
    assert plain == cached
    assert cache
    # repeated evaluation stays stable
    assert [eval_epistemic(pointed_ex1, f, cache) for f in formulas] == plain

"""Strength preorder, filter classification, and ultrafilter enumeration."""

import pytest

from epiarg.errors import SizeCapExceeded
from epiarg.models import ArgumentModel, Signature
from epiarg.order import (
    FILTER,
    NONE,
    PROPER_FILTER,
    ULTRAFILTER,
    Preorder,
    classify_set,
    compute_preorder,
    enumerate_ultrafilters,
    hasse_edges,
    is_trivial,
    quotient_classes,
    ultrafilters_of_order,
)

SIG = Signature(("p", "q"), ("a", "b"))


def literal_preorder(model):
    """U <= V iff every W attacked by V (any p) is attacked by U: the raw definition."""
    pairs = set()
    for u in model.arguments:
        for v in model.arguments:
            if all(
                (w, u) in model.attack(p)
                for p in model.signature.propositions
                for w in model.arguments
                if (w, v) in model.attack(p)
            ):
                pairs.add((u, v))
    return pairs


def chain_model():
    # attacks_of strictly shrink along X, Y, Z so X <= Y <= Z is a strict chain
    return ArgumentModel.make(
        SIG,
        ("X", "Y", "Z"),
        {"p": [("Y", "X"), ("Z", "X"), ("Z", "Y")], "q": []},
        {"a": ["X"], "b": []},
    )


def single_model():
    return ArgumentModel.make(SIG, ("U",), {"p": [], "q": []}, {"a": ["U"], "b": []})


def test_example2_preorder(ex2):
    order = compute_preorder(ex2.model)
    reflexive = {(u, u) for u in ex2.model.arguments}
    assert order.pairs == reflexive | {("A2", "A1"), ("B", "A1")}
    assert order.leq("A2", "A1") and not order.leq("A1", "A2")
    assert order.upward("A2") == frozenset({"A1", "A2"})
    assert order.upward("A1") == frozenset({"A1"})


def test_preorder_matches_literal_definition(ex2):
    from epiarg.harness import random_argument_corpus

    models = [ex2.model, chain_model(), single_model()]
    models += [pointed.model for pointed in random_argument_corpus(25, seed=11)]
    for model in models:
        assert compute_preorder(model).pairs == frozenset(literal_preorder(model))


def test_preorder_reflexive_and_transitive(ex2):
    from epiarg.harness import random_argument_corpus

    for pointed in random_argument_corpus(15, seed=3):
        order = compute_preorder(pointed.model)
        carrier = order.carrier
        assert all((u, u) in order.pairs for u in carrier)
        for u, v in order.pairs:
            for v2, w in order.pairs:
                if v2 == v:
                    assert (u, w) in order.pairs


def test_classify_examples(ex2):
    order = compute_preorder(ex2.model)
    assert classify_set({"A1", "A2"}, order).classification == ULTRAFILTER
    assert classify_set({"A1", "B"}, order).classification == ULTRAFILTER
    # not upward closed: A2 <= A1 but A1 is missing
    assert classify_set({"A2", "B"}, order).classification == NONE
    # whole carrier: not directed (A2 and B share no lower bound), so not even a filter
    assert classify_set({"A1", "B", "A2"}, order).classification == NONE
    # A2 sits strictly below A1, so a strictly larger filter exists
    assert classify_set({"A1"}, order).classification == PROPER_FILTER
    assert classify_set(set(), order).classification == NONE


def test_classify_full_carrier_filter():
    order = compute_preorder(single_model())
    assert classify_set({"U"}, order).classification == FILTER


def test_classify_rejects_unknown_members(ex2):
    order = compute_preorder(ex2.model)
    with pytest.raises(ValueError):
        classify_set({"A1", "ghost"}, order)


def test_classify_rejects_non_transitive_order():
    # a 3-cycle without closure is directed and upward closed yet has no
    # least member; only a transitivity hole makes that possible
    carrier = ("a", "b", "c", "d")
    cycle = {("a", "b"), ("b", "c"), ("c", "a")}
    order = Preorder(carrier, frozenset({(x, x) for x in carrier} | cycle))
    with pytest.raises(ValueError):
        classify_set({"a", "b", "c"}, order)


def test_example2_ultrafilters(ex2):
    ultras = enumerate_ultrafilters(ex2.model)
    assert [u.members for u in ultras] == [frozenset({"A1", "A2"}), frozenset({"A1", "B"})]
    assert all(u.classification == ULTRAFILTER for u in ultras)


def test_trivial_cases(ex2):
    assert not is_trivial(ex2.model)
    assert is_trivial(single_model())
    assert is_trivial(chain_model())
    assert enumerate_ultrafilters(single_model()) == []
    assert enumerate_ultrafilters(chain_model()) == []


def test_enumeration_cap():
    many = tuple(f"U{i}" for i in range(25))
    model = ArgumentModel.make(SIG, many, {"p": [], "q": []}, {"a": [], "b": []})
    with pytest.raises(SizeCapExceeded):
        enumerate_ultrafilters(model)
    assert len(enumerate_ultrafilters(model, max_arguments=25)) == 0


def test_quotient_and_hasse(ex2):
    order = compute_preorder(ex2.model)
    assert quotient_classes(order) == [("A1",), ("B",), ("A2",)]
    assert hasse_edges(order) == [(("B",), ("A1",)), (("A2",), ("A1",))]


def test_mutual_strength_class_merges():
    # U and V carry identical attack power, so they share a class and travel together
    model = ArgumentModel.make(
        SIG,
        ("U", "V", "W"),
        {"p": [("W", "U"), ("W", "V")], "q": []},
        {"a": [], "b": []},
    )
    order = compute_preorder(model)
    assert order.leq("U", "V") and order.leq("V", "U")
    assert quotient_classes(order) == [("U", "V"), ("W",)]
    ultras = ultrafilters_of_order(order)
    assert [u.members for u in ultras] == [frozenset({"U", "V"})]


def test_hasse_skips_transitive_edges():
    # chain X <= Y <= Z must show two cover edges, not the composite X-Z
    order = compute_preorder(chain_model())
    assert hasse_edges(order) == [(("X",), ("Y",)), (("Y",), ("Z",))]

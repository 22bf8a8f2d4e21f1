"""Structural validation and the small accessors on both model classes."""

from epiarg.models import (
    ArgumentModel,
    EpistemicModel,
    Signature,
    validate_argument,
    validate_epistemic,
)

SIG = Signature(("p", "q"), ("a", "b"))


def codes(report):
    return [v.code for v in report.violations]


def test_fixture_models_validate(ex1, ex2):
    assert validate_epistemic(ex1.model).ok
    assert validate_argument(ex2.model).ok
    assert validate_epistemic(ex1.model).summary() == "ok"


def test_related_and_holds(ex1):
    m = ex1.model
    assert m.related("a", "s2") == ("s1", "s2")
    assert m.related("b", "s2") == ("s2", "s3")
    assert m.holds("p", "s1") and not m.holds("p", "s3")
    assert m.true_propositions("s2") == ("p", "q")
    assert m.true_propositions("s3") == ("q",)
    assert m.world_index("s3") == 2


def test_attackers_and_availability(ex2):
    n = ex2.model
    # pair [U, V] reads "V attacks U"
    assert n.attackers_of("A1", "p") == ("B",)
    assert n.attackers_of("B", "q") == ("A2",)
    assert n.attackers_of("A2", "p") == ()
    assert n.available_to("a") == frozenset({"A1", "A2"})
    assert n.available_to("b") == frozenset()
    assert n.argument_index("B") == 1


def test_missing_symmetry_is_the_only_violation(ex1):
    m = ex1.model
    relations = dict(m.relations)
    relations["a"] = m.relation("a") - {("s2", "s1")}
    broken = EpistemicModel(m.signature, m.worlds, relations, dict(m.valuation))
    report = validate_epistemic(broken)
    assert codes(report) == ["not-symmetric"]
    assert "('s1', 's2')" in report.violations[0].message


def test_missing_reflexivity_reported_per_world():
    m = EpistemicModel.make(SIG, ("s1", "s2"), {"a": [], "b": [("s1", "s1"), ("s2", "s2")]}, {"p": ["s1"]})
    report = validate_epistemic(m)
    assert codes(report) == ["not-reflexive", "not-reflexive"]
    assert {v.subject for v in report.violations} == {"a"}


def test_missing_transitivity_reported():
    pairs = [("s1", "s1"), ("s2", "s2"), ("s3", "s3"), ("s1", "s2"), ("s2", "s1"), ("s2", "s3"), ("s3", "s2")]
    m = EpistemicModel.make(SIG, ("s1", "s2", "s3"), {"a": pairs, "b": [(s, s) for s in ("s1", "s2", "s3")]}, {})
    report = validate_epistemic(m)
    assert set(codes(report)) == {"not-transitive"}
    assert len(report.violations) == 2  # (s1,s3) and (s3,s1) both missing


def test_unknown_names_reported():
    m = EpistemicModel.make(
        SIG,
        ("s1",),
        {"a": [("s1", "s1")], "b": [("s1", "s1")], "c": []},
        {"p": ["s1", "s9"], "r": []},
    )
    report = validate_epistemic(m)
    assert sorted(codes(report)) == ["unknown-agent", "unknown-proposition", "unknown-world"]


def test_self_attack_and_unknown_argument():
    n = ArgumentModel.make(
        SIG,
        ("U", "V"),
        {"p": [("U", "U"), ("U", "W")], "q": []},
        {"a": ["U"], "b": ["Z"]},
    )
    report = validate_argument(n)
    assert sorted(codes(report)) == ["self-attack", "unknown-argument", "unknown-argument"]
    self_attack = next(v for v in report.violations if v.code == "self-attack")
    assert "('U', 'U')" in self_attack.message


def test_signature_violations():
    bad = Signature((), ("a", "a", "p"))
    m = EpistemicModel.make(Signature(("p",), ("a", "a")), ("s1", "s1"), {"a": [("s1", "s1")]}, {})
    report = validate_epistemic(m)
    assert codes(report).count("duplicate-name") == 2  # agent a and world s1
    n = ArgumentModel.make(bad, (), {}, {})
    report2 = validate_argument(n)
    assert "empty-propositions" in codes(report2)
    assert "empty-arguments" in codes(report2)
    assert "name-overlap" not in codes(report2)
    overlap = ArgumentModel.make(Signature(("x",), ("x",)), ("U",), {}, {})
    assert "name-overlap" in codes(validate_argument(overlap))


def test_validation_is_total_on_garbage():
    # nothing here should raise, only report
    m = EpistemicModel.make(Signature((), ()), (), {"ghost": [("x", "y")]}, {"ghost": ["z"]})
    report = validate_epistemic(m)
    assert not report.ok
    assert len(report.violations) >= 4


def test_equivalence_classes_partition_worlds(ex1):
    m = ex1.model
    for agent in m.signature.agents:
        blocks = {m.related(agent, w) for w in m.worlds}
        seen = [w for block in sorted(blocks) for w in block]
        assert sorted(seen) == sorted(m.worlds)  # disjoint cover
        for block in blocks:
            for w in block:
                assert m.related(agent, w) == block


def test_models_are_frozen(ex1, ex2):
    assert ex1.model == EpistemicModel(
        ex1.model.signature, ex1.model.worlds, ex1.model.relations, ex1.model.valuation
    )
    assert ex2.model.attack("p") == frozenset({("A1", "B")})

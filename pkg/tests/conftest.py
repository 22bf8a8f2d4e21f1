import random

import pytest

from epiarg.cli import main
from epiarg.fixtures import example1, example2, fixture_path
from epiarg.formula import ARGUMENT, EPISTEMIC, And, AttackBox, Avail, Knows, Not, Prop
from epiarg.models import PointedArgumentModel, PointedEpistemicModel

EX1_PATH = str(fixture_path("example1-epistemic.json"))
EX2_PATH = str(fixture_path("example2-argument.json"))


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex2():
    return example2()


@pytest.fixture
def pointed_ex1(ex1):
    return PointedEpistemicModel(ex1.model, ex1.current)


@pytest.fixture
def pointed_ex2(ex2):
    return PointedArgumentModel(ex2.model, ex2.current)


@pytest.fixture
def run_cli(capsys, monkeypatch):
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""

    def run(*argv, env=None):
        monkeypatch.delenv("EPIARG_CONFIG", raising=False)
        for key, value in (env or {}).items():
            monkeypatch.setenv(key, value)
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


def random_formula(rng: random.Random, kind: str, signature, depth: int):
    """Seeded random AST of either language, for round-trip and property tests."""
    if depth <= 0 or rng.random() < 0.3:
        if kind == EPISTEMIC:
            return Prop(rng.choice(signature.propositions))
        return Avail(rng.choice(signature.agents))
    roll = rng.random()
    if roll < 0.35:
        return Not(random_formula(rng, kind, signature, depth - 1))
    if roll < 0.7:
        return And(
            random_formula(rng, kind, signature, depth - 1),
            random_formula(rng, kind, signature, depth - 1),
        )
    if kind == EPISTEMIC:
        return Knows(rng.choice(signature.agents), random_formula(rng, kind, signature, depth - 1))
    return AttackBox(rng.choice(signature.propositions), random_formula(rng, kind, signature, depth - 1))


@pytest.fixture
def ast_gen():
    return random_formula

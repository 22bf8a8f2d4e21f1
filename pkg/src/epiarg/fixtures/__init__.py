"""Bundled example models and formula corpora."""

from importlib import resources
from pathlib import Path

from ..modelio import ModelDocument, document_from_dict

import json


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture file."""
    with resources.as_file(resources.files(__package__).joinpath(name)) as path:
        return Path(path)


def load_fixture(name: str) -> ModelDocument:
    text = resources.files(__package__).joinpath(name).read_text(encoding="utf-8")
    return document_from_dict(json.loads(text))


def example1() -> ModelDocument:
    """Three-world epistemic model over p, q with agents a, b, pointed at s2."""
    return load_fixture("example1-epistemic.json")


def example2() -> ModelDocument:
    """Three-argument debate model over p, q with agents a, b, pointed at A2."""
    return load_fixture("example2-argument.json")


def formula_lines(name: str) -> list[str]:
    """Formula corpus lines with comments and blanks stripped."""
    text = resources.files(__package__).joinpath(name).read_text(encoding="utf-8")
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines

"""Shared fixtures: the demo grammars, compiled once per session."""
from pathlib import Path

import pytest

from logic_blocks.lexicon import load_grammar

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def demo_text():
    return (DATA / "demo.lg").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def demo_lexicon(demo_text):
    return load_grammar(demo_text)


@pytest.fixture(scope="session")
def vorfeld_lexicon():
    return load_grammar((DATA / "demo_vorfeld.lg").read_text(encoding="utf-8"))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def verb_movement_lexicon():
    return load_grammar((DATA / "demo_verb_movement.lg").read_text(encoding="utf-8"))

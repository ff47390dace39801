import pytest

from bnfullerene import generate, parse_kind

from helpers import CORPUS_SPECS


@pytest.fixture(scope="session")
def corpus():
    """The eight corpus graphs, generated once per session."""
    return {spec: generate(parse_kind(spec)) for spec in CORPUS_SPECS}


@pytest.fixture(scope="session")
def cube(corpus):
    return corpus["cube"]


@pytest.fixture(scope="session")
def prism(corpus):
    return corpus["hexagonal-prism"]


@pytest.fixture(scope="session")
def tube1(corpus):
    return corpus["tube:1"]

import pytest

from inhabit.fuzz import corpus
from inhabit.syntax import parse_sequent


def seq(text):
    return parse_sequent(text)


@pytest.fixture(scope="session")
def fuzz_corpus():
    return corpus()

import pytest

from corpus import build_corpus
from sigdim import embed

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_embeddings(corpus):
    return [(name, t, embed(t)) for name, t in corpus]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

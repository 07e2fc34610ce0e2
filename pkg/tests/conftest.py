import pytest

from semieq.corpus import builtin_corpus


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()

import pytest

from smalg.core import direct_product
from smalg.corpus import bundled_corpus_dir, load_corpus
from smalg.tnorm import goedel_spec, lukasiewicz_spec, make_chain


@pytest.fixture(scope="session")
def two():
    return make_chain(lukasiewicz_spec(1)).rename("2")


@pytest.fixture(scope="session")
def l2():
    return make_chain(lukasiewicz_spec(2)).rename("L2")


@pytest.fixture(scope="session")
def l4():
    return make_chain(lukasiewicz_spec(4)).rename("L4")


@pytest.fixture(scope="session")
def g3():
    return make_chain(goedel_spec(2)).rename("G3")


@pytest.fixture(scope="session")
def square(two):
    prod, _ = direct_product(two, two)
    return prod.rename("2x2")


@pytest.fixture(scope="session")
def corpus_dir():
    return bundled_corpus_dir()


@pytest.fixture(scope="session")
def corpus(corpus_dir):
    return load_corpus(corpus_dir)

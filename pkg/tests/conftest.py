import pytest

from models.corpus import commutation_counterexample, dihedral12_sqrt3_generators
from models.group import generate_closure

from tests.oracles import corpus_group


@pytest.fixture(scope="session")
def d8():
    _, b, c = commutation_counterexample()
    return generate_closure([b, c])


@pytest.fixture(scope="session")
def d12():
    return corpus_group("D12")


@pytest.fixture(scope="session")
def d12_sqrt3():
    return generate_closure(list(dihedral12_sqrt3_generators()))


@pytest.fixture(scope="session")
def v4():
    return corpus_group("V4")


@pytest.fixture(scope="session")
def s4():
    return corpus_group("S4")

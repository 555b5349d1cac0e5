import pytest

from polyreal.cartan import build_root_system
from polyreal.sequence import IotaSequence


@pytest.fixture
def a2():
    # iota = (..., 2, 1, 2, 1)
    return IotaSequence(build_root_system("A", 2), (2, 1))


@pytest.fixture
def a3():
    return IotaSequence(build_root_system("A", 3), (3, 1, 2))


@pytest.fixture
def c3():
    return IotaSequence(build_root_system("C", 3), (3, 1, 2))


def seq_of(family, rank, word):
    return IotaSequence(build_root_system(family, rank), word)

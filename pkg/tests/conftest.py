import pytest

from biloc import fixtures


@pytest.fixture
def c3():
    return fixtures.c3()


@pytest.fixture
def b4():
    return fixtures.b4()


@pytest.fixture
def p1():
    return fixtures.p1()


@pytest.fixture
def m3():
    return fixtures.m3()


@pytest.fixture
def pt_lat():
    return fixtures.pt_lattice()


@pytest.fixture
def pt():
    return fixtures.pt()


@pytest.fixture
def c3_sym():
    return fixtures.c3_sym()


@pytest.fixture
def b4_sym():
    return fixtures.b4_sym()


@pytest.fixture
def p1_sym():
    return fixtures.p1_sym()


def mask_of(lat, labels):
    m = 0
    for lab in labels:
        m |= 1 << lat.index(lab)
    return m

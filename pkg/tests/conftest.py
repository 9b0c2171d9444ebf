"""
Shared fixtures for the clawfree test suite
"""

import pytest

from clawfree.constructions.families import circuit, circuits_coloops, free, m_rt, pg
from clawfree.matroids.bases import BasisMatroid
from clawfree.matroids.binary import BinaryMatroid


@pytest.fixture
def fano():
    """PG(2,2), the Fano plane"""
    return pg(3)


@pytest.fixture
def u24():
    """U_{2,4}, the smallest non-binary matroid"""
    return BasisMatroid(4, 2, [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100])


@pytest.fixture
def u34():
    return circuit(4)


@pytest.fixture
def triangle_plus_coloop():
    return circuits_coloops([3], 1)


@pytest.fixture
def m52():
    return m_rt(5, 2)


@pytest.fixture
def free3():
    return free(3)


@pytest.fixture
def looped():
    """A binary matroid with a loop and a parallel pair"""
    return BinaryMatroid(2, [0b00, 0b01, 0b01, 0b10])

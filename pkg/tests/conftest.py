"""Shared fixtures: the four worked clusters used throughout the suite.

Each cluster is stored as its satellite-target list (position = blow-up
index); the expected multiplicity sequences and maximal contact values come
from the corresponding worked computations and are re-derived in the tests.
"""

from fractions import Fraction

import pytest

from okbodies import FlagSpec, validate

# 10 points, multiplicities (24,24,9,9,6,3,3,2,1,1), betabar (24,57,458,1374)
ENRIC_SATS = [None, None, None, 2, 2, 4, 5, None, 7, 8]

# 12 points, multiplicities (9,9,9,3,3,3,3,3,3,2,1,1), betabar (9,30,101,303)
EX1_SATS = [None, None, None, None, 3, 3, None, None, None, None, 9, 10]

# 12 points, multiplicities (8,4,4,4,4,4,4,4,1,1,1,1), betabar (8,12,45,180)
EX2_SATS = [None, None, 1, None, None, None, None, None, None, 8, 8, 8]

# 19 points, multiplicities (48,48,48,48,48,48,41,7,7,7,7,7,6,1,1,1,1,1,1),
# betabar (48,329,15792)
EX3_SATS = [None] * 7 + [6, 7, 7, 7, 7, 7, 12, 13, 13, 13, 13, 13]


@pytest.fixture
def enric():
    return validate(ENRIC_SATS)


@pytest.fixture
def ex1():
    return validate(EX1_SATS)


@pytest.fixture
def ex1_flag():
    return FlagSpec(r=12, eta=10)


@pytest.fixture
def ex2():
    return validate(EX2_SATS)


@pytest.fixture
def ex2_flag():
    return FlagSpec(r=12, eta=8)


@pytest.fixture
def ex2_curve_branch():
    return (6, 3, 3, 3, 3, 3, 3, 3, 1, 1, 1)


@pytest.fixture
def ex3():
    return validate(EX3_SATS)


@pytest.fixture
def ex3_flag():
    return FlagSpec(r=19, eta=13)


def frac(p, q=1):
    return Fraction(p, q)

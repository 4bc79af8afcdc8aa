import pytest

from bqalg.algebra.backends import Backend, Tolerance
from bqalg.algebra.text import parse_biquaternion

# c + c~ i - c j - c~ k with c = 1 + I: nonzero, vanishing semi-norm, part norms 4 and 4
NORMS_FOUR_EXAMPLE = "(1+1I) + (1-1I)i + (-1-1I)j + (-1+1I)k"
SQRT_EIGHT_EXAMPLE = "2.8284271247461903 + 2Ij + 2Ik"


@pytest.fixture
def exact_tol() -> Tolerance:
    return Tolerance.for_backend(Backend.EXACT)


@pytest.fixture
def approx_tol() -> Tolerance:
    return Tolerance(1e-9, Backend.APPROX)


@pytest.fixture
def norms_four():
    return parse_biquaternion(NORMS_FOUR_EXAMPLE)


@pytest.fixture
def sqrt_eight():
    return parse_biquaternion(SQRT_EIGHT_EXAMPLE)


@pytest.fixture
def nilpotent():
    return parse_biquaternion("i + Ij")


@pytest.fixture
def bq():
    """Shorthand parser for exact literals"""
    return parse_biquaternion

import functools

import pytest

from negabeta import IntPolynomial, isolate_pisot_base


@functools.lru_cache(maxsize=None)
def base_of(coeffs):
    return isolate_pisot_base(IntPolynomial(tuple(coeffs)))


@pytest.fixture(scope="session")
def golden():
    return base_of((1, -1, -1))


@pytest.fixture(scope="session")
def trib():
    return base_of((1, -1, -1, -1))


@pytest.fixture(scope="session")
def cubic_2m11():
    # x^3 - 2x^2 - x - 1, i.e. (a, b, c) = (2, -1, 1)
    return base_of((1, -2, -1, -1))

from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from negabeta.exactfield import (BaseMismatch, FieldElement, IntPolynomial, NoRootAboveOne,
                                 count_roots_in_unit_disk, fe_arith, fe_floor, fe_sign,
                                 format_element, isolate_pisot_base, parse_element, sturm_count)

from conftest import base_of

BASES = [(1, -1, -1), (1, -1, -1, -1), (1, -2, -1, -1), (1, -3, -3, -3), (1, -1, -1, -1, -1, -1)]


def hi_prec_beta(coeffs, prec=256):
    mpmath.mp.prec = prec
    roots = mpmath.polyroots(list(coeffs), maxsteps=400, extraprec=2 * prec)
    return max(mpmath.re(r) for r in roots if abs(mpmath.im(r)) < mpmath.mpf(2) ** -100)


def test_golden_interval(golden):
    iv = golden.beta_interval
    assert Fraction(161, 100) < iv.lo <= iv.hi < Fraction(162, 100)
    assert iv.width <= Fraction(1, 2 ** 64)
    assert golden.pisot_certified


def test_paper_cubic_is_pisot(cubic_2m11):
    assert cubic_2m11.pisot_certified


def test_tribonacci_value(trib):
    assert abs(float(trib.beta) - 1.839286755) < 1e-9
    assert trib.pisot_certified


def test_non_pisot_flagged():
    # a conjugate of modulus > 1
    b = isolate_pisot_base(IntPolynomial.parse("1,0,-4,1"))  # roots ~1.86, 0.25, -2.11
    assert not b.pisot_certified


def test_no_root_above_one():
    with pytest.raises(NoRootAboveOne):
        isolate_pisot_base(IntPolynomial.parse("1,0,-1"))


def test_polynomial_invariants():
    with pytest.raises(ValueError):
        IntPolynomial((0, 1))
    p = IntPolynomial.parse("1,-3,-3,-3")
    assert p.degree == 3 and p(-1) == -1 - 3 + 3 - 3


def test_mul_reduces(trib):
    b = trib.beta
    assert (b * (b * b)).coeffs == (1, 1, 1)
    assert fe_arith(b, b * b, "mul") == trib.element([1, 1, 1])


def test_add_identity(trib):
    x = trib.element([3, Fraction(1, 2), -7])
    assert fe_arith(trib.const(0), x, "add") == x


def test_inverse_tribonacci(trib):
    b = trib.beta
    assert fe_arith(b, b * b - b - 1, "mul") == trib.const(1)
    assert b.inverse() == b * b - b - 1


def test_base_mismatch(trib, golden):
    with pytest.raises(BaseMismatch):
        trib.beta + golden.beta


def test_sign_examples(trib, cubic_2m11):
    assert fe_sign(trib.const(0)) == 0
    b = trib.beta
    assert fe_sign(-b / (b + 1)) == -1
    c = cubic_2m11.beta
    r1 = -1 / c - 1 / (c * c)  # b/beta - 1/beta^2 with b = -1
    assert fe_sign(r1) == -1


def test_floor_examples(trib, cubic_2m11):
    assert fe_floor(trib.const(7)) == 7
    b = trib.beta
    assert fe_floor(-b / (b + 1)) == -1
    c = cubic_2m11.beta
    r0, alpha = 1 / c, c / (c + 1)
    assert fe_floor(r0 + alpha) == 1


def test_floor_exact_integer_hit(golden):
    b = golden.beta
    # b^2 - b is exactly 1: the straddle must be resolved by the zero test
    assert (b * b - b).floor() == 1
    assert (b * b - b - 1).sign() == 0


def test_reducible_minpoly_zero_test():
    # (x^2 + 1)(x^2 - x - 1): beta is the golden ratio but Q[x]/(p) is not a field
    base = isolate_pisot_base(IntPolynomial.parse("1,-1,0,-1,-1"))
    assert not base.irreducible
    b = base.beta
    assert (b * b - b - 1).is_zero()
    assert (b * b - b - 1).sign() == 0
    assert b * b - b == base.const(1)
    assert len({b * b - b, base.const(1)}) == 1


def test_integer_root_factors_stripped():
    # (x + 1)(x^2 - x - 1) and (x + 2)(x^2 - 2)
    b = isolate_pisot_base(IntPolynomial.parse("1,0,-2,-1"))
    assert b.minpoly == IntPolynomial((1, -1, -1)) and b.irreducible
    b = isolate_pisot_base(IntPolynomial.parse("1,2,-2,-4"))
    assert b.minpoly == IntPolynomial((1, 0, -2)) and not b.pisot_certified
    assert isolate_pisot_base(IntPolynomial.parse("1,-5,6")).minpoly == IntPolynomial((1, -3))


def test_format_parse_roundtrip(trib):
    x = trib.element([Fraction(-3, 4), 0, 5])
    assert format_element(x) == "-3/4 + 5*b^2"
    assert parse_element(trib, format_element(x)) == x
    assert parse_element(trib, "b^-1") == trib.beta.inverse()
    assert parse_element(trib, "1 - b") == 1 - trib.beta


def test_sturm_count():
    # (x-1)(x-2)(x-3) low-first
    p = [-6, 11, -6, 1]
    assert sturm_count(p, Fraction(0), Fraction(10)) == 3
    assert sturm_count(p, Fraction(1), Fraction(2)) == 1  # (1, 2]


def test_unit_disk_count_vs_numpy():
    rng = np.random.default_rng(7)
    checked = 0
    for _ in range(400):
        deg = int(rng.integers(2, 7))
        c = [1] + [int(v) for v in rng.integers(-5, 6, size=deg)]
        roots = np.roots(c)
        mods = np.abs(roots)
        if np.any(np.abs(mods - 1) < 1e-6):
            continue
        got = count_roots_in_unit_disk(list(reversed(c)))
        if got is None:
            continue
        assert got == int(np.sum(mods < 1)), c
        checked += 1
    assert checked > 200


elem = st.lists(st.integers(-100, 100), min_size=3, max_size=3)


@settings(max_examples=60, deadline=None)
@given(elem, elem, elem)
def test_ring_laws(a, b, c):
    B = base_of((1, -2, -1, -1))
    x, y, z = B.element(a), B.element(b), B.element(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert (x - x).sign() == 0


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(BASES), st.lists(st.integers(-100, 100), min_size=6, max_size=6),
       st.integers(1, 5))
def test_floor_sign_against_mpmath(coeffs, cs, den):
    B = base_of(coeffs)
    x = B.element([Fraction(c, den) for c in cs[:B.degree]])
    beta = hi_prec_beta(coeffs)
    val = sum(mpmath.mpf(c.numerator) / c.denominator * beta ** i for i, c in enumerate(x.coeffs))
    if abs(val) > mpmath.mpf(2) ** -200:
        assert x.sign() == (1 if val > 0 else -1)
    frac = val - mpmath.floor(val)
    if mpmath.mpf(2) ** -200 < frac < 1 - mpmath.mpf(2) ** -200:
        assert x.floor() == int(mpmath.floor(val))


def test_refinement_never_changes_answers():
    B = isolate_pisot_base(IntPolynomial((1, -3, -3, -3)))
    xs = [B.element([c, -c // 2 + 1, (c * 7) % 5 - 2]) for c in range(-20, 20)]
    before = [(x.sign(), x.floor()) for x in xs]
    B.refine(400)
    assert [(x.sign(), x.floor()) for x in xs] == before


def test_zero_test_soundness(trib):
    x = trib.element([Fraction(5, 3), -2, 9])
    assert (x - x).sign() == 0
    assert x.sign() != 0

import random

import pytest
from hypothesis import given, settings, strategies as st

from negabeta.negabase import (DigitWord, NotFinite, OutOfDomain, StepBudgetExceeded,
                               digit_sequence, ell_beta, enumerate_zmb, expansion,
                               expansion_scale, fr_length, nega, t_step, word_value,
                               zmb_integers, zmb_levels)

from conftest import base_of


def cubic_m(m):
    return base_of((1, -m, -m, -m))


def test_ell_golden(golden):
    ell = ell_beta(golden)
    assert ell.sign() == -1 and ell.floor() == -1
    assert (ell + 1).sign() == 1


def test_ell_tribonacci(trib):
    assert abs(float(ell_beta(trib)) + 0.6478) < 1e-4


def test_step_fixed_points(trib):
    zero = trib.const(0)
    assert t_step(trib, zero) == (zero, 0)
    x = -1 / (trib.beta + 1)
    assert t_step(trib, x) == (x, 1)


def test_step_out_of_domain(trib):
    with pytest.raises(OutOfDomain):
        t_step(trib, trib.const(1))
    with pytest.raises(OutOfDomain):
        t_step(trib, nega(trib).ell_plus_one)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_ell_word(m):
    b = cubic_m(m)
    word, _ = digit_sequence(b, ell_beta(b))
    assert word.preperiod == (m, 0) and word.period == (m,)
    assert word.digits(5) == [m, 0, m, m, m]


def test_minus_one_over_beta_plus_one(trib, golden):
    for b in (trib, golden):
        word, rec = digit_sequence(b, -1 / (b.beta + 1))
        assert word.preperiod == () and word.period == (1,)
        assert rec.cycle_start == 0


def test_zero_word(trib):
    word, _ = digit_sequence(trib, trib.const(0))
    assert word == DigitWord((), ())
    assert str(expansion(trib, trib.const(0))) == "0 • 0^ω"


def test_budget_flagged(trib):
    word, rec = digit_sequence(trib, -1 / (trib.beta + 1) + trib.const(0), max_steps=0)
    assert not word.complete and rec.open


def test_golden_one(golden):
    # 1/beta^2 sits exactly on the right end of the domain, so k = 2 is rejected
    w = expansion(golden, golden.const(1))
    assert w.radix == 3
    assert str(w) == "1 1 0 • 0^ω"
    assert word_value(golden, w.preperiod, w.radix) == golden.const(1)


def test_witness_is_integer(trib):
    b = trib.beta
    x = 1 - b
    assert fr_length(trib, x) == 0
    w = expansion(trib, x)
    assert word_value(trib, w.preperiod, w.radix) == x


def test_fr_examples(trib):
    b = trib.beta
    assert fr_length(trib, trib.const(0)) == 0
    assert fr_length(trib, (1 - b) - (b ** 4 - b ** 3)) == 6
    nf = fr_length(trib, -1 / (b + 1))
    assert isinstance(nf, NotFinite) and not nf and len(nf.cycle) == 1


def test_zmb_levels(trib):
    assert enumerate_zmb(trib, 0) == {trib.const(0)}
    assert enumerate_zmb(trib, 1) == {trib.const(0), -1 / trib.beta}
    sizes = [len(s) for s in zmb_levels(trib, 10)]
    assert sizes == sorted(sizes)
    assert sizes == [1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504]


def test_zmb_backward_forward(trib):
    nb = nega(trib)
    levels = zmb_levels(trib, 6)
    for k in range(1, 7):
        for x in levels[k]:
            y, d = nb.step(x)
            assert y in levels[k - 1]
            assert 0 <= d <= nb.max_digit
    for x in zmb_integers(trib, 6):
        assert fr_length(trib, x) == 0


BASES = [(1, -1, -1), (1, -1, -1, -1), (1, -2, -1, -1), (1, -3, -3, -3), (1, -2, 0, -1)]


def random_domain_point(base, rng):
    nb = nega(base)
    while True:
        x = base.element([rng.randint(-40, 40) for _ in range(base.degree)])
        x = x * base.beta ** -rng.randint(0, 4)
        # shift into the domain by an integer
        x = x - (x - nb.ell).floor()
        if nb.in_domain(x):
            return x


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(BASES), st.integers(0, 10 ** 9))
def test_conservation(coeffs, seed):
    base = base_of(coeffs)
    rng = random.Random(seed)
    nb = nega(base)
    x = random_domain_point(base, rng)
    mb = -base.beta
    acc = base.const(0)
    cur = x
    for n in range(1, 21):
        cur, d = nb.step(cur)
        assert nb.in_domain(cur)
        assert 0 <= d <= nb.max_digit
        acc = acc + d * mb ** -n
        assert x == acc + cur * mb ** -n


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(BASES), st.lists(st.integers(-30, 30), min_size=3, max_size=3),
       st.integers(-3, 3))
def test_expansion_minimal_and_exact(coeffs, cs, shift):
    base = base_of(coeffs)
    x = base.element(cs[:base.degree]) * base.beta ** shift
    if x.is_zero():
        return
    k = expansion_scale(base, x)
    nb = nega(base)
    if k >= 1:
        assert not nb.in_open_domain(x * (-base.beta) ** -(k - 1))
    try:
        w = expansion(base, x, max_steps=2000)
    except StepBudgetExceeded:
        return
    if w.is_finite:
        assert word_value(base, w.preperiod, w.radix) == x
        assert fr_length(base, x) == max(len(w.preperiod) - w.radix, 0)


def test_json_and_text():
    w = DigitWord((2, 0), (2,), 0)
    assert w.to_json() == {"preperiod": [2, 0], "period": [2], "radix": 0}
    assert str(w) == "0 • 2 0 (per: 2)"
    assert str(DigitWord((1, 0, 1, 1), (), 2)) == "1 0 • 1 1"


def test_text_radix_inside_period():
    assert str(DigitWord((), (1, 2, 3), 2)) == "1 2 • (per: 3 1 2)"
    assert str(DigitWord((5,), (1, 2), 4)) == "5 1 2 1 • (per: 2 1)"

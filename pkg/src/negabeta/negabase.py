"""(-beta)-transformation, digit words, expansions and fractional lengths."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .exactfield import FieldElement, PisotBase

DEFAULT_BUDGET = 10_000


def step_budget(default: int = DEFAULT_BUDGET) -> int:
    env = os.environ.get("NEGABETA_STEP_BUDGET")
    return int(env) if env else default


class OutOfDomain(ValueError):
    pass


class StepBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DigitWord:
    """Digits ``x_1 ... x_k . x_{k+1} ...`` of an eventually periodic word.

    ``preperiod`` followed by ``period`` repeated forever; an empty period
    means the word ends in 0^omega.  ``radix`` digits sit left of the point.
    ``complete`` is False when the orbit was cut off by the step budget.
    """

    preperiod: tuple
    period: tuple = ()
    radix: int = 0
    complete: bool = True

    @property
    def is_finite(self) -> bool:
        return self.complete and not self.period

    def digits(self, n: int) -> list:
        out = list(self.preperiod[:n])
        while len(out) < n:
            out.extend(self.period or (0,))
        return out[:n]

    def __str__(self):
        k = self.radix
        pre, per = list(self.preperiod), list(self.period)
        if k == 0:
            intpart, frac = ["0"], pre
        else:
            intpart = [str(d) for d in self.digits(k)]
            frac = pre[k:]
            if per and k > len(pre):
                shift = (k - len(pre)) % len(per)
                per = per[shift:] + per[:shift]
        text = " ".join(intpart) + " •"
        if frac:
            text += " " + " ".join(str(d) for d in frac)
        if per:
            text += " (per: " + " ".join(str(d) for d in per) + ")"
        elif not frac:
            text += " 0^ω"
        if not self.complete:
            text += " ..."
        return text

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period), "radix": self.radix}


@dataclass
class OrbitRecord:
    states: list = field(default_factory=list)
    cycle_start: Optional[int] = None
    open: bool = False


@dataclass(frozen=True)
class NotFinite:
    """fr of an element whose expansion does not end in 0^omega."""

    cycle: tuple
    preperiod_length: int

    def __bool__(self):
        return False


def _primitive_period(period: list) -> list:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period[:p] * (n // p) == period:
            return period[:p]
    return period


class NegaBase:
    """Cached per-base constants for the (-beta)-transformation."""

    def __init__(self, base: PisotBase):
        self.base = base
        beta = base.beta
        self.beta = beta
        self.ell = -beta / (beta + 1)
        self.ell_plus_one = self.ell + 1
        self.neg_inv_beta = -(beta.inverse())
        self.max_digit = beta.floor()

    def in_domain(self, x: FieldElement) -> bool:
        return (x - self.ell).sign() >= 0 and (x - self.ell_plus_one).sign() < 0

    def in_open_domain(self, x: FieldElement) -> bool:
        return (x - self.ell).sign() > 0 and (x - self.ell_plus_one).sign() < 0

    def step(self, x: FieldElement, check: bool = True):
        if check and not self.in_domain(x):
            raise OutOfDomain(f"{x} is outside [l_beta, l_beta + 1)")
        y = -(self.beta * x)
        digit = (y - self.ell).floor()
        return y - digit, digit


def nega(base: PisotBase) -> NegaBase:
    nb = getattr(base, "_nega", None)
    if nb is None:
        nb = base._nega = NegaBase(base)
    return nb


def ell_beta(base: PisotBase) -> FieldElement:
    return nega(base).ell


def t_step(base: PisotBase, x: FieldElement):
    """One application of T_{-beta}; returns ``(T(x), digit)``."""
    return nega(base).step(x)


def digit_sequence(base: PisotBase, x: FieldElement, max_steps: int | None = None):
    """Iterate T_{-beta} from x until a state repeats or the budget runs out."""
    nb = nega(base)
    if not nb.in_domain(x):
        raise OutOfDomain(f"{x} is outside [l_beta, l_beta + 1)")
    budget = step_budget() if max_steps is None else max_steps
    seen = {x: 0}
    states = [x]
    digits = []
    cur = x
    for _ in range(budget):
        cur, d = nb.step(cur, check=False)
        digits.append(d)
        if cur in seen:
            start = seen[cur]
            pre, per = digits[:start], digits[start:]
            if per == [0] * len(per):
                # only the fixed point 0 cycles on digit 0
                per = []
            return DigitWord(tuple(pre), tuple(_primitive_period(per))), OrbitRecord(states, start)
        seen[cur] = len(states)
        states.append(cur)
    return DigitWord(tuple(digits), (), complete=False), OrbitRecord(states, None, open=True)


def _scaled(nb: NegaBase, x: FieldElement, k: int) -> FieldElement:
    y = x
    for _ in range(k):
        y = y * nb.neg_inv_beta
    return y


def expansion_scale(base: PisotBase, x: FieldElement, limit: int | None = None) -> int:
    """Minimal k >= 0 with x / (-beta)^k in the open interval (l, l + 1)."""
    nb = nega(base)
    limit = step_budget() if limit is None else limit
    y = x
    for k in range(limit + 1):
        if nb.in_open_domain(y):
            return k
        y = y * nb.neg_inv_beta
    raise StepBudgetExceeded(f"no scale k <= {limit} puts {x} inside (l_beta, l_beta + 1)")


def expansion(base: PisotBase, x: FieldElement, max_steps: int | None = None) -> DigitWord:
    """The (-beta)-expansion of x with the radix point after ``radix`` digits."""
    if x.is_zero():
        return DigitWord((), (), 0)
    k = expansion_scale(base, x)
    word, _ = digit_sequence(base, _scaled(nega(base), x, k), max_steps)
    return DigitWord(word.preperiod, word.period, k, word.complete)


def fr_length(base: PisotBase, x: FieldElement, max_steps: int | None = None):
    """Length of the fractional part of the expansion of x, or ``NotFinite``."""
    if x.is_zero():
        return 0
    nb = nega(base)
    k = expansion_scale(base, x)
    word, orbit = digit_sequence(base, _scaled(nb, x, k), max_steps)
    if not word.complete:
        raise StepBudgetExceeded(f"orbit of {x} not resolved within budget")
    if word.period:
        return NotFinite(tuple(word.period), len(word.preperiod))
    return max(len(word.preperiod) - k, 0)


def zmb_levels(base: PisotBase, depth: int) -> list:
    """The levels S_0, ..., S_depth of preimages T^{-j}(0), built backwards."""
    nb = nega(base)
    zero = base.const(0)
    levels = [{zero}]
    for _ in range(depth):
        nxt = set()
        for y in levels[-1]:
            for a in range(nb.max_digit + 1):
                cand = (y + a) * nb.neg_inv_beta
                if nb.in_domain(cand):
                    nxt.add(cand)
        levels.append(nxt)
    return levels


def enumerate_zmb(base: PisotBase, depth: int) -> set:
    """S_depth = T^{-depth}(0)."""
    return zmb_levels(base, depth)[-1]


def zmb_integers(base: PisotBase, depth: int) -> list:
    """(-beta)-integers with at most ``depth`` digits: (-beta)^depth * S_depth."""
    nb = nega(base)
    scale = (-nb.beta) ** depth
    return [scale * x for x in enumerate_zmb(base, depth)]


def word_value(base: PisotBase, digits, radix: int | None = None) -> FieldElement:
    """Value of ``d_1 ... d_n`` read with the leftmost digit as the highest power.

    With ``radix`` = k, the point sits after the k-th digit; default: all
    digits are integer digits.
    """
    digits = list(digits)
    nb = nega(base)
    k = len(digits) if radix is None else radix
    acc = base.const(0)
    mb = -nb.beta
    for d in digits:
        acc = acc * mb + d
    return acc * mb ** (k - len(digits))

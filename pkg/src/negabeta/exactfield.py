"""Exact arithmetic in Q(beta) for a real algebraic integer beta > 1.

Elements are rational coefficient vectors in the power basis 1, beta, ...,
beta^(d-1).  Signs and floors are decided by evaluating the element on a
dyadic isolating interval of beta; straddles are settled by an exact
zero test (gcd with the defining polynomial) before refining further.
"""
from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

DEFAULT_BITS = 64


class NoRootAboveOne(ValueError):
    pass


class BaseMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# dense univariate polynomials, lowest degree first
# ---------------------------------------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p):
    return [i * c for i, c in enumerate(p)][1:]


def _divmod(a, b):
    a = [Fraction(c) for c in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = _trim(a)
    return _trim(q), a


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def _primitive(p, keep_sign=False):
    """Scale a rational polynomial to a primitive integer one.

    The leading coefficient is made positive unless ``keep_sign``.
    """
    p = _trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[-1] < 0 and not keep_sign:
        g = -g
    return [c // g for c in ints]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _eval_dyadic(p, num: int, exp: int) -> int:
    """Value of integer poly p at num/2^exp, times 2^(exp*deg); sign-exact."""
    n = len(p) - 1
    total = 0
    pw = 1
    for i, c in enumerate(p):
        total += (c * pw) << (exp * (n - i))
        pw *= num
    return total


def _eval_rational(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sturm(p):
    # only positive rescaling keeps the sign pattern of a Sturm chain
    seq = [_primitive(p, True), _primitive(_deriv(p), True)]
    while True:
        r = _divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in _primitive(r, True)])
    return [s for s in seq if s]


def _variations(seq, x: Fraction) -> int:
    signs = [s for s in (_sign(_eval_rational(q, x)) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    p = _trim(p)
    if len(p) <= 1:
        return 0
    seq = _sturm(p)
    return _variations(seq, Fraction(lo)) - _variations(seq, Fraction(hi))


# ---------------------------------------------------------------------------
# polynomials and intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients highest degree first."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs or coeffs[0] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse ``"1,-3,-3,-3"`` (highest degree first)."""
        parts = [s.strip() for s in text.split(",")]
        try:
            return cls(tuple(int(s) for s in parts))
        except ValueError as exc:
            raise ValueError(f"bad polynomial {text!r}: {exc}") from None

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def low_first(self) -> list:
        return list(reversed(self.coefficients))

    @property
    def is_monic(self) -> bool:
        return self.coefficients[0] == 1

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def __str__(self):
        return ",".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


# ---------------------------------------------------------------------------
# Pisot certification
# ---------------------------------------------------------------------------

def count_roots_in_unit_disk(p: Sequence[int]):
    """Schur-Cohn count of roots of a real polynomial strictly inside |z| < 1.

    ``p`` is lowest degree first.  Returns ``None`` when the recursion hits a
    singular step (some root on or symmetric about the unit circle).
    """
    f = _trim(p)
    n = len(f) - 1
    if n < 1:
        return 0
    negatives = 0
    prod = 1
    for _ in range(n):
        k = len(f) - 1
        star = list(reversed(f))
        a0, an = f[0], f[-1]
        g = _trim([a0 * x - an * y for x, y in zip(f, star)])
        delta = g[0] if g else 0
        if delta == 0:
            return None
        prod = _sign(prod * delta)
        if prod < 0:
            negatives += 1
        g = g[:k]  # formal degree k-1
        g += [0] * (k - len(g))
        cont = 0
        for c in g:
            cont = math.gcd(cont, c)
        f = [c // cont for c in g]
    return negatives


def _pisot_certify(p_low: list, max_k: int = 64) -> bool:
    """True iff all roots except the (excluded, > 1) dominant one lie in |z| < 1.

    Counts roots in |z| < rho for rho = 1 - 2^-k; success for any k proves the
    claim.  A root of modulus >= 1 other than beta makes every count fall short.
    """
    n = len(p_low) - 1
    if n <= 1:
        return True
    for k in range(1, max_k + 1):
        den = 1 << k
        num = den - 1
        # p(rho z) * den^n, integer coefficients
        scaled = [c * num ** i * den ** (n - i) for i, c in enumerate(p_low)]
        cnt = count_roots_in_unit_disk(scaled)
        if cnt == n - 1:
            return True
    return False


# ---------------------------------------------------------------------------
# the base
# ---------------------------------------------------------------------------

class PisotBase:
    """A monic integer polynomial together with a certified enclosure of its
    largest real root beta > 1.

    The enclosure is a dyadic interval ``[L, H] / 2^P`` that only ever narrows;
    narrowing is guarded by a lock so a base may be shared between threads.
    """

    def __init__(self, minpoly: IntPolynomial, want_pisot_check: bool = True):
        if not minpoly.is_monic:
            raise ValueError("polynomial must be monic")
        if minpoly.degree < 1:
            raise ValueError("polynomial must have degree >= 1")
        self.given = minpoly
        minpoly = _strip_trivial_factors(minpoly)
        self.minpoly = minpoly
        self.degree = minpoly.degree
        low = minpoly.low_first
        self._low = low
        sq = _primitive(_divmod(low, _gcd(low, _deriv(low)))[0]) if self.degree > 1 else low
        self._sqfree = sq
        self._lock = threading.Lock()
        self._tables = {}
        self._isolate()
        self.pisot_certified = _pisot_certify(low) if want_pisot_check else False
        # a cofactor of a Pisot polynomial would have all roots in |z| < 1 and
        # hence constant term 0, so Pisot + p(0) != 0 forces irreducibility;
        # up to degree 3 a missing integer root settles it
        self.irreducible = (self.degree == 1
                            or (self.pisot_certified and low[0] != 0)
                            or (self.degree <= 3 and not _has_integer_root(low)))
        self.refine(DEFAULT_BITS)
        self._build_reduction()

    # -- isolation ---------------------------------------------------------
    def _isolate(self):
        sq = self._sqfree
        bound = 1 + max(abs(c) for c in self.minpoly.coefficients[1:]) if self.degree else 2
        lo, hi = Fraction(1), Fraction(bound)
        if sturm_count(sq, lo, hi) == 0:
            raise NoRootAboveOne(f"{self.minpoly} has no real root > 1")
        # shrink to an interval (lo, hi] holding exactly the largest root
        while sturm_count(sq, lo, hi) > 1:
            mid = (lo + hi) / 2
            if sturm_count(sq, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        # lo, hi are dyadic: write them on a common power-of-two scale
        P = max(lo.denominator.bit_length() - 1, hi.denominator.bit_length() - 1)
        L = lo.numerator << (P - (lo.denominator.bit_length() - 1))
        H = hi.numerator << (P - (hi.denominator.bit_length() - 1))
        if _eval_dyadic(sq, H, P) == 0:
            L = H
        self._L, self._H, self._P = L, H, P
        self._sgn_lo = _sign(_eval_dyadic(sq, L, P))

    def refine(self, bits: int) -> None:
        """Narrow the enclosure until its width is at most 2^-bits."""
        with self._lock:
            L, H, P = self._L, self._H, self._P
            sq, s_lo = self._sqfree, self._sgn_lo
            while H != L and ((H - L) << bits) > (1 << P):
                L, H, P = 2 * L, 2 * H, P + 1
                mid = (L + H) // 2
                s = _sign(_eval_dyadic(sq, mid, P))
                if s == 0:
                    L = H = mid
                elif s == s_lo:
                    L = mid
                else:
                    H = mid
            self._L, self._H, self._P = L, H, P

    def _snapshot(self):
        with self._lock:
            return self._L, self._H, self._P

    @property
    def beta_interval(self) -> RationalInterval:
        L, H, P = self._snapshot()
        return RationalInterval(Fraction(L, 1 << P), Fraction(H, 1 << P))

    @property
    def precision(self) -> int:
        L, H, P = self._snapshot()
        if H == L:
            return 1 << 30
        return P - (H - L).bit_length() + 1

    def _power_table(self, snap):
        """Scaled enclosures of beta^i: lo_i = L^i 2^(P(d-1-i)), same for hi."""
        tab = self._tables.get(snap)
        if tab is None:
            L, H, P = snap
            d = self.degree
            lo, hi = [], []
            pl = ph = 1
            for i in range(d):
                sh = P * (d - 1 - i)
                lo.append(pl << sh)
                hi.append(ph << sh)
                pl *= L
                ph *= H
            tab = (lo, hi, P * (d - 1))
            self._tables = {snap: tab}
        return tab

    # -- reduction ----------------------------------------------------------
    def _build_reduction(self):
        d = self.degree
        # rows[j] = coefficients of beta^(d+j) in the power basis
        tail = [-c for c in self._low[:d]]
        rows = [tail]
        for _ in range(d - 1):
            prev = rows[-1]
            nxt = [0] + prev[:-1]
            top = prev[-1]
            nxt = [a + top * b for a, b in zip(nxt, tail)]
            rows.append(nxt)
        self._rows = rows

    def reduce(self, coeffs: Sequence[int]) -> list:
        """Reduce an integer coefficient vector (any length < 2d) mod minpoly."""
        d = self.degree
        out = list(coeffs[:d]) + [0] * max(0, d - len(coeffs))
        for j, c in enumerate(coeffs[d:]):
            if c:
                for i, rc in enumerate(self._rows[j]):
                    out[i] += c * rc
        return out

    # -- convenience ------------------------------------------------------
    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, coeffs)

    def const(self, c: Rational) -> "FieldElement":
        return FieldElement(self, [c])

    @property
    def beta(self) -> "FieldElement":
        if self.degree == 1:
            return FieldElement(self, [-self._low[0]])
        return FieldElement(self, [0, 1])

    def __repr__(self):
        iv = self.beta_interval
        return f"PisotBase({self.minpoly}, beta~{float(iv.mid):.12g}, pisot={self.pisot_certified})"


def _integer_roots(low) -> list:
    a0 = abs(low[0])
    if a0 == 0:
        return [0]
    divs = set()
    i = 1
    while i * i <= a0:
        if a0 % i == 0:
            divs.update((i, a0 // i))
        i += 1
    return sorted(s * d for d in divs for s in (1, -1) if _eval_rational(low, Fraction(s * d)) == 0)


def _has_integer_root(low) -> bool:
    return bool(_integer_roots(low))


def _strip_trivial_factors(p: IntPolynomial) -> IntPolynomial:
    """Divide out the linear factors x - r with integer r.

    If the largest root beyond 1 is itself an integer the base collapses to
    x - beta; otherwise such factors only make elements like beta - r
    non-invertible modulo the polynomial.
    """
    low = list(p.low_first)
    roots = set()
    while len(low) > 1:
        rs = _integer_roots(low)
        if not rs:
            break
        roots.update(rs)
        for r in rs:
            q, _ = _divmod(low, [-r, 1])
            low = [int(c) for c in q]
    if not roots:
        return p
    top = max(roots)
    if top > 1:
        rest = low
        bound = Fraction(1 + sum(abs(c) for c in rest))
        sq = _primitive(_divmod(rest, _gcd(rest, _deriv(rest)))[0]) if len(rest) > 2 else rest
        if len(rest) == 1 or sturm_count(sq, Fraction(top), bound) == 0:
            return IntPolynomial((1, -top))
    if len(low) == 1:
        return p  # no root > 1 left; isolation reports it
    return IntPolynomial(tuple(reversed(low)))


def isolate_pisot_base(p: IntPolynomial, want_pisot_check: bool = True) -> PisotBase:
    return PisotBase(p, want_pisot_check)


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

class FieldElement:
    """Exact element sum_i (num[i]/den) beta^i of Q(beta)."""

    __slots__ = ("base", "num", "den")

    def __init__(self, base: PisotBase, coeffs: Iterable[Rational]):
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        d = base.degree
        if len(nums) > d:
            nums = _reduce_long(base, nums)
        nums += [0] * (d - len(nums))
        self.base = base
        self.num, self.den = _normalize(nums, den)

    @classmethod
    def _raw(cls, base, num, den):
        obj = object.__new__(cls)
        obj.base = base
        obj.num, obj.den = _normalize(num, den)
        return obj

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(n, self.den) for n in self.num)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.base is not self.base:
                raise BaseMismatch("elements belong to different bases")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.base, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return FieldElement._raw(self.base, [a + b for a, b in zip(self.num, o.num)], self.den)
        return FieldElement._raw(self.base, [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                                 self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(FieldElement)
        obj.base, obj.num, obj.den = self.base, tuple(-a for a in self.num), self.den
        return obj

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement._raw(self.base, [a * other for a in self.num], self.den)
        if isinstance(other, Fraction):
            return FieldElement._raw(self.base, [a * other.numerator for a in self.num],
                                     self.den * other.denominator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.num, o.num
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return FieldElement._raw(self.base, self.base.reduce(prod), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.base, _solve_inverse(self))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            other = Fraction(other)
            return FieldElement._raw(self.base, [a * other.denominator for a in self.num],
                                     self.den * other.numerator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return FieldElement(self.base, [other]) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = FieldElement(self.base, [1])
        sq = self
        while k:
            if k & 1:
                result = result * sq
            sq = sq * sq
            k >>= 1
        return result

    # coefficient equality is exact whenever minpoly is irreducible; otherwise
    # fall back on the zero test and give up on a discriminating hash
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement(self.base, [other])
        if not isinstance(other, FieldElement):
            return NotImplemented
        if self.base is not other.base:
            return False
        if self.num == other.num and self.den == other.den:
            return True
        return not self.base.irreducible and (self - other).is_zero()

    def __hash__(self):
        if not self.base.irreducible:
            return hash(self.base)
        return hash((self.num, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    # -- real-number queries -------------------------------------------------
    def _bounds(self, snap):
        lo_t, hi_t, shift = self.base._power_table(snap)
        lo = hi = 0
        for n, a, b in zip(self.num, lo_t, hi_t):
            if n > 0:
                lo += n * a
                hi += n * b
            elif n < 0:
                lo += n * b
                hi += n * a
        return lo, hi, shift

    def enclosure(self, bits: int | None = None) -> RationalInterval:
        if bits is not None:
            self.base.refine(bits)
        lo, hi, shift = self._bounds(self.base._snapshot())
        s = self.den << shift
        return RationalInterval(Fraction(lo, s), Fraction(hi, s))

    def approx(self, bits: int = DEFAULT_BITS) -> Fraction:
        return self.enclosure(bits).mid

    def is_zero(self) -> bool:
        if not any(self.num):
            return True
        if self.base.degree == 1:
            return False
        g = _gcd(self.base._low, list(self.num))
        if len(g) <= 1:
            return False
        iv = self.base.beta_interval
        if iv.lo == iv.hi:
            return _eval_rational(g, iv.lo) == 0
        # the isolating interval holds exactly one root of minpoly
        return sturm_count(g, iv.lo, iv.hi) > 0 or _eval_rational(g, iv.lo) == 0

    def sign(self) -> int:
        if not any(self.num):
            return 0
        checked_zero = False
        bits = self.base.precision
        while True:
            lo, hi, _ = self._bounds(self.base._snapshot())
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if not checked_zero:
                if self.is_zero():
                    return 0
                checked_zero = True
            bits *= 2
            self.base.refine(bits)

    def floor(self) -> int:
        checked = None
        bits = self.base.precision
        while True:
            lo, hi, shift = self._bounds(self.base._snapshot())
            s = self.den << shift
            fl, fh = lo // s, hi // s
            if fl == fh:
                return fl
            if fh - fl == 1 and checked != fh:
                checked = fh
                if (self - fh).is_zero():
                    return fh
            bits *= 2
            self.base.refine(bits)

    def __floor__(self):
        return self.floor()

    def __float__(self):
        return float(self.approx())

    def __repr__(self):
        return f"FieldElement({format_element(self)})"

    def __str__(self):
        return format_element(self)


def _normalize(nums, den):
    if den < 0:
        nums, den = [-a for a in nums], -den
    g = den
    for a in nums:
        if g == 1:
            break
        g = math.gcd(g, a)
    if g != 1:
        nums = [a // g for a in nums]
        den //= g
    return tuple(nums), den


def _reduce_long(base, nums):
    d = base.degree
    nums = list(nums)
    # fold the highest coefficient down repeatedly
    while len(nums) > d:
        top = nums.pop()
        shift = len(nums) - d
        for i, c in enumerate(base._low[:d]):
            nums[shift + i] -= top * c
    return nums


def _solve_inverse(a: FieldElement):
    """Solve a * x = 1 by Gaussian elimination on the multiplication matrix."""
    base = a.base
    d = base.degree
    cols = []
    for j in range(d):
        e = [0] * d
        e[j] = 1
        col = FieldElement(base, e) * a
        cols.append(col.coeffs)
    M = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
    for c in range(d):
        piv = next((r for r in range(c, d) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("element is not invertible modulo minpoly")
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for r in range(d):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][d] for i in range(d)]


# ---------------------------------------------------------------------------
# functional surface
# ---------------------------------------------------------------------------

def fe_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.base is not b.base:
        raise BaseMismatch("elements belong to different bases")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def fe_sign(a: FieldElement) -> int:
    return a.sign()


def fe_floor(a: FieldElement) -> int:
    return a.floor()


# ---------------------------------------------------------------------------
# text form: "c0 + c1*b + c2*b^2"
# ---------------------------------------------------------------------------

def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_element(a: FieldElement) -> str:
    parts = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = _fmt_rat(abs(c))
        if i == 0:
            term = mag
        else:
            var = "b" if i == 1 else f"b^{i}"
            term = var if mag == "1" else f"{mag}*{var}"
        parts.append(("-" if c < 0 else "+", term))
    if not parts:
        return "0"
    sign, term = parts[0]
    out = ("-" if sign == "-" else "") + term
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\s*(?:\*?\s*(?P<var>b|beta)\s*(?:\^\s*\(?\s*(?P<exp>-?\d+)\s*\)?)?)?$"
)


def parse_element(base: PisotBase, text: str) -> FieldElement:
    """Parse a sum of terms ``q``, ``q*b``, ``q*b^k`` (k may be negative)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element")
    # split on + / - that are not inside an exponent
    tokens = [t for t in re.split(r"(?<![\^(])(?=[+-])", s) if t]
    total = FieldElement(base, [0])
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        body = tok.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"bad term {tok!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            total = total + base.beta ** exp * (sign * coef)
        else:
            total = total + sign * coef
    return total

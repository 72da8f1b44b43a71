"""alpha-shift radix systems attached to a base, and the witness-set decision."""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactfield import FieldElement, PisotBase
from .negabase import nega

DEFAULT_CAP = 1_000_000
_Q = 64  # fixed-point bits for the fast floor path


def _fixed(lo: Fraction, hi: Fraction) -> tuple:
    one = 1 << _Q
    return (lo * one).__floor__(), -((-hi * one).__floor__())


class SrsParams:
    """Parameters (r, alpha) of tau_{r, alpha} on Z^dim.

    ``r`` and ``alpha`` are exact field elements; fixed-point enclosures are
    kept alongside so most floors never touch exact arithmetic.
    """

    def __init__(self, base: PisotBase, r: Sequence[FieldElement], alpha: FieldElement):
        self.base = base
        self.r = tuple(r)
        self.alpha = alpha
        self.dim = len(self.r)
        base.refine(96)
        self._r_fix = [_fixed(*_iv(x)) for x in self.r]
        self._zero = base.const(0)
        self._alpha_fix = {None: _fixed(*_iv(alpha))}

    def _afix(self, alpha):
        if alpha is None:
            return self._alpha_fix[None]
        key = (alpha.num, alpha.den)
        fx = self._alpha_fix.get(key)
        if fx is None:
            fx = self._alpha_fix[key] = _fixed(*_iv(alpha))
        return fx

    def dot(self, z: Sequence[int]) -> FieldElement:
        acc = self._zero
        for zi, ri in zip(z, self.r):
            if zi:
                acc = acc + ri * zi
        return acc

    def floor_rz(self, z: Sequence[int], alpha: Optional[FieldElement] = None) -> int:
        """Exact floor(r.z + alpha); alpha defaults to the parameter's own."""
        a_lo, a_hi = self._afix(alpha)
        lo, hi = a_lo, a_hi
        for zi, (rl, rh) in zip(z, self._r_fix):
            if zi > 0:
                lo += zi * rl
                hi += zi * rh
            elif zi < 0:
                lo += zi * rh
                hi += zi * rl
        fl = lo >> _Q
        if fl == hi >> _Q:
            return fl
        a = self.alpha if alpha is None else alpha
        return (self.dot(z) + a).floor()

    def __repr__(self):
        rs = ", ".join(f"{float(x):.6g}" for x in self.r)
        return f"SrsParams(dim={self.dim}, r~({rs}), alpha~{float(self.alpha):.6g})"


def _iv(x: FieldElement):
    e = x.enclosure()
    return e.lo, e.hi


def r_vector(base: PisotBase) -> list:
    """r_i = (-1)^(d-i) (a_{d-i}/beta + ... + a_d/beta^(i+1)), i = 0..d-2."""
    d = base.degree
    a = list(base.minpoly.coefficients)  # a[0] = 1, a[j] = a_j
    inv = base.beta.inverse()
    out = []
    for i in range(d - 1):
        acc = base.const(0)
        pw = inv
        for j in range(i + 1):
            acc = acc + pw * a[d - i + j]
            pw = pw * inv
        out.append(acc if (d - i) % 2 == 0 else -acc)
    return out


def check_factorization(base: PisotBase, r: Sequence[FieldElement]) -> bool:
    """(x + beta)(x^(d-1) + r_{d-2} x^(d-2) + ... + r_0) == sum (-1)^j a_j x^(d-j)."""
    d = base.degree
    beta = base.beta
    rr = list(r) + [base.const(1)]
    a = base.minpoly.coefficients
    for k in range(d + 1):
        lhs = base.const((-1) ** (d - k) * a[d - k])
        rhs = base.const(0)
        if k >= 1:
            rhs = rhs + rr[k - 1]
        if k <= d - 1:
            rhs = rhs + beta * rr[k]
        if not (lhs - rhs).is_zero():
            return False
    # -beta r_i = r_{i-1} + c_i with integer c_i
    prev = base.const(0)
    for ri in rr[:-1]:
        c = -(beta * ri) - prev
        if any(c.num[1:]) or c.den != 1:
            return False
        prev = ri
    return True


def srs_from_base(base: PisotBase) -> SrsParams:
    if base.degree < 1:
        raise ValueError("base degree must be >= 1")
    r = r_vector(base)
    if not check_factorization(base, r):
        raise ArithmeticError("factorization identity failed for r")
    beta = base.beta
    return SrsParams(base, r, beta / (beta + 1))


def tau_step(p: SrsParams, z: Sequence[int], alpha_override: Optional[FieldElement] = None) -> tuple:
    if p.dim == 0:
        return ()
    return tuple(z[1:]) + (-p.floor_rz(z, alpha_override),)


def tau_zero(p: SrsParams, z: Sequence[int]) -> tuple:
    """tau_{r,0}."""
    return tuple(z[1:]) + (-p.floor_rz(z, p._zero),)


def tau_zero_conj(p: SrsParams, z: Sequence[int]) -> tuple:
    """z -> -tau_{r,0}(-z)."""
    return tuple(z[1:]) + (p.floor_rz([-x for x in z], p._zero),)


def phi(p: SrsParams, z: Sequence[int], check: bool = False) -> FieldElement:
    """Conjugacy z -> r.z - floor(r.z + alpha) into Z[beta] cap [l, l + 1)."""
    val = p.dot(z) - p.floor_rz(z)
    if check and not nega(p.base).in_domain(val):
        raise ArithmeticError(f"phi{tuple(z)} left the domain")
    return val


def orbit_to_zero(p: SrsParams, z: Sequence[int], limit: int = 10_000) -> Optional[int]:
    """Number of tau steps until 0, or None when z runs into a nonzero cycle."""
    z = tuple(z)
    zero = (0,) * p.dim
    seen = set()
    n = 0
    while z != zero:
        if z in seen or n > limit:
            return None
        seen.add(z)
        z = tau_step(p, z)
        n += 1
    return n


def _min_rotation(cycle: list) -> tuple:
    k = min(range(len(cycle)), key=lambda i: cycle[i:] + cycle[:i])
    return tuple(cycle[k:] + cycle[:k])


@dataclass
class WitnessClosure:
    states: set
    saturated: bool
    cycles: list = field(default_factory=list)
    successor: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.states)


def witness_closure(p: SrsParams, cap: int = DEFAULT_CAP) -> WitnessClosure:
    """Minimal set containing +-e_i closed under tau_{r,0} and -tau_{r,0}(-.)."""
    dim = p.dim
    start = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        start.append(tuple(e))
        start.append(tuple(-x for x in e))
    states = set(start)
    queue = deque(start)
    while queue:
        z = queue.popleft()
        for nxt in (tau_zero(p, z), tau_zero_conj(p, z)):
            if nxt not in states:
                if len(states) >= cap:
                    return WitnessClosure(states, False)
                states.add(nxt)
                queue.append(nxt)
    succ = {z: tau_step(p, z) for z in states}
    for z, w in succ.items():
        if w not in states:
            raise ArithmeticError(f"tau_(r,alpha){z} = {w} escaped the closure")
    return WitnessClosure(states, True, _find_cycles(succ, dim), succ)


def _find_cycles(succ: dict, dim: int) -> list:
    zero = (0,) * dim
    color = {}
    cycles = []
    for s in sorted(succ):
        if s in color:
            continue
        path = []
        pos = {}
        cur = s
        while cur not in color and cur in succ:
            color[cur] = 1
            pos[cur] = len(path)
            path.append(cur)
            cur = succ[cur]
        if cur in pos:
            cyc = path[pos[cur]:]
            if cyc != [zero]:
                cycles.append(_min_rotation(cyc))
        for c in path:
            color[c] = 2
    cycles.sort()
    return cycles


class D0(str, enum.Enum):
    IN = "InD0"
    NOT_IN = "NotInD0"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class D0Decision:
    verdict: D0
    cycle: Optional[tuple] = None
    closure: Optional[WitnessClosure] = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.cycle is not None:
            out["cycle"] = [list(z) for z in self.cycle]
        return out


def decide_d0(p: SrsParams, cap: int = DEFAULT_CAP) -> D0Decision:
    """Decide r in D^0_{dim, alpha} via the minimal witness closure."""
    w = witness_closure(p, cap)
    if not w.saturated:
        return D0Decision(D0.INCONCLUSIVE, None, w)
    if w.cycles:
        return D0Decision(D0.NOT_IN, w.cycles[0], w)
    return D0Decision(D0.IN, None, w)


def replay_cycle(p: SrsParams, cycle: Sequence[Sequence[int]]) -> bool:
    """True iff tau_{r,alpha} maps each state to the next, cyclically."""
    cycle = [tuple(z) for z in cycle]
    if not cycle:
        return False
    return all(tau_step(p, z) == cycle[(i + 1) % len(cycle)] for i, z in enumerate(cycle))


def format_state(z: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in z) + ")"

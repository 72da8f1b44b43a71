"""Fractional lengths of sums and differences of (-beta)-integers for the
cubic family x^3 - m x^2 - m x - m.

The defect s_j = T^j(x - y) + T^j(y) - T^j(x) is tracked through the
extended system (z, h) -> Phi(z, h) = r.z - floor(r.z + alpha) + h on
Z^2 x {-1, 0, 1}; the explicit invariant set V bounds every defect.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .alphasrs import SrsParams, srs_from_base, tau_step
from .exactfield import FieldElement, IntPolynomial, PisotBase, isolate_pisot_base
from .negabase import fr_length, nega, word_value, zmb_integers


class WitnessMismatch(AssertionError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@lru_cache(maxsize=None)
def cubic_base(m: int) -> PisotBase:
    if m < 1:
        raise ValueError("m must be >= 1")
    return isolate_pisot_base(IntPolynomial((1, -m, -m, -m)))


@lru_cache(maxsize=None)
def cubic_srs(m: int) -> SrsParams:
    return srs_from_base(cubic_base(m))


def carry_set(m: int) -> range:
    """B = -A - A + A = {-2m, ..., m}."""
    return range(-2 * m, m + 1)


# -- regions -------------------------------------------------------------------

class Region(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    ORIGIN = "Origin"
    MINUS_ONE_MINUS_ONE = "MinusOneMinusOne"


@dataclass(frozen=True)
class RegionLabel:
    kind: Region
    k: int = 0

    def __str__(self):
        if self.kind in (Region.ORIGIN, Region.MINUS_ONE_MINUS_ONE):
            return self.kind.value
        return f"{self.kind.value}{self.k}"


def region_classify(z, m: int | None = None) -> RegionLabel:
    """Label of z in the partition A_k, ..., F_k of Z^2 minus {(0,0), (-1,-1)}."""
    z0, z1 = z
    if (z0, z1) == (0, 0):
        return RegionLabel(Region.ORIGIN)
    if (z0, z1) == (-1, -1):
        return RegionLabel(Region.MINUS_ONE_MINUS_ONE)
    if z0 >= -1 and z1 > z0 and z1 >= 0:
        return RegionLabel(Region.A, z1)
    if z0 >= 1 and 1 <= z1 <= z0:
        return RegionLabel(Region.B, z0)
    if z0 >= 1 and z1 <= 0:
        return RegionLabel(Region.C, z0 - z1)
    if z0 <= 0 and z1 < z0:
        return RegionLabel(Region.D, -z1)
    if z0 <= z1 <= -2:
        return RegionLabel(Region.E, -z0)
    return RegionLabel(Region.F, z1 - z0)


def region_points(kind: str, k: int) -> list:
    """The finite set A_k, ..., F_k as a list of points."""
    if kind == "A":
        return [(j, k) for j in range(-1, k)]
    if kind == "B":
        return [(k, j) for j in range(1, k + 1)]
    if kind == "C":
        return [(j, j - k) for j in range(1, k + 1)]
    if kind == "D":
        return [(-j, -k) for j in range(0, k)]
    if kind == "E":
        return [(-k, -j) for j in range(2, k + 1)]
    if kind == "F":
        return [(-j, k - j) for j in range(2, k + 2)]
    raise ValueError(kind)


# -- the invariant set V -------------------------------------------------------------

H_VALUES = (-1, 0, 1)


@dataclass(frozen=True)
class VSet:
    m: int
    members: frozenset

    def __contains__(self, s) -> bool:
        return tuple(s) in self.members

    def __len__(self):
        return len(self.members)

    def heights(self, z) -> tuple:
        return tuple(h for h in H_VALUES if (z[0], z[1], h) in self.members)

    def is_full(self, z) -> bool:
        return len(self.heights(z)) == 3

    def points(self) -> set:
        return {(a, b) for a, b, _ in self.members}


def _general_v(m: int) -> set:
    v = set()
    for k in range(m + 1):
        for kind in "ABCDEF":
            for z in region_points(kind, k):
                v.update((z[0], z[1], h) for h in H_VALUES)
    v -= {(-1, m, 1), (0, m, 1)}
    v.update((a, b, 1) for a, b in region_points("C", m + 1) if (a, b) != (m + 1, 0))
    dm = region_points("D", m + 1)
    v.update((a, b, 1) for a, b in dm)
    v.update((a, b, 0) for a, b in dm if (a, b) != (0, -m - 1))
    v.update((a, b, -1) for a, b in dm if (a, b) not in {(0, -m - 1), (-1, -m - 1), (-2, -m - 1)})
    pts = ({(0, 0), (-1, -1)} | set(region_points("E", m + 1))) - {(-m - 1, -m - 1)}
    v.update((a, b, h) for a, b in pts for h in H_VALUES)
    fm = set(region_points("F", m + 1)) - {(-m - 2, -1), (-m - 1, 0)}
    v.update((a, b, h) for a, b in fm for h in (-1, 0))
    return v


def _listed_v1() -> set:
    full = [(0, 0), (1, 1), (1, 0), (0, -1), (-1, -1), (-1, 0), (-2, -1)]
    v = {(a, b, h) for a, b in full for h in H_VALUES}
    v.update((a, b, h) for a, b in [(-1, 1), (0, 1)] for h in (-1, 0))
    v.update((-1, -2, h) for h in (0, 1))
    v.update({(1, -1, 1), (0, -2, 1), (-2, 0, -1)})
    return v


@lru_cache(maxsize=None)
def build_v(m: int) -> VSet:
    if m < 1:
        raise ValueError("m must be >= 1")
    return VSet(m, frozenset(_listed_v1() if m == 1 else _general_v(m)))


def general_v_formula(m: int) -> frozenset:
    """The m >= 2 construction evaluated at any m (used to check the m = 1 listing)."""
    return frozenset(_general_v(m))


# -- floors and the extended map --------------------------------------------------------

def in_psi_box(z, m: int) -> bool:
    z0, z1 = z
    return -m - 1 <= z0 <= m and abs(z1) <= m + 1 and abs(z0 - z1) <= m + 1


def floor_rz_alpha_closed(z, m: int) -> int:
    z0, z1 = z
    if z0 >= 0 or z1 <= z0 == -1:
        return z0 - z1
    return z0 - z1 + 1


def floor_rz_alpha(z, m: int) -> int:
    """floor(r.z + alpha): closed form on the box, exact floor elsewhere."""
    if in_psi_box(z, m):
        return floor_rz_alpha_closed(z, m)
    return cubic_srs(m).floor_rz(z)


def Phi(s, m: int) -> FieldElement:
    z0, z1, h = s
    p = cubic_srs(m)
    return p.dot((z0, z1)) - p.floor_rz((z0, z1)) + h


def _successor_core(p: SrsParams, s, m: int):
    """(new z, the carry-free part of h') for the extended step."""
    z0, z1, h = s
    fl = p.floor_rz((z0, z1))
    new_z1 = h - fl
    base_h = (z1 - z0 - h + fl) * m + p.floor_rz((z1, new_z1))
    return (z1, new_z1), base_h


def ext_step(s, b: int, m: int) -> tuple:
    """The extended transition labelled by carry b (h' may leave {-1,0,1})."""
    z, base_h = _successor_core(cubic_srs(m), s, m)
    return (z[0], z[1], base_h + b)


def tilde_tau(p: Optional[SrsParams], s, m: int) -> set:
    """All successors of s whose height stays in {-1, 0, 1}."""
    z, base_h = _successor_core(p or cubic_srs(m), s, m)
    lo, hi = base_h - 2 * m, base_h + m
    return {(z[0], z[1], h) for h in H_VALUES if lo <= h <= hi}


def verify_v_invariant(m: int, v: Optional[VSet] = None):
    """Check tilde_tau(V) is contained in V; returns (ok, violations)."""
    v = build_v(m) if v is None else v
    p = cubic_srs(m)
    bad = []
    for s in sorted(v.members):
        for t in sorted(tilde_tau(p, s, m)):
            if t not in v.members:
                bad.append((s, t))
    return not bad, bad


# -- successor chains ------------------------------------------------------------------

def tv_chains(m: int) -> list:
    """Chains (source set, target set) along which tau maps forward."""
    chains = []
    for k in range(3, m + 2):
        c = [z for z in region_points("C", k) if z != (m + 1, 0)]
        chains += [(f"C{k}", c, f"D{k}", region_points("D", k)),
                   (f"D{k}", region_points("D", k), f"E{k}", region_points("E", k)),
                   (f"E{k}", region_points("E", k), f"F{k - 1}", region_points("F", k - 1))]
    for k in range(1, m + 1):
        chains += [(f"F{k + 1}", region_points("F", k + 1), f"A{k}", region_points("A", k)),
                   (f"A{k}", region_points("A", k), f"B{k}", region_points("B", k)),
                   (f"B{k}", region_points("B", k), f"C{k}", region_points("C", k)),
                   (f"C{k}", region_points("C", k), f"D{k}", region_points("D", k))]
    return chains


EXCEPTIONAL = [((0, -2), (-2, -2)), ((-2, -2), (-2, -1)), ((-2, -1), (-1, 0)), ((-1, 0), (0, 0)),
               ((-1, -2), (-2, -1)), ((0, -1), (-1, -1)), ((-1, -1), (-1, 0))]


def check_tv_chains(m: int) -> list:
    """Violations of the chain transitions (empty when all hold)."""
    p = cubic_srs(m)
    bad = []
    for src_name, src, dst_name, dst in tv_chains(m):
        dst = set(dst)
        for z in src:
            w = tau_step(p, z)
            if w not in dst:
                bad.append((src_name, z, w, dst_name))
    for z, w in EXCEPTIONAL:
        got = tau_step(p, z)
        if got != w:
            bad.append(("exceptional", z, got, w))
    return bad


# -- path lengths ---------------------------------------------------------------------

def steps_to_zero(z, m: int, limit: int = 10_000) -> int:
    p = cubic_srs(m)
    z = tuple(z)
    n = 0
    while z != (0, 0):
        z = tau_step(p, z)
        n += 1
        if n > limit:
            raise BudgetExceeded(f"{z} does not reach 0 within {limit} steps")
    return n




def reachable_states(m: int) -> frozenset:
    """States reachable from (0,0,0) under tilde_tau."""
    p = cubic_srs(m)
    seen = {(0, 0, 0)}
    stack = [(0, 0, 0)]
    while stack:
        s = stack.pop()
        for t in tilde_tau(p, s, m):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


_EXCEPTIONAL_STEPS = {(0, 0): 0, (-1, 0): 1, (-1, -1): 2, (-2, -1): 2, (-2, -2): 3,
                      (0, -1): 3, (-1, -2): 3, (0, -2): 4}


def predicted_steps(z, m: int) -> int:
    """Steps to (0,0) from the region bookkeeping of the chain lemma.

    Each region of index k is sent into D_2 (k even) or D_1 (k odd) in a
    fixed number of steps; the landing point inside D_2 is found by
    following tau, everything else is read off the offsets.
    """
    z = tuple(z)
    if z in _EXCEPTIONAL_STEPS:
        return _EXCEPTIONAL_STEPS[z]
    lab = region_classify(z)
    kind, k = lab.kind.value, lab.k
    if kind in "AB" and k == m + 1:
        k = m  # A_{m+1} -> B_{m+1} -> C_m runs parallel to A_m -> B_m -> C_m
    even_off = {"F": 2, "A": 3, "B": 4, "C": 5, "D": 6, "E": 7}
    if kind == "F":
        j, to_d2 = (k - 1) // 2 if k % 2 else k // 2, k % 2 == 1
    elif kind in "ABC":
        j, to_d2 = (k // 2, True) if k % 2 == 0 else ((k + 1) // 2, False)
    elif k % 2 == 0:
        j, to_d2 = k // 2, True
    else:
        j, to_d2 = (k - 1) // 2, False
    if to_d2:
        n = 6 * j - even_off[kind]
        w = z
        p = cubic_srs(m)
        for _ in range(n):
            w = tau_step(p, w)
        if w not in ((0, -2), (-1, -2)):
            raise AssertionError(f"{z} did not land in D_2 after {n} steps")
        return n + _EXCEPTIONAL_STEPS[w]
    n = 6 * j - {"F": 2, "A": 3, "B": 4, "C": 5, "D": 0, "E": 1}[kind]
    return n + 3


@dataclass
class FrBound:
    """Certified maximum together with the start state that attains it."""

    m: int
    op: str
    value: int
    argmax: tuple
    starts: int
    formula_mismatches: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)


def sub_start_states(m: int) -> list:
    return sorted({(a, b) for a, b, h in build_v(m).members if h == 0})


def _h_of(p: SrsParams, z) -> int:
    return p.floor_rz((-z[0], -z[1])) + p.floor_rz(z)


def add_start_states(m: int) -> list:
    """z with phi(z) = -Phi(-z, h), h in {0, 1}, (-z, h) in V."""
    p = cubic_srs(m)
    out = set()
    for a, b, h in build_v(m).members:
        z = (-a, -b)
        if h in (0, 1) and _h_of(p, z) == h:
            out.add(z)
    return sorted(out)


def _certify(m: int, op: str, starts: Iterable) -> FrBound:
    best, arg, count, bad = -1, None, 0, []
    for z in starts:
        count += 1
        n = steps_to_zero(z, m)
        pred = predicted_steps(z, m)
        if pred != n:
            bad.append((z, n, pred))
        if n > best:
            best, arg = n, z
    return FrBound(m, op, best, arg, count, bad)


def expected_sub(m: int) -> int:
    return 3 * m + (4 if m >= 3 and m % 2 else 3)


def expected_add(m: int) -> int:
    if m == 1:
        return 6
    if m == 2:
        return 7
    return 3 * m + (4 if m % 2 else 2)


@lru_cache(maxsize=None)
def frmax_sub_bound(m: int) -> FrBound:
    return _certify(m, "sub", sub_start_states(m))


@lru_cache(maxsize=None)
def frmax_add_bound(m: int) -> FrBound:
    res = _certify(m, "add", add_start_states(m))
    p = cubic_srs(m)
    # points the exclusion argument removes by an inequality; report any that survive
    for j in range(1, m + 1):
        z = (j, j - m - 1)
        if _h_of(p, z) == 0 and (-z[0], -z[1], 0) in build_v(m):
            res.diagnostics.append(f"start state {z} not excluded")
    return res


def frmax_sub(m: int) -> int:
    """max fr(x - y) over (-beta)-integers, from exact paths over V."""
    return frmax_sub_bound(m).value


def frmax_add(m: int) -> int:
    """max fr(x + y) over (-beta)-integers, from exact paths over -V."""
    return frmax_add_bound(m).value


# -- witnesses ---------------------------------------------------------------------

def witness_digits(m: int) -> tuple:
    """Digit strings (x, y), leftmost digit highest, all digits integral."""
    if m < 2:
        raise ValueError("digit-string witnesses are given for m >= 2")
    xs, ys = [], []
    top = m if m % 2 == 0 else m - 1
    for i in range(2, top + 1, 2):
        xs += [0, 0, 0, 0, i, i]
        ys += [0, i, i, 0, 0, 0]
    if m % 2 == 0:
        xs += [0, 0, 0, 0]
        ys += [0, 0, 1, 2]
    else:
        xs += [0, 0, 0, 0, m, m, 0, 0, 0, 0, 0, m]
        ys += [0, m, 0, 0, 0, 0, 0, 0, 1, 2, 0, 0]
    return tuple(xs), tuple(ys)


@dataclass(frozen=True)
class Witness:
    m: int
    x: FieldElement
    y: FieldElement
    fr: int
    x_digits: Optional[tuple] = None
    y_digits: Optional[tuple] = None


def frmax_sub_witness(m: int) -> Witness:
    """Pair of (-beta)-integers whose difference attains frmax_sub(m)."""
    base = cubic_base(m)
    if m == 1:
        b = base.beta
        x, y, xd, yd = 1 - b, b ** 4 - b ** 3, None, None
    else:
        xd, yd = witness_digits(m)
        x, y = word_value(base, xd), word_value(base, yd)
    for name, v in (("x", x), ("y", y)):
        if fr_length(base, v) != 0:
            raise WitnessMismatch(f"{name} is not a (-beta)-integer for m={m}")
    fr = fr_length(base, x - y)
    if fr != frmax_sub(m):
        raise WitnessMismatch(f"fr(x - y) = {fr}, expected {frmax_sub(m)} for m={m}")
    return Witness(m, x, y, fr, xd, yd)


# -- simulation ----------------------------------------------------------------------

def common_scale(base: PisotBase, values, limit: int = 10_000) -> int:
    """Minimal k >= 0 with every v / (-beta)^k inside the open domain."""
    nb = nega(base)
    vals = list(values)
    for k in range(limit + 1):
        if all(nb.in_open_domain(v) for v in vals):
            return k
        vals = [v * nb.neg_inv_beta for v in vals]
    raise BudgetExceeded(f"no common scale within {limit}")


@dataclass
class DefectTrace:
    """s_j = T^j(u) + T^j(v) - T^j(w) for (u, v, w) = (x-y, y, x) or (x, y, x+y)."""

    k: int
    defects: list
    carries: list


def defect_trace(m: int, x: FieldElement, y: FieldElement, op: str = "sub",
                 steps: int | None = None) -> DefectTrace:
    base = cubic_base(m)
    nb = nega(base)
    if op == "sub":
        trio = [x - y, y, x]
    elif op == "add":
        trio = [x, y, x + y]
    else:
        raise ValueError("op must be 'add' or 'sub'")
    k = common_scale(base, trio)
    scale = nb.neg_inv_beta ** k
    u, v, w = (t * scale for t in trio)
    n = steps if steps is not None else k + 3 * m + 8
    defects, carries = [u + v - w], []
    for _ in range(n):
        (u, du), (v, dv), (w, dw) = nb.step(u), nb.step(v), nb.step(w)
        defects.append(u + v - w)
        carries.append(dw - du - dv)
    return DefectTrace(k, defects, carries)


@lru_cache(maxsize=None)
def phi_of_v(m: int) -> frozenset:
    return frozenset(Phi(s, m) for s in build_v(m).members)


# -- brute force --------------------------------------------------------------------

ORACLE_PAIR_LIMIT = 2_000_000


def frmax_oracle(m: int, depth: int, op: str = "sub", limit: int = ORACLE_PAIR_LIMIT) -> int:
    """max fr(x op y) over all (-beta)-integers with at most ``depth`` digits."""
    if op not in ("add", "sub"):
        raise ValueError("op must be 'add' or 'sub'")
    base = cubic_base(m)
    ints = sorted(zmb_integers(base, depth), key=lambda e: (e.num, e.den))
    if len(ints) ** 2 > limit:
        raise BudgetExceeded(f"{len(ints)}^2 pairs exceed the limit {limit}")
    memo = {}
    best = 0
    for i, x in enumerate(ints):
        # both operations are symmetric up to sign, and fr(-v) is not fr(v),
        # so only the add case may halve the work
        for y in (ints[i:] if op == "add" else ints):
            v = x + y if op == "add" else x - y
            key = (v.num, v.den)
            fr = memo.get(key)
            if fr is None:
                fr = memo[key] = fr_length(base, v)
            if fr > best:
                best = fr
    return best


# -- text map ---------------------------------------------------------------------

MAP_GLYPHS = {
    frozenset(H_VALUES): "#",
    frozenset({-1, 0}): "v",
    frozenset({0, 1}): "^",
    frozenset({1}): "o",
    frozenset({0}): "0",
    frozenset({-1}): "-",
    frozenset({-1, 1}): ":",
    frozenset(): ".",
}


def region_map(m: int, box: int) -> str:
    """Rows z1 = box..-box, columns z0 = -box..box; one glyph per lift pattern."""
    v = build_v(m)
    lines = []
    for z1 in range(box, -box - 1, -1):
        row = "".join(MAP_GLYPHS[frozenset(v.heights((z0, z1)))] for z0 in range(-box, box + 1))
        lines.append(f"{z1:>4} {row}")
    lines.append("     " + "".join("|" if z0 == 0 else " " for z0 in range(-box, box + 1)))
    legend = "# full  v {-1,0}  ^ {0,1}  o {1}  0 {0}  - {-1}  : {-1,1}  . none"
    return "\n".join(lines + [legend])

"""Deciding the negative finiteness property (-F) for a base, with certificates."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .alphasrs import (DEFAULT_CAP, D0, SrsParams, decide_d0, orbit_to_zero,
                       replay_cycle, srs_from_base, tau_step)
from .exactfield import IntPolynomial, PisotBase, isolate_pisot_base
from .negabase import StepBudgetExceeded, digit_sequence, nega, word_value


class Verdict(str, enum.Enum):
    MINUS_F = "MinusF"
    NOT_MINUS_F = "NotMinusF"
    TRIVIAL_FIN0 = "TrivialFin0"
    INCONCLUSIVE = "Inconclusive"


class NotCubic(ValueError):
    pass


# -- certificates -------------------------------------------------------------

@dataclass(frozen=True)
class EllFiniteOrbit:
    """d(l_beta) = digits 0^omega: forces -1/(beta+1) into Z[1/beta]."""

    digits: tuple

    def replay(self, base: PisotBase) -> bool:
        nb = nega(base)
        if word_value(base, self.digits, radix=0) != nb.ell:
            return False
        x = -1 / (nb.beta + 1)
        y, digit = nb.step(x)
        return y == x and digit == 1

    def to_json(self):
        return {"kind": "EllFiniteOrbit", "digits": list(self.digits)}


@dataclass(frozen=True)
class PMinusOneUnit:
    """beta is a root of p with |p(-1)| = 1."""

    poly: IntPolynomial
    value: int

    def replay(self, base: PisotBase) -> bool:
        root = base.const(0)
        for c in self.poly.coefficients:
            root = root * base.beta + c
        return abs(self.poly(-1)) == 1 and root.is_zero()

    def to_json(self):
        return {"kind": "PMinusOneUnit", "poly": str(self.poly), "value": self.value}


@dataclass(frozen=True)
class SrsCycle:
    cycle: tuple

    def replay(self, base: PisotBase) -> bool:
        return replay_cycle(srs_from_base(base), self.cycle)

    def to_json(self):
        return {"kind": "SrsCycle", "cycle": [list(z) for z in self.cycle]}


@dataclass(frozen=True)
class WitnessProof:
    closure_size: int
    max_steps: int

    def to_json(self):
        return {"kind": "WitnessProof", "closure_size": self.closure_size, "max_steps": self.max_steps}


@dataclass(frozen=True)
class CriterionItem:
    item: int
    in_d0: bool = True
    cycle: Optional[tuple] = None

    def to_json(self):
        out = {"kind": "CriterionItem", "item": self.item, "in_d0": self.in_d0}
        if self.cycle is not None:
            out["cycle"] = [list(z) for z in self.cycle]
        return out


@dataclass(frozen=True)
class SmallBeta:
    def to_json(self):
        return {"kind": "SmallBeta"}


@dataclass
class FinitenessVerdict:
    verdict: Verdict
    certificate: object = None
    pisot: bool = True
    notes: list = field(default_factory=list)

    @property
    def has_minus_f(self) -> bool:
        return self.verdict is Verdict.MINUS_F

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "pisot": self.pisot}
        out["certificate"] = self.certificate.to_json() if self.certificate is not None else None
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# -- individual checks -------------------------------------------------------------

def check_notf_ell(base: PisotBase, max_steps: int | None = None) -> Optional[EllFiniteOrbit]:
    nb = nega(base)
    word, _ = digit_sequence(base, nb.ell, max_steps)
    if word.complete and not word.period:
        return EllFiniteOrbit(tuple(word.preperiod))
    return None


def check_notf_punit(p: IntPolynomial) -> Optional[PMinusOneUnit]:
    v = p(-1)
    return PMinusOneUnit(p, v) if abs(v) == 1 else None


def _sum(base, xs):
    acc = base.const(0)
    for x in xs:
        acc = acc + x
    return acc


def criteria_applicable(p: SrsParams) -> list:
    """All items of the finiteness-region criteria that apply to (r, alpha)."""
    base, r, alpha = p.base, list(p.r), p.alpha
    d = len(r)
    signs = [x.sign() for x in r]
    abs_sum = _sum(base, [x if s >= 0 else -x for x, s in zip(r, signs)])
    small = (abs_sum - alpha).sign() <= 0
    found = []
    if small:
        neg = _sum(base, [x for x, s in zip(r, signs) if s < 0])
        if (neg - (alpha - 1)).sign() > 0:
            found.append(CriterionItem(1, True))
    chain = [base.const(0)] + r + [alpha]
    if all((b - a).sign() >= 0 for a, b in zip(chain, chain[1:])):
        found.append(CriterionItem(2, True))
    negatives = [i for i, s in enumerate(signs) if s < 0]
    if small and len(negatives) == 1:
        k = d - negatives[0]
        idx = [d - j * k for j in range(1, d // k + 1)]
        total = _sum(base, [r[i] for i in idx])
        if (total - (alpha - 1)).sign() > 0:
            found.append(CriterionItem(3, True))
        else:
            z = tuple(-1 if i in idx else 0 for i in range(d))
            found.append(CriterionItem(3, False, _cycle_from(p, z)))
    return found


def _cycle_from(p: SrsParams, z: tuple) -> tuple:
    cyc = [z]
    nxt = tau_step(p, z)
    while nxt != z and len(cyc) <= 4 * p.dim + 4:
        cyc.append(nxt)
        nxt = tau_step(p, nxt)
    return tuple(cyc)


def criterion_regions(p: SrsParams) -> Optional[CriterionItem]:
    found = criteria_applicable(p)
    return found[0] if found else None


def _below_golden(base: PisotBase) -> bool:
    beta = base.beta
    return (beta * beta - beta - 1).sign() < 0


def decide_minus_f(base: PisotBase, cap: int = DEFAULT_CAP,
                   extra_polys: Sequence[IntPolynomial] = ()) -> FinitenessVerdict:
    """Cheap certificates first, then the witness-closure decision."""
    pisot = base.pisot_certified
    notes = [] if pisot else ["base is not certified Pisot; (-F) requires a Pisot base"]

    def done(v, cert):
        return FinitenessVerdict(v, cert, pisot, notes)

    if _below_golden(base):
        return done(Verdict.TRIVIAL_FIN0, SmallBeta())
    for poly in (base.minpoly, *extra_polys):
        cert = check_notf_punit(poly)
        if cert is not None and cert.replay(base):
            return done(Verdict.NOT_MINUS_F, cert)
    try:
        cert = check_notf_ell(base)
    except StepBudgetExceeded:
        cert = None
        notes.append("l_beta orbit not resolved within the step budget")
    if cert is not None:
        return done(Verdict.NOT_MINUS_F, cert)
    p = srs_from_base(base)
    item = criterion_regions(p)
    if item is not None:
        return done(Verdict.MINUS_F if item.in_d0 else Verdict.NOT_MINUS_F, item)
    dec = decide_d0(p, cap)
    if dec.verdict is D0.IN:
        steps = max((orbit_to_zero(p, z) or 0 for z in dec.closure.states), default=0)
        return done(Verdict.MINUS_F, WitnessProof(len(dec.closure), steps))
    if dec.verdict is D0.NOT_IN:
        return done(Verdict.NOT_MINUS_F, SrsCycle(dec.cycle))
    notes.append(f"witness closure exceeded cap {cap}")
    return done(Verdict.INCONCLUSIVE, None)


def decide_poly(coeffs, cap: int = DEFAULT_CAP, extra_polys=()) -> FinitenessVerdict:
    return decide_minus_f(isolate_pisot_base(IntPolynomial(tuple(coeffs))), cap, extra_polys)


# -- closed forms for cubic units ----------------------------------------------

def cubic_pisot_lemma(a: int, b: int, c: int) -> bool:
    """Coefficient test for x^3 - a x^2 + b x - c having a Pisot root."""
    sgn = (c > 0) - (c < 0)
    return abs(b + 1) < a + c and b + c * c < sgn * (1 + a * c)


def classify_cubic_unit(a: int, b: int, c: int) -> Verdict | str:
    """(-F) for the cubic unit x^3 - a x^2 + b x - c, from the closed form."""
    if c not in (-1, 1):
        raise ValueError("c must be a unit")
    p = IntPolynomial((1, -a, b, -c))
    if p(1) == 0 or p(-1) == 0:
        raise NotCubic(f"{p} has a rational root")
    if p(1) >= 0 or not cubic_pisot_lemma(a, b, c):
        return "NotPisotUnit"
    if c == 1 and -1 <= b < a and abs(a) + abs(b) >= 2:
        return Verdict.MINUS_F
    return Verdict.NOT_MINUS_F


def dbonacci_poly(d: int, m: int) -> IntPolynomial:
    """x^d - m x^(d-1) - ... - m x - m."""
    return IntPolynomial((1,) + (-m,) * d)

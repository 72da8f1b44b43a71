"""Command-line front end: ``negabeta <command> [flags]``.

Exit status 0 on success, 1 when the input is mathematically out of range
(bad base, point outside the domain, budget exhausted), 2 on usage errors.
JSON output is one object per call with sorted keys and no floats.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .alphasrs import DEFAULT_CAP, decide_d0, format_state, srs_from_base
from .exactfield import (BaseMismatch, IntPolynomial, NoRootAboveOne, PisotBase,
                         format_element, isolate_pisot_base, parse_element)
from .finiteness import decide_minus_f
from .negabase import OutOfDomain, StepBudgetExceeded, digit_sequence, expansion, fr_length
from .negarith import (BudgetExceeded, build_v, frmax_add_bound, frmax_oracle,
                       frmax_sub_bound, frmax_sub_witness, region_map)


class DomainError(Exception):
    pass


def approx(x: Fraction, den: int = 10 ** 9) -> str:
    """``~p/q``: a short rational near x, flagged as approximate."""
    q = x.limit_denominator(den)
    return f"~{q.numerator}" if q.denominator == 1 else f"~{q.numerator}/{q.denominator}"


def _base(text: str) -> PisotBase:
    try:
        poly = IntPolynomial.parse(text)
    except ValueError as exc:
        raise DomainError(f"--poly: {exc}") from exc
    return isolate_pisot_base(poly)


def _beta_line(base: PisotBase) -> str:
    return f"beta {approx(base.beta_interval.mid)} (root of {base.minpoly})"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def cmd_expand(args) -> None:
    base = _base(args.poly)
    x = parse_element(base, args.num)
    word = expansion(base, x)
    fr = fr_length(base, x) if word.complete else None
    payload = {"poly": str(base.minpoly), "x": format_element(x), "expansion": word.to_json(),
               "finite": word.is_finite, "fr": fr if isinstance(fr, int) else None}
    _emit(args, payload, str(word))


def cmd_orbit(args) -> None:
    base = _base(args.poly)
    x = parse_element(base, args.num)
    word, rec = digit_sequence(base, x)
    states = [format_element(s) for s in rec.states]
    payload = {"poly": str(base.minpoly), "states": states, "cycle_start": rec.cycle_start,
               "word": word.to_json(), "complete": word.complete}
    lines = [_beta_line(base)]
    digits = list(word.preperiod) + list(word.period)
    for i, s in enumerate(states):
        mark = " <- cycle" if rec.cycle_start == i else ""
        d = f"  digit {digits[i]}" if i < len(digits) else ""
        lines.append(f"T^{i}: {s}{d}{mark}")
    lines.append(f"d(x) = {word}")
    _emit(args, payload, "\n".join(lines))


def cmd_finiteness(args) -> None:
    base = _base(args.poly)
    extra = [IntPolynomial.parse(t) for t in args.extra_poly]
    res = decide_minus_f(base, args.cap, extra)
    payload = {"poly": str(base.minpoly), **res.to_json()}
    lines = [_beta_line(base), f"verdict {res.verdict.value}"]
    if res.certificate is not None:
        lines.append("certificate " + json.dumps(res.certificate.to_json(), sort_keys=True))
    lines += [f"note: {n}" for n in res.notes]
    _emit(args, payload, "\n".join(lines))


def cmd_witness(args) -> None:
    base = _base(args.poly)
    p = srs_from_base(base)
    dec = decide_d0(p, args.cap)
    size = len(dec.closure) if dec.closure is not None else 0
    payload = {"poly": str(base.minpoly), "closure_size": size,
               "saturated": bool(dec.closure and dec.closure.saturated),
               "r": [approx(x.approx()) for x in p.r], "alpha": approx(p.alpha.approx()),
               **dec.to_json()}
    lines = [_beta_line(base),
             "r " + " ".join(approx(x.approx()) for x in p.r) + f"  alpha {approx(p.alpha.approx())}",
             f"witness set: {size} states", f"verdict {dec.verdict.value}"]
    if dec.cycle:
        lines.append("cycle " + " -> ".join(format_state(z) for z in dec.cycle))
    _emit(args, payload, "\n".join(lines))


def _digits(ds) -> str:
    return "".join(str(d) if d < 10 else f"({d})" for d in ds)


def cmd_frmax(args) -> None:
    m = args.m
    if m < 1:
        raise DomainError("--m must be >= 1")
    bound = frmax_sub_bound(m) if args.op == "sub" else frmax_add_bound(m)
    oracle = frmax_oracle(m, args.oracle_depth, args.op) if args.oracle_depth else None
    witness = None
    if args.op == "sub":
        w = frmax_sub_witness(m)
        if w.x_digits is None:
            witness = {"x": "1 - b", "y": "b^4 - b^3", "fr": w.fr}
        else:
            witness = {"x": _digits(w.x_digits), "y": _digits(w.y_digits), "fr": w.fr}
    payload = {"m": m, "op": args.op, "certified": bound.value, "oracle": oracle, "witness": witness}
    lines = [str(bound.value)]
    if args.verbose:
        lines.append(f"attained from z = {format_state(bound.argmax)} over {bound.starts} start states")
    if oracle is not None:
        lines.append(f"oracle (depth {args.oracle_depth}): {oracle}")
    if witness is not None and args.verbose:
        lines.append(f"witness x = {witness['x']}, y = {witness['y']}, fr = {witness['fr']}")
    _emit(args, payload, "\n".join(lines))


def cmd_regions(args) -> None:
    if args.m < 1 or args.box < 0:
        raise DomainError("--m must be >= 1 and --box >= 0")
    v = build_v(args.m)
    pts = sorted(v.points())
    payload = {"m": args.m, "box": args.box, "size": len(v),
               "points": [[a, b, list(v.heights((a, b)))] for a, b in pts
                          if abs(a) <= args.box and abs(b) <= args.box]}
    _emit(args, payload, region_map(args.m, args.box))


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="negabeta", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="single JSON object on stdout")
        p.set_defaults(func=func)
        return p

    for name, func, help_ in (("expand", cmd_expand, "(-beta)-expansion of an element"),
                              ("orbit", cmd_orbit, "T_{-beta} orbit of a point of the domain")):
        p = add(name, func, help_)
        p.add_argument("--poly", required=True, help='minimal polynomial, e.g. "1,-1,-1,-1"')
        p.add_argument("--num", required=True, help='element, e.g. "1/2 - b + b^2"')

    p = add("finiteness", cmd_finiteness, "decide the property (-F)")
    p.add_argument("--poly", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="witness-set size cap")
    p.add_argument("--extra-poly", action="append", default=[], help="another polynomial vanishing at beta")

    p = add("witness", cmd_witness, "witness set and D0 decision for the attached SRS")
    p.add_argument("--poly", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = add("frmax", cmd_frmax, "max fr(x +- y) for x^3 - m x^2 - m x - m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--op", choices=("sub", "add"), default="sub")
    p.add_argument("--oracle-depth", type=int, default=0, help="also brute-force to this depth")
    p.add_argument("--verbose", "-v", action="store_true")

    p = add("regions", cmd_regions, "text map of the invariant set V")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--box", type=int, default=5)
    return top


DOMAIN_ERRORS = (DomainError, NoRootAboveOne, BaseMismatch, OutOfDomain, StepBudgetExceeded,
                 BudgetExceeded, ValueError, ArithmeticError, ZeroDivisionError)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"negabeta {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

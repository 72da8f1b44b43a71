"""Exact negative-base (-beta) numeration for Pisot bases.

Submodules
----------
exactfield   exact arithmetic in Q(beta) with certified sign and floor
negabase     the (-beta)-transformation, expansions and fractional lengths
alphasrs     alpha-shift radix systems and witness-set decisions
finiteness   the negative finiteness property (-F) with certificates
negarith     fractional lengths of sums/differences for x^3 - m x^2 - m x - m
"""
from .exactfield import (BaseMismatch, FieldElement, IntPolynomial, NoRootAboveOne, PisotBase,
                         RationalInterval, fe_arith, fe_floor, fe_sign, format_element,
                         isolate_pisot_base, parse_element)
from .negabase import (DigitWord, NotFinite, OutOfDomain, StepBudgetExceeded, digit_sequence,
                       ell_beta, enumerate_zmb, expansion, fr_length, t_step, word_value,
                       zmb_integers)
from .alphasrs import (D0, SrsParams, decide_d0, phi, replay_cycle, srs_from_base, tau_step,
                       witness_closure)
from .finiteness import (FinitenessVerdict, Verdict, classify_cubic_unit, criterion_regions,
                         decide_minus_f, decide_poly, dbonacci_poly)
from .negarith import (build_v, floor_rz_alpha, frmax_add, frmax_oracle, frmax_sub,
                       frmax_sub_witness, region_classify, region_map, tilde_tau,
                       verify_v_invariant)

__version__ = "0.1.0"

"""Negative-base expansions in the Tribonacci base.

Run:  python demos/01_expansions.py
"""
from negabeta import IntPolynomial, isolate_pisot_base, parse_element
from negabeta import digit_sequence, ell_beta, expansion, fr_length, enumerate_zmb

trib = isolate_pisot_base(IntPolynomial.parse("1,-1,-1,-1"))
b = trib.beta
print("beta ~", float(b), " interval width", float(trib.beta_interval.width))
print("pisot certified:", trib.pisot_certified)

# the left end of the domain [l, l+1) and its digit word
ell = ell_beta(trib)
word, _ = digit_sequence(trib, ell)
print("d(l) =", word)                      # 1 0 (per: 1)

# a fixed point of T with digit 1, never terminating
word, _ = digit_sequence(trib, -1 / (b + 1))
print("d(-1/(b+1)) =", word)

# expansions of a few elements; b^k is written "b^k", negative powers allowed
for text in ["1", "1 - b", "b^-3", "2 - b^2", "1/2"]:
    x = parse_element(trib, text)
    w = expansion(trib, x, max_steps=200)
    print(f"<{text}> = {w}    fr = {fr_length(trib, x, max_steps=200) if w.complete else '?'}")

# (-beta)-integers with at most k digits
for k in range(6):
    print(k, len(enumerate_zmb(trib, k)))

"""Which bases have every element of Z[1/beta] finitely expanded?

Each verdict comes with a certificate that can be re-checked.
"""
from negabeta import decide_poly, dbonacci_poly, classify_cubic_unit
from negabeta.finiteness import NotCubic

# d-bonacci bases x^d - m x^(d-1) - ... - m
for m in (1, 2):
    row = []
    for d in range(2, 9):
        res = decide_poly(dbonacci_poly(d, m).coefficients)
        row.append(f"d={d}:{res.verdict.value}")
    print(f"m={m}", " ".join(row))

# certificates for a few bases
for coeffs in [(1, -1, -1), (1, -1, -1, -1), (1, -1, -1, -1, -1, -1, -1, -1), (1, -5, 1, -1)]:
    res = decide_poly(coeffs)
    print(coeffs, res.verdict.value, res.certificate.to_json())

# the cubic unit table: decision procedure vs closed form
agree = total = 0
for a in range(-2, 6):
    for b in range(-4, 6):
        try:
            closed = classify_cubic_unit(a, b, 1)
        except NotCubic:
            continue
        if closed == "NotPisotUnit":
            continue
        total += 1
        res = decide_poly((1, -a, b, -1))
        agree += res.has_minus_f == (closed.value == "MinusF")
print(f"cubic units with c = 1: {agree}/{total} agree")

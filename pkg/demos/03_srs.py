"""The shift radix system behind a base, and the conjugacy with T.

phi(z) = r.z - floor(r.z + alpha) turns lattice orbits into digit orbits.
"""
from negabeta import IntPolynomial, isolate_pisot_base, srs_from_base, phi, tau_step
from negabeta import t_step, witness_closure, decide_d0

base = isolate_pisot_base(IntPolynomial.parse("1,-2,-1,-1"))
p = srs_from_base(base)
print(p)

z = (-1, 1)
x = phi(p, z)
while z != (0, 0):
    nz = tau_step(p, z)
    nx, digit = t_step(base, x)
    assert nx == phi(p, nz)
    print(z, "->", nz, "   digit", digit)
    z, x = nz, nx

w = witness_closure(p)
print("witness set:", sorted(w.states))
print("decision:", decide_d0(p).verdict.value)

# a base without the property: the 7-bonacci number has a period-3 cycle
p7 = srs_from_base(isolate_pisot_base(IntPolynomial.parse("1,-1,-1,-1,-1,-1,-1,-1")))
dec = decide_d0(p7)
print(dec.verdict.value, dec.cycle)

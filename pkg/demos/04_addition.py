"""How many fractional digits can a sum or difference of two
(-beta)-integers need, for beta a root of x^3 - m x^2 - m x - m?
"""
from negabeta import frmax_sub, frmax_add, frmax_sub_witness, frmax_oracle, region_map
from negabeta.negarith import frmax_sub_bound, verify_v_invariant, reachable_states, build_v

print(" m  sub  add")
for m in range(1, 7):
    print(f"{m:2d} {frmax_sub(m):4d} {frmax_add(m):4d}")

# the set V of defect states, m = 3 (cf. the disk/half-disk/circle picture)
print(region_map(3, 5))
print("V invariant:", verify_v_invariant(3)[0], " V == reachable:", reachable_states(3) == build_v(3).members)

# where the longest difference path starts, and a pair attaining it
for m in (2, 3):
    bnd = frmax_sub_bound(m)
    w = frmax_sub_witness(m)
    xs = "".join(map(str, w.x_digits))
    ys = "".join(map(str, w.y_digits))
    print(f"m={m}: longest path from {bnd.argmax}; {xs} - {ys} has fr {w.fr}")

# brute force over all pairs of short integers agrees
print("oracle m=1, 6 digits:", frmax_oracle(1, 6, "sub"), frmax_oracle(1, 6, "add"))

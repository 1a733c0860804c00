"""
=============================
The eight-element ring
=============================

Arithmetic, units, ideals and quotients of GF(2)^3.
"""

# %%
# Building the ring
# -----------------
#
# ``r_triangle`` is the 3-fold direct product of GF(2) with its elements named
# a..h. Coordinates are kept on the ring for inspection.

from ringline import r_triangle, units, zero_divisors
from ringline.classify import zero_divisor_weight
from ringline.ideals import all_ideals, find_isomorphism, jacobson_radical, quotient, subring_unity, subrings
from ringline.report import op_table
from ringline.ring_core import builtin_ring

R = r_triangle()
for name, xyz in zip(R.names, R.coords):
    print(name, xyz)

print(op_table(R, "mul"))

# %%
# Units and zero-divisors
# -----------------------

print("units:", sorted(x.name for x in units(R)))
for x in sorted(zero_divisors(R, include_zero=False), key=lambda e: e.index):
    print(x.name, zero_divisor_weight(x).name)

# %%
# Ideals
# ------
#
# Every ideal here is principal; the three of size 4 are maximal.

for I in all_ideals(R):
    print(f"{str(I):28} generator={R.names[I.generator]} maximal={I.is_maximal}")
print("radical:", jacobson_radical(R))

# %%
# Quotients
# ---------

gf2, gf22 = builtin_ring("GF2"), builtin_ring("GF2xGF2")
for I in all_ideals(R)[1:-1]:
    q = quotient(R, I).ring
    target = gf2 if q.size == 2 else gf22
    m = find_isomorphism(q, target)
    print(f"R/{I} -> {target.label}: {m.as_names() if m else None}")

# %%
# Subrings isomorphic to GF(2)xGF(2)
# ----------------------------------
#
# Some carry the unity of R, others have a unity of their own.

for s in subrings(R):
    if len(s) == 4:
        print(sorted(R.names[i] for i in s), "unity", R.names[subring_unity(R, s)])

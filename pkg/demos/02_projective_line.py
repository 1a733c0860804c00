"""
==============================
The projective line over R
==============================

Admissible pairs, points, and the neighbour/distant relation.
"""

# %%
# Admissible pairs
# ----------------
#
# A pair is admissible when it is the first row of an invertible 2x2 matrix.
# Over a finite commutative ring this happens exactly when the pair generates R.

import numpy as np

from ringline import build_line, r_triangle
from ringline.proj_line import PairMatrix, completion, det2, is_admissible, neighbourhood, \
    transitivity_counterexample
from ringline.classify import label_point

R = r_triangle()
print("(e, d) admissible:", is_admissible(R, "e", "d"))
print("(e, b) admissible:", is_admissible(R, "e", "b"))
gamma, delta = completion(R, R.index("e"), R.index("d"))
print("completion of (e, d):", R.names[gamma], R.names[delta])
print("det:", det2(PairMatrix.of(R, "e", "d", gamma, delta)).name)

# %%
# Points
# ------

line = build_line(R)
print(len(line), "points")
print(" ".join(f"{label_point(line, p)}={p.coords()}" for p in line))

# %%
# Distant matrix
# --------------
#
# Row sums give the distant-degree; the complement minus the diagonal gives
# the neighbourhood.

D = line.distant
print("distant-degrees:", sorted(set(D.sum(axis=1).tolist())))
print("neighbourhood sizes:", {len(neighbourhood(line, p)) for p in line})
i, j = np.argwhere(D)[0]
common = (~D[i]) & (~D[j])
common[[i, j]] = False
print("common neighbours of a distant pair:", common.sum())

# %%
# The neighbour relation is not transitive
# ----------------------------------------

X, Y, Z = transitivity_counterexample(line)
print(" ~ ".join(str(label_point(line, p)) for p in (X, Y, Z)), "but the ends are distant")

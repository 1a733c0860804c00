"""
=====================
Nucleus and shells
=====================

Labelling the 27 points and tabulating distance between groups of them.
"""

# %%
# Labels
# ------
#
# U, V, W form the nucleus. The inner shell holds the I and J series, the
# outer shell the S and F series.

from ringline import build_line, r_triangle
from ringline.classify import layer_totals, named_table, neighbourhood_labels

line = build_line(r_triangle())
print({layer.value: n for layer, n in layer_totals(line).items()})

# %%
# Tables
# ------
#
# '+' marks a distant pair, '-' a pair of neighbours.

for name in ("inner", "nucleus-inner"):
    print(named_table(line, name).render())
    print()

# %%
# Neighbourhoods of the nucleus
# -----------------------------

for p in "UVW":
    print(p, sorted(neighbourhood_labels(line, p)))

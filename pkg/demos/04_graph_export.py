"""
=====================
Exporting the graph
=====================

The distant relation as an edge list, a DOT graph and a 0/1 matrix.
"""

# %%
# Edge list
# ---------

from collections import Counter

from ringline import r_triangle
from ringline.report import export, parse_dot, parse_edge_csv

R = r_triangle()
edges = parse_edge_csv(export(R, "csv", "distant-graph"))
print(len(edges), "edges")

# %%
# Inner-shell subgraph
# --------------------
#
# Degrees inside the inner shell.

inner = parse_edge_csv(export(R, "csv", "shell-subgraph", shell="inner"))
deg = Counter(n for e in inner for n in e)
print(dict(sorted(deg.items())))

# %%
# DOT output
# ----------
#
# Pipe this into ``dot -Tsvg`` or ``neato`` to draw it.

text = export(R, "dot", "distant-graph")
nodes, _ = parse_dot(text)
print(len(nodes), "nodes")
print("\n".join(text.splitlines()[:6]))

"""Plain-text reports and graph exports.

Every renderer returns a string and is deterministic for a given ring.
Summary lines use a ``key: value`` layout.
"""

from __future__ import annotations

import csv
import io
import itertools
import re
from collections import Counter
from typing import Optional

import numpy as np

from .classify import Layer, Weight, is_gf2_cubed, label_point, named_table
from .ideals import all_ideals, find_isomorphism, jacobson_radical, quotient
from .proj_line import (
    ProjectiveLine,
    build_line,
    distant_pairs,
    distant_triples,
    transitivity_counterexample,
)
from .ring_core import (
    FiniteRing,
    RingError,
    builtin_ring,
    characteristic,
    units,
    zero_divisors,
)

TABLE_GROUPS = {
    "inner": ("inner",),
    "outer": ("outer",),
    "cross": ("cross",),
    "nucleus": ("nucleus-inner", "nucleus-outer"),
}
EXPORT_FORMATS = ("text", "csv", "dot")
EXPORT_TARGETS = ("distant-graph", "neighbour-graph", "shell-subgraph")


def _names(ring: FiniteRing, elems) -> str:
    return "{" + ", ".join(sorted((x.name for x in elems), key=ring.index)) + "}"


def op_table(ring: FiniteRing, op: str) -> str:
    table = ring.add_table if op == "add" else ring.mul_table
    sym = "+" if op == "add" else "*"
    w = max(len(n) for n in ring.names)
    head = sym.ljust(w) + " | " + " ".join(n.rjust(w) for n in ring.names)
    lines = [head, "-" * len(head)]
    for i, n in enumerate(ring.names):
        lines.append(n.ljust(w) + " | " + " ".join(ring.names[j].rjust(w) for j in table[i]))
    return "\n".join(lines)


def ring_report(ring: FiniteRing) -> str:
    out = [
        f"ring: {ring.label}",
        f"size: {ring.size}",
        f"elements: {' '.join(ring.names)}",
        f"zero: {ring.names[ring.zero]}",
        f"one: {ring.names[ring.one]}",
        f"characteristic: {characteristic(ring)}",
        f"units: {_names(ring, units(ring))}",
        f"zero_divisors_with_zero: {_names(ring, zero_divisors(ring, include_zero=True))}",
        f"zero_divisors_nontrivial: {_names(ring, zero_divisors(ring, include_zero=False))}",
    ]
    if ring.coords is not None and ring.size <= 64:
        out.append("coordinates:")
        for i, n in enumerate(ring.names):
            c = ",".join(f.names[k] for f, k in zip(ring.factors, ring.coords[i]))
            out.append(f"  {n} = [{c}]")
    out += ["", "addition:", op_table(ring, "add"), "", "multiplication:", op_table(ring, "mul")]
    return "\n".join(out) + "\n"


def _prime_factorizations(n: int, smallest: int = 2) -> list[list[int]]:
    if n == 1:
        return [[]]
    out = []
    for p in range(smallest, n + 1):
        if n % p == 0 and all(p % d for d in range(2, int(p**0.5) + 1)):
            out += [[p] + rest for rest in _prime_factorizations(n // p, p)]
    return out


def identify_builtin(ring: FiniteRing) -> Optional[str]:
    """Name of a product of prime fields isomorphic to ``ring``, if any."""
    if ring.size > 16:
        return None
    for primes in _prime_factorizations(ring.size):
        name = "x".join(f"GF{p}" for p in primes)
        if find_isomorphism(ring, builtin_ring(name)) is not None:
            return name
    return None


def ideals_report(ring: FiniteRing) -> str:
    ideals = all_ideals(ring)
    out = [f"ring: {ring.label}", f"ideal_count: {len(ideals)}",
           f"maximal_count: {sum(i.is_maximal for i in ideals)}"]
    for I in ideals:
        gen = ring.names[I.generator] if I.is_principal else "-"
        out.append(f"ideal: {I}  size={I.size} principal={'yes' if I.is_principal else 'no'}"
                   f" generator={gen} maximal={'yes' if I.is_maximal else 'no'}")
    out.append(f"jacobson_radical: {jacobson_radical(ring)}")
    for I in ideals:
        if I.size == ring.size:
            continue
        q = quotient(ring, I)
        iso = identify_builtin(q.ring) or "unidentified"
        field = "yes" if len(units(q.ring)) == q.ring.size - 1 else "no"
        out.append(f"quotient: R/{I}  size={q.ring.size} cosets={' '.join(q.ring.names)}"
                   f" isomorphic_to={iso} field={field}")
    return "\n".join(out) + "\n"


def point_names(line: ProjectiveLine) -> list[str]:
    """Node names: shell labels over GF(2)^3, coordinates otherwise."""
    if is_gf2_cubed(line.ring):
        return [str(label_point(line, p)) for p in line.points]
    return [p.coords() for p in line.points]


def _hist(values) -> str:
    c = Counter(int(v) for v in values)
    return " ".join(f"{k}x{c[k]}" for k in sorted(c)) if c else "none"


def line_report(ring: FiniteRing) -> str:
    line = build_line(ring)
    names = point_names(line)
    N = line.neighbour.copy()
    np.fill_diagonal(N, False)
    pairs = distant_pairs(line)
    triples = distant_triples(line)
    out = [
        f"ring: {ring.label}",
        f"points: {len(line)}",
        f"neighbourhood_sizes: {_hist(N.sum(axis=1))}",
        f"distant_degrees: {_hist(line.distant_degrees())}",
        f"distant_pairs: {len(pairs)}",
        f"common_neighbourhood_of_distant_pairs: {_hist((N[i] & N[j]).sum() for i, j in pairs)}",
        f"pairwise_distant_triples: {len(triples)}",
        f"common_neighbourhood_of_distant_triples: "
        f"{_hist((N[i] & N[j] & N[k]).sum() for i, j, k in triples)}",
    ]
    cx = transitivity_counterexample(line)
    if cx is None:
        out.append("neighbour_transitive: yes")
    else:
        out.append("neighbour_transitive: no")
        out.append("transitivity_counterexample: " + " ~ ".join(
            names[line.index(p)] for p in cx) + " (first and last distant)")
    if is_gf2_cubed(ring):
        totals = Counter(label_point(line, p).layer for p in line.points)
        out += [f"layer_{layer.name.lower()}: {totals[layer]}" for layer in Layer]
    out.append("per_point:")
    for i, p in enumerate(line.points):
        tag = f"{names[i]} {p.coords()}" if names[i] != p.coords() else names[i]
        out.append(f"  {tag} neighbours={int(N[i].sum())} distant={int(line.distant[i].sum())}")
    return "\n".join(out) + "\n"


def tables_report(ring: FiniteRing, which: str) -> str:
    if which not in TABLE_GROUPS:
        raise RingError(f"unknown table group {which!r}; choose from {', '.join(TABLE_GROUPS)}")
    if not is_gf2_cubed(ring):
        raise RingError(f"shell tables exist only for the line over GF(2)^3, not {ring.label}")
    line = build_line(ring)
    parts = [f"table: {name}\n{named_table(line, name).render()}" for name in TABLE_GROUPS[which]]
    return "\n\n".join(parts) + "\n"


# exports --------------------------------------------------------------------

_STYLE = {
    Layer.NUCLEUS: 'shape=doublecircle, color="black"',
    Layer.INNER: 'shape=circle, color="blue"',
    Layer.OUTER: 'shape=circle, color="red"',
}


def _select(line: ProjectiveLine, target: str, shell: str, with_nucleus: bool):
    n = len(line)
    if target == "distant-graph":
        return list(range(n)), line.distant
    if target == "neighbour-graph":
        adj = line.neighbour.copy()
        np.fill_diagonal(adj, False)
        return list(range(n)), adj
    if target == "shell-subgraph":
        if not is_gf2_cubed(line.ring):
            raise RingError("shell-subgraph needs the line over GF(2)^3")
        want = {"inner": Layer.INNER, "outer": Layer.OUTER}.get(shell)
        if want is None:
            raise RingError(f"unknown shell {shell!r}; choose inner or outer")
        keep = [i for i, p in enumerate(line.points)
                if label_point(line, p).layer is want
                or (with_nucleus and label_point(line, p).layer is Layer.NUCLEUS)]
        return keep, line.distant
    raise RingError(f"unknown export target {target!r}")


def export(ring: FiniteRing, fmt: str, target: str = "distant-graph",
           shell: str = "inner", with_nucleus: bool = False) -> str:
    if fmt not in EXPORT_FORMATS:
        raise RingError(f"unknown export format {fmt!r}; choose from {', '.join(EXPORT_FORMATS)}")
    line = build_line(ring)
    keep, adj = _select(line, target, shell, with_nucleus)
    names = point_names(line)
    edges = [(names[i], names[j]) for i, j in itertools.combinations(keep, 2) if adj[i, j]]

    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["source", "target"])
        w.writerows(edges)
        return buf.getvalue()
    if fmt == "text":
        width = max(len(names[i]) for i in keep)
        out = [" " * width + " " + " ".join(names[j].rjust(width) for j in keep)]
        for i in keep:
            out.append(names[i].ljust(width) + " "
                       + " ".join(("1" if adj[i, j] else "0").rjust(width) for j in keep))
        return "\n".join(out) + "\n"

    gname = target.replace("-", "_")
    out = [f"graph {gname} {{", "  node [fontname=\"Helvetica\"];"]
    labelled = is_gf2_cubed(ring)
    for i in keep:
        p = line.points[i]
        if labelled:
            lab = label_point(line, p)
            style = _STYLE[lab.layer]
            if lab.weight is Weight.FAT:
                style += ", style=filled, fillcolor=\"lightblue\""
            out.append(f'  "{names[i]}" [label="{names[i]}\\n{p.coords()}", '
                       f'layer="{lab.layer.value}", {style}];')
        else:
            out.append(f'  "{names[i]}" [label="{names[i]}"];')
    for a, b in edges:
        out.append(f'  "{a}" -- "{b}";')
    out.append("}")
    return "\n".join(out) + "\n"


def parse_edge_csv(text: str) -> list[tuple[str, str]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["source", "target"]:
        raise ValueError("edge csv must start with a source,target header")
    return [(a, b) for a, b in rows[1:]]


_DOT_EDGE = re.compile(r'^\s*"([^"]+)"\s*--\s*"([^"]+)"\s*;\s*$')
_DOT_NODE = re.compile(r'^\s*"([^"]+)"\s*\[')


def parse_dot(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Node ids and edges of a dot file written by :func:`export`."""
    nodes, edges = [], []
    for line in text.splitlines():
        m = _DOT_EDGE.match(line)
        if m:
            edges.append((m.group(1), m.group(2)))
            continue
        m = _DOT_NODE.match(line)
        if m:
            nodes.append(m.group(1))
    return nodes, edges


def parse_text_matrix(text: str) -> tuple[list[str], np.ndarray]:
    lines = text.strip("\n").splitlines()
    cols = lines[0].split()
    rows = [l.split() for l in lines[1:]]
    return cols, np.array([[c == "1" for c in r[1:]] for r in rows], dtype=bool)


def adjacency_from_edges(names: list[str], edges) -> np.ndarray:
    pos = {n: i for i, n in enumerate(names)}
    adj = np.zeros((len(names), len(names)), dtype=bool)
    for a, b in edges:
        adj[pos[a], pos[b]] = adj[pos[b], pos[a]] = True
    return adj


__all__ = [
    "ring_report", "ideals_report", "line_report", "tables_report", "export",
    "parse_edge_csv", "parse_dot", "parse_text_matrix", "adjacency_from_edges",
    "identify_builtin", "point_names",
]

"""Verification suites behind ``ringline verify``.

Each check returns ``(ok, detail)``; checks that only make sense for some
rings (GF(2)^3 claims, brute-force oracles on tiny rings) report ``skip``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from . import golden
from .classify import (
    Layer,
    Weight,
    is_gf2_cubed,
    label_point,
    labelled_points,
    named_table,
    neighbourhood_labels,
    zero_divisor_weight,
)
from .ideals import (
    all_ideals,
    find_isomorphism,
    induced_ring,
    jacobson_radical,
    maximal_ideals,
    quotient,
    subring_unity,
    subrings,
)
from .oracles import (
    MAX_ORACLE_SIZE,
    admissible_bruteforce,
    gl2_bruteforce,
    ideals_powerset,
    isomorphisms_exhaustive,
    matrix_code,
    product_line_bijection,
)
from .proj_line import (
    build_line,
    distant_pairs,
    distant_triples,
    is_admissible,
    transitivity_counterexample,
)
from .report import export, parse_edge_csv
from .ring_core import (
    ElementClass,
    FiniteRing,
    builtin_ring,
    check_axioms,
    classify_element,
    make_gf,
)

SUITES = ("axioms", "ideals", "line", "tables")


class Skip(Exception):
    pass


@dataclass
class Outcome:
    suite: str
    claim: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{self.status.upper()}] {self.suite}: {self.claim}{tail}"


class Context:
    def __init__(self, ring: FiniteRing):
        self.ring = ring

    @cached_property
    def line(self):
        return build_line(self.ring)

    @cached_property
    def gl2(self):
        if self.ring.size > MAX_ORACLE_SIZE:
            raise Skip(f"brute force capped at ring size {MAX_ORACLE_SIZE}")
        return gl2_bruteforce(self.ring)

    @cached_property
    def labels(self):
        return labelled_points(self.line)

    def need_r_triangle(self):
        if not is_gf2_cubed(self.ring):
            raise Skip("GF(2)^3 only")

    def names(self, s) -> set[str]:
        return {self.ring.names[i] for i in s}


CHECKS: list[tuple[str, str, Callable[[Context], tuple[bool, str]]]] = []


def check(suite: str, claim: str):
    def deco(fn):
        CHECKS.append((suite, claim, fn))
        return fn
    return deco


# axioms -----------------------------------------------------------------------


@check("axioms", "commutative ring with unity axioms hold on all element tuples")
def _axioms(ctx):
    if ctx.ring.size > 256:
        raise Skip("cubic check capped at size 256")
    v = check_axioms(ctx.ring)
    return not v, f"first violation: {v[0]}" if v else "exhaustive"


@check("axioms", "every element is exactly one of zero, unit, non-trivial zero-divisor")
def _trichotomy(ctx):
    R = ctx.ring
    for x in R:
        unit = R.is_unit(x.index)
        zd = any(R.mul(x.index, s) == R.zero for s in range(R.size) if s != R.zero)
        kinds = [x.index == R.zero, unit, zd and x.index != R.zero]
        if sum(kinds) != 1 or (unit and zd):
            return False, f"element {x.name}"
    return True, ""


@check("axioms", "units are closed under products and inverses")
def _unit_group(ctx):
    R = ctx.ring
    us = R.unit_indices
    ok = all(R.is_unit(R.mul(u, v)) for u in us for v in us) and all(R.is_unit(R.inverse(u)) for u in us)
    return ok, f"{len(us)} units"


@check("axioms", "in a product, units are exactly the componentwise units")
def _product_units(ctx):
    R = ctx.ring
    if R.coords is None:
        raise Skip("not a direct product")
    for i in range(R.size):
        comp = all(f.is_unit(c) for f, c in zip(R.factors, R.coords[i]))
        if comp != R.is_unit(i):
            return False, f"element {R.names[i]}"
    return True, ""


@check("axioms", "GF(2)^3 addition and multiplication tables match the 8x8 reference")
def _ring_tables(ctx):
    ctx.need_r_triangle()
    R = ctx.ring
    bad = []
    for table, ref in ((R.add_table, golden.RING_ADD), (R.mul_table, golden.RING_MUL)):
        rows = golden.parse(ref)
        bad += [(x, R.names[j]) for x in R.names for j in range(8)
                if rows[x][j] != R.names[table[R.index(x), j]]]
    return not bad, f"128 cells, mismatches {bad}" if bad else "128 cells"


@check("axioms", "GF(2)^3 has one unit h, seven zero-divisors with 0, slim/fat split 3+3")
def _census(ctx):
    ctx.need_r_triangle()
    R = ctx.ring
    us = R.unit_indices
    zds = [x for x in R if classify_element(x) is not ElementClass.UNIT]
    slim = {x.name for x in R if classify_element(x) is ElementClass.ZERO_DIVISOR
            and zero_divisor_weight(x) is Weight.SLIM}
    fat = {x.name for x in R if classify_element(x) is ElementClass.ZERO_DIVISOR
           and zero_divisor_weight(x) is Weight.FAT}
    ok = ctx.names(us) == {"h"} and len(zds) == 7 and slim == {"b", "c", "d"} and fat == {"e", "f", "g"}
    return ok, f"units={sorted(ctx.names(us))} slim={sorted(slim)} fat={sorted(fat)}"


@check("axioms", "GF(2)^3 has characteristic 2")
def _char(ctx):
    ctx.need_r_triangle()
    from .ring_core import characteristic
    return characteristic(ctx.ring) == 2, ""


# ideals -----------------------------------------------------------------------


@check("ideals", "closure enumeration agrees with the power-set ideal filter")
def _ideals_oracle(ctx):
    if ctx.ring.size > 16:
        raise Skip("power set capped at size 16")
    fast = [I.elements for I in all_ideals(ctx.ring)]
    slow = ideals_powerset(ctx.ring)
    return fast == slow, f"{len(fast)} ideals"


@check("ideals", "quotient by an ideal is a field iff the ideal is maximal")
def _field_iff_maximal(ctx):
    R = ctx.ring
    for I in all_ideals(R):
        if I.size == R.size:
            continue
        q = quotient(R, I).ring
        is_field = len(q.unit_indices) == q.size - 1
        if is_field != I.is_maximal:
            return False, f"ideal {I}"
    return True, ""


@check("ideals", "each canonical projection is a homomorphism with kernel exactly the ideal")
def _kernels(ctx):
    from .ideals import is_homomorphism
    R = ctx.ring
    for I in all_ideals(R):
        if I.size == R.size:
            continue
        q = quotient(R, I)
        if not is_homomorphism(R, q.ring, q.projection.images) or q.projection.kernel() != I.elements:
            return False, f"ideal {I}"
    return True, ""


@check("ideals", "GF(2)^3 has 8 ideals, all principal; maximal ones are <e>, <f>, <g>")
def _r_ideals(ctx):
    ctx.need_r_triangle()
    R = ctx.ring
    ideals = all_ideals(R)
    sets = [ctx.names(I.elements) for I in ideals]
    maxes = sorted(sorted(ctx.names(I.elements)) for I in maximal_ideals(R))
    want_max = [list("abce"), list("abdf"), list("acdg")]
    small = sorted(sorted(s) for s in sets if len(s) == 2)
    ok = (len(ideals) == 8 and all(I.is_principal for I in ideals)
          and maxes == want_max and small == [list("ab"), list("ac"), list("ad")])
    return ok, f"{len(ideals)} ideals"


@check("ideals", "size-2 ideals are the pairwise intersections of the maximal ideals")
def _intersections(ctx):
    ctx.need_r_triangle()
    R = ctx.ring
    idx = {g: frozenset(R.mul_table[:, R.index(g)].tolist()) for g in "bcdefg"}
    ok = (idx["b"] == idx["e"] & idx["f"] and idx["c"] == idx["e"] & idx["g"]
          and idx["d"] == idx["f"] & idx["g"])
    return ok, "<b>=<e>&<f>, <c>=<e>&<g>, <d>=<f>&<g>"


@check("ideals", "GF(2)^3 Jacobson radical is {a}")
def _radical(ctx):
    ctx.need_r_triangle()
    return ctx.names(jacobson_radical(ctx.ring).elements) == {"a"}, ""


@check("ideals", "quotients by maximal ideals are GF(2), by size-2 ideals GF(2)xGF(2)")
def _quotients(ctx):
    ctx.need_r_triangle()
    R = ctx.ring
    gf2, gf22 = make_gf(2), builtin_ring("GF2xGF2")
    for g in "efgbcd":
        I = frozenset(R.mul_table[:, R.index(g)].tolist())
        q = quotient(R, I).ring
        target = gf2 if g in "efg" else gf22
        m = find_isomorphism(q, target)
        if m is None or list(m.images) not in [list(p) for p in isomorphisms_exhaustive(q, target)]:
            return False, f"R/<{g}>"
    return True, "6 quotients, maps cross-checked exhaustively"


@check("ideals", "{a,b,g,h} is a subring with inherited unity h, {a,b,c,e} one with unity e; both ~ GF(2)xGF(2)")
def _subrings(ctx):
    ctx.need_r_triangle()
    R = ctx.ring
    gf22 = builtin_ring("GF2xGF2")
    ring_o = frozenset(R.index(x) for x in "abgh")
    ring_b = frozenset(R.index(x) for x in "abce")
    all_s, inherited = subrings(R), subrings(R, require_inherited_unity=True)
    ok = (ring_o in inherited and ring_b in all_s and ring_b not in inherited
          and R.names[subring_unity(R, ring_o)] == "h" and R.names[subring_unity(R, ring_b)] == "e"
          and find_isomorphism(induced_ring(R, ring_o), gf22) is not None
          and find_isomorphism(induced_ring(R, ring_b), gf22) is not None
          and classify_element(R.element("e")) is ElementClass.ZERO_DIVISOR)
    return ok, ""


# line -----------------------------------------------------------------------


@check("line", "neighbour relation is reflexive and symmetric")
def _refl_sym(ctx):
    D = ctx.line.distant
    return (not D.diagonal().any()) and bool((D == D.T).all()), ""


@check("line", "admissibility by unit ideal agrees with exhaustive completion search")
def _admissible_oracle(ctx):
    R = ctx.ring
    slow = admissible_bruteforce(R, ctx.gl2)
    bad = [(a, b) for a in range(R.size) for b in range(R.size) if slow[a, b] != is_admissible(R, a, b)]
    return not bad, f"{R.size ** 2} pairs"


@check("line", "det is a unit iff a two-sided inverse exists (all matrices + 10^4 random)")
def _gl2_oracle(ctx):
    R = ctx.ring
    n = R.size
    gl2 = ctx.gl2
    mats = np.array(list(itertools.product(range(n), repeat=4)))
    neg = np.array([R.neg(i) for i in range(n)])
    det = R.add_table[R.mul_table[mats[:, 0], mats[:, 3]], neg[R.mul_table[mats[:, 1], mats[:, 2]]]]
    unit = np.isin(det, R.unit_indices)
    rng = random.Random(0)
    sample = [matrix_code(R, *(rng.randrange(n) for _ in range(4))) for _ in range(10_000)]
    ok = bool((unit == gl2).all()) and all(unit[c] == gl2[c] for c in sample)
    return ok, f"{int(gl2.sum())} invertible of {len(mats)}"


@check("line", "distant relation is independent of the unit rescaling of representatives")
def _rep_independence(ctx):
    R, line = ctx.ring, ctx.line
    for i, X in enumerate(line.points):
        for j, Y in enumerate(line.points):
            for u in R.unit_indices:
                a, b = R.mul(u, X.rep[0]), R.mul(u, X.rep[1])
                det = R.sub(R.mul(a, Y.rep[1]), R.mul(b, Y.rep[0]))
                if R.is_unit(det) != line.distant[i, j]:
                    return False, f"{X} {Y} unit {R.names[u]}"
    return True, ""


@check("line", "line over a product of fields = product of factor lines, distant iff distant in every factor")
def _product_lines(ctx):
    R, line = ctx.ring, ctx.line
    if R.coords is None or not all(len(f.unit_indices) == f.size - 1 for f in R.factors):
        raise Skip("not a product of fields")
    factor_lines = [build_line(f) for f in R.factors]
    bij = product_line_bijection(line, factor_lines)
    expected = 1
    for fl in factor_lines:
        expected *= len(fl)
    if len(set(bij.values())) != len(line) or len(line) != expected:
        return False, "not a bijection"
    for i, j in itertools.product(range(len(line)), repeat=2):
        comp = all(fl.distant[bij[i][k], bij[j][k]] for k, fl in enumerate(factor_lines))
        if comp != line.distant[i, j]:
            return False, f"points {i}, {j}"
    return True, f"{len(line)} = " + " x ".join(str(len(fl)) for fl in factor_lines)


@check("line", "over a field, neighbour means identical")
def _field_line(ctx):
    R = ctx.ring
    if len(R.unit_indices) != R.size - 1:
        raise Skip("not a field")
    D = ctx.line.distant
    return bool((D == ~np.eye(len(D), dtype=bool)).all()), f"{len(D)} points"


@check("line", "GF(2)^3 line: 27 points, neighbourhoods 18, distant degree 8")
def _counts(ctx):
    ctx.need_r_triangle()
    line = ctx.line
    N = ~line.distant
    np.fill_diagonal(N, False)
    ok = len(line) == 27 and set(N.sum(axis=1)) == {18} and set(line.distant.sum(axis=1)) == {8}
    return ok, ""


@check("line", "GF(2)^3 line: every distant pair shares 12 neighbours, every distant triple 6")
def _commons(ctx):
    ctx.need_r_triangle()
    line = ctx.line
    N = ~line.distant
    np.fill_diagonal(N, False)
    pairs, triples = distant_pairs(line), distant_triples(line)
    two = {int((N[i] & N[j]).sum()) for i, j in pairs}
    three = {int((N[i] & N[j] & N[k]).sum()) for i, j, k in triples}
    return two == {12} and three == {6}, f"{len(pairs)} pairs, {len(triples)} triples"


@check("line", "GF(2)^3 line: neighbour relation is not transitive")
def _not_transitive(ctx):
    ctx.need_r_triangle()
    cx = transitivity_counterexample(ctx.line)
    if cx is None:
        return False, "no counterexample"
    return True, " ~ ".join(str(label_point(ctx.line, p)) for p in cx)


@check("line", "neighbourhoods of U, V, W are the I/S/F, J/S/F and I/J/F label sets")
def _uvw(ctx):
    ctx.need_r_triangle()
    idx = "123"
    I = {f"I{i}{w}" for i in idx for w in "SF"}
    J = {f"J{i}{w}" for i in idx for w in "SF"}
    S = {f"S{i}{s}" for i in idx for s in "+-"}
    F = {f"F{i}{s}" for i in idx for s in "+-"}
    want = {"U": I | S | F, "V": J | S | F, "W": I | J | F}
    bad = [x for x in "UVW" if neighbourhood_labels(ctx.line, x) != want[x]]
    return not bad, f"mismatch at {bad}" if bad else ""


@check("line", "nucleus points are (1,0), (0,1), (1,1)")
def _nucleus(ctx):
    ctx.need_r_triangle()
    got = {k: v.coords() for k, v in ctx.labels.items() if k in "UVW"}
    return got == {"U": "(h,a)", "V": "(a,h)", "W": "(h,h)"}, str(got)


# tables -----------------------------------------------------------------------


@check("tables", "neighbour/distant tables match the transcribed references cell for cell")
def _golden(ctx):
    ctx.need_r_triangle()
    bad, cells = [], 0
    for name, (rows, cols, ref) in golden.TABLES.items():
        got = named_table(ctx.line, name).as_dict()
        for r in rows:
            for j, c in enumerate(cols):
                cells += 1
                if got[r][j] != ref[r][j]:
                    bad.append(f"{name}:{r}/{c}")
    return not bad, f"{cells} cells" + (f", mismatches {bad}" if bad else "")


@check("tables", "fat outer points are distant from 2 I- and 2 J-points; slim ones split 3-and-1")
def _asymmetry(ctx):
    ctx.need_r_triangle()
    t = named_table(ctx.line, "cross")
    for r, row in zip(t.rows, t.cells):
        i_plus = row[:6].count("+")
        j_plus = row[6:].count("+")
        if r.startswith("F") and (i_plus, j_plus) != (2, 2):
            return False, r
        if r.startswith("S") and sorted((i_plus, j_plus)) != [1, 3]:
            return False, r
    return True, ""


@check("tables", "layer census: nucleus 3, inner 12 (6 I + 6 J, 3 slim + 3 fat each), outer 12 (6 S + 6 F, 3+3 by sign)")
def _layers(ctx):
    ctx.need_r_triangle()
    from .classify import layer_census
    c = layer_census(ctx.line)
    ok = (sum(n for k, n in c.items() if k[0] is Layer.NUCLEUS) == 3
          and all(c[(Layer.INNER, s, w, None)] == 3 for s in "IJ" for w in Weight)
          and all(c[(Layer.OUTER, s, None, g)] == 3 for s in "SF" for g in "+-"))
    return ok, ""


@check("tables", "distant graph has 27 nodes and 108 edges; inner-shell degrees match inner table row sums")
def _graph(ctx):
    ctx.need_r_triangle()
    edges = parse_edge_csv(export(ctx.ring, "csv", "distant-graph"))
    nodes = {n for e in edges for n in e}
    inner = parse_edge_csv(export(ctx.ring, "csv", "shell-subgraph", shell="inner"))
    deg = {lab: 0 for lab in golden.INNER_ORDER}
    for a, b in inner:
        deg[a] += 1
        deg[b] += 1
    ref = golden.parse(golden.INNER)
    want = {lab: ref[lab].count("+") for lab in golden.INNER_ORDER}
    return len(nodes) == 27 and len(edges) == 108 and deg == want, f"{len(edges)} edges"


def run(ring: FiniteRing, suite: str = "all") -> list[Outcome]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    ctx = Context(ring)
    out = []
    for s, claim, fn in CHECKS:
        if suite != "all" and s != suite:
            continue
        try:
            ok, detail = fn(ctx)
            out.append(Outcome(s, claim, "pass" if ok else "fail", detail))
        except Skip as exc:
            out.append(Outcome(s, claim, "skip", str(exc)))
    return out

"""One test per acceptance criterion; each prints a PASS/FAIL line in the summary."""
import itertools

import numpy as np

from ringline import golden
from ringline.classify import Weight, named_table, neighbourhood_labels, zero_divisor_weight
from ringline.ideals import all_ideals, find_isomorphism, is_homomorphism, jacobson_radical, maximal_ideals, \
    principal_ideal, quotient, subring_unity, subrings, induced_ring
from ringline.oracles import gl2_bruteforce, matrix_code, product_line_bijection
from ringline.proj_line import PairMatrix, build_line, completion, is_admissible, is_distant, \
    is_invertible_2x2, transitivity_counterexample
from ringline.report import export, parse_edge_csv, point_names
from ringline.ring_core import builtin_ring, make_gf, units, zero_divisors


def S(R, letters):
    return frozenset(R.index(x) for x in letters)


def test_ring_tables_match_reference_128_cells(R):
    matched = 0
    for table, ref in ((R.add_table, golden.RING_ADD), (R.mul_table, golden.RING_MUL)):
        rows = golden.parse(ref)
        for x, y in itertools.product(R.names, repeat=2):
            assert R.names[table[R.index(x), R.index(y)]] == rows[x][R.index(y)], (x, y)
            matched += 1
    assert matched == 128


def test_unit_and_zero_divisor_census(R):
    assert len(units(R)) == 1
    assert len(zero_divisors(R, include_zero=True)) == 7
    weights = [zero_divisor_weight(x) for x in zero_divisors(R, include_zero=False)]
    assert weights.count(Weight.SLIM) == 3 and weights.count(Weight.FAT) == 3


def test_ideal_structure(R):
    ideals = all_ideals(R)
    assert len(ideals) == 8
    Ie, If, Ig = S(R, "abce"), S(R, "abdf"), S(R, "acdg")
    assert {I.elements for I in maximal_ideals(R)} == {Ie, If, Ig}
    small = {I.elements for I in ideals if I.size == 2}
    assert small == {S(R, "ab"), S(R, "ac"), S(R, "ad")}
    assert S(R, "ab") == Ie & If and S(R, "ac") == Ie & Ig and S(R, "ad") == If & Ig
    assert jacobson_radical(R).elements == S(R, "a")


def test_quotients_with_verified_isomorphisms(R):
    for gens, target in (("efg", "GF2"), ("bcd", "GF2xGF2")):
        T = builtin_ring(target)
        for g in gens:
            q = quotient(R, principal_ideal(R.element(g)))
            m = find_isomorphism(q.ring, T)
            assert m is not None, g
            assert m.is_isomorphism and is_homomorphism(q.ring, T, m.images)
            assert len(set(m.images)) == T.size


def test_subrings_with_inherited_and_foreign_unity(R):
    gf22 = builtin_ring("GF2xGF2")
    found = subrings(R)
    for letters, unity, inherited in (("abgh", "h", True), ("abce", "e", False)):
        s = S(R, letters)
        assert s in found
        assert (s in subrings(R, require_inherited_unity=True)) == inherited
        assert R.names[subring_unity(R, s)] == unity
        assert find_isomorphism(induced_ring(R, s), gf22) is not None


def test_line_cardinalities_over_all_points_pairs_triples(line):
    n = len(line)
    assert n == 27
    D = line.distant
    nb = [set(np.flatnonzero(~D[i])) - {i} for i in range(n)]
    assert {len(x) for x in nb} == {18}
    assert set(D.sum(axis=1)) == {8}
    pairs = [(i, j) for i, j in itertools.combinations(range(n), 2) if D[i, j]]
    triples = [t for t in itertools.combinations(range(n), 3)
               if D[t[0], t[1]] and D[t[0], t[2]] and D[t[1], t[2]]]
    assert pairs and {len(nb[i] & nb[j]) for i, j in pairs} == {12}
    assert triples and {len(nb[i] & nb[j] & nb[k]) for i, j, k in triples} == {6}


def test_golden_shell_tables_504_cells(line):
    cells = 0
    for name, (rows, cols, ref) in golden.TABLES.items():
        got = named_table(line, name).as_dict()
        assert got == ref, name
        cells += len(rows) * len(cols)
    assert cells == 504


def test_uvw_neighbourhood_label_sets(line):
    def series(prefixes):
        out = set()
        for p in prefixes:
            if p in "IJ":
                out |= {f"{p}{i}{w}" for i in "123" for w in "SF"}
            else:
                out |= {f"{p}{i}{s}" for i in "123" for s in "+-"}
        return out

    assert neighbourhood_labels(line, "U") == series("ISF")
    assert neighbourhood_labels(line, "V") == series("JSF")
    assert neighbourhood_labels(line, "W") == series("IJF")


def test_oracle_equivalences(R, line):
    # (a) fast path vs exhaustive completion, all 64 pairs
    for a, b in itertools.product(range(R.size), repeat=2):
        assert is_admissible(R, a, b) == (completion(R, a, b) is not None)
    # (b) det-unit vs brute-force inverse
    gl2 = gl2_bruteforce(R)
    reps = [p.rep for p in line]
    rng = np.random.default_rng(7)
    samples = [(*r1, *r2) for r1 in reps for r2 in reps]
    samples += [tuple(int(v) for v in row) for row in rng.integers(0, R.size, size=(10_000, 4))]
    for a, b, c, d in samples:
        assert is_invertible_2x2(PairMatrix.of(R, a, b, c, d)) == gl2[matrix_code(R, a, b, c, d)]
    # (c) product lines vs products of the line over GF(2)
    base = build_line(make_gf(2))
    for k, ring in ((2, builtin_ring("GF2xGF2")), (3, R)):
        L = build_line(ring)
        bij = product_line_bijection(L, [base] * k)
        assert len(L) == 3 ** k == len(set(bij.values()))
        for i, j in itertools.product(range(len(L)), repeat=2):
            assert L.distant[i, j] == all(bij[i][f] != bij[j][f] for f in range(k))


def test_neighbour_relation_structure(line):
    N = line.neighbour
    assert N.diagonal().all() and (N == N.T).all()
    X, Y, Z = transitivity_counterexample(line)
    assert not is_distant(line, X, Y) and not is_distant(line, Y, Z) and is_distant(line, X, Z)
    for p in (2, 3):
        L = build_line(make_gf(p))
        assert (L.neighbour == np.eye(len(L), dtype=bool)).all()


def test_distant_graph_export_and_inner_degrees(R, line):
    edges = parse_edge_csv(export(R, "csv", "distant-graph"))
    assert len(edges) == 108
    assert set(itertools.chain.from_iterable(edges)) == set(point_names(line))
    inner = parse_edge_csv(export(R, "csv", "shell-subgraph", shell="inner"))
    degree = {lab: 0 for lab in golden.INNER_ORDER}
    for a, b in inner:
        degree[a] += 1
        degree[b] += 1
    ref = golden.parse(golden.INNER)
    assert [degree[r] for r in golden.INNER_ORDER] == [ref[r].count("+") for r in golden.INNER_ORDER]

"""Brute-force cross-checks that avoid the fast paths they are used to test.

None of these use determinants, ideal closure or profile pruning; they
enumerate.  All are capped to tiny rings.
"""

from __future__ import annotations

import itertools
from typing import Optional

import numpy as np

from .ring_core import FiniteRing, RingError
from .ideals import is_homomorphism, is_ideal

MAX_ORACLE_SIZE = 8


def _matrices(n: int) -> np.ndarray:
    """All 2x2 matrices as rows ``(a, b, c, d)``, index ``((a*n+b)*n+c)*n+d``."""
    return np.array(list(itertools.product(range(n), repeat=4)), dtype=np.int64)


def matrix_code(ring: FiniteRing, a: int, b: int, c: int, d: int) -> int:
    n = ring.size
    return ((a * n + b) * n + c) * n + d


def gl2_bruteforce(ring: FiniteRing) -> np.ndarray:
    """Boolean over all ``size**4`` matrices: True iff a two-sided inverse exists.

    Found by multiplying against every candidate matrix and comparing with the
    identity.
    """
    n = ring.size
    if n > MAX_ORACLE_SIZE:
        raise RingError(f"brute-force GL2 is capped at ring size {MAX_ORACLE_SIZE}")
    A, M = ring.add_table, ring.mul_table
    mats = _matrices(n)
    Na, Nb, Nc, Nd = (mats[:, k][None, :] for k in range(4))
    out = np.zeros(len(mats), dtype=bool)
    z, o = ring.zero, ring.one
    for start in range(0, len(mats), 256):
        blk = mats[start:start + 256]
        a, b, c, d = (blk[:, k][:, None] for k in range(4))
        # M @ N
        left = ((A[M[a, Na], M[b, Nc]] == o) & (A[M[a, Nb], M[b, Nd]] == z)
                & (A[M[c, Na], M[d, Nc]] == z) & (A[M[c, Nb], M[d, Nd]] == o))
        # N @ M
        right = ((A[M[Na, a], M[Nb, c]] == o) & (A[M[Na, b], M[Nb, d]] == z)
                 & (A[M[Nc, a], M[Nd, c]] == z) & (A[M[Nc, b], M[Nd, d]] == o))
        out[start:start + len(blk)] = (left & right).any(axis=1)
    return out


def admissible_bruteforce(ring: FiniteRing, gl2: Optional[np.ndarray] = None) -> np.ndarray:
    """``[alpha, beta]`` -> True iff some completion row lands in brute-force GL2."""
    n = ring.size
    if gl2 is None:
        gl2 = gl2_bruteforce(ring)
    return gl2.reshape(n, n, n * n).any(axis=2)


def ideals_powerset(ring: FiniteRing) -> list[frozenset[int]]:
    """Every subset passing the ideal predicate (size <= 16)."""
    if ring.size > 16:
        raise RingError("power-set ideal search is capped at size 16")
    others = [i for i in range(ring.size) if i != ring.zero]
    found = []
    for mask in range(1 << len(others)):
        s = frozenset([ring.zero] + [x for k, x in enumerate(others) if mask >> k & 1])
        if is_ideal(ring, s):
            found.append(s)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def isomorphisms_exhaustive(R: FiniteRing, S: FiniteRing) -> list[tuple[int, ...]]:
    """All bijections ``R -> S`` that are ring homomorphisms (size <= 8)."""
    if R.size > MAX_ORACLE_SIZE or S.size > MAX_ORACLE_SIZE:
        raise RingError(f"exhaustive isomorphism search is capped at size {MAX_ORACLE_SIZE}")
    if R.size != S.size:
        return []
    return [p for p in itertools.permutations(range(S.size)) if is_homomorphism(R, S, p)]


def product_line_bijection(line, factor_lines) -> dict[int, tuple[int, ...]]:
    """Map each point of the line over a product ring to its factor-line points.

    Component pairs are rescaled by every unit of the factor until they match
    a factor-line representative, so the map does not rely on how either line
    chose canonical representatives.
    """
    ring = line.ring
    if ring.coords is None:
        raise RingError("line ring is not a direct product")
    out = {}
    for i, p in enumerate(line.points):
        comps = []
        for k, (f, fl) in enumerate(zip(ring.factors, factor_lines)):
            a, b = ring.coords[p.rep[0]][k], ring.coords[p.rep[1]][k]
            scaled = {(f.mul(u, a), f.mul(u, b)) for u in range(f.size) if f.is_unit(u)}
            hits = [j for j, q in enumerate(fl.points) if q.rep in scaled]
            if len(hits) != 1:
                raise RingError(f"component {k} of {p} matches {len(hits)} factor points")
            comps.append(hits[0])
        out[i] = tuple(comps)
    return out

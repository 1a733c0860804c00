"""Ideals, quotient rings, ring maps and subrings of small finite rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .ring_core import (
    FiniteRing,
    RingElement,
    RingError,
    classify_element,
)

MAX_ISO_SIZE = 16
MAX_SUBRING_SIZE = 16


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(repr=False, compare=False)
    elements: frozenset[int]
    generator: Optional[int] = None
    is_maximal: bool = False

    @property
    def is_principal(self) -> bool:
        return self.generator is not None

    @property
    def size(self) -> int:
        return len(self.elements)

    def names(self) -> list[str]:
        return self.ring.names_of(self.elements)

    def __contains__(self, x) -> bool:
        i = x.index if isinstance(x, RingElement) else x
        return i in self.elements

    def __str__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


@dataclass(frozen=True)
class RingMap:
    source: FiniteRing = field(repr=False)
    target: FiniteRing = field(repr=False)
    images: tuple[int, ...]
    is_isomorphism: bool = False

    def __call__(self, x: RingElement) -> RingElement:
        if x.ring is not self.source:
            raise RingError("element is not in the map's source ring")
        return RingElement(self.target, self.images[x.index])

    def kernel(self) -> frozenset[int]:
        return frozenset(i for i, y in enumerate(self.images) if y == self.target.zero)

    def as_names(self) -> dict[str, str]:
        return {self.source.names[i]: self.target.names[y] for i, y in enumerate(self.images)}


@dataclass(frozen=True)
class QuotientRing:
    base: FiniteRing = field(repr=False)
    ideal: Ideal
    ring: FiniteRing = field(repr=False)
    projection: RingMap = field(repr=False)

    def coset(self, i: int) -> frozenset[int]:
        """Base-ring members of quotient element ``i``."""
        return frozenset(k for k, c in enumerate(self.projection.images) if c == i)


# predicates -------------------------------------------------------------------


def is_ideal(ring: FiniteRing, subset: Iterable[int]) -> bool:
    """Zero, closed under +, and absorbing multiplication by every element."""
    s = sorted(set(subset))
    if ring.zero not in s:
        return False
    mask = np.zeros(ring.size, dtype=bool)
    mask[s] = True
    idx = np.array(s)
    return bool(mask[ring.add_table[np.ix_(idx, idx)]].all()
                 and mask[ring.mul_table[:, idx]].all())


def is_homomorphism(source: FiniteRing, target: FiniteRing, images: Sequence[int]) -> bool:
    img = np.asarray(images)
    if img.shape != (source.size,) or images[source.one] != target.one:
        return False
    return bool((img[source.add_table] == target.add_table[np.ix_(img, img)]).all()
                and (img[source.mul_table] == target.mul_table[np.ix_(img, img)]).all())


# ideal generation -----------------------------------------------------------


def _additive_closure(ring: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    members = {ring.zero}
    frontier = list(set(gens) - members)
    members.update(frontier)
    while frontier:
        new = set()
        for x in frontier:
            for y in list(members):
                z = ring.add(x, y)
                if z not in members:
                    new.add(z)
        members |= new
        frontier = list(new)
    return frozenset(members)


def ideal_closure(ring: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    """Smallest ideal containing ``gens``: additive closure of ``R * gens``."""
    products = set()
    for g in gens:
        products.update(ring.mul_table[:, g].tolist())
    return _additive_closure(ring, products)


def principal_ideal(a: RingElement) -> Ideal:
    ring = a.ring
    elems = frozenset(ring.mul_table[:, a.index].tolist())
    maximal = any(m.elements == elems for m in maximal_ideals(ring))
    return Ideal(ring, elems, a.index, maximal)


def _principal_generator(ring: FiniteRing, elems: frozenset[int]) -> Optional[int]:
    for a in sorted(elems):
        if frozenset(ring.mul_table[:, a].tolist()) == elems:
            return a
    return None


def _sum_set(ring: FiniteRing, I: frozenset[int], J: frozenset[int]) -> frozenset[int]:
    return frozenset(np.unique(ring.add_table[np.ix_(sorted(I), sorted(J))]).tolist())


def _lattice_from(ring: FiniteRing, atoms: set[frozenset[int]]) -> list[frozenset[int]]:
    # every member is a sum of atoms; close {0} under adding one atom at a time
    start = frozenset({ring.zero})
    seen = {start}
    queue = [start]
    while queue:
        cur = queue.pop()
        for atom in atoms:
            if atom <= cur:
                continue
            nxt = _sum_set(ring, cur, atom)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def _ideal_sets(ring: FiniteRing) -> list[frozenset[int]]:
    principal = {frozenset(ring.mul_table[:, a].tolist()) for a in range(ring.size)}
    return _lattice_from(ring, principal)


def _maximal_sets(ring: FiniteRing, sets: list[frozenset[int]]) -> list[frozenset[int]]:
    proper = [s for s in sets if len(s) < ring.size]
    return [s for s in proper if not any(s < t for t in proper)]


def all_ideals(ring: FiniteRing) -> list[Ideal]:
    """Every ideal, ordered by size then members, including ``{0}`` and the ring."""
    sets = _ideal_sets(ring)
    maximal = set(_maximal_sets(ring, sets))
    return [Ideal(ring, s, _principal_generator(ring, s), s in maximal) for s in sets]


def maximal_ideals(ring: FiniteRing) -> list[Ideal]:
    sets = _maximal_sets(ring, _ideal_sets(ring))
    return [Ideal(ring, s, _principal_generator(ring, s), True) for s in sets]


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """Intersection of the maximal ideals."""
    maxes = maximal_ideals(ring)
    elems = frozenset.intersection(*(m.elements for m in maxes))
    is_max = len(maxes) == 1
    return Ideal(ring, elems, _principal_generator(ring, elems), is_max)


def is_local(ring: FiniteRing) -> bool:
    return len(maximal_ideals(ring)) == 1


# quotients ------------------------------------------------------------------


def quotient(ring: FiniteRing, ideal: Ideal | Iterable[int]) -> QuotientRing:
    """Coset ring ``R/I`` with its canonical projection.

    Cosets are ordered by their least member index and named after the member
    whose name sorts first.
    """
    if isinstance(ideal, Ideal):
        if ideal.ring is not ring:
            raise RingError("ideal belongs to a different ring")
        elems = ideal.elements
    else:
        elems = frozenset(ideal)
    if not is_ideal(ring, elems):
        raise RingError(f"{ring.names_of(elems)} is not an ideal of {ring.label}")
    if len(elems) == ring.size:
        raise RingError("quotient by the whole ring is the zero ring, which has zero == one")
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ring, elems, _principal_generator(ring, elems),
                      elems in set(_maximal_sets(ring, _ideal_sets(ring))))

    proj = [-1] * ring.size
    cosets: list[list[int]] = []
    for x in range(ring.size):
        if proj[x] >= 0:
            continue
        members = sorted({ring.add(x, i) for i in elems})
        for m in members:
            proj[m] = len(cosets)
        cosets.append(members)

    k = len(cosets)
    add = np.full((k, k), -1, dtype=np.int64)
    mul = np.full((k, k), -1, dtype=np.int64)
    P = np.array(proj)
    for i, ci in enumerate(cosets):
        for j, cj in enumerate(cosets):
            sums = set(P[ring.add_table[np.ix_(ci, cj)]].ravel().tolist())
            prods = set(P[ring.mul_table[np.ix_(ci, cj)]].ravel().tolist())
            if len(sums) != 1 or len(prods) != 1:
                raise RingError("coset operations are not well defined")
            add[i, j] = sums.pop()
            mul[i, j] = prods.pop()
    names = [min(ring.names[m] for m in c) for c in cosets]
    qring = FiniteRing(add, mul, proj[ring.zero], proj[ring.one], names,
                       label=f"{ring.label}/{{{','.join(ring.names_of(elems))}}}")
    projection = RingMap(ring, qring, tuple(proj), k == ring.size)
    return QuotientRing(ring, ideal, qring, projection)


# isomorphism search -----------------------------------------------------------


def _additive_order(ring: FiniteRing, i: int) -> int:
    k, acc = 1, i
    while acc != ring.zero:
        acc = ring.add(acc, i)
        k += 1
    return k


def _profile(ring: FiniteRing, i: int) -> tuple:
    return (_additive_order(ring, i),
            classify_element(RingElement(ring, i)).value,
            ring.mul(i, i) == i)


def find_isomorphism(R: FiniteRing, S: FiniteRing) -> Optional[RingMap]:
    """Backtracking search for a ring isomorphism ``R -> S``.

    Candidates for each element are restricted to target elements with the
    same additive order, unit/zero-divisor class and idempotency.
    """
    if R.size > MAX_ISO_SIZE or S.size > MAX_ISO_SIZE:
        raise RingError(f"isomorphism search is capped at size {MAX_ISO_SIZE}")
    if R.size != S.size:
        return None
    n = R.size
    pr = [_profile(R, i) for i in range(n)]
    ps = [_profile(S, j) for j in range(n)]
    if sorted(pr) != sorted(ps):
        return None
    cands = [[j for j in range(n) if ps[j] == pr[i]] for i in range(n)]
    cands[R.zero] = [S.zero] if S.zero in cands[R.zero] else []
    cands[R.one] = [S.one] if S.one in cands[R.one] else []
    # most constrained first, fixed points leading
    order = sorted(range(n), key=lambda i: (len(cands[i]), i))
    img = [-1] * n
    used = [False] * n

    def consistent(i: int) -> bool:
        for k in range(n):
            if img[k] < 0:
                continue
            for tR, tS in ((R.add_table, S.add_table), (R.mul_table, S.mul_table)):
                r = tR[i, k]
                if img[r] >= 0 and img[r] != tS[img[i], img[k]]:
                    return False
        return True

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in cands[i]:
            if used[j]:
                continue
            img[i], used[j] = j, True
            if consistent(i) and extend(pos + 1):
                return True
            img[i], used[j] = -1, False
        return False

    if not extend(0):
        return None
    images = tuple(img)
    if not is_homomorphism(R, S, images):
        return None
    return RingMap(R, S, images, True)


# subrings -------------------------------------------------------------------


def subring_unity(ring: FiniteRing, elements: Iterable[int]) -> Optional[int]:
    """Multiplicative identity of the subset, if it has one."""
    s = sorted(elements)
    idx = np.array(s)
    for e in s:
        if (ring.mul_table[e, idx] == idx).all():
            return e
    return None


def induced_ring(ring: FiniteRing, elements: Iterable[int], label: str = "") -> FiniteRing:
    """The subset as a ring in its own right, with the parent's operations."""
    s = sorted(elements)
    unity = subring_unity(ring, s)
    if unity is None:
        raise RingError(f"{ring.names_of(s)} has no multiplicative identity")
    pos = {x: k for k, x in enumerate(s)}
    try:
        add = [[pos[ring.add(x, y)] for y in s] for x in s]
        mul = [[pos[ring.mul(x, y)] for y in s] for x in s]
    except KeyError:
        raise RingError(f"{ring.names_of(s)} is not closed under the ring operations") from None
    return FiniteRing(add, mul, pos[ring.zero], pos[unity], [ring.names[x] for x in s],
                      label=label or "{" + ",".join(ring.names[x] for x in s) + "}")


def _additive_subgroups(ring: FiniteRing) -> list[frozenset[int]]:
    cyclic = {_additive_closure(ring, [x]) for x in range(ring.size)}
    return _lattice_from(ring, cyclic)


def subrings(ring: FiniteRing, require_inherited_unity: bool = False) -> list[frozenset[int]]:
    """Subsets closed under + and x that have their own multiplicative identity.

    The one-element set ``{0}`` is excluded (its identity would equal zero).
    With ``require_inherited_unity`` only subsets containing the parent's
    ``one`` are kept.
    """
    if ring.size > MAX_SUBRING_SIZE:
        raise RingError(f"subring search is capped at size {MAX_SUBRING_SIZE}")
    out = []
    for s in _additive_subgroups(ring):
        if len(s) < 2:
            continue
        idx = np.array(sorted(s))
        mask = np.zeros(ring.size, dtype=bool)
        mask[idx] = True
        if not mask[ring.mul_table[np.ix_(idx, idx)]].all():
            continue
        unity = subring_unity(ring, s)
        if unity is None or unity == ring.zero:
            continue
        if require_inherited_unity and unity != ring.one:
            continue
        out.append(s)
    return out

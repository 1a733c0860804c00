"""The projective line over a finite commutative ring.

Points are unit-scaling classes of admissible pairs.  Two points are distant
when the 2x2 matrix of their representatives is invertible, i.e. has a unit
determinant, and neighbour otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .ideals import ideal_closure
from .ring_core import FiniteRing, RingElement, RingError, RingMismatchError

MAX_LINE_RING_SIZE = 64


@dataclass(frozen=True)
class PairMatrix:
    """The matrix ``[[alpha, beta], [gamma, delta]]`` over one ring."""

    alpha: RingElement
    beta: RingElement
    gamma: RingElement
    delta: RingElement

    def __post_init__(self):
        ring = self.alpha.ring
        if any(x.ring is not ring for x in (self.beta, self.gamma, self.delta)):
            raise RingMismatchError("matrix entries come from different rings")

    @property
    def ring(self) -> FiniteRing:
        return self.alpha.ring

    @classmethod
    def of(cls, ring: FiniteRing, alpha, beta, gamma, delta) -> "PairMatrix":
        """Build from element names or indices."""
        return cls(*(ring.element(x) for x in (alpha, beta, gamma, delta)))


def det2(m: PairMatrix) -> RingElement:
    return m.alpha * m.delta - m.beta * m.gamma


def is_invertible_2x2(m: PairMatrix) -> bool:
    return m.ring.is_unit(det2(m).index)


def _det_index(ring: FiniteRing, a: int, b: int, c: int, d: int) -> int:
    return ring.sub(ring.mul(a, d), ring.mul(b, c))


def is_admissible(ring: FiniteRing, alpha, beta) -> bool:
    """True iff the pair generates the unit ideal, i.e. completes to GL2."""
    a = alpha.index if isinstance(alpha, RingElement) else ring.index(alpha) if isinstance(alpha, str) else alpha
    b = beta.index if isinstance(beta, RingElement) else ring.index(beta) if isinstance(beta, str) else beta
    return ring.one in ideal_closure(ring, (a, b))


def completion(ring: FiniteRing, alpha: int, beta: int) -> Optional[tuple[int, int]]:
    """Exhaustive search for a row ``(gamma, delta)`` making the matrix invertible."""
    for c in range(ring.size):
        for d in range(ring.size):
            if ring.is_unit(_det_index(ring, alpha, beta, c, d)):
                return c, d
    return None


@dataclass(frozen=True)
class ProjectivePoint:
    ring: FiniteRing = field(repr=False, compare=False)
    rep: tuple[int, int]

    @property
    def alpha(self) -> RingElement:
        return RingElement(self.ring, self.rep[0])

    @property
    def beta(self) -> RingElement:
        return RingElement(self.ring, self.rep[1])

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.ring is other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((id(self.ring), self.rep))

    def coords(self) -> str:
        return f"({self.ring.names[self.rep[0]]},{self.ring.names[self.rep[1]]})"

    def __str__(self) -> str:
        return self.coords()


def canonical_rep(ring: FiniteRing, alpha: int, beta: int) -> tuple[int, int]:
    """Lexicographically least ``(u*alpha, u*beta)`` over units ``u``."""
    return min((ring.mul(u, alpha), ring.mul(u, beta)) for u in ring.unit_indices)


class ProjectiveLine:
    """All points of the line plus the symmetric distant matrix.

    ``points`` is sorted by canonical representative; ``distant[i, j]`` is
    True when points ``i`` and ``j`` are distant.
    """

    def __init__(self, ring: FiniteRing, points: Sequence[ProjectivePoint], distant: np.ndarray):
        self.ring = ring
        self.points = tuple(points)
        distant = np.array(distant, dtype=bool)
        distant.setflags(write=False)
        self.distant = distant
        self._pos = {p.rep: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ProjectivePoint]:
        return iter(self.points)

    def __repr__(self) -> str:
        return f"ProjectiveLine({self.ring.label!r}, points={len(self.points)})"

    def index(self, point: ProjectivePoint) -> int:
        if point.ring is not self.ring or point.rep not in self._pos:
            raise RingError(f"{point} is not a point of this line")
        return self._pos[point.rep]

    def point(self, alpha, beta) -> ProjectivePoint:
        """Look up the point through any representative (names or indices)."""
        a = self.ring.index(alpha) if isinstance(alpha, str) else int(alpha)
        b = self.ring.index(beta) if isinstance(beta, str) else int(beta)
        rep = canonical_rep(self.ring, a, b)
        if rep not in self._pos:
            raise RingError(f"({alpha},{beta}) is not admissible over {self.ring.label}")
        return self.points[self._pos[rep]]

    @property
    def neighbour(self) -> np.ndarray:
        """Neighbour matrix, reflexive (diagonal True)."""
        return ~self.distant

    def distant_degrees(self) -> np.ndarray:
        return self.distant.sum(axis=1)


def build_line(ring: FiniteRing) -> ProjectiveLine:
    if ring.size > MAX_LINE_RING_SIZE:
        raise RingError(f"line construction is capped at ring size {MAX_LINE_RING_SIZE}")
    reps = set()
    for a in range(ring.size):
        for b in range(ring.size):
            if is_admissible(ring, a, b):
                reps.add(canonical_rep(ring, a, b))
    points = [ProjectivePoint(ring, r) for r in sorted(reps)]
    R = np.array([p.rep for p in points], dtype=np.int64).reshape(-1, 2)
    # det(x_i; x_j) = a_i b_j - b_i a_j
    ad = ring.mul_table[R[:, 0][:, None], R[:, 1][None, :]]
    bc = ring.mul_table[R[:, 1][:, None], R[:, 0][None, :]]
    neg = np.array([ring.neg(i) for i in range(ring.size)])
    det = ring.add_table[ad, neg[bc]]
    unit_mask = np.zeros(ring.size, dtype=bool)
    unit_mask[list(ring.unit_indices)] = True
    return ProjectiveLine(ring, points, unit_mask[det])


def _check_points(line: ProjectiveLine, pts: Iterable[ProjectivePoint]) -> list[int]:
    return [line.index(p) for p in pts]


def is_distant(line: ProjectiveLine, X: ProjectivePoint, Y: ProjectivePoint) -> bool:
    i, j = _check_points(line, (X, Y))
    return bool(line.distant[i, j])


def neighbourhood(line: ProjectiveLine, X: ProjectivePoint) -> frozenset[ProjectivePoint]:
    """Points neighbour to ``X``, excluding ``X`` itself."""
    (i,) = _check_points(line, (X,))
    return frozenset(line.points[j] for j in np.flatnonzero(~line.distant[i]) if j != i)


def common_neighbourhood(line: ProjectiveLine, points: Sequence[ProjectivePoint]) -> frozenset[ProjectivePoint]:
    idx = _check_points(line, points)
    if not idx:
        raise RingError("common_neighbourhood needs at least one point")
    if len(set(idx)) != len(idx):
        raise RingError("points must be pairwise distinct")
    mask = np.ones(len(line), dtype=bool)
    for i in idx:
        mask &= ~line.distant[i]
    mask[idx] = False
    return frozenset(line.points[j] for j in np.flatnonzero(mask))


def transitivity_counterexample(
    line: ProjectiveLine,
) -> Optional[tuple[ProjectivePoint, ProjectivePoint, ProjectivePoint]]:
    """Return ``(X, Y, Z)`` with X~Y, Y~Z but X distant from Z, if any."""
    N = line.neighbour
    for y in range(len(line)):
        nbrs = np.flatnonzero(N[y])
        for x in nbrs:
            far = nbrs[line.distant[x, nbrs]]
            if far.size:
                X, Y, Z = (line.points[k] for k in (x, y, far[0]))
                # re-derive from the determinant, independent of the matrix
                if (is_invertible_2x2(PairMatrix(X.alpha, X.beta, Y.alpha, Y.beta))
                        or is_invertible_2x2(PairMatrix(Y.alpha, Y.beta, Z.alpha, Z.beta))
                        or not is_invertible_2x2(PairMatrix(X.alpha, X.beta, Z.alpha, Z.beta))):
                    raise RuntimeError(f"distant matrix disagrees with determinants at {X}, {Y}, {Z}")
                return X, Y, Z
    return None


def distant_pairs(line: ProjectiveLine) -> list[tuple[int, int]]:
    i, j = np.nonzero(np.triu(line.distant, 1))
    return list(zip(i.tolist(), j.tolist()))


def distant_triples(line: ProjectiveLine) -> list[tuple[int, int, int]]:
    out = []
    D = line.distant
    for i, j in distant_pairs(line):
        for k in np.flatnonzero(D[i] & D[j]):
            if k > j:
                out.append((i, j, int(k)))
    return out

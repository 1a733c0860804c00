"""Finite commutative rings with unity, stored as dense operation tables.

Elements are integer indices ``0..size-1``; ``add`` and ``mul`` are
``size x size`` integer arrays.  Rings are validated once at construction and
are read-only afterwards.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_RING_SIZE = 4096
MAX_PRIME = 97
# exhaustive cubic axiom checks above this size are skipped for products,
# whose axioms follow from the already-validated factors
_FULL_CHECK_LIMIT = 256

# letter names for GF(2)^3: coordinate triple -> name, in display order
R_TRIANGLE_NAMES = {
    (0, 0, 0): "a",
    (1, 0, 0): "b",
    (0, 1, 0): "c",
    (0, 0, 1): "d",
    (1, 1, 0): "e",
    (1, 0, 1): "f",
    (0, 1, 1): "g",
    (1, 1, 1): "h",
}


class RingError(ValueError):
    """Base class for ring construction and usage errors."""


class RingMismatchError(RingError):
    """Raised when elements of different rings are combined."""


class RingAxiomError(RingError):
    """Raised when tables violate a ring axiom.

    ``violations`` holds ``(axiom, witness)`` pairs, one per failing instance,
    where ``witness`` is a tuple of element names.
    """

    def __init__(self, violations: list[tuple[str, tuple[str, ...]]]):
        self.violations = violations
        shown = "; ".join(f"{ax} fails at ({', '.join(w)})" for ax, w in violations[:10])
        more = f" (+{len(violations) - 10} more)" if len(violations) > 10 else ""
        super().__init__(f"{len(violations)} axiom violation(s): {shown}{more}")


class RingSpecError(RingError):
    """Parse error in a ring-spec document, with 1-based line/column."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ElementClass(enum.Enum):
    ZERO = "Zero"
    UNIT = "Unit"
    ZERO_DIVISOR = "NonTrivialZeroDivisor"


class FiniteRing:
    """A finite commutative ring with unity given by its tables.

    ``coords`` and ``factors`` are set only for rings built by
    :func:`direct_product`; ``coords[i]`` is the factor-index tuple of element
    ``i``.
    """

    def __init__(
        self,
        add_table,
        mul_table,
        zero: int,
        one: int,
        names: Sequence[str] | None = None,
        *,
        label: str = "",
        coords: Sequence[tuple[int, ...]] | None = None,
        factors: Sequence["FiniteRing"] | None = None,
        validate: bool = True,
    ):
        add = np.array(add_table, dtype=np.int64)
        mul = np.array(mul_table, dtype=np.int64)
        n = add.shape[0] if add.ndim == 2 else 0
        if n == 0 or add.shape != (n, n) or mul.shape != (n, n):
            raise RingError("add and mul tables must be square and of equal size")
        if n > MAX_RING_SIZE:
            raise RingError(f"ring size {n} exceeds cap {MAX_RING_SIZE}")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise RingError("table entries must be element indices in [0, size)")
        if not (0 <= zero < n and 0 <= one < n):
            raise RingError("zero/one must be element indices")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.size = n
        self.add_table = add
        self.mul_table = mul
        self.zero = int(zero)
        self.one = int(one)
        if names is None:
            names = [f"r{i}" for i in range(n)]
        if len(names) != n or len(set(names)) != n:
            raise RingError("names must be distinct and one per element")
        self.names = tuple(names)
        self.label = label or f"ring{n}"
        self.coords = tuple(tuple(c) for c in coords) if coords is not None else None
        self.factors = tuple(factors) if factors is not None else None
        self._index = {name: i for i, name in enumerate(self.names)}
        is_zero = add == self.zero
        self._neg = tuple(np.where(is_zero.any(axis=1), is_zero.argmax(axis=1), -1).tolist())
        if validate:
            violations = check_axioms(self)
            if violations:
                raise RingAxiomError(violations)

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return (RingElement(self, i) for i in range(self.size))

    # index-level arithmetic -------------------------------------------------

    def add(self, i: int, j: int) -> int:
        return int(self.add_table[i, j])

    def mul(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def neg(self, i: int) -> int:
        return self._neg[i]

    def sub(self, i: int, j: int) -> int:
        return int(self.add_table[i, self._neg[j]])

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"{self.label} has no element named {name!r}") from None

    def element(self, x: str | int) -> "RingElement":
        i = self.index(x) if isinstance(x, str) else int(x)
        if not 0 <= i < self.size:
            raise RingError(f"element index {i} out of range for {self.label}")
        return RingElement(self, i)

    def is_unit(self, i: int) -> bool:
        return bool((self.mul_table[i] == self.one).any())

    def inverse(self, i: int) -> int:
        hits = np.flatnonzero(self.mul_table[i] == self.one)
        if hits.size == 0:
            raise RingError(f"{self.names[i]} is not a unit")
        return int(hits[0])

    @property
    def unit_indices(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero((self.mul_table == self.one).any(axis=1)))

    def names_of(self, indices: Iterable[int]) -> list[str]:
        return [self.names[i] for i in sorted(indices)]


@dataclass(frozen=True)
class RingElement:
    """An element of a specific ring; arithmetic across rings is rejected."""

    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.size:
            raise RingError(f"index {self.index} out of range for {self.ring.label}")

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.index == other.index

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __lt__(self, other: "RingElement") -> bool:
        _same_ring(self, other)
        return self.index < other.index

    @property
    def name(self) -> str:
        return self.ring.names[self.index]

    def __repr__(self) -> str:
        return self.name

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)


def _same_ring(x: RingElement, y: RingElement) -> FiniteRing:
    if x.ring is not y.ring:
        raise RingMismatchError(f"elements of {x.ring.label} and {y.ring.label} cannot be combined")
    return x.ring


def add(x: RingElement, y: RingElement) -> RingElement:
    r = _same_ring(x, y)
    return RingElement(r, r.add(x.index, y.index))


def mul(x: RingElement, y: RingElement) -> RingElement:
    r = _same_ring(x, y)
    return RingElement(r, r.mul(x.index, y.index))


def neg(x: RingElement) -> RingElement:
    return RingElement(x.ring, x.ring.neg(x.index))


def sub(x: RingElement, y: RingElement) -> RingElement:
    r = _same_ring(x, y)
    return RingElement(r, r.sub(x.index, y.index))


# axioms ---------------------------------------------------------------------


def check_axioms(ring: FiniteRing) -> list[tuple[str, tuple[str, ...]]]:
    """Return every violated commutative-ring-with-unity axiom instance."""
    A, M, n, nm = ring.add_table, ring.mul_table, ring.size, ring.names
    out: list[tuple[str, tuple[str, ...]]] = []

    def pairs(mask, axiom):
        for i, j in zip(*np.nonzero(mask)):
            if i <= j:
                out.append((axiom, (nm[i], nm[j])))

    if ring.zero == ring.one:
        out.append(("zero != one", (nm[ring.zero],)))
    pairs(A != A.T, "additive commutativity")
    for i in np.flatnonzero(A[ring.zero] != np.arange(n)):
        out.append(("additive identity", (nm[i],)))
    for i in np.flatnonzero(~(A == ring.zero).any(axis=1)):
        out.append(("additive inverse", (nm[i],)))
    pairs(M != M.T, "multiplicative commutativity")
    for i in np.flatnonzero(M[ring.one] != np.arange(n)):
        out.append(("multiplicative identity", (nm[i],)))

    too_big = ring.factors is not None and n > _FULL_CHECK_LIMIT
    if too_big:
        return out
    # cubic checks, one slab per first argument x
    for x in range(n):
        # (x+y)+z vs x+(y+z)
        lhs = A[A[x]]                # [y, z] -> (x+y)+z
        rhs = A[x][A]                # [y, z] -> x+(y+z)
        for y, z in zip(*np.nonzero(lhs != rhs)):
            out.append(("additive associativity", (nm[x], nm[y], nm[z])))
        lhs = M[M[x]]
        rhs = M[x][M]
        for y, z in zip(*np.nonzero(lhs != rhs)):
            out.append(("multiplicative associativity", (nm[x], nm[y], nm[z])))
        # x*(y+z) vs x*y + x*z
        lhs = M[x][A]
        rhs = A[M[x][:, None], M[x][None, :]]
        for y, z in zip(*np.nonzero(lhs != rhs)):
            out.append(("distributivity", (nm[x], nm[y], nm[z])))
    return out


# constructors ---------------------------------------------------------------


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def make_gf(p: int) -> FiniteRing:
    """The prime field of order ``p`` as integers mod ``p``."""
    if not isinstance(p, (int, np.integer)) or not _is_prime(int(p)):
        raise RingError(f"GF({p}) requires a prime order")
    if p > MAX_PRIME:
        raise RingError(f"GF({p}) exceeds the prime cap {MAX_PRIME}")
    r = np.arange(p)
    return FiniteRing((r[:, None] + r) % p, (r[:, None] * r) % p, 0, 1,
                      [str(i) for i in range(p)], label=f"GF{p}")


def direct_product(factors: Sequence[FiniteRing], label: str | None = None) -> FiniteRing:
    """Componentwise product of rings.

    Elements are tuples indexed mixed-radix with the first factor most
    significant.  The one exception is GF(2)^3, which is indexed and named
    ``a``..``h`` in the order ``[0,0,0], [1,0,0], [0,1,0], [0,0,1], [1,1,0],
    [1,0,1], [0,1,1], [1,1,1]``.
    """
    factors = list(factors)
    if not factors:
        raise RingError("direct_product needs at least one factor")
    size = 1
    for f in factors:
        size *= f.size
    if size > MAX_RING_SIZE:
        raise RingError(f"product size {size} exceeds cap {MAX_RING_SIZE}")

    tuples = list(itertools.product(*(range(f.size) for f in factors)))
    is_r_triangle = len(factors) == 3 and all(_is_gf2(f) for f in factors)
    if is_r_triangle:
        tuples = list(R_TRIANGLE_NAMES)
        names = list(R_TRIANGLE_NAMES.values())
    elif len(factors) == 1:
        names = list(factors[0].names)
    else:
        names = ["[" + ",".join(f.names[c] for f, c in zip(factors, t)) + "]" for t in tuples]
    pos = {t: i for i, t in enumerate(tuples)}
    T = np.array(tuples, dtype=np.int64)
    strides = np.cumprod([1] + [f.size for f in factors[:0:-1]])[::-1]
    # mixed-radix code of a tuple -> element index
    lookup = np.empty(size, dtype=np.int64)
    lookup[T @ strides] = np.arange(size)

    def table(op):
        code = np.zeros((size, size), dtype=np.int64)
        for k, f in enumerate(factors):
            code += strides[k] * getattr(f, op + "_table")[T[:, k][:, None], T[:, k][None, :]]
        return lookup[code]

    zero = pos[tuple(f.zero for f in factors)]
    one = pos[tuple(f.one for f in factors)]
    if label is None:
        label = "R_triangle" if is_r_triangle else "x".join(f.label for f in factors)
    return FiniteRing(table("add"), table("mul"), zero, one, names, label=label,
                      coords=tuples, factors=factors)


def _is_gf2(ring: FiniteRing) -> bool:
    return (ring.size == 2 and ring.zero != ring.one
            and ring.add(ring.one, ring.one) == ring.zero)



def r_triangle() -> FiniteRing:
    """GF(2) x GF(2) x GF(2) with elements named a..h."""
    gf2 = make_gf(2)
    return direct_product([gf2, gf2, gf2])


def product_coordinates(x: RingElement) -> list[RingElement]:
    """Factor components of an element of a direct product."""
    ring = x.ring
    if ring.coords is None:
        raise RingError(f"{ring.label} was not built as a direct product")
    return [RingElement(f, c) for f, c in zip(ring.factors, ring.coords[x.index])]


# classification --------------------------------------------------------------


def classify_element(x: RingElement) -> ElementClass:
    ring = x.ring
    if x.index == ring.zero:
        return ElementClass.ZERO
    if ring.is_unit(x.index):
        return ElementClass.UNIT
    return ElementClass.ZERO_DIVISOR


def units(ring: FiniteRing) -> frozenset[RingElement]:
    return frozenset(RingElement(ring, i) for i in ring.unit_indices)


def zero_divisors(ring: FiniteRing, include_zero: bool = True) -> frozenset[RingElement]:
    """Non-units of the ring; the zero element is kept only if ``include_zero``."""
    us = set(ring.unit_indices)
    return frozenset(RingElement(ring, i) for i in range(ring.size)
                     if i not in us and (include_zero or i != ring.zero))


def characteristic(ring: FiniteRing) -> int:
    s, acc = 1, ring.one
    while acc != ring.zero:
        acc = ring.add(acc, ring.one)
        s += 1
    return s


# ring-spec text format -------------------------------------------------------

_BUILTIN_RE = re.compile(r"GF(\d+)$")


def builtin_ring(name: str) -> FiniteRing:
    """Resolve ``GF<p>``, ``GF2xGF2``-style products, or ``R_triangle``."""
    if name == "R_triangle":
        return r_triangle()
    parts = name.split("x")
    if len(parts) > 1:
        return direct_product([builtin_ring(p) for p in parts])
    m = _BUILTIN_RE.match(name)
    if not m:
        raise RingError(f"unknown built-in ring {name!r}")
    return make_gf(int(m.group(1)))


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def ring_from_spec(text: str, label: str = "spec") -> FiniteRing:
    """Parse a ring-spec document (product expression or explicit tables)."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise RingSpecError("empty ring spec", 1)

    lineno, first = lines[0]
    toks = _tokens(first)
    if toks[0][0] == "product":
        if len(lines) > 1:
            raise RingSpecError("unexpected content after product line", lines[1][0])
        if len(toks) < 2:
            raise RingSpecError("product needs at least one factor", lineno, len(first.rstrip()) + 1)
        factors = []
        for name, col in toks[1:]:
            try:
                factors.append(builtin_ring(name))
            except RingError as exc:
                raise RingSpecError(str(exc), lineno, col) from None
        return direct_product(factors)

    elements: list[str] | None = None
    tables: dict[str, list[list[int]]] = {}
    specials: dict[str, int] = {}
    i = 0
    while i < len(lines):
        lineno, body = lines[i]
        toks = _tokens(body)
        key, col = toks[0]
        if key == "elements:":
            if elements is not None:
                raise RingSpecError("duplicate elements: line", lineno, col)
            elements = [t for t, _ in toks[1:]]
            if not elements:
                raise RingSpecError("elements: needs at least one name", lineno, col)
            if len(set(elements)) != len(elements):
                raise RingSpecError("duplicate element names", lineno, col)
            i += 1
        elif key in ("add:", "mul:"):
            if elements is None:
                raise RingSpecError(f"{key} before elements:", lineno, col)
            if len(toks) > 1:
                raise RingSpecError(f"{key} rows belong on the following lines", lineno, toks[1][1])
            index = {e: k for k, e in enumerate(elements)}
            rows = []
            for r in range(len(elements)):
                if i + 1 + r >= len(lines):
                    raise RingSpecError(f"{key} table has {r} rows, expected {len(elements)}",
                                        lines[-1][0] + 1)
                rl, rb = lines[i + 1 + r]
                rt = _tokens(rb)
                if len(rt) != len(elements):
                    raise RingSpecError(f"row has {len(rt)} entries, expected {len(elements)}", rl)
                row = []
                for t, c in rt:
                    if t not in index:
                        raise RingSpecError(f"unknown element {t!r}", rl, c)
                    row.append(index[t])
                rows.append(row)
            tables[key[:-1]] = rows
            i += 1 + len(elements)
        elif key in ("zero:", "one:"):
            if elements is None:
                raise RingSpecError(f"{key} before elements:", lineno, col)
            if len(toks) != 2 or toks[1][0] not in elements:
                c = toks[1][1] if len(toks) > 1 else col
                raise RingSpecError(f"{key} needs one known element name", lineno, c)
            specials[key[:-1]] = elements.index(toks[1][0])
            i += 1
        else:
            raise RingSpecError(f"unexpected token {key!r}", lineno, col)

    last = lines[-1][0]
    for needed in ("add", "mul", "zero", "one"):
        if needed not in tables and needed not in specials:
            raise RingSpecError(f"missing {needed}: section", last)
    return FiniteRing(tables["add"], tables["mul"], specials["zero"], specials["one"],
                      elements, label=label)

"""Nucleus / inner shell / outer shell labels for the line over GF(2)^3.

Labels are ASCII strings: ``U``, ``V``, ``W`` for the nucleus, ``I2S`` or
``J3F`` for the inner shell (series, index, slim/fat) and ``S1+`` or ``F2-``
for the outer shell (series, index, sign).
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from . import golden
from .proj_line import ProjectiveLine, ProjectivePoint
from .ring_core import (
    R_TRIANGLE_NAMES,
    ElementClass,
    FiniteRing,
    RingElement,
    RingError,
    classify_element,
)


class Layer(enum.Enum):
    NUCLEUS = "Nucleus"
    INNER = "InnerShell"
    OUTER = "OuterShell"


class Weight(enum.Enum):
    SLIM = "S"
    FAT = "F"


SLIM_ORDER = ("b", "c", "d")
FAT_ORDER = ("e", "f", "g")
NUCLEUS_COORDS = {("h", "a"): "U", ("a", "h"): "V", ("h", "h"): "W"}
# the outer-shell names are fixed by this listing; swapping coordinates flips the sign
OUTER_COORDS = {
    ("e", "d"): "S1+", ("f", "c"): "S2+", ("g", "b"): "S3+",
    ("d", "e"): "S1-", ("c", "f"): "S2-", ("b", "g"): "S3-",
    ("e", "f"): "F1+", ("e", "g"): "F2+", ("f", "g"): "F3+",
    ("f", "e"): "F1-", ("g", "e"): "F2-", ("g", "f"): "F3-",
}

_LABEL_RE = re.compile(r"^(?:(?P<nuc>[UVW])|(?P<inner>[IJ])(?P<ii>[123])(?P<w>[SF])"
                       r"|(?P<outer>[SF])(?P<oi>[123])(?P<sign>[+-]))$")


@dataclass(frozen=True)
class PointLabel:
    layer: Layer
    series: str
    weight: Optional[Weight] = None
    sign: Optional[str] = None
    index: Optional[int] = None

    def __str__(self) -> str:
        if self.layer is Layer.NUCLEUS:
            return self.series
        if self.layer is Layer.INNER:
            return f"{self.series}{self.index}{self.weight.value}"
        return f"{self.series}{self.index}{self.sign}"

    @classmethod
    def parse(cls, text: str) -> "PointLabel":
        m = _LABEL_RE.match(text)
        if not m:
            raise RingError(f"not a point label: {text!r}")
        if m["nuc"]:
            return cls(Layer.NUCLEUS, m["nuc"])
        if m["inner"]:
            return cls(Layer.INNER, m["inner"], Weight(m["w"]), None, int(m["ii"]))
        return cls(Layer.OUTER, m["outer"], None, m["sign"], int(m["oi"]))


def is_gf2_cubed(ring: FiniteRing) -> bool:
    return (ring.coords is not None and len(ring.factors) == 3
            and all(f.size == 2 for f in ring.factors)
            and set(ring.coords) == set(R_TRIANGLE_NAMES))


def _require(ring: FiniteRing) -> None:
    if not is_gf2_cubed(ring):
        raise RingError(f"shell labels are defined only for GF(2)^3, not {ring.label}")


def _letter(ring: FiniteRing, i: int) -> str:
    return R_TRIANGLE_NAMES[ring.coords[i]]


def zero_divisor_weight(x: RingElement) -> Weight:
    """Slim for one nonzero coordinate, Fat for two."""
    _require(x.ring)
    if classify_element(x) is not ElementClass.ZERO_DIVISOR:
        raise RingError(f"{x.name} is not a non-trivial zero-divisor")
    return Weight.SLIM if sum(x.ring.coords[x.index]) == 1 else Weight.FAT


def label_point(line: ProjectiveLine, X: ProjectivePoint) -> PointLabel:
    ring = line.ring
    _require(ring)
    line.index(X)
    pair = (_letter(ring, X.rep[0]), _letter(ring, X.rep[1]))
    if pair in NUCLEUS_COORDS:
        return PointLabel(Layer.NUCLEUS, NUCLEUS_COORDS[pair])
    if "h" in pair:
        series, z = ("I", pair[1]) if pair[0] == "h" else ("J", pair[0])
        if z in SLIM_ORDER:
            return PointLabel(Layer.INNER, series, Weight.SLIM, None, SLIM_ORDER.index(z) + 1)
        return PointLabel(Layer.INNER, series, Weight.FAT, None, FAT_ORDER.index(z) + 1)
    return PointLabel.parse(OUTER_COORDS[pair])


def labelled_points(line: ProjectiveLine) -> dict[str, ProjectivePoint]:
    """Label string -> point, for all points of the line."""
    return {str(label_point(line, p)): p for p in line.points}


def point_for_label(line: ProjectiveLine, label: str | PointLabel) -> ProjectivePoint:
    table = labelled_points(line)
    key = str(label)
    if key not in table:
        raise RingError(f"no point labelled {key!r}")
    return table[key]


@dataclass(frozen=True)
class ShellTable:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: tuple[tuple[str, ...], ...]

    def cell(self, row: str, col: str) -> str:
        return self.cells[self.rows.index(row)][self.cols.index(col)]

    def as_dict(self) -> dict[str, list[str]]:
        return {r: list(c) for r, c in zip(self.rows, self.cells)}

    def render(self) -> str:
        width = max(len(c) for c in self.rows + self.cols)
        head = " " * width + " | " + " ".join(c.rjust(width) for c in self.cols)
        lines = [head, "-" * len(head)]
        for r, row in zip(self.rows, self.cells):
            lines.append(r.ljust(width) + " | " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def shell_table(line: ProjectiveLine, rows: Sequence[str], cols: Sequence[str]) -> ShellTable:
    """'+' where the labelled points are distant, '-' where neighbour."""
    pts = labelled_points(line)
    for lab in list(rows) + list(cols):
        if lab not in pts:
            raise RingError(f"no point labelled {lab!r}")
    cells = tuple(
        tuple("+" if line.distant[line.index(pts[r]), line.index(pts[c])] else "-" for c in cols)
        for r in rows
    )
    return ShellTable(tuple(rows), tuple(cols), cells)


def named_table(line: ProjectiveLine, name: str) -> ShellTable:
    """One of ``inner``, ``outer``, ``cross``, ``nucleus-inner``, ``nucleus-outer``."""
    if name not in golden.TABLES:
        raise RingError(f"unknown table {name!r}")
    rows, cols, _ = golden.TABLES[name]
    return shell_table(line, rows, cols)


def layer_census(line: ProjectiveLine) -> Counter:
    """Counts keyed by ``(layer, series, weight, sign)``; absent parts are None."""
    counts: Counter = Counter()
    for p in line.points:
        lab = label_point(line, p)
        counts[(lab.layer, lab.series, lab.weight, lab.sign)] += 1
    return counts


def layer_totals(line: ProjectiveLine) -> dict[Layer, int]:
    totals = {layer: 0 for layer in Layer}
    for (layer, *_), n in layer_census(line).items():
        totals[layer] += n
    return totals


def neighbourhood_labels(line: ProjectiveLine, label: str) -> set[str]:
    from .proj_line import neighbourhood

    X = point_for_label(line, label)
    return {str(label_point(line, Y)) for Y in neighbourhood(line, X)}

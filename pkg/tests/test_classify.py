import pytest

from ringline import golden
from ringline.classify import (
    Layer,
    PointLabel,
    Weight,
    label_point,
    layer_census,
    labelled_points,
    named_table,
    neighbourhood_labels,
    point_for_label,
    shell_table,
    zero_divisor_weight,
)
from ringline.proj_line import build_line
from ringline.ring_core import RingError, builtin_ring

POINTS = {
    "U": ("h", "a"), "V": ("a", "h"), "W": ("h", "h"),
    "I1S": ("h", "b"), "I2S": ("h", "c"), "I3S": ("h", "d"),
    "I1F": ("h", "e"), "I2F": ("h", "f"), "I3F": ("h", "g"),
    "J1S": ("b", "h"), "J2S": ("c", "h"), "J3S": ("d", "h"),
    "J1F": ("e", "h"), "J2F": ("f", "h"), "J3F": ("g", "h"),
    "S1+": ("e", "d"), "S2+": ("f", "c"), "S3+": ("g", "b"),
    "S1-": ("d", "e"), "S2-": ("c", "f"), "S3-": ("b", "g"),
    "F1+": ("e", "f"), "F2+": ("e", "g"), "F3+": ("f", "g"),
    "F1-": ("f", "e"), "F2-": ("g", "e"), "F3-": ("g", "f"),
}


def test_weights(R):
    assert zero_divisor_weight(R.element("b")) is Weight.SLIM
    assert zero_divisor_weight(R.element("e")) is Weight.FAT
    assert [zero_divisor_weight(R.element(x)) for x in "bcdefg"] == [Weight.SLIM] * 3 + [Weight.FAT] * 3
    for x in "ah":
        with pytest.raises(RingError):
            zero_divisor_weight(R.element(x))


def test_weight_needs_gf2_cubed():
    P = builtin_ring("GF2xGF2")
    with pytest.raises(RingError):
        zero_divisor_weight(P.element("[1,0]"))


@pytest.mark.parametrize("label,coords", list(POINTS.items()))
def test_label_bijection(line, label, coords):
    p = line.point(*coords)
    assert p.rep == (line.ring.index(coords[0]), line.ring.index(coords[1]))
    assert str(label_point(line, p)) == label
    assert point_for_label(line, label) == p


def test_labels_total_and_injective(line):
    labels = labelled_points(line)
    assert len(labels) == 27 == len(set(labels.values()))
    assert set(labels) == set(POINTS)


def test_label_parse_roundtrip():
    for text in POINTS:
        assert str(PointLabel.parse(text)) == text
    lab = PointLabel.parse("I2S")
    assert (lab.layer, lab.series, lab.weight, lab.index, lab.sign) == (Layer.INNER, "I", Weight.SLIM, 2, None)
    with pytest.raises(RingError):
        PointLabel.parse("K1S")


def test_swap_flips_sign(line):
    for label in POINTS:
        lab = PointLabel.parse(label)
        if lab.layer is not Layer.OUTER:
            continue
        a, b = POINTS[label]
        swapped = label_point(line, line.point(b, a))
        assert (swapped.series, swapped.index) == (lab.series, lab.index)
        assert swapped.sign != lab.sign


def test_sign_rule_conjecture(line):
    # '+' iff (S) the fat entry comes first, (F) the first entry's zero slot is later
    ring = line.ring
    for label, (a, b) in POINTS.items():
        lab = PointLabel.parse(label)
        if lab.layer is not Layer.OUTER:
            continue
        ca, cb = ring.coords[ring.index(a)], ring.coords[ring.index(b)]
        if lab.series == "S":
            plus = sum(ca) == 2
        else:
            plus = ca.index(0) > cb.index(0)
        assert (lab.sign == "+") == plus, label


def test_labels_need_gf2_cubed():
    L = build_line(builtin_ring("GF2xGF2"))
    with pytest.raises(RingError):
        label_point(L, L.points[0])


def test_census(line):
    c = layer_census(line)
    assert sum(n for k, n in c.items() if k[0] is Layer.NUCLEUS) == 3
    assert sum(n for k, n in c.items() if k[0] is Layer.INNER) == 12
    assert sum(n for k, n in c.items() if k[0] is Layer.OUTER) == 12
    for s in "IJ":
        for w in Weight:
            assert c[(Layer.INNER, s, w, None)] == 3
    for s in "SF":
        assert c[(Layer.OUTER, s, None, "+")] + c[(Layer.OUTER, s, None, "-")] == 6


@pytest.mark.parametrize("name", list(golden.TABLES))
def test_golden_tables(line, name):
    rows, cols, ref = golden.TABLES[name]
    assert named_table(line, name).as_dict() == ref


def test_table_cells(line):
    assert named_table(line, "inner").cell("I1S", "J2S") == "+"
    assert named_table(line, "outer").cell("F1+", "S2+") == "+"
    assert set(named_table(line, "nucleus-inner").cells[2]) == {"-"}
    assert set(named_table(line, "nucleus-inner").cells[1][:6]) == {"+"}


def test_shell_table_unknown_label(line):
    with pytest.raises(RingError):
        shell_table(line, ["U"], ["X9"])


def test_render_layout(line):
    text = named_table(line, "nucleus-inner").render().splitlines()
    assert text[0].split()[1:] == list(golden.INNER_ORDER)
    assert text[2].split() == ["U", "|"] + list("------++++++")


@pytest.mark.parametrize("point,want", [
    ("U", {"I", "S", "F"}), ("V", {"J", "S", "F"}), ("W", {"I", "J", "F"}),
])
def test_uvw_neighbourhoods(line, point, want):
    got = neighbourhood_labels(line, point)
    expected = {lab for lab in POINTS if lab[0] in want and lab not in "UVW"}
    assert got == expected


def test_cross_shell_coupling(line):
    t = named_table(line, "cross")
    for r, row in zip(t.rows, t.cells):
        counts = (row[:6].count("+"), row[6:].count("+"))
        if r.startswith("F"):
            assert counts == (2, 2)
        else:
            assert sorted(counts) == [1, 3]

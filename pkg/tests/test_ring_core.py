import itertools

import numpy as np
import pytest

from ringline import golden
from ringline.ring_core import (
    ElementClass,
    FiniteRing,
    RingAxiomError,
    RingError,
    RingMismatchError,
    RingSpecError,
    builtin_ring,
    characteristic,
    check_axioms,
    classify_element,
    direct_product,
    make_gf,
    product_coordinates,
    ring_from_spec,
    units,
    zero_divisors,
)

R_CIRCLE_SPEC = """\
# subring {a, b, g, h} of GF(2)^3
elements: a b g h
add:
a b g h
b a h g
g h a b
h g b a
mul:
a a a a
a b a b
a a g g
a b g h
zero: a
one: h
"""

# 2 * (1 + 1) = 2 but 2*1 + 2*1 = 1
BAD_SPEC = """\
elements: 0 1 2
add:
0 1 2
1 2 0
2 0 1
mul:
0 0 0
0 1 2
0 2 2
zero: 0
one: 1
"""


def names(elems):
    return {x.name for x in elems}


def test_gf2():
    F = make_gf(2)
    assert F.size == 2
    assert F.add(F.one, F.one) == F.zero
    assert names(units(F)) == {"1"}


def test_gf3_square_of_two():
    F = make_gf(3)
    two = F.element("2")
    assert (two * two).name == "1"


@pytest.mark.parametrize("p", [0, 1, 4, 9, 15, 101])
def test_make_gf_rejects(p):
    with pytest.raises(RingError):
        make_gf(p)


def test_product_size_and_units(R):
    assert R.size == 8
    assert names(units(R)) == {"h"}


def test_product_table_spot_checks(R):
    e, c, f, g, d = (R.element(x) for x in "ecfgd")
    assert (e + c).name == "b"
    assert (f * g).name == "d"
    assert (d + e).name == "h"
    assert (e * f).name == "b"


def test_neg_is_identity_in_char_2(R):
    g = R.element("g")
    assert (-g) == g
    # confirm from the add table: g + g = 0
    assert R.add(g.index, g.index) == R.zero


def test_tables_match_reference(R):
    for table, ref in ((R.add_table, golden.RING_ADD), (R.mul_table, golden.RING_MUL)):
        rows = golden.parse(ref)
        for x, y in itertools.product(R.names, repeat=2):
            assert R.names[table[R.index(x), R.index(y)]] == rows[x][R.index(y)]


def test_single_factor_product_is_the_factor(gf2):
    P = direct_product([gf2])
    assert P.names == gf2.names
    assert (P.add_table == gf2.add_table).all() and (P.mul_table == gf2.mul_table).all()


def test_product_errors(gf2):
    with pytest.raises(RingError):
        direct_product([])
    with pytest.raises(RingError):
        direct_product([gf2] * 13)


def test_product_mixed_radix_order():
    P = builtin_ring("GF2xGF3")
    assert P.coords == tuple(itertools.product(range(2), range(3)))
    assert P.names[P.one] == "[1,1]"


def test_classify(R):
    assert classify_element(R.element("h")) is ElementClass.UNIT
    assert classify_element(R.element("e")) is ElementClass.ZERO_DIVISOR
    assert classify_element(R.element("a")) is ElementClass.ZERO


def test_zero_divisor_conventions(R):
    assert len(zero_divisors(R, include_zero=True)) == 7
    assert names(zero_divisors(R, include_zero=False)) == set("bcdefg")


@pytest.mark.parametrize("name,expected", [("R_triangle", 2), ("GF3", 3), ("GF2xGF2", 2), ("GF2xGF3", 6)])
def test_characteristic(name, expected):
    assert characteristic(builtin_ring(name)) == expected


@pytest.mark.parametrize("x,coords", [("e", [1, 1, 0]), ("a", [0, 0, 0]), ("h", [1, 1, 1]), ("d", [0, 0, 1])])
def test_product_coordinates(R, x, coords):
    assert [int(c.name) for c in product_coordinates(R.element(x))] == coords


def test_product_coordinates_needs_product():
    with pytest.raises(RingError):
        product_coordinates(make_gf(3).element("1"))


def test_cross_ring_rejected(R, gf2):
    with pytest.raises(RingMismatchError):
        R.element("a") + gf2.element("1")
    with pytest.raises(RingMismatchError):
        R.element("a") * gf2.element("1")


def test_spec_product():
    P = ring_from_spec("# the 8-element ring\nproduct GF2 GF2 GF2\n")
    assert P.size == 8 and P.names == tuple("abcdefgh")


def test_spec_explicit_tables():
    S = ring_from_spec(R_CIRCLE_SPEC)
    assert S.names == ("a", "b", "g", "h")
    assert S.names[S.one] == "h"
    assert check_axioms(S) == []


def test_spec_axiom_violation_names_witness():
    with pytest.raises(RingAxiomError) as exc:
        ring_from_spec(BAD_SPEC)
    assert ("distributivity", ("2", "1", "1")) in exc.value.violations
    assert "distributivity" in str(exc.value)


def test_non_associative_table_reported():
    # commutative magma with identity 0 that is not associative
    add = [[0, 1, 2], [1, 0, 0], [2, 0, 1]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    with pytest.raises(RingAxiomError) as exc:
        FiniteRing(add, mul, 0, 1)
    kinds = {ax for ax, _ in exc.value.violations}
    assert "additive associativity" in kinds
    witness = next(w for ax, w in exc.value.violations if ax == "additive associativity")
    assert len(witness) == 3


@pytest.mark.parametrize("text,line,col", [
    ("", 1, 1),
    ("product GF2 GF4", 1, 13),
    ("product", 1, 8),
    ("elements: a b\nadd:\na b\nb x\n", 4, 3),
    ("elements: a b\nadd:\na b\n", 4, 1),
    ("frobnicate", 1, 1),
    ("elements: a b\nadd:\na b\nb a\nmul:\na a\na b\nzero: a\n", 8, 1),
])
def test_spec_parse_errors(text, line, col):
    with pytest.raises(RingSpecError) as exc:
        ring_from_spec(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_ring_is_read_only(R):
    with pytest.raises(ValueError):
        R.add_table[0, 0] = 1


def test_product_units_componentwise():
    P = builtin_ring("GF3xGF2xGF3")
    for x in P:
        comps = product_coordinates(x)
        assert (classify_element(x) is ElementClass.UNIT) == all(
            c.ring.is_unit(c.index) for c in comps)
        is_zd = classify_element(x) is not ElementClass.UNIT
        assert is_zd == any(c.index == c.ring.zero for c in comps)


def test_product_at_size_cap_builds():
    P = direct_product([make_gf(2)] * 12)
    assert P.size == 4096
    assert len(units(P)) == 1
    assert np.array_equal(P.add_table, P.add_table.T)

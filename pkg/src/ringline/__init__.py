"""Exact finite commutative rings, their ideals, and projective ring lines."""

from .ring_core import (
    ElementClass,
    FiniteRing,
    RingAxiomError,
    RingElement,
    RingError,
    RingMismatchError,
    RingSpecError,
    add,
    builtin_ring,
    characteristic,
    classify_element,
    direct_product,
    make_gf,
    mul,
    neg,
    product_coordinates,
    r_triangle,
    ring_from_spec,
    sub,
    units,
    zero_divisors,
)
from .ideals import (
    Ideal,
    QuotientRing,
    RingMap,
    all_ideals,
    find_isomorphism,
    is_local,
    jacobson_radical,
    maximal_ideals,
    principal_ideal,
    quotient,
    subrings,
)
from .proj_line import (
    PairMatrix,
    ProjectiveLine,
    ProjectivePoint,
    build_line,
    common_neighbourhood,
    det2,
    is_admissible,
    is_distant,
    is_invertible_2x2,
    neighbourhood,
    transitivity_counterexample,
)
from .classify import (
    Layer,
    PointLabel,
    ShellTable,
    Weight,
    label_point,
    layer_census,
    point_for_label,
    shell_table,
    zero_divisor_weight,
)

__version__ = "0.1.0"

"""Transcribed reference data for GF(2)^3 and its projective line.

``RING_ADD`` / ``RING_MUL`` are the operation tables over the letters a..h.
In the line tables '+' marks a distant pair and '-' a neighbour pair; row and
column orders are the published ones, see :data:`TABLES`.
"""

RING_ADD = """
a a b c d e f g h
b b a e f c d h g
c c e a g b h d f
d d f g a h b c e
e e c b h a g f d
f f d h b g a e c
g g h d c f e a b
h h g f e d c b a
"""

RING_MUL = """
a a a a a a a a a
b a b a a b b a b
c a a c a c a c c
d a a a d a d d d
e a b c a e b c e
f a b a d b f d f
g a a c d c d g g
h a b c d e f g h
"""

INNER_ORDER = ("I1S", "I2S", "I3S", "I1F", "I2F", "I3F",
               "J1S", "J2S", "J3S", "J1F", "J2F", "J3F")
OUTER_ORDER = ("F1+", "F2+", "F3+", "F1-", "F2-", "F3-",
               "S1+", "S2+", "S3+", "S1-", "S2-", "S3-")
NUCLEUS_ORDER = ("U", "V", "W")

INNER = """
I1S - - - - - + - + + - - +
I2S - - - - + - + - + - + -
I3S - - - + - - + + - + - -
I1F - - + - - - - - + - - -
I2F - + - - - - - + - - - -
I3F + - - - - - + - - - - -
J1S - + + - - + - - - - - +
J2S + - + - + - - - - - + -
J3S + + - + - - - - - + - -
J1F - - + - - - - - + - - -
J2F - + - - - - - + - - - -
J3F + - - - - - + - - - - -
"""

OUTER = """
F1+ - - + - + - - + - + - -
F2+ - - - + - + - - + + - -
F3+ + - - - + - - - + - + -
F1- - + - - - + + - - - + -
F2- + - + - - - + - - - - +
F3- - + - + - - - + - - - +
S1+ - - - + + - - - - + - -
S2+ + - - - - + - - - - + -
S3+ - + + - - - - - - - - +
S1- + + - - - - + - - - - -
S2- - - + + - - - + - - - -
S3- - - - - + + - - + - - -
"""

CROSS = """
F1+ - + - - - + - - + - - +
F2+ + - - - + - - - + - + -
F3+ + - - + - - - + - + - -
F1- - - + - - + - + - - - +
F2- - - + - + - + - - - + -
F3- - + - + - - + - - + - -
S1+ - - - + - - - - + - + +
S2+ - - - - + - - + - + - +
S3+ - - - - - + + - - + + -
S1- - - + - + + - - - + - -
S2- - + - + - + - - - - + -
S3- + - - + + - - - - - - +
"""

NUCLEUS_INNER = """
U - - - - - - + + + + + +
V + + + + + + - - - - - -
W - - - - - - - - - - - -
"""

NUCLEUS_OUTER = """
U - - - - - - - - - - - -
V - - - - - - - - - - - -
W - - - - - - + + + + + +
"""


def parse(text: str) -> dict[str, list[str]]:
    rows = {}
    for line in text.strip().splitlines():
        label, *cells = line.split()
        rows[label] = cells
    return rows


# name -> (row labels, column labels, rows)
TABLES = {
    "inner": (INNER_ORDER, INNER_ORDER, parse(INNER)),
    "outer": (OUTER_ORDER, OUTER_ORDER, parse(OUTER)),
    "cross": (OUTER_ORDER, INNER_ORDER, parse(CROSS)),
    "nucleus-inner": (NUCLEUS_ORDER, INNER_ORDER, parse(NUCLEUS_INNER)),
    "nucleus-outer": (NUCLEUS_ORDER, OUTER_ORDER, parse(NUCLEUS_OUTER)),
}

"""Published reference values, transcribed as data.

Nothing here feeds the computations; these fixtures are the expected side
of the certificate checks.  Scalars use the text grammar of
:mod:`g2skt.scalars` and label tuples may be given in any order (the forms
module normalizes signs on load).
"""

from __future__ import annotations

import re
from fractions import Fraction

# -- real bracket table --------------------------------------------------------

BRACKETS_REAL_TEXT = """
[b1,b2]=-b4 [b1,b3]=-2b7 [b1,b4]=b2 [b1,b5]=-b6 [b1,b6]=b5 [b1,b7]=2b3
[b1,b8]=b3 [b1,b9]=b7 [b1,b10]=b5+b11 [b1,b11]=b6-b10 [b1,b13]=b14 [b1,b14]=-b13
[b2,b3]=-b5-b11 [b2,b4]=-b1 [b2,b5]=-b9 [b2,b6]=b8 [b2,b7]=-b10 [b2,b8]=-2b10
[b2,b9]=b5 [b2,b10]=2b8 [b2,b11]=b3+b9 [b2,b12]=b13 [b2,b13]=-b12 [b3,b4]=-b10
[b3,b5]=b14 [b3,b6]=-b13 [b3,b7]=-2b1 [b3,b8]=-b1 [b3,b10]=b4 [b3,b11]=-b2-b14
[b3,b12]=-b7 [b3,b13]=b6 [b3,b14]=-b5 [b4,b5]=b7-b8 [b4,b6]=-b3-b9 [b4,b7]=-b5-b11
[b4,b8]=b5+b11 [b4,b9]=b6-b10 [b4,b10]=-b3 [b4,b11]=b7-b8 [b4,b12]=-b14 [b4,b14]=b12
[b5,b6]=-2b1-2b12 [b5,b7]=-b13 [b5,b8]=-b4-b13 [b5,b9]=-b2 [b5,b10]=-b1-b12 [b5,b12]=b6
[b5,b13]=b7 [b5,b14]=b3 [b6,b7]=-b14 [b6,b8]=b2 [b6,b9]=-b4-b13 [b6,b11]=-b1-b12
[b6,b12]=-b5 [b6,b13]=-b3 [b6,b14]=b7 [b7,b9]=-b1 [b7,b10]=-b2 [b7,b11]=-b4-b13
[b7,b12]=b3 [b7,b13]=-b5 [b7,b14]=-b6 [b8,b9]=-b1-b12 [b8,b10]=-2b2 [b8,b11]=-b13
[b8,b12]=b3+b9 [b8,b13]=b11 [b8,b14]=-b10 [b9,b10]=-b4-b13 [b9,b11]=-b2-b14 [b9,b12]=b7-b8
[b9,b13]=-b6+b10 [b9,b14]=b5+b11 [b10,b11]=-b12 [b10,b12]=b11 [b10,b13]=-b3-b9 [b10,b14]=b8
[b11,b12]=-b10 [b11,b13]=-b8 [b11,b14]=-b3-b9 [b12,b13]=-2b14 [b12,b14]=2b13 [b13,b14]=-2b12
"""

_REL = re.compile(r"\[b(\d+),b(\d+)\]=(\S+)")
_TERM = re.compile(r"([+-]?)(\d*)b(\d+)")


def parse_real_brackets(text: str) -> dict[tuple[int, int], dict[int, Fraction]]:
    out = {}
    for i, j, rhs in _REL.findall(text):
        terms = {}
        for sign, coef, k in _TERM.findall(rhs):
            terms[int(k)] = Fraction(int(coef or 1) * (-1 if sign == "-" else 1))
        out[(int(i), int(j))] = terms
    return out


def brackets_real() -> dict[tuple[int, int], dict[int, Fraction]]:
    return parse_real_brackets(BRACKETS_REAL_TEXT)


# -- complexified bracket table --------------------------------------------------

BRACKETS_COMPLEX: dict[tuple[str, str], dict[str, str]] = {
    ("H1", "E1"): {"E1": "i"},
    ("H1", "E2"): {"E2": "i"},
    ("H1", "E3"): {"E3": "i"},
    ("H1", "E4"): {"E4": "i"},
    ("H1", "E5"): {"E5": "2*i"},
    ("H1", "E1bar"): {"E1bar": "-i"},
    ("H1", "E2bar"): {"E2bar": "-i"},
    ("H1", "E3bar"): {"E3bar": "-i"},
    ("H1", "E4bar"): {"E4bar": "-i"},
    ("H1", "E5bar"): {"E5bar": "-2*i"},
    ("H2", "E1"): {"E1": "-sqrt3*i"},
    ("H2", "E2"): {"E2": "sqrt3*i"},
    ("H2", "E3"): {"E3": "-1/3*sqrt3*i"},
    ("H2", "E4"): {"E4": "1/3*sqrt3*i"},
    ("H2", "E6"): {"E6": "2/3*sqrt3*i"},
    ("H2", "E1bar"): {"E1bar": "sqrt3*i"},
    ("H2", "E2bar"): {"E2bar": "-sqrt3*i"},
    ("H2", "E3bar"): {"E3bar": "1/3*sqrt3*i"},
    ("H2", "E4bar"): {"E4bar": "-1/3*sqrt3*i"},
    ("H2", "E6bar"): {"E6bar": "-2/3*sqrt3*i"},
    ("E1", "E2"): {"E5": "2"},
    ("E1", "E6"): {"E3": "-2*i"},
    ("E1", "E1bar"): {"H1": "2*i", "H2": "-2*sqrt3*i"},
    ("E1", "E3bar"): {"E6bar": "2*i"},
    ("E1", "E5bar"): {"E2bar": "-2"},
    ("E2", "E2bar"): {"H1": "2*i", "H2": "2*sqrt3*i"},
    ("E2", "E4bar"): {"E6": "2*i"},
    ("E2", "E5bar"): {"E1bar": "2"},
    ("E2", "E6bar"): {"E4": "-2*i"},
    ("E3", "E4"): {"E5": "-6"},
    ("E3", "E6"): {"E4": "4*i"},
    ("E3", "E1bar"): {"E6": "2*i"},
    ("E3", "E3bar"): {"H1": "6*i", "H2": "-2*sqrt3*i"},
    ("E3", "E4bar"): {"E6bar": "-4*i"},
    ("E3", "E5bar"): {"E4bar": "2"},
    ("E3", "E6bar"): {"E1": "-6*i"},
    ("E4", "E6"): {"E2": "-6*i"},
    ("E4", "E2bar"): {"E6bar": "2*i"},
    ("E4", "E3bar"): {"E6": "-4*i"},
    ("E4", "E4bar"): {"H1": "6*i", "H2": "2*sqrt3*i"},
    ("E4", "E5bar"): {"E3bar": "-2"},
    ("E4", "E6bar"): {"E3": "4*i"},
    ("E5", "E1bar"): {"E2": "2"},
    ("E5", "E2bar"): {"E1": "-2"},
    ("E5", "E3bar"): {"E4": "-2"},
    ("E5", "E4bar"): {"E3": "2"},
    ("E5", "E5bar"): {"H1": "4*i"},
    ("E6", "E2bar"): {"E4bar": "-2*i"},
    ("E6", "E3bar"): {"E1bar": "-6*i"},
    ("E6", "E4bar"): {"E3bar": "4*i"},
    ("E6", "E6bar"): {"H2": "4*sqrt3*i"},
    ("E1bar", "E2bar"): {"E5bar": "2"},
    ("E1bar", "E6bar"): {"E3bar": "2*i"},
    ("E3bar", "E4bar"): {"E5bar": "-6"},
    ("E3bar", "E6bar"): {"E4bar": "-4*i"},
    ("E4bar", "E6bar"): {"E2bar": "6*i"},
}

# -- roots and root vectors (values on b1, b12) ----------------------------------

ROOTS: tuple[tuple[str, str], ...] = (
    ("i", "i"),
    ("i", "-2*i"),
    ("i", "0"),
    ("i", "-i"),
    ("2*i", "-i"),
    ("0", "-i"),
)

# root vector E_j = sum of coeff * b_k
ROOT_VECTORS: tuple[dict[int, str], ...] = (
    {5: "1", 6: "i"},
    {14: "1", 13: "i"},
    {2: "2", 14: "1", 4: "2*i", 13: "i"},
    {5: "-1", 11: "-2", 6: "i", 10: "-2*i"},
    {3: "1", 7: "i"},
    {7: "1", 8: "-2", 3: "i", 9: "2*i"},
)

# values on H1, H2
ROOT_VALUES_ON_H: dict[int, tuple[str, str]] = {1: ("i", "-sqrt3*i")}

# -- Samelson structure on the real basis (J b_k) ---------------------------------

SAMELSON_REAL: dict[int, dict[int, str]] = {
    1: {1: "-1/3*sqrt3", 12: "-2/3*sqrt3"},
    2: {4: "-1"},
    3: {7: "-1"},
    4: {2: "1"},
    5: {6: "-1"},
    6: {5: "1"},
    7: {3: "1"},
    8: {3: "1", 9: "1"},
    9: {7: "1", 8: "-1"},
    10: {5: "1", 11: "1"},
    11: {6: "1", 10: "-1"},
    12: {1: "2/3*sqrt3", 12: "1/3*sqrt3"},
    13: {14: "1"},
    14: {13: "-1"},
}

# -- Killing form ------------------------------------------------------------------

KILLING_COMPLEX: dict[tuple[str, str], int] = {
    ("H1", "H1"): -16,
    ("H2", "H2"): -16,
    ("E1", "E1bar"): -32,
    ("E2", "E2bar"): -32,
    ("E5", "E5bar"): -32,
    ("E3", "E3bar"): -96,
    ("E4", "E4bar"): -96,
    ("E6", "E6bar"): -96,
}

KILLING_B1_B1 = -16

# -- real basis in terms of the complex basis ---------------------------------------

REAL_IN_COMPLEX: dict[int, dict[str, str]] = {
    1: {"H1": "1"},
    12: {"H1": "-1/2", "H2": "-1/2*sqrt3"},
    2: {"E3": "1/4", "E3bar": "1/4", "E2": "-1/4", "E2bar": "-1/4"},
    3: {"E5": "1/2", "E5bar": "1/2"},
    4: {"E3": "-1/4*i", "E3bar": "1/4*i", "E2": "1/4*i", "E2bar": "-1/4*i"},
    5: {"E1": "1/2", "E1bar": "1/2"},
    6: {"E1": "-1/2*i", "E1bar": "1/2*i"},
    7: {"E5": "-1/2*i", "E5bar": "1/2*i"},
    8: {"E6": "-1/4", "E6bar": "-1/4", "E5": "-1/4*i", "E5bar": "1/4*i"},
    9: {"E5": "-1/4", "E5bar": "-1/4", "E6": "-1/4*i", "E6bar": "1/4*i"},
    10: {"E4": "1/4*i", "E4bar": "-1/4*i", "E1": "-1/4*i", "E1bar": "1/4*i"},
    11: {"E4": "-1/4", "E4bar": "-1/4", "E1": "-1/4", "E1bar": "-1/4"},
    13: {"E2": "-1/2*i", "E2bar": "1/2*i"},
    14: {"E2": "1/2", "E2bar": "1/2"},
}

# -- Hermitian family on the real basis: (i, j) -> {lambda index: coeff} --------------

HERMITIAN_COMPONENTS: dict[tuple[int, int], dict[int, str]] = {
    (1, 1): {0: "1"},
    (12, 12): {0: "1"},
    (1, 12): {0: "-1/2"},
    (2, 2): {2: "1/8", 3: "1/8"},
    (2, 14): {2: "-1/4"},
    (3, 3): {5: "1/2"},
    (3, 9): {5: "-1/4"},
    (4, 4): {2: "1/8", 3: "1/8"},
    (4, 13): {2: "-1/4"},
    (5, 5): {1: "1/2"},
    (5, 11): {1: "-1/4"},
    (6, 6): {1: "1/2"},
    (6, 10): {1: "1/4"},
    (7, 7): {5: "1/2"},
    (7, 8): {5: "1/4"},
    (8, 8): {5: "1/8", 6: "1/8"},
    (9, 9): {5: "1/8", 6: "1/8"},
    (10, 10): {1: "1/8", 4: "1/8"},
    (11, 11): {1: "1/8", 4: "1/8"},
    (13, 13): {2: "1/2"},
    (14, 14): {2: "1/2"},
}

# -- exterior derivative of the dual basis: label -> [(coeff, labels)] ------------------

D_TABLE: dict[str, list[tuple[str, tuple[str, ...]]]] = {
    "H1": [
        ("-2*i", ("E1", "E1bar")),
        ("-2*i", ("E2", "E2bar")),
        ("-6*i", ("E3", "E3bar")),
        ("-6*i", ("E4", "E4bar")),
        ("-4*i", ("E5", "E5bar")),
    ],
    "H2": [
        ("2*sqrt3*i", ("E1", "E1bar")),
        ("-2*sqrt3*i", ("E2", "E2bar")),
        ("2*sqrt3*i", ("E3", "E3bar")),
        ("-2*sqrt3*i", ("E4", "E4bar")),
        ("-4*sqrt3*i", ("E6", "E6bar")),
    ],
    "E1": [
        ("-i", ("H1", "E1")),
        ("sqrt3*i", ("H2", "E1")),
        ("6*i", ("E3", "E6bar")),
        ("2", ("E5", "E2bar")),
    ],
    "E2": [
        ("-i", ("H1", "E2")),
        ("-sqrt3*i", ("H2", "E2")),
        ("6*i", ("E4", "E6")),
        ("-2", ("E5", "E1bar")),
    ],
    "E3": [
        ("-i", ("H1", "E3")),
        ("1/3*sqrt3*i", ("H2", "E3")),
        ("2*i", ("E1", "E6")),
        ("-4*i", ("E4", "E6bar")),
        ("-2", ("E5", "E4bar")),
    ],
    "E4": [
        ("-i", ("H1", "E4")),
        ("-1/3*sqrt3*i", ("H2", "E4")),
        ("2*i", ("E2", "E6bar")),
        ("-4*i", ("E3", "E6")),
        ("2", ("E5", "E3bar")),
    ],
    "E5": [
        ("-2*i", ("H1", "E5")),
        ("-2", ("E1", "E2")),
        ("6", ("E3", "E4")),
    ],
    "E6": [
        ("-2/3*sqrt3*i", ("H2", "E6")),
        ("-2*i", ("E2", "E4bar")),
        ("-2*i", ("E3", "E1bar")),
        ("4*i", ("E4", "E3bar")),
    ],
    "E1bar": [
        ("i", ("H1", "E1bar")),
        ("-sqrt3*i", ("H2", "E1bar")),
        ("-2", ("E2", "E5bar")),
        ("6*i", ("E6", "E3bar")),
    ],
    "E2bar": [
        ("i", ("H1", "E2bar")),
        ("sqrt3*i", ("H2", "E2bar")),
        ("2", ("E1", "E5bar")),
        ("-6*i", ("E4bar", "E6bar")),
    ],
    "E3bar": [
        ("i", ("H1", "E3bar")),
        ("-1/3*sqrt3*i", ("H2", "E3bar")),
        ("2", ("E4", "E5bar")),
        ("-4*i", ("E6", "E4bar")),
        ("-2*i", ("E1bar", "E6bar")),
    ],
    "E4bar": [
        ("i", ("H1", "E4bar")),
        ("1/3*sqrt3*i", ("H2", "E4bar")),
        ("-2", ("E3", "E5bar")),
        ("2*i", ("E6", "E2bar")),
        ("4*i", ("E3bar", "E6bar")),
    ],
    "E5bar": [
        ("2*i", ("H1", "E5bar")),
        ("-2", ("E1bar", "E2bar")),
        ("6", ("E3bar", "E4bar")),
    ],
    "E6bar": [
        ("2/3*sqrt3*i", ("H2", "E6bar")),
        ("-2*i", ("E1", "E3bar")),
        ("4*i", ("E3", "E4bar")),
        ("-2*i", ("E4", "E2bar")),
    ],
}

# -- torsion 3-form c and its derivative: [({lambda index: coeff}, labels)] ---------------

TORSION_C: list[tuple[dict[int, str], tuple[str, ...]]] = [
    ({0: "-2*i"}, ("H1", "E1", "E1bar")),
    ({0: "-2*i"}, ("H1", "E2", "E2bar")),
    ({0: "-6*i"}, ("H1", "E3", "E3bar")),
    ({0: "-6*i"}, ("H1", "E4", "E4bar")),
    ({0: "-4*i"}, ("H1", "E5", "E5bar")),
    ({0: "2*sqrt3*i"}, ("H2", "E1", "E1bar")),
    ({0: "-2*sqrt3*i"}, ("H2", "E2", "E2bar")),
    ({0: "2*sqrt3*i"}, ("H2", "E3", "E3bar")),
    ({0: "-2*sqrt3*i"}, ("H2", "E4", "E4bar")),
    ({0: "-4*sqrt3*i"}, ("H2", "E6", "E6bar")),
    ({1: "-6*i", 3: "2*i", 6: "-2*i"}, ("E3", "E1bar", "E6bar")),
    ({1: "-2", 2: "-2", 5: "2"}, ("E5", "E1bar", "E2bar")),
    ({1: "-2", 2: "-2", 5: "2"}, ("E1", "E2", "E5bar")),
    ({1: "6*i", 3: "-2*i", 6: "2*i"}, ("E1", "E6", "E3bar")),
    ({2: "-6*i", 4: "2*i", 6: "2*i"}, ("E4", "E6", "E2bar")),
    ({2: "6*i", 4: "-2*i", 6: "-2*i"}, ("E2", "E4bar", "E6bar")),
    ({3: "4*i", 4: "-4*i", 6: "4*i"}, ("E4", "E3bar", "E6bar")),
    ({3: "2", 4: "2", 5: "-6"}, ("E5", "E3bar", "E4bar")),
    ({3: "2", 4: "2", 5: "-6"}, ("E3", "E4", "E5bar")),
    ({3: "-4*i", 4: "4*i", 6: "-4*i"}, ("E3", "E6", "E4bar")),
]

TORSION_DC: list[tuple[dict[int, str], tuple[str, ...]]] = [
    ({0: "-16", 1: "8", 2: "8", 5: "-8"}, ("E1", "E2", "E1bar", "E2bar")),
    ({0: "48", 1: "-24", 3: "8", 6: "-8"}, ("E1", "E3", "E1bar", "E3bar")),
    ({0: "16", 1: "-8", 2: "-8", 5: "8"}, ("E1", "E5", "E1bar", "E5bar")),
    ({0: "48", 2: "24", 4: "-8", 6: "-8"}, ("E2", "E4", "E2bar", "E4bar")),
    ({0: "16", 1: "-8", 2: "-8", 5: "8"}, ("E2", "E5", "E2bar", "E5bar")),
    ({0: "48", 3: "-8", 4: "56", 5: "-72", 6: "-32"}, ("E3", "E4", "E3bar", "E4bar")),
    ({0: "48", 3: "-8", 4: "-8", 5: "24"}, ("E3", "E5", "E3bar", "E5bar")),
    ({0: "48", 3: "-8", 4: "-8", 5: "24"}, ("E4", "E5", "E4bar", "E5bar")),
    ({0: "-48", 1: "24", 3: "-8", 6: "8"}, ("E1", "E6", "E1bar", "E6bar")),
    ({0: "48", 2: "24", 4: "-8", 6: "-8"}, ("E2", "E6", "E2bar", "E6bar")),
    ({0: "-48", 1: "-72", 3: "56", 4: "-32", 6: "8"}, ("E3", "E6", "E3bar", "E6bar")),
    ({0: "48", 2: "-72", 3: "-32", 4: "56", 6: "-8"}, ("E4", "E6", "E4bar", "E6bar")),
    ({1: "24*i", 2: "24*i", 3: "-8*i", 4: "-8*i"}, ("E2", "E3", "E5bar", "E6bar")),
    ({1: "-24*i", 2: "-24*i", 3: "8*i", 4: "8*i"}, ("E5", "E6", "E2bar", "E3bar")),
    ({2: "-24", 3: "-8", 5: "24", 6: "8"}, ("E3", "E4", "E1bar", "E2bar")),
    ({2: "-24", 3: "-8", 5: "24", 6: "8"}, ("E1", "E2", "E3bar", "E4bar")),
]

# -- general solution of dc = 0 (pinned lambda -> {free lambda: coeff}) -------------------

SKT_SOLUTION: dict[int, dict[int, str]] = {
    0: {3: "1/6", 5: "-1/4", 6: "1/12"},
    1: {3: "2/3", 5: "-1/2", 6: "-1/6"},
    2: {3: "-1/3", 5: "1", 6: "1/3"},
    4: {5: "3/2", 6: "1/2"},
}

# -- SKT metric in (a1, a2, a3): (i, j) -> ((c1, c2, c3), denominator) --------------------

SKT_METRIC: dict[tuple[int, int], tuple[tuple[int, int, int], int]] = {
    (1, 1): ((2, -3, 1), 12),
    (12, 12): ((2, -3, 1), 12),
    (1, 12): ((-2, 3, -1), 24),
    (2, 2): ((2, 3, 1), 24),
    (2, 14): ((1, -3, -1), 12),
    (3, 3): ((0, 1, 0), 2),
    (3, 9): ((0, -1, 0), 4),
    (4, 4): ((2, 3, 1), 24),
    (4, 13): ((1, -3, -1), 12),
    (5, 5): ((4, -3, -1), 12),
    (5, 11): ((-4, 3, 1), 24),
    (6, 6): ((4, -3, -1), 12),
    (6, 10): ((4, -3, -1), 24),
    (7, 7): ((0, 1, 0), 2),
    (7, 8): ((0, 1, 0), 4),
    (8, 8): ((0, 1, 1), 8),
    (9, 9): ((0, 1, 1), 8),
    (10, 10): ((2, 3, 1), 24),
    (11, 11): ((2, 3, 1), 24),
    (13, 13): ((-1, 3, 1), 6),
    (14, 14): ((-1, 3, 1), 6),
}

# -- bi-invariant case ---------------------------------------------------------------------

BIINVARIANT_A = (96, 32, 96)
BIINVARIANT_LAMBDAS = (16, 32, 32, 96, 96, 32, 96)

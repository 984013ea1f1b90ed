"""Hand-transcribed degree-2 and degree-3 family listings.

Each row: name, P support, Q support, index, minimal weight vector.
Monomials are written as strings and converted with ``mono``.
"""

from fractions import Fraction

_MONOS = {
    "x": (1, 0), "y": (0, 1),
    "x2": (2, 0), "xy": (1, 1), "y2": (0, 2),
    "x3": (3, 0), "x2y": (2, 1), "xy2": (1, 2), "y3": (0, 3),
}


def mono(text: str) -> frozenset:
    return frozenset(_MONOS[m] for m in text.split())


def _rows(raw):
    return {
        name: (mono(p), mono(q), Fraction(lam), tuple(wm))
        for name, p, q, lam, wm in raw
    }


DEGREE_2 = _rows([
    ("X_{0,0,0}", "y2 x", "y2 x", -1, (2, 1, 1, 2)),
    ("X_{0,0,2,0,1,1}", "x2", "y2 x", 1, (2, 1, 3, 2)),
])

DEGREE_3 = _rows([
    ("X_{0,0,0}", "y3 x", "y3 x", -1, (3, 1, 1, 3)),
    ("X_{1,0,0}", "y2 x", "y3 xy", -2, (2, 1, 1, 3)),
    ("X_{1,0,1}", "y2 x", "xy2 x2", -3, (2, 1, 1, 4)),
    ("X_{1,0,2}", "y2 x", "x2y", -4, (2, 1, 1, 5)),
    ("X_{1,0,3}", "y2 x", "x3", -5, (2, 1, 1, 6)),
    ("X_{0,0,0,0,1,1}", "y3 xy", "y3 xy", -1, (2, 1, 2, 3)),
    ("X_{0,0,0,1,1,1}", "y3 xy", "xy2 x2", -2, (2, 1, 2, 4)),
    ("X_{0,0,0,2,1,1}", "y3 xy", "x2y", -3, (2, 1, 2, 5)),
    ("X_{0,0,0,3,1,1}", "y3 xy", "x3", -4, (2, 1, 2, 6)),
    ("X_{0,2,0,0,1,1}", "y3 xy", "y", 1, (2, 1, 2, 1)),
    ("X_{0,0,0,0,1,2}", "y3 x2", "y3 x2", -1, (3, 2, 4, 5)),
    ("X_{0,0,0,1,1,2}", "y3 x2", "xy2", -2, (3, 2, 4, 6)),
    ("X_{0,0,0,2,1,2}", "y3 x2", "x2y", -3, (3, 2, 4, 7)),
    ("X_{0,0,0,3,1,2}", "y3 x2", "x3", -4, (3, 2, 4, 8)),
    ("X_{0,1,0,0,1,2}", "y3 x2", "y2", 1, (3, 2, 4, 3)),
    ("X_{0,2,0,0,1,2}", "y3 x2", "y", 3, (3, 2, 4, 1)),
    ("X_{0,2,0,1,1,2}", "y3 x2", "x", 2, (3, 2, 4, 2)),
    ("X_{0,0,1,1,1,1}", "xy2 x2", "xy2 x2", -1, (2, 1, 3, 4)),
    ("X_{0,0,1,2,1,1}", "xy2 x2", "x2y", -2, (2, 1, 3, 5)),
    ("X_{0,0,1,3,1,1}", "xy2 x2", "x3", -3, (2, 1, 3, 6)),
    ("X_{0,1,1,0,1,1}", "xy2 x2", "y2 x", 1, (2, 1, 3, 2)),
    ("X_{0,2,1,0,1,1}", "xy2 x2", "y", 2, (2, 1, 3, 1)),
    ("X_{0,0,2,0,1,1}", "x2y", "y3 xy", 1, (2, 1, 4, 3)),
    ("X_{0,0,3,0,1,1}", "x3", "y3 xy", 2, (2, 1, 5, 3)),
    ("X_{0,0,2,0,1,2}", "x2y", "y3 x2", 1, (3, 2, 6, 5)),
    ("X_{0,0,3,0,1,2}", "x3", "y3 x2", 2, (3, 2, 7, 5)),
    ("X_{1,0,0,0,1,2}", "y2", "y3 x2", -3, (3, 2, 2, 5)),
    ("X_{1,0,1,0,1,2}", "xy", "y3 x2", -2, (3, 2, 3, 5)),
    ("X_{2,0,1,0,1,2}", "x", "y3 x2", -4, (3, 2, 1, 5)),
    ("X_{0,0,2,0,2,1}", "x2y", "y3 x", 1, (3, 1, 5, 3)),
    ("X_{0,0,3,0,2,1}", "x3", "y3 x", 2, (3, 1, 7, 3)),
    ("X_{1,0,1,0,2,1}", "xy", "y3 x", Fraction(-1, 2), (3, 1, 2, 3)),
    ("X_{1,0,2,0,2,1}", "x2", "y3 x", Fraction(1, 2), (3, 1, 4, 3)),
    ("X_{0,0,3,1,1,1}", "x3", "xy2 x2", 1, (2, 1, 5, 4)),
    ("X_{0,1,2,0,1,1}", "x2y", "y2 x", 2, (2, 1, 4, 2)),
    ("X_{0,1,3,0,1,1}", "x3", "y2 x", 3, (2, 1, 5, 2)),
])

# families whose every member has a common factor in P and Q
DEGREE_3_NOT_COPRIME = {
    "X_{0,0,0,0,1,1}", "X_{0,0,0,2,1,1}", "X_{0,2,0,0,1,1}", "X_{0,0,1,1,1,1}",
    "X_{0,0,1,2,1,1}", "X_{0,0,1,3,1,1}", "X_{0,0,2,0,1,1}", "X_{0,0,3,1,1,1}",
}

# systems marked for removal because their index is zero
REMOVED_2 = [("xy", "y2 x", (2, 1, 2, 2))]
REMOVED_3 = [
    ("y3 xy", "y2 x", (2, 1, 2, 2)),
    ("y3 x2", "xy", (3, 2, 4, 4)),
    ("xy2 x2", "y3 xy", (2, 1, 3, 3)),
    ("xy2", "y3 x2", (3, 2, 5, 5)),
    ("xy2", "y3 x", (3, 1, 3, 3)),
    ("x2y", "xy2 x2", (2, 1, 4, 4)),
]

# supports with t = 0 and a single Q monomial that the classical listing omits
MISSING_2 = [("y2 x", "xy"), ("y2 x", "x2")]

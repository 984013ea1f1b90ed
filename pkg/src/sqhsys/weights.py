"""Weight vectors, index and the structural predicates built on them.

A weight vector ``(s1, s2, d1, d2)`` makes ``x' = P``, ``y' = Q`` satisfy
``P(a^s1 x, a^s2 y) = a^(s1+d1-1) P(x, y)`` and the analogous identity for
``Q`` with ``d2``.  Monomial by monomial this is a linear condition on the
exponents; :func:`weight_residuals` reports its defect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .poly import Monomial, Polynomial, VectorField


class StructureError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class WeightVector:
    s1: int
    s2: int
    d1: int
    d2: int

    def __post_init__(self):
        for name in ("s1", "s2", "d1", "d2"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.s1, self.s2, self.d1, self.d2)

    def __str__(self) -> str:
        return "({}, {}, {}, {})".format(*self.as_tuple())


TermLocation = tuple[str, int, int]


def _require_components(field: VectorField) -> None:
    if field.p.is_zero() or field.q.is_zero():
        raise StructureError("empty component")


def p_residual(i: int, j: int, w: WeightVector) -> int:
    return (i - 1) * w.s1 + j * w.s2 - (w.d1 - 1)


def q_residual(i: int, j: int, w: WeightVector) -> int:
    return i * w.s1 + (j - 1) * w.s2 - (w.d2 - 1)


def weight_residuals(field: VectorField, w: WeightVector) -> list[tuple[TermLocation, int]]:
    _require_components(field)
    out = [(("P", i, j), p_residual(i, j, w)) for (i, j) in field.p.support()]
    out += [(("Q", i, j), q_residual(i, j, w)) for (i, j) in field.q.support()]
    return sorted(out)


def is_weight_vector(field: VectorField, w: WeightVector) -> bool:
    return all(r == 0 for _, r in weight_residuals(field, w))


def index_of(w: WeightVector) -> Fraction | None:
    """The index ``(d1 - d2) / (s1 - s2)``; ``None`` when ``s1 == s2``."""
    if w.s1 == w.s2:
        return None
    return Fraction(w.d1 - w.d2, w.s1 - w.s2)


def format_index(lam: Fraction | None) -> str:
    if lam is None:
        return "undefined"
    return f"{lam.numerator}/{lam.denominator}"


@dataclass(frozen=True)
class StructuralReport:
    no_constant_terms: bool
    at_most_one_monomial_per_homogeneous_part: bool
    gcd_divides_d_minus_1: bool
    unique_exponent_per_degree: bool
    offending_terms: tuple[TermLocation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return (
            self.no_constant_terms
            and self.at_most_one_monomial_per_homogeneous_part
            and self.gcd_divides_d_minus_1
            and self.unique_exponent_per_degree
        )


def structural_report(field: VectorField, w: WeightVector) -> StructuralReport:
    # Constant terms can never satisfy the weight relations; they are reported
    # through the flag instead of being rejected.
    if any(r != 0 for (_, i, j), r in weight_residuals(field, w) if (i, j) != (0, 0)):
        raise StructureError("not a weight vector")
    offending: set[TermLocation] = set()

    no_const = True
    for tag, poly in field.components():
        if (0, 0) in poly.support():
            no_const = False
            offending.add((tag, 0, 0))

    one_per_slice = True
    for tag, poly in field.components():
        by_degree: dict[int, list] = {}
        for i, j in poly.support():
            by_degree.setdefault(i + j, []).append((tag, i, j))
        for locs in by_degree.values():
            if len(locs) > 1:
                one_per_slice = False
                offending.update(locs)

    g = gcd(w.s1, w.s2)
    gcd_ok = (w.d1 - 1) % g == 0 and (w.d2 - 1) % g == 0
    if not gcd_ok:
        offending.update(loc for loc, _ in weight_residuals(field, w))

    # Within one homogeneous degree, a P-term x^i y^(deg-i) and a Q-term
    # x^(i-1-lam) y^(deg-i+1+lam) are tied to a single exponent i solving
    # (i-1-lam)*s1 + (deg-i)*s2 = T.
    unique_ok = True
    lam = index_of(w)
    if lam is not None:
        T = w.d1 - lam * w.s1 - 1
        slices: dict[int, list] = {}
        for i, j in field.p.support() - {(0, 0)}:
            slices.setdefault(i + j, []).append((("P", i, j), Fraction(i)))
        for i, j in field.q.support() - {(0, 0)}:
            slices.setdefault(i + j, []).append((("Q", i, j), i + 1 + lam))
        for deg, cands in slices.items():
            values = {c for _, c in cands}
            good = len(values) == 1 and all(
                (c - 1 - lam) * w.s1 + (deg - c) * w.s2 == T for c in values
            )
            if not good:
                unique_ok = False
                offending.update(loc for loc, _ in cands)

    return StructuralReport(
        no_constant_terms=no_const,
        at_most_one_monomial_per_homogeneous_part=one_per_slice,
        gcd_divides_d_minus_1=gcd_ok,
        unique_exponent_per_degree=unique_ok,
        offending_terms=tuple(sorted(offending)),
    )


def is_semihomogeneous(field: VectorField) -> bool:
    return all(len({i + j for i, j in poly.support()}) <= 1 for _, poly in field.components())


def swap_variables(field: VectorField) -> VectorField:
    """Exchange the roles of ``x`` and ``y``: returns ``(Q(y, x), P(y, x))``."""

    def flip(poly: Polynomial) -> Polynomial:
        return Polynomial({(j, i): c for (i, j), c in poly.items()})

    return VectorField(flip(field.q), flip(field.p))


def swap_weight(w: WeightVector) -> WeightVector:
    return WeightVector(w.s2, w.s1, w.d2, w.d1)


def scale_weight(w: WeightVector, r: int) -> WeightVector:
    if r < 1:
        raise ValueError("scale factor must be a positive integer")
    return WeightVector(r * w.s1, r * w.s2, r * (w.d1 - 1) + 1, r * (w.d2 - 1) + 1)


def find_weight_vectors(field: VectorField, s_bound: int) -> list[WeightVector]:
    _require_components(field)
    (pi, pj), (qi, qj) = min(field.p.support()), min(field.q.support())
    found = []
    for s1 in range(1, s_bound + 1):
        for s2 in range(1, s_bound + 1):
            d1 = (pi - 1) * s1 + pj * s2 + 1
            d2 = qi * s1 + (qj - 1) * s2 + 1
            if d1 < 1 or d2 < 1:
                continue
            w = WeightVector(s1, s2, d1, d2)
            if is_weight_vector(field, w):
                found.append(w)
    return sorted(found)


def minimal_weight_vector(field: VectorField, s_bound: int) -> WeightVector | None:
    """Componentwise minimum of the weight vectors found up to ``s_bound``."""
    found = find_weight_vectors(field, s_bound)
    for w in found:
        if all(
            w.s1 <= v.s1 and w.s2 <= v.s2 and w.d1 <= v.d1 and w.d2 <= v.d2 for v in found
        ):
            return w
    return None


def weight_equations(supp_p, supp_q) -> list[list[int]]:
    """Rows of the homogeneous system in ``(s1, s2, d1 - 1, d2 - 1)``."""
    rows = [[i - 1, j, -1, 0] for i, j in sorted(supp_p)]
    rows += [[i, j - 1, 0, -1] for i, j in sorted(supp_q)]
    return rows


def _nullspace(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    m = [[Fraction(v) for v in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def minimal_weight_from_support(supp_p, supp_q) -> WeightVector | None:
    """Exact minimal weight vector when the weights form a single ray.

    For a non-semihomogeneous support the weight relations have a
    one-dimensional solution space; the integer points on it are the
    multiples of a primitive vector, whose first multiple is the minimum.
    Returns ``None`` when the solution space is not a ray with admissible
    signs.
    """
    basis = _nullspace(weight_equations(supp_p, supp_q), 4)
    if len(basis) != 1:
        return None
    v = basis[0]
    den = 1
    for c in v:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[0] < 0 or (ints[0] == 0 and ints[1] < 0):
        ints = [-c for c in ints]
    s1, s2, e1, e2 = ints
    if s1 < 1 or s2 < 1 or e1 < 0 or e2 < 0:
        return None
    return WeightVector(s1, s2, e1 + 1, e2 + 1)


def instantiate(supp_p, supp_q, coeff=1) -> VectorField:
    """Field with the given supports and every coefficient equal to ``coeff``."""
    return VectorField(
        Polynomial({e: coeff for e in supp_p}), Polynomial({e: coeff for e in supp_q})
    )


__all__ = [
    "Monomial",
    "StructuralReport",
    "StructureError",
    "WeightVector",
    "find_weight_vectors",
    "format_index",
    "index_of",
    "instantiate",
    "is_semihomogeneous",
    "is_weight_vector",
    "minimal_weight_from_support",
    "minimal_weight_vector",
    "scale_weight",
    "structural_report",
    "swap_variables",
    "swap_weight",
    "weight_residuals",
]

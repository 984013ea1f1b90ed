"""Reduction of degree-2 and degree-3 systems to canonical forms by diagonal scalings.

A scaling ``X = alpha*x, Y = beta*y, T = gamma*t`` multiplies the coefficient
of ``x^i y^j`` in ``P`` by ``alpha^(1-i) beta^(-j) / gamma`` and in ``Q`` by
``alpha^(-i) beta^(1-j) / gamma``.  Magnitudes and signs are handled
separately: magnitudes come from a 3x3 linear system in log space, signs
from the eight sign patterns of ``(alpha, beta, gamma)``.

Each catalog entry lists the monomials of a support in a priority order.
Signs are made positive greedily along that order; a slot whose sign cannot
be flipped without disturbing an earlier slot keeps its sign, which becomes
a ``+``/``-`` parameter of the label.  Four-monomial supports carry one free
residual coefficient ``a``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import univariate as uv
from .poly import Polynomial, VectorField
from .weights import is_semihomogeneous, minimal_weight_from_support, swap_variables

Slot = tuple[str, int, int]


class CanonicalError(ValueError):
    pass


@dataclass(frozen=True)
class Scaling:
    alpha: Fraction | float = Fraction(1)
    beta: Fraction | float = Fraction(1)
    gamma: Fraction | float = Fraction(1)

    def __post_init__(self):
        if self.alpha == 0 or self.beta == 0 or self.gamma == 0:
            raise ValueError("scaling factors must be nonzero")

    @classmethod
    def identity(cls) -> Scaling:
        return cls()

    def compose(self, other: Scaling) -> Scaling:
        """Apply ``self`` first, then ``other``."""
        return Scaling(self.alpha * other.alpha, self.beta * other.beta, self.gamma * other.gamma)

    def inverse(self) -> Scaling:
        return Scaling(1 / self.alpha, 1 / self.beta, 1 / self.gamma)

    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.alpha, self.beta, self.gamma))


def slot_exponents(slot: Slot) -> tuple[int, int, int]:
    """Powers of ``(alpha, beta, gamma)`` multiplying the coefficient in ``slot``."""
    tag, i, j = slot
    if tag == "P":
        return (1 - i, -j, -1)
    return (-i, 1 - j, -1)


def _power(base, k: int):
    if isinstance(base, Fraction):
        return base**k
    return float(base) ** k


def apply_scaling(vf: VectorField, s: Scaling) -> VectorField:
    def scale(tag: str, poly: Polynomial) -> Polynomial:
        out = {}
        for (i, j), c in poly.items():
            ea, eb, eg = slot_exponents((tag, i, j))
            out[(i, j)] = c * _power(s.alpha, ea) * _power(s.beta, eb) * _power(s.gamma, eg)
        return Polynomial(out)

    return VectorField(scale("P", vf.p), scale("Q", vf.q))


# coprimality


def components_coprime(vf: VectorField, tol: float = 1e-9) -> bool:
    """Whether ``P`` and ``Q`` share no nonconstant factor.

    For a semi-quasi-homogeneous system both components are quasi-homogeneous
    with the same variable weights, so a common non-monomial factor shows up
    as a common nonzero root of ``P(1, y)`` and ``Q(1, y)``.
    """
    p, q = vf.p, vf.q
    if p.is_zero() or q.is_zero():
        return False
    if min(p.min_power("x"), q.min_power("x")) > 0 or min(p.min_power("y"), q.min_power("y")) > 0:
        return False
    if minimal_weight_from_support(p.support(), q.support()) is None:
        return _sympy_coprime(vf)

    def restrict(poly: Polynomial) -> list:
        coeffs: dict[int, object] = {}
        for (_, j), c in poly.items():
            coeffs[j] = coeffs.get(j, 0) + c
        low = min(coeffs)
        return [coeffs.get(k, 0) for k in range(low, max(coeffs) + 1)]

    fp, fq = restrict(p), restrict(q)
    if vf.p.is_exact() and vf.q.is_exact():
        return uv.degree(uv.gcd_poly(uv.upoly(fp), uv.upoly(fq))) < 1
    if len(fp) < 2 or len(fq) < 2:
        return True
    short, other = (fp, fq) if len(fp) <= len(fq) else (fq, fp)
    scale = max(abs(float(c)) for c in other)
    for root in np.roots([float(c) for c in reversed(short)]):
        if abs(np.polyval([float(c) for c in reversed(other)], root)) <= tol * scale * max(1.0, abs(root)) ** len(other):
            return False
    return True


def _sympy_coprime(vf: VectorField) -> bool:
    import sympy

    x, y = sympy.symbols("x y")

    def expr(poly):
        return sum(sympy.nsimplify(c) * x**i * y**j for (i, j), c in poly.items())

    return sympy.gcd(expr(vf.p), expr(vf.q)).is_number


# catalog


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    k: int | None
    priority: tuple[Slot, ...]
    residual: Slot | None = None
    variant: str | None = None

    @property
    def slots(self) -> tuple[Slot, ...]:
        return self.priority + ((self.residual,) if self.residual else ())

    @property
    def support(self) -> tuple[frozenset, frozenset]:
        return (
            frozenset((i, j) for t, i, j in self.slots if t == "P"),
            frozenset((i, j) for t, i, j in self.slots if t == "Q"),
        )

    @property
    def degree(self) -> int:
        return max(i + j for _, i, j in self.slots)

    @property
    def sign_slots(self) -> tuple[Slot, ...]:
        """Slots whose sign survives normalization of the earlier slots."""
        fixed: list[int] = []
        free = []
        parity = [tuple(e % 2 for e in slot_exponents(s)) for s in self.priority]
        for idx, slot in enumerate(self.priority):
            flippable = any(
                _flip(parity[idx], m) and not any(_flip(parity[f], m) for f in fixed)
                for m in _MOVES
            )
            if flippable:
                fixed.append(idx)
            else:
                free.append(slot)
        return tuple(free)

    def name(self, signs: tuple[int, ...] = ()) -> str:
        base = self.id if self.k is None else f"{self.id},{self.k}"
        return base + "".join("+" if s > 0 else "-" for s in signs)


_MOVES = list(itertools.product((0, 1), repeat=3))


def _flip(parity: tuple[int, int, int], move: tuple[int, int, int]) -> bool:
    return sum(p * m for p, m in zip(parity, move)) % 2 == 1


def _s(spec: str) -> Slot:
    tag, rest = spec[0], spec[1:]
    i, j = rest.split(",")
    return (tag, int(i), int(j))


def _entry(id_: str, k, order: str, residual: str | None = None) -> CatalogEntry:
    return CatalogEntry(id_, k, tuple(_s(t) for t in order.split()), _s(residual) if residual else None)


# Priority orders are chosen so that the free sign lands where the usual
# listing puts it (for example on y^3 in x' = x^2 - y^3, y' = x).
_FULL_ENTRIES = (
    _entry("A1q", None, "P2,0 Q0,2 Q1,0"),
    _entry("A2q", None, "P0,2 P1,0 Q1,0", "Q0,2"),
    _entry("A1", None, "P0,2 P1,0 Q3,0"),
    _entry("B1", 1, "P0,3 P2,0 Q0,1"),
    _entry("B1", 2, "P0,3 P2,0 Q0,2"),
    _entry("B1", 3, "P0,3 P2,0 Q2,1"),
    _entry("C1", 1, "Q0,3 Q2,0 P2,1"),
    _entry("C1", 2, "Q0,3 Q2,0 P3,0"),
    _entry("D1", None, "P0,2 Q0,3 Q2,0"),
    _entry("E1", 1, "P1,1 Q0,3 Q1,0"),
    _entry("E1", 2, "P2,0 Q0,3 Q1,0"),
    _entry("F1", None, "P3,0 Q0,2 Q1,0"),
    _entry("G1", 1, "P1,0 P0,2 Q2,1"),
    _entry("G1", 2, "P2,0 Q1,2 P0,3"),
    _entry("H1", 1, "P2,0 Q1,0 P0,3"),
    _entry("H1", 2, "P2,0 Q0,1 P1,2"),
    _entry("I1", 1, "P3,0 Q1,1 Q0,3"),
    _entry("I1", 2, "P2,1 Q0,2 Q1,0"),
    _entry("J1", 1, "P1,1 Q0,3 Q2,0"),
    _entry("J1", 2, "P1,0 Q2,0 Q0,3"),
    _entry("L1", 1, "P2,1 Q0,3 Q1,0"),
    _entry("L1", 2, "P3,0 Q1,0 Q0,3"),
    _entry("M1", 1, "P1,1 Q3,0 P0,3"),
    _entry("M1", 2, "P2,0 Q3,0 P0,3"),
    _entry("A2", None, "P1,0 Q1,0 Q0,3", "P0,3"),
    _entry("B2", None, "P1,0 Q1,1 Q0,3", "P0,2"),
    _entry("C2", None, "P0,2 P1,0 Q1,2", "Q2,0"),
    _entry("D2", None, "P1,1 Q1,2 Q2,0", "P0,3"),
    _entry("E2", None, "P2,0 Q0,3 Q2,0", "P0,3"),
    _entry("F2", None, "P2,0 Q0,2 Q1,0", "P1,2"),
)


def _slot_text(slots) -> str:
    def mono(i, j):
        parts = [p for p in (("x" if i == 1 else f"x^{i}") if i else "", ("y" if j == 1 else f"y^{j}") if j else "") if p]
        return "*".join(parts) or "1"

    comp = {"P": [], "Q": []}
    for t, i, j in sorted(slots, key=lambda s: (s[0], -(s[1] + s[2]), -s[2])):
        comp[t].append(mono(i, j))
    return "P{" + ",".join(comp["P"]) + "} Q{" + ",".join(comp["Q"]) + "}"


def _generic_field(slots) -> VectorField:
    primes = iter((2, 3, 5, 7, 11, 13))
    p, q = {}, {}
    for t, i, j in slots:
        (p if t == "P" else q)[(i, j)] = next(primes)
    return VectorField(Polynomial(p), Polynomial(q))


def _variants(parent: CatalogEntry) -> list[CatalogEntry]:
    out = []
    for drop in parent.slots:
        kept = tuple(s for s in parent.slots if s != drop)
        vf = _generic_field(kept)
        if vf.p.is_zero() or vf.q.is_zero() or vf.n != parent.degree:
            continue
        if is_semihomogeneous(vf) or not components_coprime(vf):
            continue
        out.append(CatalogEntry(parent.id, parent.k, kept, None, _slot_text(kept)))
    return out


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    entries = list(_FULL_ENTRIES)
    for e in _FULL_ENTRIES:
        if e.residual is not None:
            entries.extend(_variants(e))
    return tuple(entries)


def catalog_for_degree(n: int) -> list[CatalogEntry]:
    return [e for e in catalog() if e.degree == n]


def find_entry(support: tuple[frozenset, frozenset]) -> CatalogEntry | None:
    for e in catalog():
        if e.support == support:
            return e
    return None


# labels


@dataclass(frozen=True)
class CanonicalLabel:
    id: str
    k: int | None = None
    signs: tuple[int, ...] = ()
    residual_params: tuple[tuple[str, object], ...] = ()
    variant: str | None = None
    swapped: bool = False

    @property
    def name(self) -> str:
        base = self.id if self.k is None else f"{self.id},{self.k}"
        return base + "".join("+" if s > 0 else "-" for s in self.signs)

    @property
    def residual_constraint(self) -> str | None:
        return "P and Q coprime, a != 0" if self.residual_params else None

    def __str__(self) -> str:
        text = self.name
        if self.residual_params:
            text += " " + ", ".join(f"{n}={_fmt(v)}" for n, v in self.residual_params)
        if self.variant:
            text += f" [{self.variant}]"
        if self.swapped:
            text += " (x<->y)"
        return text


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return f"{v:.12g}"


def _entry_for_label(label: CanonicalLabel) -> CatalogEntry:
    for e in catalog():
        if e.id == label.id and e.k == label.k and e.variant == label.variant:
            return e
    raise CanonicalError(f"unknown label {label.name}")


def canonical_form(label: CanonicalLabel) -> VectorField:
    entry = _entry_for_label(label)
    sign_of = dict(zip(entry.sign_slots, label.signs))
    if len(label.signs) != len(entry.sign_slots):
        raise CanonicalError("wrong number of sign parameters")
    coeffs: dict[Slot, object] = {s: Fraction(sign_of.get(s, 1)) for s in entry.priority}
    if entry.residual:
        if not label.residual_params:
            raise CanonicalError("missing residual parameter a")
        a = label.residual_params[0][1]
        coeffs[entry.residual] = a if isinstance(a, (Fraction, float)) else Fraction(a)
    p = {(i, j): c for (t, i, j), c in coeffs.items() if t == "P"}
    q = {(i, j): c for (t, i, j), c in coeffs.items() if t == "Q"}
    return VectorField(Polynomial(p), Polynomial(q))


def canonical_forms(n: int, residual_samples=(Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 3), Fraction(3))):
    """Every canonical form of degree ``n``: all sign choices, sampled residuals.

    Residual samples that make the components share a factor are skipped.
    """
    out = []
    for e in catalog_for_degree(n):
        for signs in itertools.product((1, -1), repeat=len(e.sign_slots)):
            residuals = [()] if e.residual is None else [(("a", a),) for a in residual_samples]
            for res in residuals:
                label = CanonicalLabel(e.id, e.k, tuple(signs), res, e.variant)
                vf = canonical_form(label)
                if components_coprime(vf):
                    out.append((label, vf))
    return out


# reduction


def _solve_magnitudes(entry: CatalogEntry, vf: VectorField) -> Scaling:
    rows = [slot_exponents(s) for s in entry.priority]
    mat = [[Fraction(v) for v in r] for r in rows]
    inv = _inverse3(mat)
    if inv is None:
        raise CanonicalError("scaling equations are degenerate")
    coeffs = [_coeff(vf, s) for s in entry.priority]
    mags = [abs(c) for c in coeffs]
    # log|factor_k| = -sum_m inv[k][m] * log|c_m|
    factors = []
    for k in range(3):
        powers = [-inv[k][m] for m in range(3)]
        if all(isinstance(c, Fraction) and (p.denominator == 1 or c == 1) for c, p in zip(mags, powers)):
            val = Fraction(1)
            for c, p in zip(mags, powers):
                if c != 1:
                    val *= c ** int(p)
            factors.append(val)
        else:
            factors.append(math.exp(sum(float(p) * math.log(float(c)) for c, p in zip(mags, powers))))
    return Scaling(*factors)


def _inverse3(m):
    a = [row[:] + [Fraction(int(r == c)) for c in range(3)] for r, row in enumerate(m)]
    for c in range(3):
        piv = next((r for r in range(c, 3) if a[r][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        lead = a[c][c]
        a[c] = [v / lead for v in a[c]]
        for r in range(3):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[3:] for row in a]


def _coeff(vf: VectorField, slot: Slot):
    t, i, j = slot
    return (vf.p if t == "P" else vf.q).coeff(i, j)


def _sign(c) -> int:
    return 1 if c > 0 else -1


def reduce_field(vf: VectorField, tol: float = 1e-12) -> tuple[CanonicalLabel, Scaling]:
    """Canonical label of ``vf`` and the scaling carrying ``vf`` onto its form."""
    supports = vf.supports()
    entry = find_entry(supports)
    swapped = False
    if entry is None:
        alt = swap_variables(vf)
        entry = find_entry(alt.supports())
        if entry is None:
            if not vf.p.is_zero() and not vf.q.is_zero() and is_semihomogeneous(vf):
                raise CanonicalError("unsupported support: system is semihomogeneous")
            raise CanonicalError("unsupported support")
        vf, swapped = alt, True
    if not components_coprime(vf):
        raise CanonicalError("components not coprime")

    mag = _solve_magnitudes(entry, vf)
    signs = [_sign(_coeff(vf, s)) for s in entry.priority]
    parity = [tuple(e % 2 for e in slot_exponents(s)) for s in entry.priority]
    best = None
    for move in _MOVES:
        after = tuple(sg * (-1 if _flip(par, move) else 1) for sg, par in zip(signs, parity))
        if best is None or after > best[0]:
            best = (after, move)
    after, move = best
    sgn = [(-1) ** m for m in move]
    scaling = Scaling(mag.alpha * sgn[0], mag.beta * sgn[1], mag.gamma * sgn[2])

    scaled = apply_scaling(vf, scaling)
    label_signs = tuple(_sign(_coeff(scaled, s)) for s in entry.sign_slots)
    residual = ()
    if entry.residual:
        residual = (("a", _coeff(scaled, entry.residual)),)
    label = CanonicalLabel(entry.id, entry.k, label_signs, residual, entry.variant, swapped)

    target = canonical_form(label)
    for s in entry.slots:
        if abs(float(_coeff(scaled, s)) - float(_coeff(target, s))) > tol * max(1.0, abs(float(_coeff(target, s)))):
            raise CanonicalError(f"scaling residual too large at {s}")
    return label, scaling


def reduce_quadratic(vf: VectorField) -> tuple[CanonicalLabel, Scaling]:
    if vf.n != 2:
        raise CanonicalError("expected a degree-2 system")
    return reduce_field(vf)


def reduce_cubic(vf: VectorField) -> tuple[CanonicalLabel, Scaling]:
    if vf.n != 3:
        raise CanonicalError("expected a degree-3 system")
    return reduce_field(vf)


def sign_orbit_count(supp_p, supp_q) -> int:
    """Number of sign classes of generic coefficients on a support under diagonal scalings."""
    slots = [("P", i, j) for i, j in supp_p] + [("Q", i, j) for i, j in supp_q]
    parity = [tuple(e % 2 for e in slot_exponents(s)) for s in slots]
    images = {tuple(int(_flip(p, m)) for p in parity) for m in _MOVES}
    return 2 ** len(slots) // len(images)


__all__ = [
    "CanonicalError",
    "CanonicalLabel",
    "CatalogEntry",
    "Scaling",
    "apply_scaling",
    "canonical_form",
    "canonical_forms",
    "catalog",
    "catalog_for_degree",
    "components_coprime",
    "find_entry",
    "reduce_cubic",
    "reduce_field",
    "reduce_quadratic",
    "sign_orbit_count",
]

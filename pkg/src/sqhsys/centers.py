"""Center verdicts for every degree-2 and degree-3 canonical form.

Each form runs through the same filters in order: invariant coordinate
axis, sign-definite component, Bendixson, then a blow-up, Lyapunov function
or first integral chosen per form.  A blow-up excludes a center when some
singular point on its divisor is hyperbolic or semi-hyperbolic.  Forms
without a listed blow-up get a small search over blow-up weights.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canonical import CanonicalLabel, catalog, canonical_forms, components_coprime
from .dynamics import (
    CENTER_FACTOR,
    CENTER_INTEGRAL,
    BlowupSpec,
    bendixson_excludes,
    invariant_axis,
    sign_definite_component,
    verify_first_integral,
    verify_lyapunov,
    weighted_blowup,
)
from .enumerator import Family, enumerate_all
from .poly import Polynomial, VectorField

CENTER = "center"
NO_CENTER = "no-center"
UNRESOLVED = "unresolved"

_A2_SUB = "P{y^3} Q{y^3,x}"
_E2_SUB = "P{y^3} Q{y^3,x^2}"

# (id, k, variant, signs) -> blow-ups used in the case analysis
_BLOWUPS = {
    ("H1", 1, None, (1,)): [BlowupSpec("x", 2, 1)],
    ("M1", 1, None, (1,)): [BlowupSpec("x", 2, 3)],
    ("M1", 1, None, (-1,)): [BlowupSpec("x", 2, 3)],
    ("M1", 2, None, (1,)): [BlowupSpec("x", 3, 2)],
    ("M1", 2, None, (-1,)): [BlowupSpec("x", 3, 2)],
    ("A2", None, _A2_SUB, (1,)): [BlowupSpec("x", 2, 1)],
    ("D2", None, None, (1,)): [BlowupSpec("x", 1, 1)],
    ("D2", None, None, (-1,)): [BlowupSpec("y", 1, 1, -1)],
    ("E2", None, None, ()): [BlowupSpec("x", 3, 2)],
    ("E2", None, _E2_SUB, ()): [BlowupSpec("x", 4, 3)],
}

_LYAPUNOV = {
    ("A2", None, _A2_SUB, (-1,)): Polynomial({(2, 0): 2, (0, 4): 1}),
}

_INTEGRALS = {
    ("H1", 1, None, (-1,)): (CENTER_INTEGRAL, CENTER_FACTOR),
}


@dataclass(frozen=True)
class CenterVerdict:
    family: Family | None
    label: CanonicalLabel | None
    field: VectorField
    verdict: str
    technique: str
    detail: str = ""

    @property
    def name(self) -> str:
        if self.label is not None:
            return str(self.label)
        return self.family.name if self.family is not None else str(self.field)


def _key(label: CanonicalLabel):
    return (label.id, label.k, label.variant, label.signs)


def _definite(poly: Polynomial) -> bool:
    return (
        not poly.is_zero()
        and all(i % 2 == 0 and j % 2 == 0 for i, j in poly.support())
        and len({c > 0 for _, c in poly.items()}) == 1
    )


def _blowup_verdict(vf: VectorField, specs) -> tuple[str, str] | None:
    for spec in specs:
        res = weighted_blowup(vf, spec)
        hits = [s for s in res.singularities if s.kind.elementary]
        if hits:
            where = ", ".join(f"{s.kind.value} at {s.point[0]:.6g},{s.point[1]:.6g}" for s in hits)
            return f"blow-up {spec}", where
    return None


def _search_specs():
    for a, b in itertools.product(range(1, 5), repeat=2):
        for direction, sign in (("x", 1), ("x", -1), ("y", 1), ("y", -1)):
            yield BlowupSpec(direction, a, b, sign)


def classify_form(label: CanonicalLabel | None, vf: VectorField, family: Family | None = None) -> CenterVerdict:
    def done(verdict, technique, detail=""):
        return CenterVerdict(family, label, vf, verdict, technique, detail)

    if not components_coprime(vf):
        return done(NO_CENTER, "common factor", "the origin is not an isolated singular point")
    axis = invariant_axis(vf)
    if axis != "none":
        return done(NO_CENTER, "invariant axis", axis)
    comp = sign_definite_component(vf)
    if comp is not None:
        return done(NO_CENTER, "sign-definite component", comp)
    if bendixson_excludes(vf):
        return done(NO_CENTER, "Bendixson", f"divergence {vf.p.diff('x') + vf.q.diff('y')}")
    key = _key(label) if label is not None else None
    if key in _BLOWUPS:
        hit = _blowup_verdict(vf, _BLOWUPS[key])
        if hit:
            return done(NO_CENTER, *hit)
    if key in _LYAPUNOV:
        v = _LYAPUNOV[key]
        vdot = verify_lyapunov(vf, v)
        if _definite(v) and _definite(vdot):
            return done(NO_CENTER, "Lyapunov", f"V = {v}, V' = {vdot}")
    if key in _INTEGRALS:
        h, m = _INTEGRALS[key]
        check = verify_first_integral(vf, h, m)
        if check:
            return done(CENTER, "first integral", f"H = {h}, H(0,0) = {check.value_at_origin}")
    if key not in _BLOWUPS:
        hit = _blowup_verdict(vf, _search_specs())
        if hit:
            technique, detail = hit
            return done(NO_CENTER, technique + " (searched)", detail)
    return done(UNRESOLVED, "none")


def _generic(fam: Family) -> VectorField:
    primes = iter((2, 3, 5, 7, 11, 13, 17, 19))
    p = {e: next(primes) for e in sorted(fam.support_p)}
    q = {e: next(primes) for e in sorted(fam.support_q)}
    return VectorField(Polynomial(p), Polynomial(q))


def _parent_supports():
    out = {}
    for e in catalog():
        if e.variant is None:
            out[(e.id, e.k)] = e.support
    return out


def center_report(n: int, complete: bool = False) -> list[CenterVerdict]:
    """One verdict per canonical form, plus one per family with a common factor.

    With ``complete=True`` the supports missing from the classical listing are
    added as generic instances (unit coefficients, or primes when units
    would create a common factor).
    """
    if n not in (2, 3):
        raise ValueError("center analysis is available for degree 2 and 3 only")
    families = enumerate_all(n)
    by_support = {f.supports: f for f in families}
    parents = _parent_supports()
    rows = []
    for fam in families:
        vf = _generic(fam)
        if not components_coprime(vf):
            rows.append(CenterVerdict(fam, None, vf, NO_CENTER, "common factor", "every member has a common factor"))
    for label, vf in canonical_forms(n):
        fam = by_support.get(parents[(label.id, label.k)])
        rows.append(classify_form(label, vf, fam))
    if complete:
        known = set(by_support)
        for fam in enumerate_all(n, complete=True):
            if fam.supports in known:
                continue
            vf = VectorField(
                Polynomial({e: 1 for e in fam.support_p}), Polynomial({e: 1 for e in fam.support_q})
            )
            if not components_coprime(vf):
                vf = _generic(fam)
            rows.append(classify_form(None, vf, fam))
    return rows


def centers(rows: list[CenterVerdict]) -> list[CenterVerdict]:
    return [r for r in rows if r.verdict == CENTER]


__all__ = ["CENTER", "NO_CENTER", "UNRESOLVED", "CenterVerdict", "center_report", "centers", "classify_form"]

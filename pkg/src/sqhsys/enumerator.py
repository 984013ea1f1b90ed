"""Structured enumeration of semi-quasi-homogeneous families of a given degree.

The enumeration splits by the shape of the support:

* part 1: ``d1 = 1``, so ``P = a y^(n-t) + a' x`` (``P1Base`` is ``t = 0``);
* part 2: ``d1 > 1`` and ``P`` has at least two monomials;
* part 3: ``P`` is a single monomial and ``Q`` has at least two.

Every family stores its support, a parametric weight vector, the minimal
weight vector and the index.  Quasi-homogeneous candidates (index 0) are
dropped but kept in a removal log.

>>> [f.name for f in enumerate_all(2)]
['X_{0,0,0}', 'X_{0,0,2,0,1,1}']
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .poly import Polynomial, VectorField
from .weights import (
    WeightVector,
    index_of,
    instantiate,
    is_semihomogeneous,
    is_weight_vector,
    minimal_weight_from_support,
    structural_report,
)

PARTS = ("P1Base", "P1", "P2", "P3")

Support = frozenset  # of (i, j)


class ConsistencyError(RuntimeError):
    """Raised when the enumeration contradicts its own invariants."""


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError("degree must exceed 1")


@dataclass(frozen=True, order=True)
class FamilyKey:
    part: str
    t: int = 0
    tt: int = 0
    p: int = 0
    q: int = 0
    dt: int | None = None
    k: int | None = None

    def sort_key(self) -> tuple:
        return (
            PARTS.index(self.part),
            self.t,
            self.tt,
            self.p,
            self.q,
            -1 if self.dt is None else self.dt,
            -1 if self.k is None else self.k,
        )

    @property
    def name(self) -> str:
        if self.part in ("P1Base", "P1"):
            return f"X_{{{self.t},{self.tt},{self.q}}}"
        return f"X_{{{self.t},{self.tt},{self.p},{self.q},{self.dt},{self.k}}}"


@dataclass(frozen=True)
class AffineForm:
    """The integer ``(coef * theta + const) / mod``."""

    coef: int
    const: int
    param: str
    mod: int = 1

    def __call__(self, theta: int) -> int:
        num = self.coef * theta + self.const
        if num % self.mod:
            raise ValueError(f"{self} is not integral at {self.param}={theta}")
        return num // self.mod

    def __str__(self) -> str:
        body = f"{self.coef}*{self.param}" if self.coef else ""
        if self.const or not body:
            body = f"{body}{self.const:+d}" if body else str(self.const)
        return body if self.mod == 1 else f"({body})/{self.mod}"


@dataclass(frozen=True)
class ParamWeightVector:
    """Weight vectors ``w(theta)`` for ``theta = start, start + step, ...``."""

    forms: tuple[AffineForm, AffineForm, AffineForm, AffineForm]
    param: str
    start: int
    step: int

    def at(self, theta: int) -> WeightVector:
        return WeightVector(*(f(theta) for f in self.forms))

    def nth(self, index: int) -> WeightVector:
        return self.at(self.start + index * self.step)

    @classmethod
    def scaled(cls, coefs: tuple[int, int, int, int], param: str, pos: int) -> ParamWeightVector:
        """Ray ``(s1, s2, d1 - 1, d2 - 1) = r * coefs`` parametrised by component ``pos``.

        ``coefs`` holds ``(s1*, s2*, d1* - 1, d2* - 1)``; the parameter is the
        component at ``pos`` (``s2``, ``d1`` or ``d2``).
        """
        m = coefs[pos]
        offset = 0 if pos < 2 else 1
        forms = []
        for idx, c in enumerate(coefs):
            extra = 0 if idx < 2 else m
            forms.append(AffineForm(c, -c * offset + extra, param, m))
        start = m + offset
        return cls(tuple(forms), param, start, m)

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.forms) + ")"


def coeff_name(component: str, i: int, j: int) -> str:
    letter = "a" if component == "P" else "b"
    return f"{letter}_{{{i},{j}}}"


@dataclass(frozen=True)
class Family:
    key: FamilyKey
    support_p: Support
    support_q: Support
    w: ParamWeightVector
    w_m: WeightVector
    lam: Fraction
    n: int

    @property
    def name(self) -> str:
        return self.key.name

    @property
    def supports(self) -> tuple[Support, Support]:
        return (self.support_p, self.support_q)

    def slots(self) -> tuple[list[tuple[int, int, str]], list[tuple[int, int, str]]]:
        sp = [(i, j, coeff_name("P", i, j)) for i, j in sorted(self.support_p)]
        sq = [(i, j, coeff_name("Q", i, j)) for i, j in sorted(self.support_q)]
        return sp, sq

    def instantiate(self, p_coeffs=None, q_coeffs=None) -> VectorField:
        """Concrete field; missing coefficients default to 1."""
        p_coeffs = p_coeffs or {}
        q_coeffs = q_coeffs or {}
        return VectorField(
            Polynomial({e: p_coeffs.get(e, 1) for e in self.support_p}),
            Polynomial({e: q_coeffs.get(e, 1) for e in self.support_q}),
        )

    def sort_key(self) -> tuple:
        return self.key.sort_key()

    def describe(self) -> str:
        f = self.instantiate()
        return f"{self.name}: x' = {_symbolic(f.p, 'P')}, y' = {_symbolic(f.q, 'Q')}"


def _symbolic(poly: Polynomial, tag: str) -> str:
    parts = []
    for (i, j), _ in sorted(poly.items(), key=lambda kv: (-sum(kv[0]), -kv[0][1])):
        mono = "".join(s for s in (_pw("x", i), _pw("y", j)) if s)
        parts.append(f"{coeff_name(tag, i, j)}{mono}")
    return " + ".join(parts)


def _pw(v: str, k: int) -> str:
    return "" if k == 0 else (v if k == 1 else f"{v}^{k}")


@dataclass(frozen=True)
class RemovedEntry:
    """A candidate dropped because its index is zero."""

    key: FamilyKey
    support_p: Support
    support_q: Support
    w_m: WeightVector | None


@dataclass
class Enumeration:
    n: int
    families: list[Family] = field(default_factory=list)
    removed: list[RemovedEntry] = field(default_factory=list)


def _emit(out: Enumeration, key, supp_p, supp_q, lam, coefs, param, pos) -> None:
    supp_p, supp_q = frozenset(supp_p), frozenset(supp_q)
    g = 0
    for c in coefs:
        g = gcd(g, c)
    coefs = tuple(c // g for c in coefs)
    if lam == 0:
        out.removed.append(
            RemovedEntry(key, supp_p, supp_q, minimal_weight_from_support(supp_p, supp_q))
        )
        return
    w = ParamWeightVector.scaled(coefs, param, pos)
    w_m = w.nth(0)
    out.families.append(Family(key, supp_p, supp_q, w, w_m, Fraction(lam), out.n))


def _part1(n: int, out: Enumeration, complete: bool) -> None:
    # t = 0: the classical listing keeps only y^n + x against y^n + x.
    _emit(
        out,
        FamilyKey("P1Base"),
        {(0, n), (1, 0)},
        {(0, n), (1, 0)},
        Fraction(-1),
        (n, 1, 0, n - 1),
        "s2",
        1,
    )
    if complete:
        _part1_t0_remaining(n, out)
    for t in range(1, n - 1):
        for q in range(0, n + 1):
            lam = -q - Fraction(n - 1, n - t - 1)
            partners = {
                (tt, qs)
                for qs in range(0, n + 1)
                for tt in [(qs - q) * (n - t - 1)]
                if 1 <= tt <= n - 1 and qs <= n - tt
            }
            supp_q = {(q, n - q)} | {(qs, n - tt - qs) for tt, qs in partners}
            coefs = (n - t, 1, 0, (n - t - 1) * q + n - 1)
            _emit(out, FamilyKey("P1", t, 0, 0, q), {(0, n - t), (1, 0)}, supp_q, lam, coefs, "s2", 1)


def _part1_t0_remaining(n: int, out: Enumeration) -> None:
    """``P = y^n + x`` against every other maximal ``Q`` support.

    The same compatibility rule as for ``t > 0`` applies with ``t = 0``: two
    ``Q`` terms ``(tt, q)``, ``(tt', q')`` coexist iff ``tt' - tt = (q' - q)(n - 1)``.
    The only such pair is the base family, so every remaining admissible
    ``Q`` term stands alone.
    """
    for tt in range(0, n):
        for q in range(0, n - tt + 1):
            if (tt, q) in ((0, 0), (n - 1, 1)):
                continue
            lam = -q - Fraction(n - tt - 1, n - 1)
            coefs = (n, 1, 0, (n - 1) * q + n - tt - 1)
            _emit(out, FamilyKey("P1", 0, tt, 0, q), {(0, n), (1, 0)}, {(q, n - tt - q)}, lam, coefs, "s2", 1)


def _ratio_classes(pairs):
    """Group ``(dt, k)`` pairs by ``k / dt`` in pick order (smallest first)."""
    pool = sorted(pairs)
    classes = []
    while pool:
        dt, k = pool[0]
        cls = [(d, kk) for d, kk in pool if kk * dt == k * d]
        classes.append(((dt, k), cls))
        pool = [e for e in pool if e not in cls]
    return classes


def _part2(n: int, out: Enumeration) -> None:
    for t in range(0, n - 1):
        for p in range(0, n - t - 1):
            equations = [
                (dt, k)
                for dt in range(1, n - t - p)
                for k in range(1, n - t - dt - p + 1)
                if not (p == 0 and dt == n - t - 1 and k == 1)
            ]
            for (dt, k), cls in _ratio_classes(equations):
                supp_p = {(p, n - t - p)} | {(p + kk, n - d - t - p - kk) for d, kk in cls}
                pending = sorted(
                    (tt, q)
                    for tt in range(0, n)
                    if t * tt == 0
                    for q in range(0, n - tt + 1)
                )
                while pending:
                    tt, q = pending[0]
                    partners = {
                        (ts, qs)
                        for ts in range(0, n)
                        if ts != tt
                        for qs in range(0, n - ts + 1)
                        if (q - qs) * dt == (tt - ts) * k
                    }
                    supp_q = {(q, n - tt - q)} | {(qs, n - ts - qs) for ts, qs in partners}
                    lam = p - q - 1 - Fraction((t - tt) * k, dt)
                    s = gcd(dt, k)
                    big_d = (n - t - 1) * k + (p - 1) * dt
                    coefs = ((k + dt) // s, k // s, big_d // s, ((n - tt - 1) * k + q * dt) // s)
                    _emit(out, FamilyKey("P2", t, tt, p, q, dt, k), supp_p, supp_q, lam, coefs, "d1", 2)
                    pending = [e for e in pending if e != (tt, q) and e not in partners]


def _part3(n: int, out: Enumeration) -> None:
    for tt in range(0, n - 1):
        singles = sorted(
            (t, p) for t in range(0, n) if t * tt == 0 for p in range(0, n - t + 1)
        )
        for q in range(0, n - tt - 1):
            pairs = [
                (dt, k) for dt in range(1, n - tt - q) for k in range(1, n - tt - dt - q + 1)
            ]
            for (dt, k), cls in _ratio_classes(pairs):
                chosen = []
                for t, p in singles:
                    clash = any(
                        (p - ps) * dt == (t - ts) * k
                        for ts in range(0, n)
                        if ts != t
                        for ps in range(0, n - ts + 1)
                    )
                    if clash or (p == 0 and (n - t - 1) * k < dt):
                        continue
                    chosen.append((t, p))
                if not chosen:
                    continue
                supp_q = {(q, n - tt - q)} | {(q + kk, n - d - tt - q - kk) for d, kk in cls}
                s = gcd(dt, k)
                for t, p in chosen:
                    lam = p - q - 1 - Fraction((t - tt) * k, dt)
                    coefs = (
                        (k + dt) // s,
                        k // s,
                        ((n - t - 1) * k + (p - 1) * dt) // s,
                        ((n - tt - 1) * k + q * dt) // s,
                    )
                    _emit(out, FamilyKey("P3", t, tt, p, q, dt, k), {(p, n - t - p)}, supp_q, lam, coefs, "d2", 3)


def _sorted(fams: list[Family]) -> list[Family]:
    return sorted(fams, key=Family.sort_key)


def enumerate_d1_eq_1(n: int, complete: bool = False) -> list[Family]:
    _check_degree(n)
    out = Enumeration(n)
    _part1(n, out, complete)
    return _sorted(out.families)


def enumerate_d1_gt_1(n: int) -> list[Family]:
    _check_degree(n)
    out = Enumeration(n)
    _part2(n, out)
    return _sorted(out.families)


def enumerate_single_A(n: int) -> list[Family]:
    _check_degree(n)
    out = Enumeration(n)
    _part3(n, out)
    return _sorted(out.families)


def check_family(fam: Family) -> list[str]:
    """Invariant violations of one family (empty when consistent)."""
    problems = []
    f = fam.instantiate()
    if f.n != fam.n:
        problems.append(f"degree {f.n} != {fam.n}")
    if not is_weight_vector(f, fam.w_m):
        problems.append(f"w_m {fam.w_m} is not a weight vector")
    elif not structural_report(f, fam.w_m).ok:
        problems.append("structural report fails")
    if index_of(fam.w_m) != fam.lam:
        problems.append(f"index {index_of(fam.w_m)} != {fam.lam}")
    if minimal_weight_from_support(fam.support_p, fam.support_q) != fam.w_m:
        problems.append("stored w_m is not the minimal weight vector")
    if is_semihomogeneous(f):
        problems.append("semihomogeneous")
    if gcd(fam.w_m.s1, fam.w_m.s2) != 1:
        problems.append("s1, s2 not coprime")
    for idx in (1, 2):
        if not is_weight_vector(f, fam.w.nth(idx)):
            problems.append(f"parametric weight {idx} fails")
    return problems


def enumeration_report(n: int, complete: bool = False) -> Enumeration:
    """All three parts with the removal log.

    ``complete=True`` adds the ``t = 0`` part-1 supports with a single
    ``Q`` monomial, which the published degree-2 and degree-3 listings omit.
    """
    _check_degree(n)
    out = Enumeration(n)
    _part1(n, out, complete)
    _part2(n, out)
    _part3(n, out)
    seen: dict[tuple, Family] = {}
    for fam in out.families:
        other = seen.get(fam.supports)
        if other is not None and other.w_m != fam.w_m:
            raise ConsistencyError(f"{fam.name} and {other.name} share a support with different w_m")
        if other is None or fam.sort_key() < other.sort_key():
            seen[fam.supports] = fam
    out.families = _sorted(list(seen.values()))
    for fam in out.families:
        problems = check_family(fam)
        if problems:
            raise ConsistencyError(f"{fam.name}: " + "; ".join(problems))
    return out


def enumerate_all(n: int, complete: bool = False) -> list[Family]:
    return enumeration_report(n, complete).families

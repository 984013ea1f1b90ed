"""Exact univariate polynomials over the rationals and real-root isolation.

Polynomials are tuples of ``Fraction`` coefficients, lowest degree first.
Real roots are isolated with Sturm sequences and refined by bisection, so
every sign decision is made by exact rational evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

UPoly = tuple  # of Fraction, low degree first


def upoly(coeffs: Sequence) -> UPoly:
    c = [Fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: UPoly) -> int:
    return len(f) - 1


def evaluate(f: UPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f: UPoly) -> UPoly:
    return upoly([i * c for i, c in enumerate(f)][1:])


def sub(f: UPoly, g: UPoly) -> UPoly:
    n = max(len(f), len(g))
    return upoly([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def divmod_poly(f: UPoly, g: UPoly) -> tuple[UPoly, UPoly]:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f)
    quot = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = g[-1]
    while len(rem) >= len(g) and rem:
        shift = len(rem) - len(g)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(g):
            rem[shift + i] -= factor * c
        rem = list(upoly(rem))
    return upoly(quot), upoly(rem)


def monic(f: UPoly) -> UPoly:
    return tuple(c / f[-1] for c in f) if f else f


def gcd_poly(f: UPoly, g: UPoly) -> UPoly:
    while g:
        f, g = g, divmod_poly(f, g)[1]
    return monic(f)


def squarefree(f: UPoly) -> UPoly:
    g = gcd_poly(f, derivative(f))
    return monic(divmod_poly(f, g)[0]) if degree(g) > 0 else monic(f)


def sturm_sequence(f: UPoly) -> list[UPoly]:
    seq = [f, derivative(f)]
    while seq[-1]:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(tuple(-c for c in r))
    return seq


def _variations(seq: list[UPoly], x: Fraction) -> int:
    signs = [v for v in (evaluate(p, x) for p in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(f: UPoly, lo: Fraction, hi: Fraction, seq: list[UPoly] | None = None) -> int:
    """Number of distinct real roots in ``(lo, hi]``."""
    if degree(f) < 1:
        return 0
    seq = seq or sturm_sequence(squarefree(f))
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(f: UPoly) -> Fraction:
    lead = abs(f[-1])
    return 1 + max((abs(c) / lead for c in f[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RealRoot:
    """The unique root of ``poly`` in ``(lo, hi]`` (exact when ``lo == hi``)."""

    poly: UPoly
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width: Fraction) -> RealRoot:
        if self.exact:
            return self
        seq = sturm_sequence(self.poly)
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            mid = (lo + hi) / 2
            if evaluate(self.poly, mid) == 0:
                return RealRoot(self.poly, mid, mid)
            if count_roots(self.poly, lo, mid, seq):
                hi = mid
            else:
                lo = mid
        return RealRoot(self.poly, lo, hi)

    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    def sign_of(self, g: UPoly) -> int:
        """Exact sign of ``g`` at this root."""
        if self.exact:
            v = evaluate(g, self.lo)
            return (v > 0) - (v < 0)
        if not g:
            return 0
        common = gcd_poly(self.poly, g)
        if degree(common) > 0 and count_roots(common, self.lo, self.hi):
            return 0
        seq = sturm_sequence(squarefree(g)) if degree(g) > 0 else None
        root = self
        while True:
            glo, ghi = evaluate(g, root.lo), evaluate(g, root.hi)
            if glo != 0 and ghi != 0 and (seq is None or count_roots(g, root.lo, root.hi, seq) == 0):
                return 1 if ghi > 0 else -1
            root = root.refine(root.width / 4)
            if root.exact:
                return root.sign_of(g)


def real_roots(f: UPoly, width: Fraction = Fraction(1, 10**10)) -> list[RealRoot]:
    """Isolate every distinct real root of ``f``, sorted, each refined to ``width``."""
    f = squarefree(upoly(f))
    if degree(f) < 1:
        return []
    seq = sturm_sequence(f)
    bound = root_bound(f)
    out: list[RealRoot] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(f, lo, hi, seq)
        if n == 0:
            continue
        if n == 1:
            if evaluate(f, hi) == 0:
                out.append(RealRoot(f, hi, hi))
            else:
                out.append(RealRoot(f, lo, hi).refine(width))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out, key=lambda r: r.lo)

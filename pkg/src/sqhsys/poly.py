"""Sparse bivariate polynomials with exact rational coefficients.

A polynomial is a mapping ``(i, j) -> c`` standing for ``c * x**i * y**j``.
Coefficients are ``Fraction`` whenever the inputs are exact; floats are
accepted so that numeric scalings can reuse the same container.

>>> p = Polynomial.parse("y^2 + x")
>>> (p * p).degree
4
>>> p.diff("y")
Polynomial({(0, 1): Fraction(2, 1)})
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real
from typing import Iterable, Iterator, Mapping

ZERO_DEGREE = -1

Exponent = tuple[int, int]


def _normalize(c):
    if isinstance(c, bool):
        raise TypeError("boolean coefficient")
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    if isinstance(c, Real):
        return float(c)
    raise TypeError(f"unsupported coefficient {c!r}")


@dataclass(frozen=True, order=True)
class Monomial:
    i: int
    j: int
    coeff: Fraction | float = Fraction(1)

    @property
    def exponent(self) -> Exponent:
        return (self.i, self.j)

    @property
    def degree(self) -> int:
        return self.i + self.j


class Polynomial:
    """Immutable sparse polynomial in ``x`` and ``y``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | Iterable[Monomial] | None = None):
        acc: dict[Exponent, object] = {}
        if terms is None:
            items: Iterable = ()
        elif isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = (((m.i, m.j), m.coeff) for m in terms)
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent {(i, j)}")
            c = _normalize(c)
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, c) -> Polynomial:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> Polynomial:
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> Polynomial:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> Polynomial:
        return cls({(0, 1): 1})

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """Parse an expression in ``x`` and ``y`` with rational coefficients."""
        import sympy

        x, y = sympy.symbols("x y")
        expr = sympy.sympify(text.replace("^", "**"), locals={"x": x, "y": y})
        poly = sympy.Poly(expr, x, y, domain="QQ")
        terms = {}
        for (i, j), c in poly.terms():
            terms[(int(i), int(j))] = Fraction(int(c.numerator), int(c.denominator))
        return cls(terms)

    # inspection

    @property
    def terms(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(i, j, c) for (i, j), c in self._terms.items())

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def coeff(self, i: int, j: int):
        return self._terms.get((i, j), Fraction(0))

    @property
    def degree(self) -> int:
        if not self._terms:
            return ZERO_DEGREE
        return max(i + j for i, j in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self._terms.values())

    def homogeneous_part(self, degree: int) -> Polynomial:
        return Polynomial({e: c for e, c in self._terms.items() if sum(e) == degree})

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms)

    # arithmetic

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Real) and not isinstance(other, bool):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, object] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial) or isinstance(other, bool) or not isinstance(other, Real):
            return NotImplemented
        return self * (Fraction(1) / _normalize(other) if isinstance(other, Rational) else 1.0 / other)

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, var: str) -> Polynomial:
        if var == "x":
            return Polynomial({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})
        if var == "y":
            return Polynomial({(i, j - 1): j * c for (i, j), c in self._terms.items() if j})
        raise ValueError(f"unknown variable {var!r}")

    def shift(self, di: int, dj: int) -> Polynomial:
        """Multiply by ``x**di * y**dj``; negative shifts must divide exactly."""
        out = {}
        for (i, j), c in self._terms.items():
            if i + di < 0 or j + dj < 0:
                raise ValueError("shift does not divide the polynomial")
            out[(i + di, j + dj)] = c
        return Polynomial(out)

    def min_power(self, var: str) -> int:
        """Largest power of ``var`` dividing the polynomial (0 for zero)."""
        if not self._terms:
            return 0
        k = 0 if var == "x" else 1
        return min(e[k] for e in self._terms)

    def evaluate(self, x, y):
        total = 0
        for (i, j), c in self._terms.items():
            total += c * x**i * y**j
        return total

    def compose(self, px: Polynomial, py: Polynomial) -> Polynomial:
        """Substitute ``x -> px`` and ``y -> py``."""
        result = Polynomial()
        xp: dict[int, Polynomial] = {}
        yp: dict[int, Polynomial] = {}
        for (i, j), c in self._terms.items():
            if i not in xp:
                xp[i] = px**i
            if j not in yp:
                yp[j] = py**j
            result = result + xp[i] * yp[j] * c
        return result

    def map_coeffs(self, fn) -> Polynomial:
        return Polynomial({e: fn(e, c) for e, c in self._terms.items()})

    # comparison and display

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        # highest degree first, then by descending power of y
        order = sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), -kv[0][1]))
        for (i, j), c in order:
            mono = "*".join(
                s for s in (_power("x", i), _power("y", j)) if s
            )
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_fmt(mag)}*{mono}"
            else:
                body = _fmt(mag)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def _fmt(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return repr(c)


@dataclass(frozen=True)
class VectorField:
    """The planar system ``x' = p(x, y)``, ``y' = q(x, y)``."""

    p: Polynomial
    q: Polynomial

    @classmethod
    def parse(cls, p: str, q: str) -> VectorField:
        return cls(Polynomial.parse(p), Polynomial.parse(q))

    @property
    def n(self) -> int:
        return max(self.p.degree, self.q.degree)

    def components(self) -> tuple[tuple[str, Polynomial], tuple[str, Polynomial]]:
        return (("P", self.p), ("Q", self.q))

    def evaluate(self, x, y):
        return self.p.evaluate(x, y), self.q.evaluate(x, y)

    def supports(self) -> tuple[frozenset[Exponent], frozenset[Exponent]]:
        return self.p.support(), self.q.support()

    def __str__(self) -> str:
        return f"x' = {self.p}, y' = {self.q}"

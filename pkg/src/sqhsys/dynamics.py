"""Local dynamics near the origin: nonexistence criteria, blow-ups, integrals, orbits.

Every algebraic verdict is exact.  Singular points on a blow-up divisor are
isolated with Sturm sequences (:mod:`sqhsys.univariate`), so the sign of the
trace and determinant of the linear part is decided by rational arithmetic
even when the point itself is irrational.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import univariate as uv
from .poly import Polynomial, VectorField

X = Polynomial.x()
Y = Polynomial.y()


def divergence(vf: VectorField) -> Polynomial:
    return vf.p.diff("x") + vf.q.diff("y")


def bendixson_excludes(vf: VectorField) -> bool:
    """True when the divergence keeps a fixed sign near the origin."""
    return divergence(vf).coeff(0, 0) != 0


def sign_definite_component(vf: VectorField) -> str | None:
    """A component made of even monomials with one common sign, if any."""
    for tag, poly in vf.components():
        if poly.is_zero():
            continue
        even = all(i % 2 == 0 and j % 2 == 0 for i, j in poly.support())
        signs = {c > 0 for _, c in poly.items()}
        if even and len(signs) == 1:
            return tag
    return None


def invariant_axis(vf: VectorField) -> str:
    y_axis = vf.p.is_zero() or vf.p.min_power("x") > 0
    x_axis = vf.q.is_zero() or vf.q.min_power("y") > 0
    if x_axis and y_axis:
        return "both"
    return "x_axis" if x_axis else "y_axis" if y_axis else "none"


def verify_lyapunov(vf: VectorField, v: Polynomial) -> Polynomial:
    """Orbital derivative of ``v``."""
    return v.diff("x") * vf.p + v.diff("y") * vf.q


# exponential polynomials


@dataclass(frozen=True)
class ExpPolynomial:
    """``poly(x, y) * exp(rate * y)``."""

    poly: Polynomial
    rate: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rate", Fraction(self.rate))

    def _lift(self, other) -> ExpPolynomial:
        if isinstance(other, ExpPolynomial):
            return other
        if isinstance(other, Polynomial):
            return ExpPolynomial(other, Fraction(0))
        return ExpPolynomial(Polynomial.const(other), Fraction(0))

    def __add__(self, other) -> ExpPolynomial:
        other = self._lift(other)
        if other.poly.is_zero():
            return self
        if self.poly.is_zero():
            return other
        if other.rate != self.rate:
            raise ValueError("cannot add terms with different exponential rates")
        return ExpPolynomial(self.poly + other.poly, self.rate)

    def __neg__(self) -> ExpPolynomial:
        return ExpPolynomial(-self.poly, self.rate)

    def __sub__(self, other) -> ExpPolynomial:
        return self + (-self._lift(other))

    def __mul__(self, other) -> ExpPolynomial:
        other = self._lift(other)
        return ExpPolynomial(self.poly * other.poly, self.rate + other.rate)

    __rmul__ = __mul__

    def diff(self, var: str) -> ExpPolynomial:
        if var == "x":
            return ExpPolynomial(self.poly.diff("x"), self.rate)
        if var == "y":
            return ExpPolynomial(self.poly.diff("y") + self.poly * self.rate, self.rate)
        raise ValueError(f"unknown variable {var!r}")

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def evaluate(self, x, y):
        return self.poly.evaluate(x, y) * math.exp(float(self.rate) * y)

    def __str__(self) -> str:
        if self.rate == 0:
            return f"({self.poly})"
        return f"({self.poly})*exp({self.rate}*y)"


@dataclass(frozen=True)
class FirstIntegralCheck:
    ok: bool
    identities_hold: bool
    conserved: bool
    value_at_origin: Fraction | None
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_first_integral(vf: VectorField, h: ExpPolynomial, m: ExpPolynomial) -> FirstIntegralCheck:
    """Check ``H_x = M Q``, ``H_y = -M P`` and ``H_x P + H_y Q = 0`` exactly."""
    origin = h.poly.coeff(0, 0)
    if h.rate != m.rate:
        return FirstIntegralCheck(False, False, False, origin, "rate mismatch between H and M")
    hx, hy = h.diff("x"), h.diff("y")
    identities = (hx - m * vf.q).is_zero() and (hy + m * vf.p).is_zero()
    conserved = (hx * vf.p + hy * vf.q).is_zero()
    notes = []
    if not identities:
        notes.append("H_x = M*Q or H_y = -M*P fails")
    if not conserved:
        notes.append("H is not conserved")
    return FirstIntegralCheck(identities and conserved, identities, conserved, origin, "; ".join(notes))


# singular points


class SingularityKind(enum.Enum):
    HYPERBOLIC = "Hyperbolic"
    SEMI_HYPERBOLIC = "SemiHyperbolic"
    NILPOTENT = "Nilpotent"
    LINEARLY_ZERO = "LinearlyZero"
    # purely imaginary eigenvalues: not hyperbolic, yet nonzero determinant
    LINEAR_CENTER = "LinearCenter"

    @property
    def elementary(self) -> bool:
        return self in (SingularityKind.HYPERBOLIC, SingularityKind.SEMI_HYPERBOLIC)


@dataclass(frozen=True)
class SingularityClass:
    kind: SingularityKind
    trace_sign: int
    det_sign: int
    trace: Fraction | float
    det: Fraction | float


def classify_linear(trace_sign: int, det_sign: int, jacobian_zero: bool, trace=0, det=0) -> SingularityClass:
    if det_sign != 0:
        kind = SingularityKind.LINEAR_CENTER if (trace_sign == 0 and det_sign > 0) else SingularityKind.HYPERBOLIC
    elif trace_sign != 0:
        kind = SingularityKind.SEMI_HYPERBOLIC
    elif not jacobian_zero:
        kind = SingularityKind.NILPOTENT
    else:
        kind = SingularityKind.LINEARLY_ZERO
    return SingularityClass(kind, trace_sign, det_sign, trace, det)


def classify_point(vf: VectorField, x: Fraction, y: Fraction) -> SingularityClass:
    """Classify a rational singular point exactly."""
    j = [[vf.p.diff("x"), vf.p.diff("y")], [vf.q.diff("x"), vf.q.diff("y")]]
    vals = [[Fraction(e.evaluate(Fraction(x), Fraction(y))) for e in row] for row in j]
    tr = vals[0][0] + vals[1][1]
    det = vals[0][0] * vals[1][1] - vals[0][1] * vals[1][0]
    zero = all(v == 0 for row in vals for v in row)
    return classify_linear(_sgn(tr), _sgn(det), zero, tr, det)


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


# blow-ups


@dataclass(frozen=True)
class BlowupSpec:
    """``direction='x'``: ``(x, y) = (sign*u^a, u^b*v)``; ``'y'``: ``(x, y) = (u*v^a, sign*v^b)``.

    The chart is returned in the variables ``(u, v)``, written as ``(x, y)``.
    """

    direction: str
    a: int
    b: int
    sign: int = 1

    def __post_init__(self):
        if self.direction not in ("x", "y"):
            raise ValueError("direction must be 'x' or 'y'")
        if self.a < 1 or self.b < 1:
            raise ValueError("blow-up weights must be positive")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __str__(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"{s}{self.direction}({self.a},{self.b})"


@dataclass(frozen=True)
class DivisorSingularity:
    coordinate: uv.RealRoot  # position along the divisor
    point: tuple[float, float]
    cls: SingularityClass

    @property
    def kind(self) -> SingularityKind:
        return self.cls.kind


@dataclass(frozen=True)
class BlowupResult:
    spec: BlowupSpec
    chart: VectorField
    divided_power: int
    singularities: tuple[DivisorSingularity, ...]
    divisor_is_singular_line: bool = False

    @property
    def has_elementary(self) -> bool:
        return any(s.kind.elementary for s in self.singularities)


def _chart(vf: VectorField, spec: BlowupSpec) -> tuple[VectorField, int]:
    a, b, sigma = spec.a, spec.b, Fraction(spec.sign)
    k = max(a, b)
    if spec.direction == "x":
        p_hat = vf.p.compose(X**a * sigma, X**b * Y)
        q_hat = vf.q.compose(X**a * sigma, X**b * Y)
        # everything multiplied by u^k so the Laurent terms become polynomial
        u_dot = (p_hat * (sigma / a)).shift(1 - a + k, 0)
        v_dot = q_hat.shift(k - b, 0) - (Y * p_hat * (sigma * b / a)).shift(k - a, 0)
        exc = "x"
    else:
        p_hat = vf.p.compose(X * Y**a, Y**b * sigma)
        q_hat = vf.q.compose(X * Y**a, Y**b * sigma)
        v_dot = (q_hat * (sigma / b)).shift(0, 1 - b + k)
        u_dot = p_hat.shift(0, k - a) - (X * q_hat * (sigma * a / b)).shift(0, k - b)
        exc = "y"
    # a vanishing component is divisible by anything; it counts as the
    # unshifted power k so the common power is not inflated by it
    powers = [poly.min_power(exc) if not poly.is_zero() else k for poly in (u_dot, v_dot)]
    m = min(powers)
    shift = (-m, 0) if exc == "x" else (0, -m)
    return VectorField(u_dot.shift(*shift), v_dot.shift(*shift)), m - k


def _restrict(poly: Polynomial, exc: str) -> uv.UPoly:
    """Univariate polynomial along the divisor ``exc = 0``."""
    coeffs: dict[int, Fraction] = {}
    for (i, j), c in poly.items():
        if exc == "x" and i == 0:
            coeffs[j] = coeffs.get(j, 0) + c
        elif exc == "y" and j == 0:
            coeffs[i] = coeffs.get(i, 0) + c
    if not coeffs:
        return ()
    return uv.upoly([coeffs.get(d, 0) for d in range(max(coeffs) + 1)])


def _sign_at(poly: Polynomial, exc: str, root: uv.RealRoot) -> int:
    f = _restrict(poly, exc)
    return root.sign_of(f) if f else 0


def weighted_blowup(vf: VectorField, spec: BlowupSpec, width: Fraction = Fraction(1, 10**10)) -> BlowupResult:
    if not (vf.p.is_exact() and vf.q.is_exact()):
        raise ValueError("blow-up needs exact coefficients")
    if vf.p.coeff(0, 0) != 0 or vf.q.coeff(0, 0) != 0:
        raise ValueError("origin is not a singular point")
    chart, power = _chart(vf, spec)
    exc = spec.direction
    fu, fv = _restrict(chart.p, exc), _restrict(chart.q, exc)
    if not fu and not fv:
        return BlowupResult(spec, chart, power, (), True)
    common = fu if not fv else fv if not fu else uv.gcd_poly(fu, fv)
    jac = [
        [chart.p.diff("x"), chart.p.diff("y")],
        [chart.q.diff("x"), chart.q.diff("y")],
    ]
    tr = jac[0][0] + jac[1][1]
    det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]
    found = []
    for root in uv.real_roots(common, width):
        ts, ds = _sign_at(tr, exc, root), _sign_at(det, exc, root)
        zero = all(_sign_at(e, exc, root) == 0 for row in jac for e in row)
        if root.exact:
            val = root.lo
            tv = uv.evaluate(_restrict(tr, exc), val) if _restrict(tr, exc) else Fraction(0)
            dv = uv.evaluate(_restrict(det, exc), val) if _restrict(det, exc) else Fraction(0)
        else:
            r = root.approx()
            at = (0.0, r) if exc == "x" else (r, 0.0)
            tv, dv = float(tr.evaluate(*at)), float(det.evaluate(*at))
        point = (0.0, root.approx()) if exc == "x" else (root.approx(), 0.0)
        found.append(DivisorSingularity(root, point, classify_linear(ts, ds, zero, tv, dv)))
    return BlowupResult(spec, chart, power, tuple(found))


# numerical orbits


def _compile(poly: Polynomial) -> Callable[[float, float], float]:
    terms = [(i, j, float(c)) for (i, j), c in poly.items()]

    def f(x: float, y: float) -> float:
        return sum(c * x**i * y**j for i, j, c in terms)

    return f


@dataclass
class Trajectory:
    samples: list[tuple[float, float, float]]
    truncated: bool = False


def rk4_integrate(
    vf: VectorField, x0: float, y0: float, step: float, nsteps: int, bound: float = 1e8
) -> Trajectory:
    if step <= 0:
        raise ValueError("step must be positive")
    if nsteps < 1:
        raise ValueError("nsteps must be at least 1")
    fp, fq = _compile(vf.p), _compile(vf.q)
    x, y, t = float(x0), float(y0), 0.0
    out = [(t, x, y)]
    h = step
    for _ in range(nsteps):
        k1x, k1y = fp(x, y), fq(x, y)
        k2x, k2y = fp(x + h / 2 * k1x, y + h / 2 * k1y), fq(x + h / 2 * k1x, y + h / 2 * k1y)
        k3x, k3y = fp(x + h / 2 * k2x, y + h / 2 * k2y), fq(x + h / 2 * k2x, y + h / 2 * k2y)
        k4x, k4y = fp(x + h * k3x, y + h * k3y), fq(x + h * k3x, y + h * k3y)
        x += h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x)
        y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y)
        t += h
        if not (math.isfinite(x) and math.isfinite(y)) or math.hypot(x, y) > bound:
            return Trajectory(out, truncated=True)
        out.append((t, x, y))
    return Trajectory(out)


@dataclass(frozen=True)
class SectionReturn:
    closed: bool
    time: float | None
    x: float | None
    samples_used: int


def first_return(traj: Trajectory, tol: float = 1e-4) -> SectionReturn:
    """First upward crossing of ``{y = 0, x > 0}`` after leaving the start point."""
    s = traj.samples
    x_start = s[0][1]
    for k in range(1, len(s) - 1):
        (t0, xa, ya), (t1, xb, yb) = s[k], s[k + 1]
        if ya < 0 <= yb:
            frac = -ya / (yb - ya)
            xr = xa + frac * (xb - xa)
            if xr > 0:
                tr = t0 + frac * (t1 - t0)
                return SectionReturn(abs(xr - x_start) <= tol, tr, xr, k + 2)
    return SectionReturn(False, None, None, len(s))


def integrate_to_return(
    vf: VectorField, x0: float, y0: float, step: float, max_steps: int, tol: float = 1e-4
) -> tuple[Trajectory, SectionReturn]:
    """Integrate and cut the trajectory just after its first section return."""
    traj = rk4_integrate(vf, x0, y0, step, max_steps)
    ret = first_return(traj, tol)
    if ret.time is not None:
        traj = Trajectory(traj.samples[: ret.samples_used], traj.truncated)
    return traj, ret


# the center system


CENTER_FIELD = VectorField(Polynomial({(2, 0): 1, (0, 3): -1}), Polynomial({(1, 0): 1}))
CENTER_INTEGRAL = ExpPolynomial(
    Polynomial({(0, 3): 1, (0, 2): Fraction(3, 2), (0, 1): Fraction(3, 2), (2, 0): -1, (0, 0): Fraction(3, 4)}),
    Fraction(-2),
)
CENTER_FACTOR = ExpPolynomial(Polynomial.const(-2), Fraction(-2))
ANNULUS = (Fraction(0), Fraction(3, 4))


def section_start(h: float) -> tuple[float, float]:
    """Point on ``{y = 0, x > 0}`` with ``H = h`` for the center system."""
    if not 0 < h < 0.75:
        raise ValueError("h must lie in (0, 3/4)")
    return math.sqrt(0.75 - h), 0.0


__all__ = [
    "ANNULUS",
    "BlowupResult",
    "BlowupSpec",
    "CENTER_FACTOR",
    "CENTER_FIELD",
    "CENTER_INTEGRAL",
    "DivisorSingularity",
    "ExpPolynomial",
    "FirstIntegralCheck",
    "SectionReturn",
    "SingularityClass",
    "SingularityKind",
    "Trajectory",
    "bendixson_excludes",
    "classify_linear",
    "classify_point",
    "divergence",
    "first_return",
    "integrate_to_return",
    "invariant_axis",
    "rk4_integrate",
    "section_start",
    "sign_definite_component",
    "verify_first_integral",
    "verify_lyapunov",
    "weighted_blowup",
]

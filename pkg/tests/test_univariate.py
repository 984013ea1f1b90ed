from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sqhsys.univariate import count_roots, gcd_poly, real_roots, squarefree, upoly

small = st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0)


def _sympy_roots(coeffs):
    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    return sorted({float(r) for r in sympy.Poly(expr, x).real_roots()})


@given(small)
@settings(max_examples=60, deadline=None)
def test_roots_agree_with_sympy(coeffs):
    ours = [r.approx() for r in real_roots(upoly(coeffs))]
    theirs = _sympy_roots(coeffs)
    assert len(ours) == len(theirs)
    for a, b in zip(ours, theirs):
        assert abs(a - b) < 1e-8


def test_fourth_root_of_two():
    roots = real_roots(upoly([-2, 0, 0, 0, 1]))
    assert [round(r.approx(), 6) for r in roots] == [-1.189207, 1.189207]
    assert all(r.width <= Fraction(1, 10**10) for r in roots)


def test_rational_roots_are_exact():
    roots = real_roots(upoly([0, 1, 0, 0, 1]))
    assert [r.exact for r in roots] == [True, True]
    assert [r.lo for r in roots] == [-1, 0]


def test_sign_of_at_irrational_root():
    (neg, pos) = real_roots(upoly([-2, 0, 1]))
    # x - 1 at +-sqrt(2)
    assert pos.sign_of(upoly([-1, 1])) == 1
    assert neg.sign_of(upoly([-1, 1])) == -1
    # x^2 - 2 vanishes there
    assert pos.sign_of(upoly([-2, 0, 1])) == 0


def test_squarefree_and_gcd():
    f = upoly([1, -2, 1])  # (x - 1)^2
    assert squarefree(f) == upoly([-1, 1])
    assert gcd_poly(upoly([-1, 0, 1]), upoly([1, 1])) == upoly([1, 1])
    assert count_roots(f, Fraction(0), Fraction(2)) == 1

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqhsys.canonical import (
    CanonicalError,
    CanonicalLabel,
    Scaling,
    apply_scaling,
    canonical_form,
    canonical_forms,
    catalog,
    catalog_for_degree,
    components_coprime,
    reduce_cubic,
    reduce_field,
    reduce_quadratic,
    sign_orbit_count,
)
from sqhsys.enumerator import enumerate_all
from sqhsys.poly import Polynomial, VectorField

F = VectorField.parse
ONE = Scaling.identity()


def test_identity_scaling_is_neutral():
    vf = F("y^2 + x", "y^2 + x")
    out = apply_scaling(vf, ONE)
    assert (out.p, out.q) == (vf.p, vf.q)


def test_zero_factor_rejected():
    with pytest.raises(ValueError):
        Scaling(0, 1, 1)


def test_quadratic_normalisation_formula():
    a02, a10, b02, b10 = Fraction(3), Fraction(-2), Fraction(5), Fraction(7)
    vf = VectorField(Polynomial({(0, 2): a02, (1, 0): a10}), Polynomial({(0, 2): b02, (1, 0): b10}))
    s = Scaling(a02 * b10**2 / a10**3, a02 * b10 / a10**2, a10)
    out = apply_scaling(vf, s)
    a = a10 * b02 / (a02 * b10)
    assert out.p == Polynomial({(0, 2): 1, (1, 0): 1})
    assert out.q == Polynomial({(0, 2): a, (1, 0): 1})


def test_unit_field_unchanged_by_unit_scaling():
    vf = F("y^2", "x^3")
    out = apply_scaling(vf, Scaling(1, 1, 1))
    assert (out.p, out.q) == (vf.p, vf.q)


def test_scaling_composition():
    s, t = Scaling(2, -3, Fraction(1, 5)), Scaling(Fraction(1, 7), 4, -1)
    vf = F("y^3 + x*y", "x^3 + y^2")
    twice = apply_scaling(apply_scaling(vf, s), t)
    once = apply_scaling(vf, s.compose(t))
    assert (twice.p, twice.q) == (once.p, once.q)
    back = apply_scaling(apply_scaling(vf, s), s.inverse())
    assert (back.p, back.q) == (vf.p, vf.q)


def test_reduce_quadratic_examples():
    label, s = reduce_quadratic(F("x^2", "y^2 + x"))
    assert label.name == "A1q" and s == ONE
    label, s = reduce_quadratic(F("y^2 + x", "2*y^2 + x"))
    assert label.name == "A2q" and label.residual_params == (("a", 2),) and s == ONE
    vf = F("2*x^2", "3*y^2 + 5*x")
    label, s = reduce_quadratic(vf)
    assert label.name == "A1q"
    out = apply_scaling(vf, s)
    assert (out.p, out.q) == (F("x^2", "y^2 + x").p, F("x^2", "y^2 + x").q)


def test_reduce_quadratic_rejects_common_factor():
    with pytest.raises(CanonicalError, match="components not coprime"):
        reduce_quadratic(F("y^2 + x", "2*y^2 + 2*x"))


def test_reduce_degree_guards():
    with pytest.raises(CanonicalError):
        reduce_quadratic(F("y^2 + x", "x^3"))
    with pytest.raises(CanonicalError):
        reduce_cubic(F("x^2", "y^2 + x"))


def test_reduce_cubic_examples():
    label, s = reduce_cubic(F("-y^3 + x^2", "x"))
    assert label.name == "H1,1-" and s == ONE
    label, s = reduce_cubic(F("y^2 + x", "x^3"))
    assert label.name == "A1" and s == ONE


def test_semihomogeneous_support_unsupported():
    with pytest.raises(CanonicalError, match="semihomogeneous"):
        reduce_cubic(F("8*y^2", "x^3"))


def test_swapped_support_is_recognised():
    label, _ = reduce_cubic(F("y", "x^3 + y^2"))
    assert label.swapped and label.name == "H1,1+"


def test_irrational_scaling_round_trip():
    vf = F("2*x^2 - 3*y^3", "5*x")
    label, s = reduce_cubic(vf)
    assert label.name == "H1,1-"
    out = apply_scaling(vf, s)
    target = canonical_form(label)
    for poly, ref in ((out.p, target.p), (out.q, target.q)):
        for e, c in ref.items():
            assert abs(float(poly.coeff(*e)) - float(c)) < 1e-12


def test_catalog_shape():
    assert len(catalog()) == 50
    assert len(canonical_forms(2)) == 10
    assert len(canonical_forms(3)) == 104
    assert {e.degree for e in catalog_for_degree(2)} == {2}


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name() + (f" [{e.variant}]" if e.variant else ""))
def test_sign_parameters_match_orbit_count(entry):
    expected = 2 ** len(entry.sign_slots) * (2 if entry.residual else 1)
    assert sign_orbit_count(*entry.support) == expected


def test_canonical_forms_are_coprime_and_fixed():
    for label, vf in canonical_forms(3):
        assert components_coprime(vf)
        got, s = reduce_field(vf)
        assert got == label and s == ONE


def test_every_coprime_family_has_a_catalog_entry():
    supports = {e.support for e in catalog()}
    for n in (2, 3):
        for fam in enumerate_all(n):
            g = VectorField(
                Polynomial({e: p for e, p in zip(sorted(fam.support_p), (2, 3))}),
                Polynomial({e: p for e, p in zip(sorted(fam.support_q), (5, 7))}),
            )
            if components_coprime(g):
                assert fam.supports in supports, fam.name


def test_label_text():
    label = CanonicalLabel("D2", None, (1,), (("a", Fraction(2)),), "P{y^3} Q{x^2}")
    assert str(label) == "D2+ a=2 [P{y^3} Q{x^2}]"
    assert label.residual_constraint is not None


FORMS = canonical_forms(2) + canonical_forms(3)
factors = st.builds(
    lambda sign, num, den: sign * Fraction(num, den),
    st.sampled_from((1, -1)), st.integers(1, 9), st.integers(1, 9),
)


@given(st.sampled_from(FORMS), factors, factors, factors)
@settings(max_examples=300, deadline=None)
def test_round_trip_under_random_scaling(form, a, b, c):
    label, vf = form
    got, s = reduce_field(apply_scaling(vf, Scaling(a, b, c)))
    assert (got.id, got.k, got.signs, got.variant) == (label.id, label.k, label.signs, label.variant)
    if label.residual_params:
        assert abs(float(got.residual_params[0][1]) - float(label.residual_params[0][1])) <= 1e-10

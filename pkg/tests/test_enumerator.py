from fractions import Fraction

import pytest

from golden import DEGREE_2, DEGREE_3, REMOVED_2, REMOVED_3, mono
from sqhsys.enumerator import (
    check_family,
    enumerate_all,
    enumerate_d1_eq_1,
    enumerate_d1_gt_1,
    enumerate_single_A,
    enumeration_report,
)
from sqhsys.weights import is_weight_vector


def _table(fams):
    return {f.name: (f.support_p, f.support_q, f.lam, f.w_m.as_tuple()) for f in fams}


def _by_name(fams, name):
    return next(f for f in fams if f.name == name)


def test_degree_2_listing():
    assert _table(enumerate_all(2)) == DEGREE_2


@pytest.mark.parametrize("name", sorted(DEGREE_3))
def test_degree_3_family(name):
    assert _table(enumerate_all(3))[name] == DEGREE_3[name]


def test_degree_3_count():
    assert len(enumerate_all(3)) == 36


def test_linear_x_part():
    fams = enumerate_d1_eq_1(2)
    assert [f.name for f in fams] == ["X_{0,0,0}"]
    three = enumerate_d1_eq_1(3)
    f = _by_name(three, "X_{1,0,0}")
    assert (f.support_p, f.support_q) == (mono("y2 x"), mono("y3 xy"))
    assert f.lam == -2 and f.w_m.as_tuple() == (2, 1, 1, 3)
    f = _by_name(three, "X_{1,0,3}")
    assert f.support_q == mono("x3") and f.lam == -5 and f.w_m.as_tuple() == (2, 1, 1, 6)


def test_higher_d1_part():
    assert enumerate_d1_gt_1(2) == []
    three = enumerate_d1_gt_1(3)
    f = _by_name(three, "X_{0,0,0,0,1,1}")
    assert (f.support_p, f.support_q, f.lam) == (mono("y3 xy"), mono("y3 xy"), -1)
    f = _by_name(three, "X_{0,1,0,0,1,2}")
    assert (f.support_p, f.support_q, f.lam) == (mono("y3 x2"), mono("y2"), 1)
    assert f.w_m.as_tuple() == (3, 2, 4, 3)


def test_single_monomial_part():
    two = enumerate_single_A(2)
    assert [(f.name, f.lam, f.w_m.as_tuple()) for f in two] == [("X_{0,0,2,0,1,1}", 1, (2, 1, 3, 2))]
    three = enumerate_single_A(3)
    f = _by_name(three, "X_{1,0,2,0,2,1}")
    assert (f.support_p, f.support_q) == (mono("x2"), mono("y3 x"))
    assert f.lam == Fraction(1, 2) and f.w_m.as_tuple() == (3, 1, 4, 3)
    f = _by_name(three, "X_{0,1,3,0,1,1}")
    assert f.lam == 3 and f.w_m.as_tuple() == (2, 1, 5, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_parts_are_disjoint(n):
    p2 = {f.supports for f in enumerate_d1_gt_1(n)}
    p3 = {f.supports for f in enumerate_single_A(n)}
    assert not p2 & p3


@pytest.mark.parametrize("fn", [enumerate_all, enumerate_d1_eq_1, enumerate_d1_gt_1, enumerate_single_A])
def test_degree_below_two_rejected(fn):
    with pytest.raises(ValueError, match="degree must exceed 1"):
        fn(1)


def _removed(n):
    return [(r.support_p, r.support_q, r.w_m.as_tuple()) for r in enumeration_report(n).removed]


def test_removal_log():
    assert _removed(2) == [(mono(p), mono(q), wm) for p, q, wm in REMOVED_2]
    assert sorted(_removed(3), key=str) == sorted(((mono(p), mono(q), wm) for p, q, wm in REMOVED_3), key=str)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_family_is_consistent(n):
    for fam in enumerate_all(n):
        assert check_family(fam) == []
        for r in range(1, 5):
            assert is_weight_vector(fam.instantiate(), fam.w.nth(r))


def test_output_is_deterministic():
    assert [f.name for f in enumerate_all(3)] == [f.name for f in enumerate_all(3)]


def test_complete_mode_adds_only_new_supports():
    for n in (2, 3):
        base = {f.supports for f in enumerate_all(n)}
        full = {f.supports for f in enumerate_all(n, complete=True)}
        assert base < full
    assert len(enumerate_all(2, complete=True)) == 4
    assert len(enumerate_all(3, complete=True)) == 42

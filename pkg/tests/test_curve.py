"""Semigroups, cuspidal exponent sets, curve equations, branch parametrization."""
from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal import CurveEquation, Semigroup, cuspidal_sets
from cuspidal.curve import NotAdapted, newton_puiseux, pullback_value
from cuspidal.poly import WeightedOrder, poly_from_terms
from cuspidal.rationals import Rat
from conftest import CORPUS, coprime_pairs


@pytest.mark.parametrize("n,m", [(4, 8), (6, 9), (1, 5), (5, 5), (7, 3)])
def test_semigroup_rejects_bad_pairs(n, m):
    with pytest.raises(ValueError):
        Semigroup(n, m)


@pytest.mark.parametrize("n,m,gaps", [
    (2, 3, (1,)),
    (4, 5, (1, 2, 3, 6, 7, 11)),
    (4, 9, (1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23)),
])
def test_gap_pins(n, m, gaps):
    assert Semigroup(n, m).gaps() == gaps


@pytest.mark.parametrize("n,m", CORPUS)
def test_conductor_counts_gaps(n, m):
    sg = Semigroup(n, m)
    assert sg.conductor == (n - 1) * (m - 1)
    # exactly half of [0, c) lies outside the semigroup
    assert len(sg.gaps()) == sg.conductor // 2
    assert all(g < sg.conductor for g in sg.gaps())
    assert sg.conductor - 1 not in sg


@settings(max_examples=80, deadline=None, derandomize=True)
@given(st.sampled_from(CORPUS), st.integers(0, 400))
def test_membership_decompose_roundtrip(pair, k):
    sg = Semigroup(*pair)
    d = sg.decompose(k)
    if k in sg:
        a, b = d
        assert sg.n * a + sg.m * b == k
        assert 0 <= b < sg.n
    else:
        assert d is None


def test_elements_up_to():
    sg = Semigroup(4, 5)
    assert sg.elements_up_to(12) == (0, 4, 5, 8, 9, 10, 12)


@pytest.mark.parametrize("n,m", coprime_pairs(range(2, 8), 15))
def test_j_set_identity(n, m):
    """J = {l : l + n and l + m are both gaps}."""
    sg = Semigroup(n, m)
    sets = cuspidal_sets(sg)
    expected = tuple(l for l in range(0, sg.conductor)
                     if (l + n) not in sg and (l + m) not in sg)
    assert sets.J == expected


@pytest.mark.parametrize("n,m", CORPUS)
def test_cuspidal_set_correspondences(n, m):
    sg = Semigroup(n, m)
    sets = cuspidal_sets(sg)
    assert len(sets.P) == len(sets.J) == len(sets.M)
    for j in sets.J:
        p = sets.p_of(j)
        assert p in sets.P
        assert n * p[0] + m * p[1] - n * m == j
        assert 1 <= p[1] <= n - 1
    assert sets.M == tuple((m - 1 - sets.p_of(j)[0], n - 1 - sets.p_of(j)[1])
                           for j in sets.J)


def test_cuspidal_sets_49_pin():
    sets = cuspidal_sets(Semigroup(4, 9))
    assert sets.J == (1, 2, 6, 10)
    assert sets.P == {(7, 1), (5, 2), (6, 2), (7, 2)}
    assert sets.M == ((1, 2), (3, 1), (2, 1), (1, 1))


def test_nice_equation_terms():
    eq = CurveEquation.nice(Semigroup(4, 9), {1: Rat(1), 2: Rat(7, 18)})
    got = {t.exponent: t.coeff for t in eq.f.sorted_terms()}
    assert got == {(0, 4): 1, (9, 0): 1, (7, 1): Rat(1), (5, 2): Rat(7, 18)}
    assert eq.mu == 1
    assert eq.form == "nice"
    assert eq.nice_coeffs == {1: Rat(1), 2: Rat(7, 18)}


def test_nice_rejects_exponent_outside_j():
    with pytest.raises(ValueError):
        CurveEquation.nice(Semigroup(4, 5), {3: Rat(1)})


def test_adapted_requires_unit_times_corner():
    o = WeightedOrder(4, 5)
    # no x^m term at all: weighted initial part is not mu x^m + y^n
    f = poly_from_terms(o, {(0, 4): 1, (3, 2): 1})
    with pytest.raises(NotAdapted):
        CurveEquation.adapted(Semigroup(4, 5), f)


def test_adapted_reads_off_mu():
    o = WeightedOrder(4, 5)
    f = poly_from_terms(o, {(0, 4): 1, (5, 0): 2, (3, 2): 1})
    eq = CurveEquation.adapted(Semigroup(4, 5), f)
    assert eq.mu == 2
    assert eq.form == "adapted"


@pytest.mark.parametrize("n,m", CORPUS)
def test_parametrization_solves_the_curve(n, m):
    """Substituting the branch into f gives 0 modulo t^t_horizon."""
    sg = Semigroup(n, m)
    eq = CurveEquation.nice(sg, {j: Rat(1) for j in cuspidal_sets(sg).J})
    param = newton_puiseux(eq)
    residual = param.compose(eq.f)
    assert all(c == 0 for c in residual)
    o = eq.f.order
    assert pullback_value(eq, param, poly_from_terms(o, {(1, 0): 1})) == n
    assert pullback_value(eq, param, poly_from_terms(o, {(0, 1): 1})) == m
    assert pullback_value(eq, param, eq.f) is None


def test_parametrization_pin_49():
    eq = CurveEquation.nice(Semigroup(4, 9), {1: Rat(1)})
    param = newton_puiseux(eq)
    assert param.x_coeff == -1
    assert param.y[9] == 1
    assert param.y[10] == Rat(1, 4)
    assert param.y[11] == Rat(-1, 32)
    assert all(param.y[i] == 0 for i in range(9))


def test_parametrization_of_adapted_equation():
    o = WeightedOrder(4, 5)
    f = poly_from_terms(o, {(0, 4): 1, (5, 0): 2, (3, 2): 1})
    eq = CurveEquation.adapted(Semigroup(4, 5), f)
    param = newton_puiseux(eq)
    assert all(c == 0 for c in param.compose(eq.f))
    assert param.x_coeff == -8

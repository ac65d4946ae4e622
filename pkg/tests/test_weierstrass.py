from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from heron_curves.errors import NotOnCurve, SingularCurve, TorsionPoint
from heron_curves.heron import build_E
from heron_curves.weierstrass import (
    WeierstrassCurve,
    add,
    canonical_height,
    curves_isomorphic,
    double,
    height_sequence,
    independence_heuristic,
    multiples,
    negate,
    on_curve,
    scalar_mul,
    scale_curve,
    torsion_order,
    two_torsion,
)

from conftest import small_rationals

E88 = WeierstrassCurve(-8, 8)
E1114 = WeierstrassCurve(-11, 14)
P24 = (F(-2), F(4))


def test_membership():
    assert on_curve(E88, P24)
    assert on_curve(E88, None)
    assert not on_curve(E1114, (F(1), F(3)))


def test_group_law_examples():
    assert double(E1114, (F(1), F(2))) == (F(2), F(0))
    assert scalar_mul(E1114, 4, (F(1), F(2))) is None
    assert add(E88, P24, None) == P24


def test_add_rejects_off_curve_and_singular():
    with pytest.raises(NotOnCurve):
        add(E88, P24, (F(1), F(3)))
    with pytest.raises(SingularCurve):
        add(WeierstrassCurve(-3, 2), (F(1), F(0)), None)


def test_two_torsion_examples():
    assert two_torsion(E88) == [(F(2), F(0))]
    assert two_torsion(E1114) == [(F(2), F(0))]
    assert set(two_torsion(WeierstrassCurve(-1, 0))) == {(F(0), F(0)), (F(1), F(0)), (F(-1), F(0))}


def test_two_torsion_with_fractional_roots():
    # (x - 1/2)(x - 1/3)(x + 5/6) has no x^2 term.
    A = F(1, 6) - F(5, 12) - F(5, 18)
    B = F(5, 36)
    assert two_torsion(WeierstrassCurve(A, B)) == [(F(-5, 6), 0), (F(1, 3), 0), (F(1, 2), 0)]


@pytest.mark.parametrize(
    "E, P, order",
    [(E88, P24, None), (E1114, (F(1), F(2)), 4), (E1114, (F(2), F(0)), 2), (E88, None, 1)],
)
def test_torsion_order(E, P, order):
    assert torsion_order(E, P) == order


def test_isomorphism_examples():
    assert curves_isomorphic(E88, WeierstrassCurve(-8 * 16, 8 * 64)) == 2
    assert curves_isomorphic(E88, E88) == 1
    assert curves_isomorphic(E88, E1114) is None


def test_heights():
    seq = height_sequence(E88, P24, 3)
    assert all(h > 0 for h in seq)
    assert canonical_height(E88, P24, 3) == seq[-1]
    with pytest.raises(TorsionPoint):
        canonical_height(E88, (F(2), F(0)))
    with pytest.raises(ValueError):
        canonical_height(E88, P24, 0)


def test_height_sequence_stabilizes():
    seq = height_sequence(E88, P24, 5)
    assert abs(seq[-1] - seq[-2]) < abs(seq[1] - seq[0])


def test_independence_examples():
    E = build_E(1, F(3, 4))
    P = (F(-73, 48), F(147, 64))
    Q = (F(121, 24), F(21, 2))
    assert independence_heuristic(E, P, Q, 3, 0.01)
    assert not independence_heuristic(E, P, P, 3, 0.01)
    assert not independence_heuristic(E, P, double(E, P), 3, 0.01)


@st.composite
def curve_and_point(draw):
    # Choose the point first, then B so the point lies on the curve.
    x, y, A = draw(small_rationals(9, 5)), draw(small_rationals(9, 5)), draw(small_rationals(9, 5))
    E = WeierstrassCurve(A, y * y - x**3 - A * x)
    assume(E.elliptic)
    return E, (x, y)


@settings(max_examples=60, deadline=None)
@given(curve_and_point(), st.integers(-16, 16))
def test_double_and_add_matches_iteration(cp, k):
    E, P = cp
    it = None
    for _ in range(abs(k)):
        it = add(E, it, P if k > 0 else negate(E, P))
    assert scalar_mul(E, k, P) == it


@settings(max_examples=60, deadline=None)
@given(curve_and_point(), st.integers(1, 4), st.integers(1, 4))
def test_group_axioms(cp, i, j):
    E, P = cp
    R, S = scalar_mul(E, i, P), scalar_mul(E, j, P)
    assert add(E, P, negate(E, P)) is None
    assert add(E, P, R) == add(E, R, P)
    assert add(E, add(E, P, R), S) == add(E, P, add(E, R, S))
    for M in multiples(E, P, 3):
        assert on_curve(E, M)


@settings(max_examples=60, deadline=None)
@given(curve_and_point(), small_rationals(5, 5, nonzero=True))
def test_scaling_gives_isomorphic_curve(cp, lam):
    E, _ = cp
    E2 = scale_curve(E, lam)
    found = curves_isomorphic(E, E2)
    assert found is not None
    assert scale_curve(E, found) == E2

import time
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings

from heron_curves import genus3
from heron_curves.errors import DegenerateParams, DegenerateTriangle
from heron_curves.exact import naive_height, rational_sqrt

from conftest import small_rationals

ISO = (F(9, 16), F(3, 4), F(15, 16), F(25, 32), 1)
RIGHT = (F(9, 16), F(3, 4), F(15, 16), F(3, 4), 1)


def test_membership_examples():
    assert genus3.cq_on_curve(F(25, 32), ISO)
    assert genus3.cq_on_curve(F(7, 3), (0, 0, 0, F(7, 3), 1))
    assert not genus3.cq_on_curve(1, (1, 1, 1, 1, 1))


def test_singular_points():
    pts = genus3.singular_points(1)
    assert pts == [(0, 0, 0, 1, 1), (0, 0, 0, -1, 1)]
    for p in pts:
        assert genus3.cq_on_curve(1, p)
        with pytest.raises(DegenerateTriangle):
            genus3.triangle_from_cqpoint(1, p)


def test_special_points_u2():
    q, p = genus3.isosceles_point(2)
    assert (q, p) == (F(25, 32), ISO)
    assert p.x4 == q
    q, p = genus3.right_point(2)
    assert (q, p) == (F(9, 16), RIGHT)
    assert q * q + p.x4**2 == p.x3**2
    assert genus3.congruent_number_genus3(2) == F(27, 128)
    with pytest.raises(DegenerateParams):
        genus3.isosceles_point(1)


def test_special_triangles():
    rec = genus3.triangle_from_cqpoint(F(25, 32), ISO)
    assert rec.triangle.sides == (F(25, 32), F(25, 32), F(15, 16))
    assert "isosceles" in rec.tags
    rec = genus3.triangle_from_cqpoint(F(9, 16), RIGHT)
    assert rec.triangle.sides == (F(9, 16), F(3, 4), F(15, 16))
    assert "right" in rec.tags and rec.congruent_number == F(27, 128)
    assert genus3.cqpoint_from_triangle(F(9, 16), rec) == RIGHT


def test_search_finds_specials():
    assert genus3.search_points(F(25, 32), 16) == [ISO]
    assert genus3.search_points(F(9, 16), 4) == [RIGHT]
    for p in genus3.search_points(1, 8):
        assert genus3.cq_on_curve(1, p)


def test_search_against_brute_force():
    # Direct oracle: test every Y of bounded height for rational distances.
    q, bound = F(9, 16), 24
    expected = []
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            Y = F(a, b)
            if Y.numerator != a:
                continue
            X = Y * Y
            R, S = rational_sqrt(X * X + Y * Y), rational_sqrt((X - q) ** 2 + Y * Y)
            if R is not None and S is not None:
                expected.append((X, Y, R, S, 1))
    expected.sort(key=lambda p: (naive_height(p[1]), p[1]))
    assert genus3.search_points(q, bound) == expected


def test_search_parallel_and_runtime():
    start = time.perf_counter()
    serial = genus3.search_points(F(25, 32), 64)
    assert time.perf_counter() - start < 60
    assert genus3.search_points(F(25, 32), 64, jobs=3) == serial


@settings(max_examples=50, deadline=None)
@given(small_rationals(nonzero=True))
def test_special_families_property(u):
    assume(u not in (1, -1))
    for make in (genus3.isosceles_point, genus3.right_point):
        q, p = make(u)
        assert genus3.cq_on_curve(q, p)
        rec = genus3.triangle_from_cqpoint(q, p)
        assert rec.area == abs(q * p.x2) / 2
    q, p = genus3.right_point(u)
    assert genus3.congruent_number_genus3(u) == q * abs(p.x4) / 2 > 0

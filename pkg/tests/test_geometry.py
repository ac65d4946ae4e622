from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heron_curves.geometry import (
    ORIGIN,
    Point2,
    Rejection,
    heron_area,
    is_isosceles,
    is_right,
    make_record,
    make_triangle,
    rational_distance,
    triangle_rejection,
)

from conftest import small_rationals


def P(x, y):
    return Point2(F(x), F(y))


@pytest.mark.parametrize(
    "a, b, d",
    [
        (P(0, 0), P(3, 4), F(5)),
        (P(0, 0), P(F(-25, 9), F(125, 24)), F(425, 72)),
        (P(0, 0), P(1, 1), None),
    ],
)
def test_rational_distance(a, b, d):
    assert rational_distance(a, b) == d


def test_make_triangle_right():
    t = make_triangle(ORIGIN, P(F(3, 4), 0), P(0, 1))
    assert t.sides == (F(3, 4), F(5, 4), F(1))
    assert heron_area(t) == F(3, 8)
    assert is_right(t) and not is_isosceles(t)


@pytest.mark.parametrize(
    "pts, why",
    [((P(0, 0), P(1, 0), P(2, 0)), Rejection.DEGENERATE), ((P(0, 0), P(1, 0), P(1, 1)), Rejection.NOT_RATIONAL)],
)
def test_rejections(pts, why):
    assert make_triangle(*pts) is None
    assert triangle_rejection(*pts) is why


@pytest.mark.parametrize(
    "pts, area",
    [
        ((P(0, 0), P(F(4, 7), 0), P(F(-4, 7), F(3, 7))), F(6, 49)),
        ((P(0, 0), P(2, 0), P(1, 1)), F(1)),
    ],
)
def test_heron_area_examples(pts, area):
    t = make_triangle(*pts)
    if t is not None:
        assert heron_area(t) == area
    else:
        # (0,0),(2,0),(1,1) has irrational legs; the area is still the shoelace value.
        a, b, c = pts
        assert abs(a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y)) / 2 == area


def test_record_json():
    t = make_triangle(ORIGIN, P(F(3, 4), 0), P(0, 1))
    rec = make_record(t, {"name": "x"}).to_json()
    assert rec["kind"] == "triangle"
    assert rec["sides"] == ["3/4", "5/4", "1"]
    assert rec["area"] == "3/8"
    assert rec["tags"] == ["heron", "right"]
    assert rec["congruent_number"] == "3/8"
    assert rec["family"] == {"name": "x"}


@given(st.integers(1, 20), st.integers(1, 20), small_rationals(9, 9, nonzero=True), small_rationals(9, 9), small_rationals(9, 9))
def test_translated_pythagorean_triangle_area(a, b, scale, dx, dy):
    # Legs along the axes, shifted: Heron's formula must agree with the shoelace area.
    if a == b:
        return
    leg1, leg2 = (a * a - b * b) * scale, 2 * a * b * scale
    t = make_triangle(P(dx, dy), P(dx + leg1, dy), P(dx, dy + leg2))
    assert t is not None
    assert heron_area(t) == abs(leg1 * leg2) / 2
    assert is_right(t)
    rec = make_record(t)
    assert rec.congruent_number == rec.area

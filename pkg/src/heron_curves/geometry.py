"""Rational points, certified rational triangles, and exact areas."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, NamedTuple, Optional

from .exact import format_rational, rational_sqrt


class Point2(NamedTuple):
    x: Fraction
    y: Fraction


ORIGIN = Point2(Fraction(0), Fraction(0))


class Rejection(Enum):
    NOT_RATIONAL = "NotRational"
    DEGENERATE = "Degenerate"


def squared_distance(p: Point2, r: Point2) -> Fraction:
    dx = p[0] - r[0]
    dy = p[1] - r[1]
    return dx * dx + dy * dy


def rational_distance(p: Point2, r: Point2) -> Optional[Fraction]:
    """Exact distance between ``p`` and ``r`` if it is rational, else None."""
    return rational_sqrt(squared_distance(p, r))


def twice_signed_area(a: Point2, b: Point2, c: Point2) -> Fraction:
    return a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1])


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear rational points with rational side lengths.

    ``side01`` is |v0 v1|, ``side12`` is |v1 v2|, ``side20`` is |v2 v0|.
    Instances come from :func:`make_triangle`, which certifies both facts.
    """

    v0: Point2
    v1: Point2
    v2: Point2
    side01: Fraction
    side12: Fraction
    side20: Fraction

    @property
    def vertices(self):
        return (self.v0, self.v1, self.v2)

    @property
    def sides(self):
        return (self.side01, self.side12, self.side20)


def triangle_rejection(a: Point2, b: Point2, c: Point2) -> Optional[Rejection]:
    """Why ``make_triangle(a, b, c)`` fails, or None if it succeeds."""
    if twice_signed_area(a, b, c) == 0:
        return Rejection.DEGENERATE
    if any(rational_distance(p, r) is None for p, r in ((a, b), (b, c), (c, a))):
        return Rejection.NOT_RATIONAL
    return None


def make_triangle(a, b, c) -> Optional[Triangle]:
    """Certify ``a, b, c`` as a rational triangle; None when collinear or irrational.

    Use :func:`triangle_rejection` to learn which of the two happened.
    """
    a, b, c = (Point2(Fraction(p[0]), Fraction(p[1])) for p in (a, b, c))
    if twice_signed_area(a, b, c) == 0:
        return None
    s01 = rational_distance(a, b)
    s12 = rational_distance(b, c)
    s20 = rational_distance(c, a)
    if s01 is None or s12 is None or s20 is None:
        return None
    return Triangle(a, b, c, s01, s12, s20)


def heron_area(t: Triangle) -> Fraction:
    """Exact area from coordinates, cross-checked against Heron's formula."""
    area = abs(twice_signed_area(t.v0, t.v1, t.v2)) / 2
    a, b, c = t.sides
    s = (a + b + c) / 2
    radicand = s * (s - a) * (s - b) * (s - c)
    if radicand != area * area:
        raise AssertionError(f"Heron radicand {radicand} != area^2 {area * area}")
    return area


def is_right(t: Triangle) -> bool:
    a, b, c = sorted(t.sides)
    return a * a + b * b == c * c


def is_isosceles(t: Triangle) -> bool:
    a, b, c = t.sides
    return a == b or b == c or c == a


@dataclass(frozen=True)
class TriangleRecord:
    """A verified triangle with its area and classification.

    ``congruent_number`` is set for right triangles (their area is congruent).
    ``family`` carries the construction context (curve parameters) so that a
    verifier can re-check family-specific claims.
    """

    triangle: Triangle
    area: Fraction
    tags: FrozenSet[str]
    congruent_number: Optional[Fraction] = None
    family: dict = field(default_factory=dict, compare=False, hash=False)

    def to_json(self) -> dict:
        t = self.triangle
        out = {
            "kind": "triangle",
            "vertices": [[format_rational(v.x), format_rational(v.y)] for v in t.vertices],
            "sides": [format_rational(s) for s in t.sides],
            "area": format_rational(self.area),
            "tags": sorted(self.tags),
            "congruent_number": (
                None if self.congruent_number is None else format_rational(self.congruent_number)
            ),
        }
        if self.family:
            out["family"] = self.family
        return out


def make_record(t: Triangle, family: Optional[dict] = None) -> TriangleRecord:
    area = heron_area(t)
    tags = {"heron"}
    if is_isosceles(t):
        tags.add("isosceles")
    right = is_right(t)
    if right:
        tags.add("right")
    return TriangleRecord(
        triangle=t,
        area=area,
        tags=frozenset(tags),
        congruent_number=area if right else None,
        family=dict(family or {}),
    )

"""Triangles O, Q=(q,0), P with P on the parabola x = y^2.

Such triangles are rational points (X : Y : R : S : 1) of the genus-3 curve
C_q in P^4 cut out by

    x1^2 + x2^2 = x3^2,   (x1 - q x5)^2 + x2^2 = x4^2,   x2^2 = x1 x5.

C_q has finitely many rational points, so the search here is a bounded
exploration, not a provable enumeration.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import isqrt
from typing import List, NamedTuple, Optional, Tuple

from .errors import DegenerateParams, DegenerateTriangle, InfinitePoint, NotOnCurve
from .exact import Q, format_rational, naive_height, rational_sqrt, rationals_by_height
from .geometry import ORIGIN, Point2, TriangleRecord, make_record, make_triangle


class CqPoint(NamedTuple):
    x1: Fraction
    x2: Fraction
    x3: Fraction
    x4: Fraction
    x5: Fraction


def cqpoint(*coords) -> CqPoint:
    return CqPoint(*(Q(c) for c in coords))


def _check_q(q) -> Fraction:
    q = Q(q)
    if q == 0:
        raise DegenerateParams("q must be nonzero")
    return q


def cq_on_curve(q, p) -> bool:
    q = Q(q)
    x1, x2, x3, x4, x5 = p
    if not any(p):
        return False
    return (
        x1 * x1 + x2 * x2 == x3 * x3
        and (x1 - q * x5) ** 2 + x2 * x2 == x4 * x4
        and x2 * x2 == x1 * x5
    )


def singular_points(q) -> List[CqPoint]:
    """The two nodes (0:0:0:+-q:1); both give the degenerate 'triangle' O, Q, O."""
    q = _check_q(q)
    zero, one = Fraction(0), Fraction(1)
    return [CqPoint(zero, zero, zero, q, one), CqPoint(zero, zero, zero, -q, one)]


def is_singular_point(q, p) -> bool:
    return p[0] == p[1] == p[2] == 0


def _check_u(u) -> Fraction:
    u = Q(u)
    if u in (0, 1, -1):
        raise DegenerateParams(f"u = {u} is excluded (u must avoid 0, 1, -1)")
    return u


def isosceles_point(u) -> Tuple[Fraction, CqPoint]:
    """q = (u^2+1)^2/(8u^2) and a point giving an isosceles triangle with S = q."""
    u = _check_u(u)
    u2 = u * u
    q = (u2 + 1) ** 2 / (8 * u2)
    p = CqPoint((u2 - 1) ** 2 / (4 * u2), (u2 - 1) / (2 * u), (u2 * u2 - 1) / (4 * u2), q, Fraction(1))
    if not cq_on_curve(q, p):
        raise AssertionError(f"{p} not on C_q")
    if p.x4 != q * p.x5:
        raise AssertionError("isosceles certificate S = q failed")
    return q, p


def right_point(u) -> Tuple[Fraction, CqPoint]:
    """q = (u^2-1)^2/(4u^2) and a point giving a triangle right-angled at Q."""
    u = _check_u(u)
    u2 = u * u
    q = (u2 - 1) ** 2 / (4 * u2)
    p = CqPoint(q, (u2 - 1) / (2 * u), (u2 * u2 - 1) / (4 * u2), (u2 - 1) / (2 * u), Fraction(1))
    if not cq_on_curve(q, p):
        raise AssertionError(f"{p} not on C_q")
    if q * q + p.x4 * p.x4 != p.x3 * p.x3:
        raise AssertionError("right-angle identity q^2 + S^2 = R^2 failed")
    return q, p


def congruent_number_genus3(u) -> Fraction:
    """|(u^2 - 1)^3 / (16 u^3)|: the area q*|S|/2 of the right triangle from right_point."""
    u = _check_u(u)
    value = abs((u * u - 1) ** 3 / (16 * u**3))
    q, p = right_point(u)
    if value != q * abs(p.x4) / 2:
        raise AssertionError("congruent number disagrees with q*S/2")
    return value


def canonical_cqpoint(p) -> CqPoint:
    """x5 = 1, with the distance coordinates x3, x4 made nonnegative."""
    x1, x2, x3, x4, x5 = (Q(c) for c in p)
    if x5 == 0:
        raise InfinitePoint("x5 = 0")
    return CqPoint(x1 / x5, x2 / x5, abs(x3 / x5), abs(x4 / x5), Fraction(1))


def triangle_from_cqpoint(q, p) -> TriangleRecord:
    q = _check_q(q)
    if not cq_on_curve(q, p):
        raise NotOnCurve(f"{p} is not on C_q")
    x1, x2, x3, x4, _ = canonical_cqpoint(p)
    apex = Point2(x1, x2)
    if apex.x != apex.y * apex.y:
        raise AssertionError("apex is off the parabola x = y^2")
    t = make_triangle(ORIGIN, Point2(q, Fraction(0)), apex)
    if t is None:
        raise DegenerateTriangle(f"apex {apex} is on the line through O and Q")
    if (t.side01, t.side12, t.side20) != (abs(q), x4, x3):
        raise AssertionError("side lengths disagree with the curve point")
    return make_record(t, {"name": "genus3", "q": format_rational(q)})


def cqpoint_from_triangle(q, rec: TriangleRecord) -> CqPoint:
    q = _check_q(q)
    t = rec.triangle
    if t.v0 != ORIGIN or t.v1 != (q, 0) or t.v2.x != t.v2.y ** 2:
        raise ValueError("triangle is not O, (q,0), apex on x = y^2")
    return CqPoint(t.v2.x, t.v2.y, t.side20, t.side12, Fraction(1))


def _hits_for_heights(args) -> List[CqPoint]:
    # Apex (Y^2, Y) with Y = a/b > 0, gcd(a, b) = 1, height in [lo, hi].
    q, lo, hi = args
    c, d = q.numerator, q.denominator
    out = []
    for Y in rationals_by_height(hi, positive_only=True, start=lo):
        a, b = Y.numerator, Y.denominator
        # R^2 = a^2 (a^2 + b^2) / b^4: needs a^2 + b^2 to be a square.
        r = a * a + b * b
        if isqrt(r) ** 2 != r:
            continue
        # S^2 = ((a^2 d - c b^2)^2 + a^2 b^2 d^2) / (b^4 d^2).
        s = (a * a * d - c * b * b) ** 2 + (a * b * d) ** 2
        if isqrt(s) ** 2 != s:
            continue
        X = Y * Y
        R = rational_sqrt(X * X + Y * Y)
        S = rational_sqrt((X - q) ** 2 + Y * Y)
        out.append(CqPoint(X, Y, R, S, Fraction(1)))
    return out


def search_points(q, height_bound: int, jobs: int = 1) -> List[CqPoint]:
    """Every point of C_q with apex (Y^2, Y), 0 < Y, naive_height(Y) <= height_bound.

    The mirror apexes (Y^2, -Y) are left out: they give congruent triangles.
    Results are canonical (x5 = 1, x3, x4 >= 0) and sorted by (height of Y, Y).
    """
    q = _check_q(q)
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    if jobs > 1 and height_bound >= 32:
        edges = _split_heights(height_bound, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_hits_for_heights, [(q, lo, hi) for lo, hi in edges]))
        hits = [p for part in parts for p in part]
    else:
        hits = _hits_for_heights((q, 1, height_bound))
    for p in hits:
        if not cq_on_curve(q, p):
            raise AssertionError(f"search produced {p} off C_q")
    return sorted(hits, key=lambda p: (naive_height(p.x2), p.x2))


def _split_heights(bound: int, parts: int) -> List[Tuple[int, int]]:
    # Work at height h grows like h, so split the range into pieces of equal h^2 mass.
    edges = [1]
    for i in range(1, parts):
        edges.append(max(edges[-1] + 1, round(bound * (i / parts) ** 0.5)))
    edges = [e for e in edges if e <= bound]
    return [(lo, (edges[k + 1] - 1) if k + 1 < len(edges) else bound) for k, lo in enumerate(edges)]

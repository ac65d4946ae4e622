"""Heron triangles with base O=(0,0), Q=(q,0) and apex on the line y = mx + 1.

Such triangles correspond to rational points on the intersection of two
quadrics C_{m,q} in P^3 (coordinates (X : R : S : 1), R = |OP|, S = |PQ|),
which is isomorphic to the quartic C'_{m,q} and to the Weierstrass curve
E_{m,q}.  The maps are

    C --psi--> C' --phi--> E        (c_to_E)
    E --phi_inv--> C' --psi_inv--> C   (E_to_c)

Quartic points live in weighted projective space with weights (1, 2, 1).
All curve-level work uses intercept b = 1; a general intercept only enters
through :func:`build_IJ`, and E_{m,b,q} is isomorphic to E_{m,1,q/b}.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from .errors import (
    DegenerateParams,
    DegenerateTriangle,
    DenominatorZero,
    ExceptionalDenominator,
    InfinitePoint,
    NotOnCurve,
    SingularCurve,
    WitnessTorsionExhausted,
    ZeroSlope,
)
from .exact import Q, format_rational, is_square
from .geometry import ORIGIN, Point2, TriangleRecord, make_record, make_triangle
from .weierstrass import (
    Point,
    WeierstrassCurve,
    _add,
    on_curve,
    torsion_order,
)


class CPoint(NamedTuple):
    x1: Fraction
    x2: Fraction
    x3: Fraction
    x4: Fraction


class CQuarticPoint(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction


def cpoint(*coords) -> CPoint:
    return CPoint(*(Q(c) for c in coords))


@dataclass(frozen=True)
class HeronParams:
    m: Fraction
    q: Fraction
    b: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("m", "q", "b"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.b == 0:
            raise DegenerateParams("intercept b must be nonzero")
        if self.q == 0:
            raise DegenerateParams("q must be nonzero")

    @property
    def singular(self) -> bool:
        return self.m * self.q + self.b == 0

    def reduced(self) -> "HeronParams":
        """Equivalent parameters with intercept 1 (same curve up to isomorphism)."""
        return HeronParams(self.m, self.q / self.b)


# ---------------------------------------------------------------------------
# Curves


def build_IJ(m, b, q) -> Tuple[Fraction, Fraction]:
    """The invariants I_{m,b,q}, J_{m,b,q}; E_{m,b,q} is y^2 = x^3 - 27I x - 27J."""
    m, b, q = Q(m), Q(b), Q(q)
    m2 = m * m
    I = 256 * (
        b**4
        + 2 * b**3 * m * q
        + (5 * m2 + 4) * b**2 * q**2
        + 4 * m * b * (m2 + 1) * q**3
        + (m2 + 1) ** 2 * q**4
    )
    J = (
        4096
        * (2 * b**2 + 2 * b * m * q + (m2 + 1) * q**2)
        * (
            b**4
            + 2 * b**3 * m * q
            - b**2 * (7 * m2 + 8) * q**2
            - 8 * b * m * (m2 + 1) * q**3
            - 2 * (m2 + 1) ** 2 * q**4
        )
    )
    return I, J


def build_E(m, q) -> WeierstrassCurve:
    """The Weierstrass model E_{m,q} (intercept 1).

    The result is flagged singular (``elliptic`` False) when mq + 1 = 0.
    """
    m, q = Q(m), Q(q)
    if q == 0:
        raise DegenerateParams("q = 0 gives a degenerate base")
    m2 = m * m
    A = -Fraction(1, 3) * (
        (m2 + 1) ** 2 * q**4 + 4 * m * (m2 + 1) * q**3 + (5 * m2 + 4) * q**2 + 2 * m * q + 1
    )
    B = (
        Fraction(1, 27)
        * (2 * (m2 + 1) ** 2 * q**4 + 8 * m * (m2 + 1) * q**3 + (7 * m2 + 8) * q**2 - 2 * m * q - 1)
        * ((m2 + 1) * q**2 + 2 * m * q + 2)
    )
    # Same curve as y^2 = x^3 - 27I x - 27J rescaled by lambda = 12.
    I, J = build_IJ(m, 1, q)
    if A * 768 != -I or B * 110592 != -J:
        raise AssertionError("Weierstrass model disagrees with the I/J invariants")
    return WeierstrassCurve(A, B)


def elliptic_curve(m, q) -> WeierstrassCurve:
    E = build_E(m, q)
    if not E.elliptic:
        raise SingularCurve(f"singular curve: E_(m,q) with m={m}, q={q} (mq + 1 = 0)")
    return E


def quartic_coefficients(m, q) -> Tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """Coefficients (c4, c3, c2, c1, c0) of C': y^2 = c4 x^4 + c3 x^3 z + ... + c0 z^4."""
    m, q = Q(m), Q(q)
    s = (1 + m * q) ** 2 / 4
    return (
        s,
        q * (1 + m * q),
        (1 - m * m / 2) * q * q - m * q + Fraction(1, 2),
        -q * (1 + m * q),
        s,
    )


def c_on_curve(m, q, p) -> bool:
    m, q = Q(m), Q(q)
    x1, x2, x3, x4 = p
    if x1 == x2 == x3 == x4 == 0:
        return False
    first = (1 + m * m) * x1 * x1 + 2 * m * x1 * x4 + x4 * x4 == x2 * x2
    second = (1 + m * m) * x1 * x1 + 2 * (m - q) * x1 * x4 + (1 + q * q) * x4 * x4 == x3 * x3
    return first and second


def cprime_on_curve(m, q, p) -> bool:
    x, y, z = p
    if x == 0 and z == 0:
        return False
    c4, c3, c2, c1, c0 = quartic_coefficients(m, q)
    rhs = c4 * x**4 + c3 * x**3 * z + c2 * x**2 * z**2 + c1 * x * z**3 + c0 * z**4
    return y * y == rhs


# ---------------------------------------------------------------------------
# Normal forms


def normalize_cpoint(p) -> CPoint:
    """Projective normal form: x4 = 1 if possible, else first nonzero coordinate 1."""
    p = CPoint(*(Q(c) for c in p))
    if p.x4 != 0:
        d = p.x4
    else:
        d = next((c for c in p if c != 0), None)
        if d is None:
            raise ValueError("(0:0:0:0) is not a projective point")
    return CPoint(*(c / d for c in p))


def canonicalize_class(p) -> CPoint:
    """Representative of the triangle class: x4 = 1, x2 >= 0, x3 >= 0."""
    x1, x2, x3, x4 = (Q(c) for c in p)
    if x4 == 0:
        raise InfinitePoint("points with x4 = 0 do not correspond to triangles")
    return CPoint(x1 / x4, abs(x2 / x4), abs(x3 / x4), Fraction(1))


def normalize_quartic(p) -> CQuarticPoint:
    """Weighted normal form: (x/z, y/z^2, 1), or (1, y/x^2, 0) at infinity."""
    x, y, z = (Q(c) for c in p)
    if z != 0:
        return CQuarticPoint(x / z, y / (z * z), Fraction(1))
    if x != 0:
        return CQuarticPoint(Fraction(1), y / (x * x), Fraction(0))
    raise ValueError("x and z cannot both vanish in a weighted point")


# ---------------------------------------------------------------------------
# The isomorphisms C <-> C' <-> E


def _check_slope(m):
    if m == 0:
        raise ZeroSlope("the maps between C, C' and E are only set up for m != 0")


def _half_lead(m, q):
    # (mq + 1) / 2, the square root of the quartic's leading coefficient.
    return (m * q + 1) / 2


def psi(m, q, p) -> CQuarticPoint:
    """C_{m,q} -> C'_{m,q}."""
    m, q = Q(m), Q(q)
    _check_slope(m)
    x1, x2, x3, x4 = (Q(c) for c in p)
    x = m * x1 + x4
    z = x1 + x2
    if z == 0:
        # Only (-1/m : 1/m : +-(q + 1/m) : 1) have x1 + x2 = 0; they go to
        # the two points at infinity of C'.
        if x != 0 or x4 == 0:
            raise ExceptionalDenominator(f"psi undefined at {p}")
        x3n = x3 / x4
        s = _half_lead(m, q)
        if x3n == q + 1 / m:
            return CQuarticPoint(Fraction(1), s, Fraction(0))
        if x3n == -(q + 1 / m):
            return CQuarticPoint(Fraction(1), -s, Fraction(0))
        raise NotOnCurve(f"{p} is not on C_(m,q)")
    return normalize_quartic((x, x3 * z, z))


def psi_inv(m, q, p) -> CPoint:
    """C'_{m,q} -> C_{m,q}."""
    m, q = Q(m), Q(q)
    _check_slope(m)
    x, y, z = normalize_quartic(p)
    if z == 0:
        s = _half_lead(m, q)
        if y == s:
            return CPoint(-1 / m, 1 / m, q + 1 / m, Fraction(1))
        if y == -s:
            return CPoint(-1 / m, 1 / m, -q - 1 / m, Fraction(1))
        raise NotOnCurve(f"{p} is not on C'_(m,q)")
    # z = 1 after normalization.
    return normalize_cpoint(
        (
            (1 - x * x) / 2,
            (x * x + 1) / 2,
            y,
            (m * (x * x - 1) + 2 * x) / 2,
        )
    )


def _b(m, q):
    return m * m * q * q + 2 * m * q + q * q - 1


def _a(m, q):
    m2 = m * m
    return (
        q**6 * (m2 + 1) ** 3
        + 6 * m * q**5 * (m2 + 1) ** 2
        + 3 * q**4 * (3 * m2 - 1) * (m2 + 1)
        - 4 * m * q**3 * (m2 + 3)
        - 3 * q**2 * (3 * m2 + 8)
        + 6 * m * q
        - 1
    )


def _phi_X(m, q, x, y):
    mq1 = m * q + 1
    return (
        y * mq1
        + mq1 * mq1 * x * x / 2
        + q * mq1 * x
        + (1 - 2 * m * q + 2 * q * q - m * m * q * q) / 6
    )


def special_points(m, q) -> Tuple[Point, Point]:
    """The points (b/3, q) and (b/3, -q) of E_{m,q}, b = m^2q^2 + 2mq + q^2 - 1."""
    m, q = Q(m), Q(q)
    X = _b(m, q) / 3
    return (X, q), (X, -q)


def phi(m, q, p) -> Point:
    """C'_{m,q} -> E_{m,q}.

    At infinity: (1 : (mq+1)/2 : 0) goes to the identity of E and
    (1 : -(mq+1)/2 : 0) goes to (b/3, q).
    """
    m, q = Q(m), Q(q)
    x, y, z = normalize_quartic(p)
    mq1 = m * q + 1
    if z == 0:
        s = mq1 / 2
        if y == s:
            return None
        if y == -s:
            return special_points(m, q)[0]
        raise NotOnCurve(f"{p} is not on C'_(m,q)")
    X = _phi_X(m, q, x, y)
    Y = (mq1 / 2) * (
        2 * q * y
        + 2 * mq1 * x * y
        + mq1**2 * x**3
        + 3 * q * mq1 * x * x
        + x * (1 - m * m * q * q + 2 * q * q - 2 * m * q)
        - q * mq1
    )
    return (X, Y)


def phi_inv(m, q, P: Point) -> CQuarticPoint:
    """E_{m,q} -> C'_{m,q}."""
    m, q = Q(m), Q(q)
    mq1 = m * q + 1
    if P is None:
        return CQuarticPoint(Fraction(1), mq1 / 2, Fraction(0))
    X, Y = P
    b = _b(m, q)
    plus, minus = special_points(m, q)
    if P == plus:
        return CQuarticPoint(Fraction(1), -mq1 / 2, Fraction(0))
    if P == minus:
        # Both numerator and denominator of x vanish here; take the limit
        # along E (slope dY/dX from the curve) and solve phi's X-equation,
        # which is linear in y.
        E = build_E(m, q)
        dY = (3 * X * X + E.A) / (2 * Y)
        x = (dY - q) / mq1
        y = (X - mq1 * mq1 * x * x / 2 - q * mq1 * x - (1 - 2 * m * q + 2 * q * q - m * m * q * q) / 6) / mq1
        return CQuarticPoint(x, y, Fraction(1))
    den = b - 3 * X
    if den == 0 or mq1 == 0:
        raise ExceptionalDenominator(f"phi_inv undefined at {P}")
    x = -(3 * Y + (2 - 3 * X) * q + 2 * m * q * q + (1 + m * m) * q**3) / (mq1 * den)
    y = (54 * X**3 - 27 * b * X * X - 27 * Y * Y - 54 * q * Y + _a(m, q)) / (6 * mq1 * den * den)
    return CQuarticPoint(x, y, Fraction(1))


def c_to_E(m, q, p) -> Point:
    P = phi(m, q, psi(m, q, p))
    if not on_curve(build_E(m, q), P):
        raise AssertionError(f"c_to_E({p}) = {P} left E_(m,q)")
    return P


def E_to_c(m, q, P: Point) -> CPoint:
    """Image of P on C_{m,q}, in projective normal form (not class-canonicalized)."""
    p = psi_inv(m, q, phi_inv(m, q, P))
    if not c_on_curve(m, q, p):
        raise AssertionError(f"E_to_c({P}) = {p} left C_(m,q)")
    return p


# ---------------------------------------------------------------------------
# Triangles


def triangle_from_cpoint(m, q, p) -> TriangleRecord:
    """The triangle O, (q, 0), (X, mX + 1) for the class of ``p``."""
    m, q = Q(m), Q(q)
    if not c_on_curve(m, q, p):
        raise NotOnCurve(f"{p} is not on C_(m,q)")
    x1, x2, x3, x4 = canonicalize_class(p)
    X = x1
    apex = Point2(X, m * X + 1)
    base = Point2(q, Fraction(0))
    t = make_triangle(ORIGIN, base, apex)
    if t is None:
        raise DegenerateTriangle(f"apex {apex} is on the line through O and Q")
    if (t.side01, t.side12, t.side20) != (abs(q), x3, x2):
        raise AssertionError(f"side lengths of {t} disagree with {p}")
    rec = make_record(t, {"name": "heron", "m": format_rational(m), "q": format_rational(q)})
    if rec.area != abs(q * (m * X + 1)) / 2:
        raise AssertionError("area disagrees with |q(mX + 1)|/2")
    return rec


def cpoint_from_triangle(m, q, rec: TriangleRecord) -> CPoint:
    """Inverse of :func:`triangle_from_cpoint` (up to class)."""
    m, q = Q(m), Q(q)
    t = rec.triangle
    if t.v0 != ORIGIN or t.v1 != (q, 0) or t.v2.y != m * t.v2.x + 1:
        raise ValueError("triangle is not O, (q,0), apex on y = mx + 1")
    R, S = t.side20, t.side12
    X = (q * q + R * R - S * S) / (2 * q)
    if X != t.v2.x:
        raise AssertionError("apex abscissa disagrees with the side lengths")
    return CPoint(X, R, S, Fraction(1))


# ---------------------------------------------------------------------------
# Torsion


def two_torsion_x(m, q) -> Fraction:
    """x-coordinate of the rational 2-torsion point that E_{m,q} always has."""
    m, q = Q(m), Q(q)
    x = ((m * m + 1) * q * q + 2 * m * q + 2) / 3
    if build_E(m, q).rhs(x) != 0:
        raise AssertionError("two-torsion abscissa is not a root")
    return x


def two_torsion_cpoint(m, q) -> CPoint:
    m, q = Q(m), Q(q)
    _check_slope(m)
    two_torsion_x(m, q)
    return canonicalize_class((-1 / m, -1 / m, -q - 1 / m, 1))


def two_torsion_square_value(m, q) -> Fraction:
    """(1+m^2)((1+m^2)q^2 + 4mq + 4); a square iff all 2-torsion is rational."""
    m, q = Q(m), Q(q)
    return (1 + m * m) * ((1 + m * m) * q * q + 4 * m * q + 4)


def has_full_two_torsion(m, q) -> bool:
    return is_square(two_torsion_square_value(m, q))


def full_two_torsion_q(m, n) -> Fraction:
    """A q making the 2-torsion of E_{m,q} fully rational, for any n."""
    m, n = Q(m), Q(n)
    den = m * (1 + m * m * (2 + m * m) - n * n)
    if den == 0:
        raise DenominatorZero(f"full_two_torsion_q undefined at m={m}, n={n}")
    return (1 - m * m * (2 + 3 * m * m) + 2 * (1 + m * m) * n + n * n) / den


def order4_point(m, t) -> Tuple[Fraction, Point]:
    """q(t) and a point of exact order 4 on E_{m,q(t)}."""
    m, t = Q(m), Q(t)
    den = 1 + m * m - 4 * t * t
    if den == 0:
        raise DenominatorZero(f"1 + m^2 - 4t^2 = 0 at m={m}, t={t}")
    q = 4 * (2 * t - m) / den
    if q == 0:
        raise DegenerateParams(f"q = 0 at m={m}, t={t}")
    E = elliptic_curve(m, q)
    d2 = (m * m - 4 * t * t + 1) ** 2
    x = (
        m**4
        - 24 * m**3 * t
        + (104 * t * t + 6) * m * m
        - m * t * (160 * t * t + 24)
        + 80 * t**4
        + 24 * t * t
        + 5
    ) / (3 * d2)
    y = -2 * (3 * m * m - 8 * m * t + 4 * t * t - 1) * (m * m - 4 * m * t + 4 * t * t + 1) / d2
    P = (x, y)
    if not on_curve(E, P):
        raise AssertionError(f"order-4 point {P} not on E")
    P2 = _add(E, P, P)
    if P2 is None or P2[1] != 0 or torsion_order(E, P) != 4:
        raise AssertionError(f"{P} does not have order 4")
    return q, P


# ---------------------------------------------------------------------------
# Points of infinite order (generically)


def rank_witness_P(m, q) -> Point:
    """The point P_{m,q}; generically of infinite order, torsion at some (m, q)."""
    m, q = Q(m), Q(q)
    E = elliptic_curve(m, q)
    P = (-((2 * m * m - 1) * q * q + 4 * m * q + 1) / 3, q * (m * q + 1) ** 2)
    if not on_curve(E, P):
        raise AssertionError(f"P_(m,q) = {P} not on E")
    return P


def q_of_h(h) -> Fraction:
    h = Q(h)
    if h in (0, 1, -1):
        raise DegenerateParams(f"h = {h} gives q = 0 or is undefined")
    return (1 - h * h) / (2 * h)


def rank_witness_Q(m, h) -> Tuple[Fraction, Point]:
    """q(h) = (1 - h^2)/(2h) and the second independent point Q_{m,q(h)}."""
    m, h = Q(m), Q(h)
    q = q_of_h(h)
    E = elliptic_curve(m, q)
    x = (
        h**4 * (1 + m * m)
        - 4 * h**3 * m
        - 2 * h * h * (m * m + 3 * m - 3)
        + 4 * h * (m + 3)
        + m * m
        + 6 * m
        + 1
    ) / (12 * h * h)
    y = (m * h * h - 2 * h - m) * (h + 1) * (h * m - m - h - 1) / (4 * h**3)
    if not on_curve(E, (x, y)):
        raise AssertionError(f"Q_(m,q) = {(x, y)} not on E")
    return q, (x, y)


def cpoint_Q(h) -> CPoint:
    """The C-point (0 : 1 : (1+h^2)/(2h) : 1) matching Q_{m,q(h)}, for every m."""
    h = Q(h)
    q_of_h(h)
    return canonicalize_class((0, 1, (1 + h * h) / (2 * h), 1))


def congruent_number_A(h) -> Fraction:
    """Area of the right triangle from Q_{m,q(h)}: |(1 - h^2)/(4h)|."""
    h = Q(h)
    q_of_h(h)
    return abs((1 - h * h) / (4 * h))


def q_of_u(m, u) -> Fraction:
    m, u = Q(m), Q(u)
    den = 1 + m * m - u * u
    if den == 0:
        raise DenominatorZero(f"1 + m^2 - u^2 = 0 at m={m}, u={u}")
    if u == m:
        raise DegenerateParams("u = m gives q = 0")
    return 2 * (u - m) / den


def rank_witness_H(m, u) -> Tuple[Fraction, Point]:
    m, u = Q(m), Q(u)
    q = q_of_u(m, u)
    E = elliptic_curve(m, q)
    d = m * m - u * u + 1
    x = (
        5 * m**4
        + (6 - 10 * u) * m**3
        + (4 * u * u - 6 * u + 10) * m * m
        + 2 * (u**3 - 3 * u * u - 5 * u + 3) * m
        - u**4
        + 6 * u**3
        - 6 * u
        + 5
    ) / (3 * d * d)
    y = 2 * (m - u + 1) ** 2 * (m * m - u * m + 1) / (d * d)
    if not on_curve(E, (x, y)):
        raise AssertionError(f"H_(m,q) = {(x, y)} not on E")
    return q, (x, y)


def cpoint_H(m, u) -> CPoint:
    """C-point of the right triangle attached to H_{m,q(u,m)} (right angle at Q)."""
    m, u = Q(m), Q(u)
    q = q_of_u(m, u)
    d = m * m - u * u + 1
    p = CPoint(q, (m * m - 2 * m * u + u * u + 1) / d, -(m - 1 - u) * (m + 1 - u) / d, Fraction(1))
    if not c_on_curve(m, q, p):
        raise AssertionError(f"{p} not on C_(m,q)")
    if q * q + p.x3 * p.x3 != p.x2 * p.x2:
        raise AssertionError("triangle from H is not right-angled")
    return p


def congruent_number_H(m, u) -> Fraction:
    m, u = Q(m), Q(u)
    q_of_u(m, u)
    return abs((m - u) * (m - u - 1) * (m - u + 1) / (m * m - u * u + 1) ** 2)


# ---------------------------------------------------------------------------
# Generation


def generate_heron_triangles(m, q, count: int) -> List[TriangleRecord]:
    """The first ``count`` distinct triangles from multiples of P_{m,q}.

    Raises WitnessTorsionExhausted (carrying the partial list) if P_{m,q} is
    torsion and its multiples give fewer than ``count`` triangles.
    """
    m, q = Q(m), Q(q)
    if count < 1:
        raise ValueError("count must be >= 1")
    _check_slope(m)
    E = elliptic_curve(m, q)
    P = rank_witness_P(m, q)
    order = torsion_order(E, P)
    seen = set()
    records: List[TriangleRecord] = []
    kP = None
    k = 0
    while len(records) < count:
        k += 1
        if order is not None and k >= order:
            raise WitnessTorsionExhausted(records, order)
        kP = _add(E, kP, P)
        rec = _record_for(m, q, kP)
        if rec is None:
            continue
        key = (rec.triangle.v2, rec.triangle.side12, rec.triangle.side20)
        if key in seen:
            continue
        seen.add(key)
        records.append(rec)
    return records


def _record_for(m, q, P: Point) -> Optional[TriangleRecord]:
    c = E_to_c(m, q, P)
    if c.x4 == 0:
        return None
    try:
        return triangle_from_cpoint(m, q, c)
    except DegenerateTriangle:
        return None

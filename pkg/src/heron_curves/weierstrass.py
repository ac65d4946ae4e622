"""Short Weierstrass curves y^2 = x^3 + Ax + B over the rationals.

Affine points are ``(x, y)`` tuples of Fractions and the point at infinity is
``None``, so points compare and hash by value.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import NotOnCurve, SingularCurve, TorsionPoint
from .exact import Q, format_rational, naive_height, rational_sqrt

Point = Optional[Tuple[Fraction, Fraction]]
INFINITY: Point = None

# Mazur: the order of a rational torsion point lies in {1..10, 12}.
MAZUR_BOUND = 12


@dataclass(frozen=True)
class WeierstrassCurve:
    A: Fraction
    B: Fraction
    discriminant: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        A, B = Q(self.A), Q(self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "discriminant", -16 * (4 * A**3 + 27 * B**2))

    @property
    def elliptic(self) -> bool:
        return self.discriminant != 0

    def rhs(self, x: Fraction) -> Fraction:
        return x * x * x + self.A * x + self.B

    def to_json(self) -> dict:
        return {
            "A": format_rational(self.A),
            "B": format_rational(self.B),
            "discriminant": format_rational(self.discriminant),
        }

    def __str__(self):
        return f"y^2 = x^3 + ({self.A})x + ({self.B})"


def point(x, y) -> Point:
    return (Q(x), Q(y))


def point_to_json(P: Point):
    if P is None:
        return "infinity"
    return {"x": format_rational(P[0]), "y": format_rational(P[1])}


def point_from_json(obj) -> Point:
    if obj == "infinity":
        return None
    return (Fraction(obj["x"]), Fraction(obj["y"]))


def on_curve(E: WeierstrassCurve, P: Point) -> bool:
    if P is None:
        return True
    x, y = P
    return y * y == E.rhs(x)


def _require(E: WeierstrassCurve, *points: Point):
    if not E.elliptic:
        raise SingularCurve(f"singular curve: {E}")
    for P in points:
        if not on_curve(E, P):
            raise NotOnCurve(f"{P} is not on {E}")


def negate(E: WeierstrassCurve, P: Point) -> Point:
    if P is None:
        return None
    return (P[0], -P[1])


def _add(E: WeierstrassCurve, P: Point, R: Point) -> Point:
    # Unchecked chord-tangent addition.
    if P is None:
        return R
    if R is None:
        return P
    x1, y1 = P
    x2, y2 = R
    if x1 == x2:
        if y1 != y2 or y1 == 0:
            return None
        lam = (3 * x1 * x1 + E.A) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    return (x3, lam * (x1 - x3) - y1)


def add(E: WeierstrassCurve, P: Point, R: Point) -> Point:
    _require(E, P, R)
    return _add(E, P, R)


def double(E: WeierstrassCurve, P: Point) -> Point:
    _require(E, P)
    return _add(E, P, P)


def _mul(E: WeierstrassCurve, k: int, P: Point) -> Point:
    if k < 0:
        k, P = -k, negate(E, P)
    result = None
    addend = P
    while k:
        if k & 1:
            result = _add(E, result, addend)
        addend = _add(E, addend, addend)
        k >>= 1
    return result


def scalar_mul(E: WeierstrassCurve, k: int, P: Point) -> Point:
    """``k * P`` by double-and-add."""
    _require(E, P)
    return _mul(E, k, P)


def multiples(E: WeierstrassCurve, P: Point, count: int) -> List[Point]:
    """``[P, 2P, ..., count*P]`` by repeated addition."""
    _require(E, P)
    out = []
    acc = None
    for _ in range(count):
        acc = _add(E, acc, P)
        out.append(acc)
    return out


def two_torsion(E: WeierstrassCurve) -> List[Point]:
    """All rational points of order 2: ``(r, 0)`` with r a rational root of the cubic."""
    if not E.elliptic:
        raise SingularCurve(f"singular curve: {E}")
    return [(r, Fraction(0)) for r in _cubic_rational_roots(E.A, E.B)]


def _cubic_rational_roots(A: Fraction, B: Fraction) -> List[Fraction]:
    # With d = lcm(den A, den B) and x = r/d the cubic becomes the monic
    # integer cubic r^3 + a r + b, whose rational roots are integers (rational
    # root theorem).  Integer roots are found by exact integer bisection on
    # monotone brackets, so b never needs to be factored.
    d = math.lcm(A.denominator, B.denominator)
    a = int(A * d * d)
    b = int(B * d**3)

    def f(r):
        return r * r * r + a * r + b

    roots = set()
    for lo, hi in _real_root_brackets(a, b):
        # Integer bisection down to an interval of width 1.
        flo = f(lo)
        if flo == 0:
            roots.add(lo)
            continue
        while hi - lo > 1:
            mid = (lo + hi) // 2
            fm = f(mid)
            if fm == 0:
                lo = hi = mid
                break
            if (fm < 0) == (flo < 0):
                lo, flo = mid, fm
            else:
                hi = mid
        for r in (lo, hi):
            if f(r) == 0:
                roots.add(r)
    return sorted(Fraction(r, d) for r in roots)


def _real_root_brackets(a: int, b: int):
    # Intervals [lo, hi] with integer endpoints, each containing exactly one
    # real root of r^3 + a r + b (or a root at an endpoint).  Uses the critical
    # points +-sqrt(-a/3) when a < 0.
    def f(r):
        return r * r * r + a * r + b

    bound = 1 + max(abs(a), abs(b))  # Cauchy bound on |root|
    if a >= 0:
        return [(-bound, bound)]
    c = math.isqrt(-a // 3) if -a >= 3 else 0
    # Critical points lie in (-c-1, -c] U [c, c+1]; widen to integer points.
    left, right = -c - 1, c + 1
    pts = [-bound, left, -c, c, right, bound]
    brackets = []
    for lo, hi in zip(pts, pts[1:]):
        if lo > hi:
            continue
        flo, fhi = f(lo), f(hi)
        if flo == 0:
            brackets.append((lo, lo))
        if (flo < 0) != (fhi < 0) or fhi == 0:
            brackets.append((lo, hi))
    return brackets


def torsion_order(E: WeierstrassCurve, P: Point) -> Optional[int]:
    """Order of ``P`` if finite, else None.

    Over the rationals a torsion point has order at most 12, so if kP is not
    the identity for k <= 12 the point has infinite order.  This is a proof,
    not a heuristic.
    """
    _require(E, P)
    acc = None
    for k in range(1, MAZUR_BOUND + 1):
        acc = _add(E, acc, P)
        if acc is None:
            return k
    return None


def scale_curve(E: WeierstrassCurve, lam) -> WeierstrassCurve:
    lam = Q(lam)
    return WeierstrassCurve(lam**4 * E.A, lam**6 * E.B)


def curves_isomorphic(E1: WeierstrassCurve, E2: WeierstrassCurve) -> Optional[Fraction]:
    """A rational ``lam`` with lam^4 A1 = A2 and lam^6 B1 = B2, or None.

    When both a positive and a negative ``lam`` work the positive one is
    returned.
    """
    for E in (E1, E2):
        if not E.elliptic:
            raise SingularCurve(f"singular curve: {E}")
    A1, B1, A2, B2 = E1.A, E1.B, E2.A, E2.B
    if A1 == 0 or A2 == 0:
        if A1 != A2:
            return None
        lam = _rational_root(B2 / B1, 6)
    elif B1 == 0 or B2 == 0:
        if B1 != B2:
            return None
        lam = _rational_root(A2 / A1, 4)
    else:
        # lam^2 = (B2/B1) / (A2/A1); the sign of lam is immaterial.
        lam = rational_sqrt(A1 * B2 / (A2 * B1))
    if lam is None:
        return None
    if lam**4 * A1 == A2 and lam**6 * B1 == B2:
        return lam
    return None


def _rational_root(r: Fraction, n: int) -> Optional[Fraction]:
    # Positive rational n-th root when it exists (n even needs r > 0).
    if r <= 0:
        return None
    num = _int_root(r.numerator, n)
    den = _int_root(r.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_root(n: int, k: int) -> Optional[int]:
    if n < 0:
        return None
    lo, hi = 0, 1
    while hi**k <= n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**k == n else None


def _log_height(x: Fraction) -> float:
    # math.log accepts arbitrarily large ints.
    return math.log(naive_height(x))


def height_sequence(E: WeierstrassCurve, P: Point, depth: int) -> List[float]:
    """``[log H(x(2^n P)) / 4^n for n = 1..depth]``.

    Raises TorsionPoint for torsion input, whose canonical height is exactly 0.
    """
    if not 1 <= depth <= 5:
        raise ValueError(f"depth must lie in [1, 5], got {depth}")
    if P is None:
        raise TorsionPoint("the identity has canonical height 0")
    order = torsion_order(E, P)
    if order is not None:
        raise TorsionPoint(f"point of order {order} has canonical height 0")
    out = []
    R = P
    for n in range(1, depth + 1):
        R = _add(E, R, R)
        out.append(_log_height(R[0]) / 4**n)
    return out


def canonical_height(E: WeierstrassCurve, P: Point, depth: int = 3) -> float:
    """Approximate canonical height by the doubling limit, truncated at ``depth``.

    Heights here use log max(|num|, den) of the x-coordinate, so values are
    twice the "1/2 log" normalization some texts use.
    """
    return height_sequence(E, P, depth)[-1]


def _height_or_zero(E, P, depth):
    if P is None or torsion_order(E, P) is not None:
        return 0.0
    return canonical_height(E, P, depth)


def height_pairing(E: WeierstrassCurve, P: Point, R: Point, depth: int = 3) -> float:
    hp = _height_or_zero(E, P, depth)
    hr = _height_or_zero(E, R, depth)
    hs = _height_or_zero(E, _add(E, P, R), depth)
    return (hs - hp - hr) / 2


def gram_determinant(E: WeierstrassCurve, P: Point, R: Point, depth: int = 3) -> float:
    hp = canonical_height(E, P, depth)
    hr = canonical_height(E, R, depth)
    pair = height_pairing(E, P, R, depth)
    return hp * hr - pair * pair


def independence_heuristic(
    E: WeierstrassCurve, P: Point, R: Point, depth: int = 3, tolerance: float = 0.01
) -> bool:
    """Heuristic (not a proof) that P and R are independent in E(Q).

    Estimates the 2x2 height-pairing Gram determinant with truncated canonical
    heights and compares it with ``tolerance``.
    """
    for X in (P, R):
        _require(E, X)
        if X is None or torsion_order(E, X) is not None:
            raise TorsionPoint(f"{X} is torsion")
    return gram_determinant(E, P, R, depth) > tolerance

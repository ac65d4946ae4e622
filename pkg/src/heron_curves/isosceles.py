"""Rational isosceles triangles over a fixed base O P1.

The apex P lies on the perpendicular bisector L of O P1.  Writing
X = X1/2 + (Y1/2) * delta, the equal legs R satisfy 4R^2/|OP1|^2 - 1 = delta^2,
a conic with the rational point (R, delta) = (|OP1|^2/(2 Y1), X1/Y1).  Lines
of slope t through that point give every rational solution.

``branch`` is the sign in front of ``delta``: branch +1 takes
X = X1/2 + (Y1/2) delta(t), branch -1 the mirror apex X1/2 - (Y1/2) delta(t).
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import DenominatorZero, DegenerateParams
from .exact import Q, naive_height, rational_sqrt, rationals_by_height
from .geometry import ORIGIN, Point2, squared_distance

# The node of the singular cubic y^2 = c x (x + 1)^2.
SINGULAR_CUBIC_NODE = (Fraction(-1), Fraction(0))


@dataclass(frozen=True)
class BaseConfig:
    X1: Fraction
    Y1: Fraction
    base_length: Fraction

    @classmethod
    def from_point(cls, X1, Y1) -> "BaseConfig":
        X1, Y1 = Q(X1), Q(Y1)
        if X1 == 0 and Y1 == 0:
            raise DegenerateParams("P1 must differ from the origin")
        base = rational_sqrt(X1 * X1 + Y1 * Y1)
        if base is None:
            raise DegenerateParams(f"|O P1| is irrational for P1 = ({X1}, {Y1})")
        return cls(X1, Y1, base)

    @property
    def p1(self) -> Point2:
        return Point2(self.X1, self.Y1)

    @property
    def norm(self) -> Fraction:
        return self.X1 * self.X1 + self.Y1 * self.Y1


@dataclass(frozen=True)
class IsoscelesSolution:
    apex: Point2
    leg: Fraction
    t: Fraction
    branch: int


def recover_delta(cfg: BaseConfig, sol: IsoscelesSolution) -> Fraction:
    """delta = branch (2X - X1) / Y1, with axes swapped when Y1 = 0."""
    if cfg.Y1 != 0:
        return sol.branch * (2 * sol.apex.x - cfg.X1) / cfg.Y1
    return sol.branch * (2 * sol.apex.y - cfg.Y1) / cfg.X1


def _solve(X1, Y1, t, branch) -> Optional[Tuple[Point2, Fraction]]:
    # Requires Y1 != 0.
    n = X1 * X1 + Y1 * Y1
    den = t * t * n - 4
    if den == 0:
        raise DenominatorZero(f"t^2 (X1^2 + Y1^2) = 4 at t = {t}")
    delta = (t * t * X1 * n - 4 * t * n + 4 * X1) / (Y1 * (4 - t * t * n))
    if delta == 0:
        # Apex at the midpoint of O P1: collinear, no triangle.
        return None
    X = X1 / 2 + branch * Y1 * delta / 2
    # Y from L: 2 X1 X + 2 Y1 Y = X1^2 + Y1^2.
    Y = (n - 2 * X1 * X) / (2 * Y1)
    leg = abs(((t * n - 2 * X1) ** 2 + 4 * Y1 * Y1) / (2 * Y1 * den))
    return Point2(X, Y), leg


def isosceles_from_parameter(cfg: BaseConfig, t, branch: int = 1) -> Optional[IsoscelesSolution]:
    """The apex for parameter ``t`` on the given branch, or None if degenerate."""
    t = Q(t)
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    if cfg.Y1 != 0:
        res = _solve(cfg.X1, cfg.Y1, t, branch)
        if res is None:
            return None
        apex, leg = res
    else:
        # Reflect across y = x so the base is not horizontal, then reflect back.
        res = _solve(cfg.Y1, cfg.X1, t, branch)
        if res is None:
            return None
        (x, y), leg = res
        apex = Point2(y, x)
    if squared_distance(ORIGIN, apex) != leg * leg or squared_distance(apex, cfg.p1) != leg * leg:
        raise AssertionError(f"apex {apex} is not equidistant with leg {leg}")
    if not 2 * leg > cfg.base_length:
        return None
    return IsoscelesSolution(apex, leg, t, branch)


def _solutions_for(args):
    cfg, t = args
    out = []
    for branch in (1, -1):
        try:
            sol = isosceles_from_parameter(cfg, t, branch)
        except DenominatorZero:
            continue
        if sol is not None:
            out.append(sol)
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("HERON_CURVES_JOBS", "1")))
    except ValueError:
        return 1


def enumerate_isosceles(cfg: BaseConfig, height_bound: int, jobs: Optional[int] = None) -> List[IsoscelesSolution]:
    """All solutions with naive_height(t) <= height_bound, both branches.

    Deduplicated by apex and sorted by (height of leg, apex x).
    """
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    jobs = default_jobs() if jobs is None else jobs
    work = [(cfg, t) for t in rationals_by_height(height_bound)]
    if jobs > 1 and len(work) > 64:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_solutions_for, work, chunksize=64))
    else:
        chunks = [_solutions_for(w) for w in work]
    by_apex = {}
    for chunk in chunks:
        for sol in chunk:
            by_apex.setdefault(sol.apex, sol)
    return sorted(by_apex.values(), key=lambda s: (naive_height(s.leg), s.apex.x, s.apex.y))


def singular_cubic_coefficient(cfg: BaseConfig) -> Fraction:
    """c = -16 (X1^2 + Y1^2) in the nodal cubic y^2 = c x (x + 1)^2."""
    return -16 * cfg.norm


def on_singular_cubic(cfg: BaseConfig, x, y) -> bool:
    x, y = Q(x), Q(y)
    return y * y == singular_cubic_coefficient(cfg) * x * (x + 1) ** 2

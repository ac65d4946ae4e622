"""Rational triangles from rational points on algebraic curves, in exact arithmetic."""

from .errors import HeronCurvesError
from .exact import Rational, format_rational, parse_rational
from .geometry import Point2, Triangle, TriangleRecord
from .weierstrass import WeierstrassCurve

__all__ = [
    "HeronCurvesError",
    "Point2",
    "Rational",
    "Triangle",
    "TriangleRecord",
    "WeierstrassCurve",
    "format_rational",
    "parse_rational",
]
__version__ = "0.1.0"

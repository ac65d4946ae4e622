"""Exact rational scalars.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it serves as the rational type directly.  This module adds the
pieces the rest of the package needs on top of it: square detection, naive
heights, and the ``p/q`` text format.
"""

from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def Q(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction.  Floats are rejected on purpose."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string such as '0.5'")
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"-p/q"``, ``"n"`` or a decimal like ``"0.5"`` exactly."""
    text = text.strip()
    if not text or any(c in text for c in "eEjJ_ ") or text.lower().lstrip("+-") in ("nan", "inf", "infinity"):
        raise ValueError(f"not a rational number: {text!r}")
    return Fraction(text)


def format_rational(r: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(r))


def integer_sqrt(n: int) -> Optional[int]:
    """Return ``s >= 0`` with ``s*s == n`` or None."""
    if n < 0:
        return None
    s = isqrt(n)
    return s if s * s == n else None


def is_square(r: RationalLike) -> bool:
    return rational_sqrt(r) is not None


def rational_sqrt(r: RationalLike) -> Optional[Fraction]:
    """Nonnegative rational square root of ``r``, or None if ``r`` is not a square.

    A reduced fraction is a square iff numerator and denominator both are.
    """
    r = Q(r)
    num = integer_sqrt(r.numerator)
    if num is None:
        return None
    den = integer_sqrt(r.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def naive_height(r: RationalLike) -> int:
    r = Q(r)
    return max(abs(r.numerator), r.denominator)


def rationals_by_height(bound: int, *, positive_only: bool = False, start: int = 1):
    """Yield every reduced rational with ``start <= naive height <= bound`` once.

    Values come grouped by height; inside a group they increase, and each
    positive value is followed by its negative.  Zero (height 1) comes first
    unless ``positive_only`` is set.
    """
    if bound < 1:
        return
    if not positive_only and start <= 1:
        yield Fraction(0)
    for h in range(max(start, 1), bound + 1):
        # Fractions of height exactly h: a/h with a < h, or h/b with b <= h.
        group = [Fraction(a, h) for a in range(1, h) if gcd(a, h) == 1]
        group += [Fraction(h, b) for b in range(1, h + 1) if gcd(h, b) == 1]
        group.sort()
        for v in group:
            yield v
            if not positive_only:
                yield -v

"""Exception hierarchy.

Every domain failure derives from :class:`HeronCurvesError` so the CLI can map
them to exit code 1 without catching programming errors.
"""


class HeronCurvesError(ValueError):
    """Base class for domain errors (bad parameters, degenerate objects)."""


class DenominatorZero(HeronCurvesError):
    pass


class DegenerateParams(HeronCurvesError):
    pass


class SingularCurve(HeronCurvesError):
    def __init__(self, msg="singular curve"):
        super().__init__(msg)


class NotOnCurve(HeronCurvesError):
    pass


class TorsionPoint(HeronCurvesError):
    """Raised where a point of infinite order is required."""


class ExceptionalDenominator(HeronCurvesError):
    pass


class InfinitePoint(HeronCurvesError):
    pass


class DegenerateTriangle(HeronCurvesError):
    pass


class ZeroSlope(HeronCurvesError):
    pass


class WitnessTorsionExhausted(HeronCurvesError):
    """The generating point is torsion; ``records`` holds what it produced."""

    def __init__(self, records, order):
        self.records = records
        self.order = order
        super().__init__(
            f"witness point has finite order {order}; "
            f"only {len(records)} triangle(s) obtainable"
        )

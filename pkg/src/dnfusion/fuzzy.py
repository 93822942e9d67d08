"""Trapezoidal fuzzy numbers and exact areas of their min/max envelopes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import pairwise

from .errors import UndefinedDegree

__all__ = [
    "TrapezoidalFuzzyNumber",
    "intersection_area",
    "union_area",
    "non_exclusive_degree",
]

# Grid points closer than this are merged before integration.
_DEDUP_REL = 1e-12


@dataclass(frozen=True)
class TrapezoidalFuzzyNumber:
    """Membership function that is 0 outside [a, d], 1 on [b, c], linear between.

    Degenerate breakpoints are allowed: ``b == c`` gives a triangular number and
    ``a == b == c == d`` a crisp point. When an edge has zero width the flat side
    wins, so membership at that breakpoint is 1.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"breakpoint {name} must be a number, got {value!r}")
            if not math.isfinite(value):
                raise ValueError(f"breakpoint {name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if not self.a <= self.b <= self.c <= self.d:
            raise ValueError(
                "breakpoints must satisfy a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )
        # a support wider than a float can measure would turn areas into NaN
        if not math.isfinite(self.d - self.a):
            raise ValueError(f"support width d - a overflows, got [{self.a}, {self.d}]")

    def membership(self, x: float) -> float:
        """Membership degree of ``x``, a value in [0, 1]."""
        if x < self.a or x > self.d:
            return 0.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        if x <= self.c:
            return 1.0
        if x < self.d:
            return (self.d - x) / (self.d - self.c)
        return 0.0

    def area(self) -> float:
        """Integral of the membership function, ((d - a) + (c - b)) / 2."""
        return 0.5 * ((self.d - self.a) + (self.c - self.b))

    @property
    def support(self) -> tuple[float, float]:
        """Closed interval outside which membership is zero."""
        return (self.a, self.d)

    def shift(self, offset: float) -> TrapezoidalFuzzyNumber:
        """The same shape translated along the axis by ``offset``."""
        return TrapezoidalFuzzyNumber(
            self.a + offset, self.b + offset, self.c + offset, self.d + offset
        )


def _pieces(t: TrapezoidalFuzzyNumber) -> list[tuple[float, float, float, float]]:
    # Nonzero-width linear pieces of the membership graph as (x0, x1, y0, y1).
    out = []
    if t.b > t.a:
        out.append((t.a, t.b, 0.0, 1.0))
    if t.c > t.b:
        out.append((t.b, t.c, 1.0, 1.0))
    if t.d > t.c:
        out.append((t.c, t.d, 1.0, 0.0))
    return out


def _crossing(
    p: tuple[float, float, float, float], q: tuple[float, float, float, float]
) -> float | None:
    # Interior intersection point of two linear pieces, if one exists. The
    # formula negates both numerator and denominator under an argument swap,
    # so the computed point is bit-identical either way.
    px0, px1, py0, py1 = p
    qx0, qx1, qy0, qy1 = q
    lo = px0 if px0 > qx0 else qx0
    hi = px1 if px1 < qx1 else qx1
    if lo >= hi:
        return None
    sp = (py1 - py0) / (px1 - px0)
    sq = (qy1 - qy0) / (qx1 - qx0)
    if sp == sq:
        return None
    x = ((qy0 - sq * qx0) - (py0 - sp * px0)) / (sp - sq)
    if lo <= x <= hi:
        return x
    return None


def _grid(t1: TrapezoidalFuzzyNumber, t2: TrapezoidalFuzzyNumber) -> list[float]:
    span = max(t1.d, t2.d) - min(t1.a, t2.a)
    if not math.isfinite(span):
        raise ValueError(f"joint support of {t1} and {t2} overflows")
    points = [t1.a, t1.b, t1.c, t1.d, t2.a, t2.b, t2.c, t2.d]
    for p in _pieces(t1):
        for q in _pieces(t2):
            x = _crossing(p, q)
            if x is not None:
                points.append(x)
    points.sort()
    # near-duplicate crossings are merged relative to the joint span so that
    # narrow but genuine supports never collapse to a single point
    tol = span * _DEDUP_REL
    merged = [points[0]]
    for x in points[1:]:
        if x - merged[-1] > tol:
            merged.append(x)
    return merged


def _envelope_areas(
    t1: TrapezoidalFuzzyNumber, t2: TrapezoidalFuzzyNumber
) -> tuple[float, float]:
    # Between consecutive grid points both memberships are linear and do not
    # cross, so min and max are linear there and the midpoint value integrates
    # each one exactly.
    grid = _grid(t1, t2)
    lows: list[float] = []
    highs: list[float] = []
    for x0, x1 in pairwise(grid):
        width = x1 - x0
        mid = 0.5 * (x0 + x1)
        f = t1.membership(mid)
        g = t2.membership(mid)
        if f <= g:
            lows.append(width * f)
            highs.append(width * g)
        else:
            lows.append(width * g)
            highs.append(width * f)
    return math.fsum(lows), math.fsum(highs)


def intersection_area(t1: TrapezoidalFuzzyNumber, t2: TrapezoidalFuzzyNumber) -> float:
    """Integral of the pointwise minimum of the two membership functions."""
    return _envelope_areas(t1, t2)[0]


def union_area(t1: TrapezoidalFuzzyNumber, t2: TrapezoidalFuzzyNumber) -> float:
    """Integral of the pointwise maximum of the two membership functions."""
    return _envelope_areas(t1, t2)[1]


def non_exclusive_degree(t1: TrapezoidalFuzzyNumber, t2: TrapezoidalFuzzyNumber) -> float:
    """Intersection area over union area, a value in [0, 1].

    When both shapes are crisp points the ratio is taken in the limit: 1.0 if
    the points coincide, 0.0 otherwise. A zero union outside that convention
    raises UndefinedDegree, which valid trapezoids cannot trigger.
    """
    s, u = _envelope_areas(t1, t2)
    if u <= 0.0:
        if t1.area() == 0.0 and t2.area() == 0.0:
            return 1.0 if t1.a == t2.a else 0.0
        raise UndefinedDegree(f"union area is zero for {t1} and {t2}")
    return s / u

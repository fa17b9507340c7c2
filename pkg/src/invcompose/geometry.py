"""Exact plane geometry for the two problem groups.

All coordinates are :class:`fractions.Fraction`; no predicate ever touches a
float, so "equal areas" or "parallel" are decided without tolerances.

Group I: a triangle ABC, a line g through C with direction ``d`` and a
point M = C + s*d on it.  Group II: a quadrilateral ABCD whose diagonals
AC and BD cross at an interior point O.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

Rat = Fraction


class DegenerateConfig(ValueError):
    """A configuration violates its context invariants."""


def _rat(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use Fraction, int or 'p/q' strings")
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _rat(self.x))
        object.__setattr__(self, "y", _rat(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> Fraction:
    return u.x * v.x + u.y * v.y


def norm2(u: Point) -> Fraction:
    return dot(u, u)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return cross(q - p, r - p) == 0


def reflect(p: Point, origin: Point, direction: Point) -> Point:
    """Mirror ``p`` across the line ``origin + span(direction)``."""
    rel = p - origin
    foot = direction * (dot(rel, direction) / norm2(direction))
    return origin + foot * 2 - rel


def triangle_area(p: Point, q: Point, r: Point) -> Fraction:
    """Unsigned area by the shoelace formula."""
    twice = p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y)
    return abs(twice) / 2


# ---------------------------------------------------------------- group I

@dataclass(frozen=True)
class GroupIConfig:
    A: Point
    B: Point
    C: Point
    d: Point
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", _rat(self.s))
        if collinear(self.A, self.B, self.C):
            raise DegenerateConfig("A, B, C are collinear")
        if self.d.is_zero():
            raise DegenerateConfig("direction of g is zero")
        if self.s == 0:
            raise DegenerateConfig("M coincides with C")

    @property
    def M(self) -> Point:
        return self.C + self.d * self.s

    def points(self) -> dict:
        return {"A": self.A, "B": self.B, "C": self.C, "d": self.d, "M": self.M}


def t_triangle_line_point(c: GroupIConfig) -> bool:
    return not collinear(c.A, c.B, c.C) and not c.d.is_zero() and c.s != 0


def p1_median(c: GroupIConfig) -> bool:
    return cross(c.d, midpoint(c.A, c.B) - c.C) == 0


def p2_parallel(c: GroupIConfig) -> bool:
    return cross(c.d, c.B - c.A) == 0


def r_equal_areas(c: GroupIConfig) -> bool:
    # both triangles must exist, not merely have equal (zero) area
    amc = triangle_area(c.A, c.M, c.C)
    bmc = triangle_area(c.B, c.M, c.C)
    return amc != 0 and amc == bmc


# --------------------------------------------------------------- group II

@dataclass(frozen=True)
class RatioReport:
    alpha: Fraction
    beta: Fraction
    lam: Optional[Fraction] = None

    @property
    def ao_oc(self) -> Fraction:
        return self.alpha / (1 - self.alpha)

    @property
    def bo_od(self) -> Fraction:
        return self.beta / (1 - self.beta)


def _diagonal_parameters(A, B, C, D) -> Tuple[Fraction, Fraction]:
    u = C - A
    v = D - B
    w = B - A
    denom = cross(u, v)
    if denom == 0:
        raise DegenerateConfig("diagonals AC and BD are parallel")
    return cross(w, v) / denom, cross(w, u) / denom


@dataclass(frozen=True)
class GroupIIConfig:
    A: Point
    B: Point
    C: Point
    D: Point

    def __post_init__(self):
        pts = (self.A, self.B, self.C, self.D)
        for i in range(4):
            for j in range(i + 1, 4):
                for k in range(j + 1, 4):
                    if collinear(pts[i], pts[j], pts[k]):
                        raise DegenerateConfig("three vertices are collinear")
        alpha, beta = _diagonal_parameters(*pts)
        if not (0 < alpha < 1 and 0 < beta < 1):
            raise DegenerateConfig("diagonals do not cross at an interior point")

    def points(self) -> dict:
        return {"A": self.A, "B": self.B, "C": self.C, "D": self.D}


def diagonal_intersection(c: GroupIIConfig) -> Tuple[Point, RatioReport]:
    """Return O = AC ∩ BD and the parameters O = A + α(C−A) = B + β(D−B)."""
    alpha, beta = _diagonal_parameters(c.A, c.B, c.C, c.D)
    O = c.A + (c.C - c.A) * alpha
    lam = alpha / (1 - alpha) if alpha == beta else None
    return O, RatioReport(alpha, beta, lam)


def t_quadrilateral_diagonals(c: GroupIIConfig) -> bool:
    try:
        GroupIIConfig(c.A, c.B, c.C, c.D)
    except DegenerateConfig:
        return False
    return True


def p1_parallel_sides(c: GroupIIConfig) -> bool:
    return cross(c.B - c.A, c.D - c.C) == 0


def p2_equal_sides(c: GroupIIConfig) -> bool:
    return norm2(c.B - c.A) == norm2(c.D - c.C)


def r_equal_ratios(c: GroupIIConfig) -> Optional[RatioReport]:
    """The ratio report when AO/OC = BO/OD, otherwise None."""
    _, report = diagonal_intersection(c)
    return report if report.lam is not None else None

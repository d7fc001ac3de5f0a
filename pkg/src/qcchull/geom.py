"""Exact planar primitives on integer points.

Every predicate in this module is decided with integer (or exact
rational) arithmetic; there is no floating point anywhere.  Points are
immutable pairs of Python ints, so intermediate products never
overflow or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

# Exact rational scalar used for vertical-axis positions and dual-line
# slopes.  fractions.Fraction already guarantees a canonical reduced
# form with a positive denominator.
Rational = Fraction


@dataclass(frozen=True)
class Point:
    """An exact integer point in the plane."""

    x: int
    y: int


class Turn(Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of triangle (o, a, b).

    Positive iff the path o -> a -> b turns left.
    """
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> Turn:
    s = cross(p, q, r)
    if s > 0:
        return Turn.LEFT
    if s < 0:
        return Turn.RIGHT
    return Turn.COLLINEAR


def dominates(p: Point, q: Point) -> bool:
    """True iff p beats q strictly in both coordinates."""
    return p.x > q.x and p.y > q.y


def lex_less(p: Point, q: Point) -> bool:
    """Lexicographic order: first by x, then by y."""
    return (p.x, p.y) < (q.x, q.y)


def sq_dist(p: Point, q: Point) -> int:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def angle_compare(ps: Point, pc: Point, u: Point, v: Point) -> int:
    """Three-way rank of candidates u, v for the next hull vertex after pc.

    Returns +1 when u ranks higher, -1 when v ranks higher, 0 when they
    coincide.  u ranks higher exactly when the edge (pc, u) keeps v
    strictly below it; collinear candidates are ranked farther-first so
    that interior collinear points can never win.  The incoming vertex
    ps fixes the sweep the order is read against; the decision itself
    only needs orientation and squared-distance tests.  The result is a
    total order whenever all candidates lie in a common half-plane
    through pc (as they do along an upper-hull march, where candidates
    sit strictly to the right).
    """
    if u == pc or v == pc:
        raise ValueError("angle_compare: candidate coincides with the pivot")
    if ps == pc:
        raise ValueError("angle_compare: degenerate incoming edge")
    if u == v:
        return 0
    s = cross(pc, u, v)
    if s < 0:
        return 1
    if s > 0:
        return -1
    du = sq_dist(pc, u)
    dv = sq_dist(pc, v)
    if du > dv:
        return 1
    if du < dv:
        return -1
    return 0


@dataclass(frozen=True)
class DualLine:
    """The line y = a*x - b, the dual of a point about a vertical axis."""

    a: Rational
    b: int


def dualize(p: Point, axis_x: Rational) -> DualLine:
    """Map a point to its dual line about the vertical line x = axis_x.

    The plane is shifted so the axis becomes x = 0; the shifted point
    (p.x - axis_x, p.y) then maps to the line y = (p.x - axis_x)*x - p.y.
    """
    return DualLine(Fraction(p.x) - Fraction(axis_x), p.y)

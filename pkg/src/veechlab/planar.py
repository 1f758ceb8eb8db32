"""Exact planar vectors over the real cyclotomic subfield."""

from __future__ import annotations

from .field import RealAlg


class Vec2:
    __slots__ = ("x", "y")

    def __init__(self, x: RealAlg, y: RealAlg):
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, *a):
        raise AttributeError("Vec2 is immutable")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, scalar) -> Vec2:
        return Vec2(self.x * scalar, self.y * scalar)

    __rmul__ = __mul__

    def cross(self, other: Vec2) -> RealAlg:
        return self.x * other.y - self.y * other.x

    def dot(self, other: Vec2) -> RealAlg:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> RealAlg:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def is_parallel(self, other: Vec2) -> bool:
        return self.cross(other).is_zero()

    def key(self):
        return (self.x.key(), self.y.key())

    def __eq__(self, other):
        if not isinstance(other, Vec2):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def to_json(self):
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    def approx(self, digits: int = 20):
        return (self.x.approx(digits), self.y.approx(digits))

    def __repr__(self):
        return "Vec2(%s, %s)" % (self.x.approx(8).strip(), self.y.approx(8).strip())


def vzero(N: int) -> Vec2:
    return Vec2(RealAlg.zero(N), RealAlg.zero(N))


def _in_closed_small_arc(u: Vec2, v: Vec2, w: Vec2) -> bool:
    # closed CCW arc from u to v of angle < pi
    cu = u.cross(w).sign()
    if cu == 0:
        return u.dot(w).sign() > 0
    cv = w.cross(v).sign()
    if cv == 0:
        return v.dot(w).sign() > 0
    return cu > 0 and cv > 0


def ccw_arc_contains(a: Vec2, b: Vec2, r: Vec2) -> bool:
    """Whether r lies in the half-open CCW arc (a, b] of directions.

    The arc is the set of directions swept rotating counterclockwise
    from a to b, excluding a, including b.  All vectors nonzero; the
    swept angle is assumed to be in (0, 2*pi).
    """
    car = a.cross(r).sign()
    if car == 0 and a.dot(r).sign() > 0:  # r parallel to a: excluded
        return False
    cbr = b.cross(r).sign()
    if cbr == 0 and b.dot(r).sign() > 0:  # r parallel to b: included
        return True
    cab = a.cross(b).sign()
    if cab == 0:
        if a.dot(b).sign() > 0:
            # degenerate arc (0 or 2*pi); simple-polygon corners exclude this
            raise ValueError("degenerate arc")
        return car > 0  # arc of exactly pi
    if cab > 0:
        return car > 0 and cbr < 0  # arc smaller than pi
    # arc larger than pi: complement is the closed CCW arc from b to a
    return not _in_closed_small_arc(b, a, r)


def strictly_inside_cone(a: Vec2, b: Vec2, w: Vec2) -> bool:
    """Whether direction w points strictly inside the CCW cone from a to b."""
    caw = a.cross(w).sign()
    if caw == 0 and a.dot(w).sign() > 0:
        return False  # along boundary ray a
    cwb = w.cross(b).sign()
    if cwb == 0 and w.dot(b).sign() > 0:
        return False  # along boundary ray b
    cab = a.cross(b).sign()
    if cab == 0:
        if a.dot(b).sign() > 0:
            raise ValueError("degenerate cone")
        return caw > 0  # cone of angle exactly pi
    if cab > 0:
        return caw > 0 and cwb > 0
    # cone larger than pi: complement is the closed CCW arc from b to a
    return not _in_closed_small_arc(b, a, w)

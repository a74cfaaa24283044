"""Exact rational 2D geometry: points, directions, configurations, predicates.

Every coordinate in the library is a `fractions.Fraction`; there is no
floating point in any predicate. Fraction keeps numerator/denominator in
canonical form (positive denominator, gcd 1), so equality and hashing are
exact and cheap. Hot loops (the halving sweeps) run on integer coordinates
obtained by clearing denominators once per configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    DegenerateSegment,
    EpsilonTooLarge,
    NotGeneralPosition,
    SingularMatrix,
)

Rational = Fraction


def rat(value, denom=None) -> Fraction:
    """Coerce to an exact rational; `rat(2, 3)` is 2/3."""
    if denom is not None:
        return Fraction(value, denom)
    return Fraction(value)


class RPoint(NamedTuple):
    """A 2D point (or vector) with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __add__(self, other: "RPoint") -> "RPoint":
        return RPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "RPoint") -> "RPoint":
        return RPoint(self.x - other.x, self.y - other.y)

    def scaled(self, factor: Fraction) -> "RPoint":
        return RPoint(self.x * factor, self.y * factor)

    def cross(self, other: "RPoint") -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "RPoint") -> Fraction:
        return self.x * other.x + self.y * other.y

    def norm_sq(self) -> Fraction:
        return self.x * self.x + self.y * self.y


def point(x, y) -> RPoint:
    return RPoint(Fraction(x), Fraction(y))


ORIGIN = point(0, 0)


def orient(a: RPoint, b: RPoint, c: RPoint) -> int:
    """Sign of the cross product (b-a) x (c-a).

    +1 when c lies strictly left of the directed line a->b, -1 when strictly
    right, 0 when the three points are collinear.
    """
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def orient_int(ax: int, ay: int, bx: int, by: int, cx: int, cy: int) -> int:
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


class Direction:
    """A nonzero direction, stored as a primitive integer vector.

    Two directions compare equal iff one is a positive rational multiple of
    the other; `d` and `-d` stay distinct. Use `mod_sign()` for the
    undirected (line) canonical form, which flips the vector so its first
    nonzero coordinate is positive.
    """

    __slots__ = ("dx", "dy")

    def __init__(self, dx, dy):
        fx, fy = Fraction(dx), Fraction(dy)
        if fx == 0 and fy == 0:
            raise ValueError("zero direction")
        scale = math.lcm(fx.denominator, fy.denominator)
        ix, iy = int(fx * scale), int(fy * scale)
        g = math.gcd(abs(ix), abs(iy))
        object.__setattr__(self, "dx", ix // g)
        object.__setattr__(self, "dy", iy // g)

    def __setattr__(self, name, value):
        raise AttributeError("Direction is immutable")

    def mod_sign(self) -> "Direction":
        dx, dy = self.dx, self.dy
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return Direction(dx, dy)

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def perp(self) -> "Direction":
        """This direction rotated 90 degrees counterclockwise."""
        return Direction(-self.dy, self.dx)

    def cross(self, other: "Direction") -> int:
        return self.dx * other.dy - self.dy * other.dx

    def dot(self, other: "Direction") -> int:
        return self.dx * other.dx + self.dy * other.dy

    def as_point(self) -> RPoint:
        return point(self.dx, self.dy)

    def __eq__(self, other):
        return (
            isinstance(other, Direction)
            and self.dx == other.dx
            and self.dy == other.dy
        )

    def __hash__(self):
        return hash((self.dx, self.dy))

    def __repr__(self):
        return f"Direction({self.dx}, {self.dy})"


def direction_schedule() -> Iterator[Direction]:
    """The fixed candidate-direction schedule used by every deterministic
    generic-direction search: (0,1), then (1,N) for N = 1, 2, 3, ...
    """
    yield Direction(0, 1)
    n = 1
    while True:
        yield Direction(1, n)
        n += 1


@dataclass(frozen=True)
class Config:
    """An ordered tuple of distinct exact points.

    Distinctness is enforced at construction. General position (no three
    collinear) is *not* checked eagerly because it costs O(n^3); call
    `is_general_position`, or rely on the halving algorithms, which detect
    any violation they would be confused by and raise NotGeneralPosition.
    """

    points: Tuple[RPoint, ...]

    def __init__(self, points: Iterable[RPoint]):
        pts = tuple(
            RPoint(Fraction(p[0]), Fraction(p[1])) for p in points
        )
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise NotGeneralPosition(
                    f"duplicate points at indices {seen[p]} and {i}",
                    witness=(seen[p], i),
                )
            seen[p] = i
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> RPoint:
        return self.points[i]

    @cached_property
    def int_coords(self) -> Tuple[Tuple[int, int], ...]:
        """All points scaled by the common denominator: pure-integer twins.

        Orientation signs are invariant under the uniform positive scaling,
        so every predicate may run on these instead of the Fractions.
        """
        scale = 1
        for p in self.points:
            scale = math.lcm(scale, p.x.denominator, p.y.denominator)
        return tuple((int(p.x * scale), int(p.y * scale)) for p in self.points)

    @cached_property
    def min_pairwise_dist_sq(self) -> Fraction:
        best: Optional[Fraction] = None
        for i in range(self.n):
            for j in range(i + 1, self.n):
                d = (self.points[j] - self.points[i]).norm_sq()
                if best is None or d < best:
                    best = d
        if best is None:
            raise ValueError("need at least 2 points")
        return best


def is_general_position(config: Config):
    """Return (True, None), or (False, witness) with the first violating
    index tuple: a pair for duplicates (unreachable through Config, which
    rejects them) or a triple for collinearity.
    """
    pts = config.int_coords
    n = len(pts)
    for i in range(n):
        ax, ay = pts[i]
        for j in range(i + 1, n):
            bx, by = pts[j]
            for k in range(j + 1, n):
                cx, cy = pts[k]
                if orient_int(ax, ay, bx, by, cx, cy) == 0:
                    return False, (i, j, k)
    return True, None


@dataclass(frozen=True)
class AffineMap:
    """x -> M x + t with rational entries, M = [[a, b], [c, d]]."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    tx: Fraction = Fraction(0)
    ty: Fraction = Fraction(0)

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def apply_point(self, p: RPoint) -> RPoint:
        return RPoint(
            self.a * p.x + self.b * p.y + self.tx,
            self.c * p.x + self.d * p.y + self.ty,
        )

    @staticmethod
    def identity() -> "AffineMap":
        return AffineMap(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @staticmethod
    def translation(tx, ty) -> "AffineMap":
        return AffineMap(
            Fraction(1), Fraction(0), Fraction(0), Fraction(1),
            Fraction(tx), Fraction(ty),
        )

    @staticmethod
    def squeeze_y(factor) -> "AffineMap":
        """diag(1, 1/factor): flattens toward the x axis."""
        return AffineMap(Fraction(1), Fraction(0), Fraction(0),
                         Fraction(1) / Fraction(factor))

    @staticmethod
    def scaling(s) -> "AffineMap":
        return AffineMap(Fraction(s), Fraction(0), Fraction(0), Fraction(s))

    @staticmethod
    def rotate_to_x_axis(d: Direction) -> "AffineMap":
        """Similarity sending direction d to the positive x axis.

        [[dx, dy], [-dy, dx]] maps d to (|d|^2, 0); determinant |d|^2 > 0.
        """
        dx, dy = Fraction(d.dx), Fraction(d.dy)
        return AffineMap(dx, dy, -dy, dx)

    @staticmethod
    def rotate_from_x_axis(d: Direction) -> "AffineMap":
        """Similarity sending the positive x axis to direction d."""
        dx, dy = Fraction(d.dx), Fraction(d.dy)
        return AffineMap(dx, -dy, dy, dx)

    def then(self, other: "AffineMap") -> "AffineMap":
        """Composition: first self, then other."""
        return AffineMap(
            other.a * self.a + other.b * self.c,
            other.a * self.b + other.b * self.d,
            other.c * self.a + other.d * self.c,
            other.c * self.b + other.d * self.d,
            other.a * self.tx + other.b * self.ty + other.tx,
            other.c * self.tx + other.d * self.ty + other.ty,
        )


def affine_apply(config: Config, m: AffineMap) -> Config:
    if m.det() == 0:
        raise SingularMatrix(f"matrix {m} has zero determinant")
    return Config(m.apply_point(p) for p in config.points)


def corridor_contains(
    seg_from: RPoint, seg_to: RPoint, eps: Fraction, d: Direction
) -> bool:
    """Whether direction d (up to sign) is realizable by a line meeting both
    closed eps-disks around the segment endpoints.

    Exact chord criterion: with s the segment vector, the minimum-norm offset
    c making s + c parallel to d has |c| = |cross(d, s)| / |d|, and the line
    family reaches offsets up to 2 eps, so containment is
    cross(d, s)^2 <= 4 eps^2 |d|^2.
    """
    eps = Fraction(eps)
    s = seg_to - seg_from
    if s.x == 0 and s.y == 0:
        raise DegenerateSegment("segment endpoints coincide")
    if eps <= 0:
        raise EpsilonTooLarge("eps must be positive")
    if s.norm_sq() <= 4 * eps * eps:
        raise EpsilonTooLarge(
            f"eps {eps} is not smaller than half the segment length"
        )
    dv = d.as_point()
    c = dv.cross(s)
    return c * c <= 4 * eps * eps * dv.norm_sq()

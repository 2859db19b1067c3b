"""Pure 2-D primitives: points, rigid transforms, and the three node shapes.

Conventions (fixed here, used everywhere): coordinates are screen pixels
with y growing downward; angles are radians, counterclockwise in the
mathematical sense (positive cross product = left turn, so a "CCW"
polygon is one with positive signed area over the raw numbers).
Comparisons use the absolute tolerance ``TOLERANCE``; pixel-scale data
makes doubles sufficient, so there is no exact arithmetic anywhere.

Containment is closed for every shape: boundary points are inside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TOLERANCE = 1e-9
TWO_PI = 2.0 * math.pi

__all__ = [
    "TOLERANCE",
    "Point",
    "Transform",
    "ConvexPolygonShape",
    "CircleShape",
    "StripShape",
    "Shape",
    "normalize_angle",
    "rotate_vector",
    "to_world",
    "to_local",
    "distance_point_segment",
    "contains_polygon",
    "contains_circle",
    "contains_strip",
    "polygon_centroid",
]


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite point ({self.x!r}, {self.y!r})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)


def normalize_angle(angle: float) -> float:
    """Fold an angle into [0, 2*pi). Exact for inputs already in range."""
    a = math.fmod(angle, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:  # fmod result + TWO_PI can round up to TWO_PI itself
        a = 0.0
    return a


@dataclass(frozen=True)
class Transform:
    """Rigid placement of an object: rotate by ``angle`` about the local
    origin, then translate the origin to ``translation`` (world pixels)."""

    translation: Point
    angle: float = 0.0

    def __post_init__(self) -> None:
        a = float(self.angle)
        if not math.isfinite(a):
            raise ValueError(f"non-finite angle {self.angle!r}")
        object.__setattr__(self, "angle", normalize_angle(a))


def rotate_vector(angle: float, x: float, y: float) -> tuple[float, float]:
    c = math.cos(angle)
    s = math.sin(angle)
    return (c * x - s * y, s * x + c * y)


def to_world(t: Transform, p: Point) -> Point:
    c = math.cos(t.angle)
    s = math.sin(t.angle)
    return Point(
        t.translation.x + c * p.x - s * p.y,
        t.translation.y + s * p.x + c * p.y,
    )


def to_local(t: Transform, p: Point) -> Point:
    """Inverse of :func:`to_world`; round-trips within 1e-9."""
    dx = p.x - t.translation.x
    dy = p.y - t.translation.y
    c = math.cos(t.angle)
    s = math.sin(t.angle)
    return Point(c * dx + s * dy, -s * dx + c * dy)


def distance_point_segment(a: Point, b: Point, p: Point) -> float:
    """Euclidean distance from ``p`` to the closed segment ``ab``.

    Bit-exactly symmetric in (a, b): the endpoints are ordered
    canonically before computing, so swapping them cannot change the
    rounding path.
    """
    if (b.x, b.y) < (a.x, a.y):
        a, b = b, a
    abx = b.x - a.x
    aby = b.y - a.y
    apx = p.x - a.x
    apy = p.y - a.y
    denom = abx * abx + aby * aby
    if denom == 0.0:  # degenerate segment: a == b
        return math.hypot(apx, apy)
    t = (apx * abx + apy * aby) / denom
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(apx - t * abx, apy - t * aby)


def _cross(ox: float, oy: float, ax: float, ay: float, bx: float, by: float) -> float:
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@dataclass(frozen=True)
class ConvexPolygonShape:
    """Strictly convex polygon, vertices in CCW order (positive area)."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise ValueError(f"polygon needs >=3 vertices, got {n}")
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            if a.x == b.x and a.y == b.y:
                raise ValueError(f"duplicate consecutive vertices at index {i}")
        for i in range(n):
            a = verts[i]
            b = verts[(i + 1) % n]
            c = verts[(i + 2) % n]
            if _cross(a.x, a.y, b.x, b.y, c.x, c.y) <= TOLERANCE:
                raise ValueError("polygon is not strictly convex with CCW winding")
        # All-left-turns still admits multiply-wound stars; one full turn only.
        turning = 0.0
        for i in range(n):
            a = verts[i]
            b = verts[(i + 1) % n]
            c = verts[(i + 2) % n]
            h1 = math.atan2(b.y - a.y, b.x - a.x)
            h2 = math.atan2(c.y - b.y, c.x - b.x)
            d = h2 - h1
            while d <= -math.pi:
                d += TWO_PI
            while d > math.pi:
                d -= TWO_PI
            turning += d
        if abs(turning - TWO_PI) > 1e-6:
            raise ValueError("polygon winds more than once")
        # Containment works on unit-normal half-planes so TOLERANCE is a
        # true distance, independent of edge length.
        planes = []
        for i in range(n):
            a = verts[i]
            b = verts[(i + 1) % n]
            ex, ey = b.x - a.x, b.y - a.y
            length = math.hypot(ex, ey)
            nx, ny = -ey / length, ex / length  # inward-positive unit normal
            planes.append((nx, ny, nx * a.x + ny * a.y))
        object.__setattr__(self, "_halfplanes", tuple(planes))


@dataclass(frozen=True)
class CircleShape:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        r = float(self.radius)
        if not math.isfinite(r) or r <= 0.0:
            raise ValueError(f"circle radius must be positive, got {self.radius!r}")
        object.__setattr__(self, "radius", r)


@dataclass(frozen=True)
class StripShape:
    """Segment swept by a disc: a strip with rounded ends.

    Coincident endpoints are legal and degenerate to a circle.
    """

    endpoint_a: Point
    endpoint_b: Point
    radius: float

    def __post_init__(self) -> None:
        r = float(self.radius)
        if not math.isfinite(r) or r <= 0.0:
            raise ValueError(f"strip radius must be positive, got {self.radius!r}")
        object.__setattr__(self, "radius", r)


Shape = ConvexPolygonShape | CircleShape | StripShape


def contains_polygon(shape: ConvexPolygonShape, p: Point) -> bool:
    px, py = p.x, p.y
    for nx, ny, c in shape._halfplanes:
        if nx * px + ny * py - c < -TOLERANCE:
            return False
    return True


def contains_circle(shape: CircleShape, p: Point) -> bool:
    return math.hypot(p.x - shape.center.x, p.y - shape.center.y) <= shape.radius + TOLERANCE


def contains_strip(shape: StripShape, p: Point) -> bool:
    return distance_point_segment(shape.endpoint_a, shape.endpoint_b, p) <= shape.radius + TOLERANCE


def polygon_centroid(vertices: tuple[Point, ...]) -> Point:
    n = len(vertices)
    return Point(sum(v.x for v in vertices) / n, sum(v.y for v in vertices) / n)

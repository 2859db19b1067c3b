"""Invisible covers: the node sets that make screen objects grabbable.

A cover is an ordered list of nodes authored in object-local
coordinates. Each node is one of the three shapes from ``geometry`` and
carries exactly one action: move the whole object, or drive one resize
handle. Nodes may overlap freely; the first node in list order that
contains the pointer wins, which is the entire overlap-resolution rule.

The standard builders all follow the same layout: resize nodes first
(corner/vertex discs, then edge strips), the whole-area move node last.
That ordering is what produces the two user-visible rules — any inner
point moves, any border point resizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import (
    CircleShape,
    ConvexPolygonShape,
    Point,
    Shape,
    StripShape,
    contains_circle,
    contains_polygon,
    contains_strip,
)

#: Grab-band thickness in pixels when a builder is not told otherwise.
DEFAULT_BORDER = 6.0

_SIMPLE_HANDLES = frozenset(
    {
        "left",
        "right",
        "top",
        "bottom",
        "corner-nw",
        "corner-ne",
        "corner-se",
        "corner-sw",
        "radial",
    }
)
_INDEXED_HANDLES = frozenset({"vertex", "edge"})


@dataclass(frozen=True)
class Handle:
    """Symbolic resize-handle tag, e.g. Handle("left") or Handle("vertex", 2)."""

    kind: str
    index: int | None = None

    def __post_init__(self) -> None:
        if self.kind in _SIMPLE_HANDLES:
            if self.index is not None:
                raise ValueError(f"handle {self.kind!r} takes no index")
        elif self.kind in _INDEXED_HANDLES:
            if not isinstance(self.index, int) or self.index < 0:
                raise ValueError(f"handle {self.kind!r} needs a non-negative index")
        else:
            raise ValueError(f"unknown handle kind {self.kind!r}")


@dataclass(frozen=True)
class MoveWhole:
    pass


@dataclass(frozen=True)
class Resize:
    handle: Handle


NodeAction = MoveWhole | Resize


@dataclass(frozen=True)
class Node:
    shape: Shape
    action: NodeAction


@dataclass(frozen=True)
class Cover:
    nodes: tuple[Node, ...]

    def __post_init__(self) -> None:
        nodes = tuple(self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if not nodes:
            raise ValueError("cover must contain at least one node")
        if not any(isinstance(n.action, MoveWhole) for n in nodes):
            raise ValueError("cover must contain a move-whole node: everything is movable")


def node_contains(node: Node, p_local: Point) -> bool:
    shape = node.shape
    if isinstance(shape, ConvexPolygonShape):
        return contains_polygon(shape, p_local)
    if isinstance(shape, CircleShape):
        return contains_circle(shape, p_local)
    return contains_strip(shape, p_local)


def cover_hit(cover: Cover, p_local: Point) -> int | None:
    """Index of the first node containing the point, or None."""
    for i, node in enumerate(cover.nodes):
        if node_contains(node, p_local):
            return i
    return None


def rect_cover(width: float, height: float, border: float = DEFAULT_BORDER) -> Cover:
    """Cover for an axis-aligned rectangle spanning (0,0)..(width,height).

    Order: corner discs (NW, NE, SE, SW), edge strips (left, right, top,
    bottom), whole-rectangle move node. Corners precede edges so a drag
    in the overlap zone resizes diagonally.
    """
    if width <= 0.0 or height <= 0.0:
        raise ValueError(f"rectangle sides must be positive, got {width}x{height}")
    if border <= 0.0 or border > min(width, height) / 2.0:
        raise ValueError(f"border {border} out of range for {width}x{height}")
    nw = Point(0.0, 0.0)
    ne = Point(width, 0.0)
    se = Point(width, height)
    sw = Point(0.0, height)
    nodes = [
        Node(CircleShape(nw, border), Resize(Handle("corner-nw"))),
        Node(CircleShape(ne, border), Resize(Handle("corner-ne"))),
        Node(CircleShape(se, border), Resize(Handle("corner-se"))),
        Node(CircleShape(sw, border), Resize(Handle("corner-sw"))),
        Node(StripShape(nw, sw, border), Resize(Handle("left"))),
        Node(StripShape(ne, se, border), Resize(Handle("right"))),
        Node(StripShape(nw, ne, border), Resize(Handle("top"))),
        Node(StripShape(sw, se, border), Resize(Handle("bottom"))),
        Node(ConvexPolygonShape((nw, ne, se, sw)), MoveWhole()),
    ]
    return Cover(tuple(nodes))


def circle_cover(radius: float, border: float = DEFAULT_BORDER) -> Cover:
    """Cover for a circle centred on the local origin.

    The inner move disc is listed first, so the border annulus emerges
    from first-hit-wins over two plain discs.
    """
    if border <= 0.0 or border >= radius:
        raise ValueError(f"border {border} out of range for radius {radius}")
    origin = Point(0.0, 0.0)
    nodes = (
        Node(CircleShape(origin, radius - border), MoveWhole()),
        Node(CircleShape(origin, radius), Resize(Handle("radial"))),
    )
    return Cover(nodes)


def polygon_cover(vertices: Sequence[Point], border: float = DEFAULT_BORDER) -> Cover:
    """Cover for a strictly convex CCW polygon given in local coordinates."""
    if border <= 0.0:
        raise ValueError(f"border must be positive, got {border}")
    body = ConvexPolygonShape(tuple(vertices))  # rejects non-convex input
    verts = body.vertices
    n = len(verts)
    nodes: list[Node] = []
    for i, v in enumerate(verts):
        nodes.append(Node(CircleShape(v, border), Resize(Handle("vertex", i))))
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        nodes.append(Node(StripShape(a, b, border), Resize(Handle("edge", i))))
    nodes.append(Node(body, MoveWhole()))
    return Cover(tuple(nodes))

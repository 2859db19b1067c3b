"""The world model: z-ordered movable objects, styles, parallel world.

A Scene owns every object the application registered, split at all
times between the visible list (z order, last element topmost) and the
parallel world — an off-screen store where hidden objects keep their
full state untouched until restored. The scene is a single-owner
mutable state machine; render lists and snapshots taken from it are
immutable values.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field, replace
from typing import Any, Iterable

from . import cover as cover_mod
from .geometry import (
    ConvexPolygonShape,
    Point,
    Transform,
    polygon_centroid,
    to_world,
)

KINDS = ("rect", "circle", "polygon", "labeled-field")

MIN_RECT_SIDE = 10.0
MIN_CIRCLE_RADIUS = 5.0
MIN_POLYGON_CIRCUMRADIUS = 5.0
MIN_FONT_SIZE = 4.0


class SceneError(ValueError):
    pass


class UnknownObjectError(SceneError):
    pass


class ObjectStateError(SceneError):
    """Raised when an operation addresses an object on the wrong side of
    the visible/parallel partition."""


class StyleError(SceneError):
    pass


def _check_color(value: Any, what: str) -> tuple[int, int, int]:
    if (
        not isinstance(value, (tuple, list))
        or len(value) != 3
        or not all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c <= 255 for c in value)
    ):
        raise StyleError(f"{what} must be an 8-bit RGB triple, got {value!r}")
    return (value[0], value[1], value[2])


@dataclass(frozen=True)
class StyleParams:
    """Visibility parameters a user may retune at any moment."""

    fill_color: tuple[int, int, int] = (255, 255, 255)
    text_color: tuple[int, int, int] = (0, 0, 0)
    font_size: float = 12.0
    text: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "fill_color", _check_color(self.fill_color, "fill_color"))
        object.__setattr__(self, "text_color", _check_color(self.text_color, "text_color"))
        size = float(self.font_size)
        if not size >= MIN_FONT_SIZE:
            raise StyleError(f"font_size must be >= {MIN_FONT_SIZE}, got {self.font_size!r}")
        object.__setattr__(self, "font_size", size)
        if not isinstance(self.text, str):
            raise StyleError(f"text must be a string, got {self.text!r}")

    def with_value(self, key: str, value: Any) -> StyleParams:
        if key not in ("fill_color", "text_color", "font_size", "text"):
            raise StyleError(f"unknown style parameter {key!r}")
        return replace(self, **{key: value})


def validate_size_params(kind: str, size_params: dict[str, Any]) -> None:
    """Reject size parameters below the per-kind floor or of the wrong shape."""
    if kind in ("rect", "labeled-field"):
        if set(size_params) != {"width", "height"}:
            raise SceneError(f"{kind} needs width/height, got {sorted(size_params)}")
        if size_params["width"] < MIN_RECT_SIDE or size_params["height"] < MIN_RECT_SIDE:
            raise SceneError(f"{kind} below minimum size {MIN_RECT_SIDE}px")
    elif kind == "circle":
        if set(size_params) != {"radius"}:
            raise SceneError(f"circle needs radius, got {sorted(size_params)}")
        if size_params["radius"] < MIN_CIRCLE_RADIUS:
            raise SceneError(f"circle below minimum radius {MIN_CIRCLE_RADIUS}px")
    elif kind == "polygon":
        if set(size_params) != {"vertices"}:
            raise SceneError(f"polygon needs vertices, got {sorted(size_params)}")
        pts = tuple(Point(v[0], v[1]) for v in size_params["vertices"])
        ConvexPolygonShape(pts)  # strict convexity + CCW winding
        centroid = polygon_centroid(pts)
        circumradius = max(
            ((v.x - centroid.x) ** 2 + (v.y - centroid.y) ** 2) ** 0.5 for v in pts
        )
        if circumradius < MIN_POLYGON_CIRCUMRADIUS:
            raise SceneError(f"polygon below minimum circumradius {MIN_POLYGON_CIRCUMRADIUS}px")
    else:
        raise SceneError(f"unknown object kind {kind!r}")


def build_cover(kind: str, size_params: dict[str, Any], border: float) -> cover_mod.Cover:
    """Builder dispatch; clamps the grab band so tiny objects stay legal."""
    if kind in ("rect", "labeled-field"):
        w, h = size_params["width"], size_params["height"]
        return cover_mod.rect_cover(w, h, min(border, min(w, h) / 2.0))
    if kind == "circle":
        r = size_params["radius"]
        return cover_mod.circle_cover(r, min(border, r / 2.0))
    if kind == "polygon":
        pts = tuple(Point(v[0], v[1]) for v in size_params["vertices"])
        return cover_mod.polygon_cover(pts, border)
    raise SceneError(f"unknown object kind {kind!r}")


@dataclass
class MovableObject:
    """One screen element: geometry, style, and its invisible cover."""

    id: str
    kind: str
    transform: Transform
    size_params: dict[str, Any]
    style: StyleParams
    border: float
    cover: cover_mod.Cover

    def rebuild_cover(self) -> None:
        """Must run after every size change; covers never mutate in place."""
        self.cover = build_cover(self.kind, self.size_params, self.border)

    def center_local(self) -> Point:
        if self.kind in ("rect", "labeled-field"):
            return Point(self.size_params["width"] / 2.0, self.size_params["height"] / 2.0)
        if self.kind == "circle":
            return Point(0.0, 0.0)
        pts = tuple(Point(v[0], v[1]) for v in self.size_params["vertices"])
        return polygon_centroid(pts)

    def outline_world(self) -> dict[str, Any]:
        """World-space drawing outline for render lists."""
        t = self.transform
        if self.kind in ("rect", "labeled-field"):
            w, h = self.size_params["width"], self.size_params["height"]
            corners = [Point(0.0, 0.0), Point(w, 0.0), Point(w, h), Point(0.0, h)]
            pts = [to_world(t, c) for c in corners]
            return {"type": "polygon", "points": [[p.x, p.y] for p in pts]}
        if self.kind == "circle":
            return {
                "type": "circle",
                "center": [t.translation.x, t.translation.y],
                "radius": self.size_params["radius"],
            }
        pts = [to_world(t, Point(v[0], v[1])) for v in self.size_params["vertices"]]
        return {"type": "polygon", "points": [[p.x, p.y] for p in pts]}


def make_object(
    object_id: str,
    kind: str,
    x: float,
    y: float,
    size_params: dict[str, Any],
    style: StyleParams | None = None,
    angle: float = 0.0,
    border: float = cover_mod.DEFAULT_BORDER,
) -> MovableObject:
    validate_size_params(kind, size_params)
    if border <= 0.0:
        raise SceneError(f"border must be positive, got {border}")
    obj = MovableObject(
        id=object_id,
        kind=kind,
        transform=Transform(Point(x, y), angle),
        size_params=copy.deepcopy(size_params),
        style=style if style is not None else StyleParams(),
        border=float(border),
        cover=build_cover(kind, size_params, border),
    )
    return obj


@dataclass
class GroupSpec:
    """Group movement: synchronous (rigid, symmetric) or related
    (master drives dependents via stored anchor offsets)."""

    mode: str  # "synchronous" | "related"
    members: tuple[str, ...] = ()
    master: str | None = None
    offsets: dict[str, tuple[float, float]] = field(default_factory=dict)

    def member_ids(self) -> tuple[str, ...]:
        if self.mode == "related":
            return (self.master,) + tuple(sorted(self.offsets))  # type: ignore[operator]
        return self.members


@dataclass(frozen=True)
class RenderItem:
    """One entry of the drawing description handed to clients."""

    id: str
    z: int
    kind: str
    angle: float
    outline: dict[str, Any]
    style: StyleParams

    def to_payload(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "z": self.z,
            "kind": self.kind,
            "angle": self.angle,
            "outline": self.outline,
            "style": {
                "fill_color": list(self.style.fill_color),
                "text_color": list(self.style.text_color),
                "font_size": self.style.font_size,
                "text": self.style.text,
            },
        }


class Scene:
    """Single source of truth for one application view.

    ``auto_raise`` mirrors the grab-raises decision: pressing an object
    brings it to top before the drag. It can be switched off.
    """

    def __init__(self, auto_raise: bool = True) -> None:
        self.objects: dict[str, MovableObject] = {}
        self.visible: list[str] = []
        self.parallel: set[str] = set()
        self.groups: list[GroupSpec] = []
        self.default_layout: Any = None  # LayoutSnapshot, set via persistence
        self.auto_raise = auto_raise

    # -- construction ----------------------------------------------------

    def add_object(self, obj: MovableObject, visible: bool = True) -> None:
        if obj.id in self.objects:
            raise SceneError(f"duplicate object id {obj.id!r}")
        self.objects[obj.id] = obj
        if visible:
            self.visible.append(obj.id)
        else:
            self.parallel.add(obj.id)

    def add_group(self, group: GroupSpec) -> None:
        if group.mode == "synchronous":
            if len(group.members) < 2:
                raise SceneError("synchronous group needs at least 2 members")
            if group.master is not None or group.offsets:
                raise SceneError("synchronous group takes members only")
            ids: Iterable[str] = group.members
        elif group.mode == "related":
            if group.master is None or not group.offsets:
                raise SceneError("related group needs a master and at least one offset")
            if group.members:
                raise SceneError("related group members are derived from master+offsets")
            if group.master in group.offsets:
                raise SceneError("master cannot be its own dependent")
            ids = group.member_ids()
        else:
            raise SceneError(f"unknown group mode {group.mode!r}")
        for object_id in ids:
            if object_id not in self.objects:
                raise SceneError(f"group refers to unknown object {object_id!r}")
        self.groups.append(group)

    # -- lookup ----------------------------------------------------------

    def object(self, object_id: str) -> MovableObject:
        try:
            return self.objects[object_id]
        except KeyError:
            raise UnknownObjectError(f"unknown object {object_id!r}") from None

    def is_visible(self, object_id: str) -> bool:
        self.object(object_id)
        return object_id in self.visible

    def z_index(self, object_id: str) -> int:
        try:
            return self.visible.index(object_id)
        except ValueError:
            raise ObjectStateError(f"object {object_id!r} is not visible") from None

    def sync_group_of(self, object_id: str) -> GroupSpec | None:
        for g in self.groups:
            if g.mode == "synchronous" and object_id in g.members:
                return g
        return None

    def related_group_mastered_by(self, object_id: str) -> GroupSpec | None:
        for g in self.groups:
            if g.mode == "related" and g.master == object_id:
                return g
        return None

    def related_group_with_dependent(self, object_id: str) -> GroupSpec | None:
        for g in self.groups:
            if g.mode == "related" and object_id in g.offsets:
                return g
        return None

    # -- operations ------------------------------------------------------

    def hit_test(self, p_world: Point) -> tuple[str, int] | None:
        """Topmost-first scan; the pointer is mapped into each object's
        local frame, so covers stay rotation-correct without mutation."""
        from .geometry import to_local

        for object_id in reversed(self.visible):
            obj = self.objects[object_id]
            idx = cover_mod.cover_hit(obj.cover, to_local(obj.transform, p_world))
            if idx is not None:
                return (object_id, idx)
        return None

    def bring_to_top(self, object_id: str) -> None:
        if not self.is_visible(object_id):
            raise ObjectStateError(f"cannot raise hidden object {object_id!r}")
        self.visible.remove(object_id)
        self.visible.append(object_id)

    def hide_object(self, object_id: str) -> None:
        if not self.is_visible(object_id):
            raise ObjectStateError(f"object {object_id!r} is not visible")
        self.visible.remove(object_id)
        self.parallel.add(object_id)

    def restore_object(self, object_id: str) -> None:
        self.object(object_id)
        if object_id not in self.parallel:
            raise ObjectStateError(f"object {object_id!r} is not in the parallel world")
        self.parallel.remove(object_id)
        self.visible.append(object_id)

    def set_style(self, object_id: str, key: str, value: Any) -> None:
        obj = self.object(object_id)
        obj.style = obj.style.with_value(key, value)

    def render_list(self) -> list[RenderItem]:
        items: list[RenderItem] = []
        for z, object_id in enumerate(self.visible):
            obj = self.objects[object_id]
            items.append(
                RenderItem(
                    id=obj.id,
                    z=z,
                    kind=obj.kind,
                    angle=obj.transform.angle,
                    outline=obj.outline_world(),
                    style=obj.style,
                )
            )
        return items

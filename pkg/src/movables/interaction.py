"""Grab state machine: press/move/release become move, resize, rotate.

Every pointer event is applied eagerly — the scene is always in its
final state, there is no ghost outline and no deferred commit, and no
operation ever adds anything beyond what the event arithmetic says
(no snapping, no alignment, no animation).

Button chord: left press grabs the node's own action (move or resize);
right press on any node rotates the object about its center.

Group rules: moving any member of a synchronous group moves every
visible member by the identical delta. A related group is asymmetric —
whenever a master's translation changes (move, resize shift, rotation
shift) its visible dependents are repositioned to master + offset;
whenever a dependent's translation is changed directly by the user its
stored offset is re-anchored. Hidden objects are never repositioned.
"""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass, field
from typing import Any

from .cover import Handle, MoveWhole, Resize
from .geometry import Point, Transform, normalize_angle, rotate_vector, to_local, to_world
from .scene import (
    MIN_CIRCLE_RADIUS,
    MIN_RECT_SIDE,
    GroupSpec,
    Scene,
    SceneError,
    validate_size_params,
)

MOVE = "move"
RESIZE = "resize"
ROTATE = "rotate"


@dataclass(frozen=True)
class PointerEvent:
    kind: str  # "press" | "move" | "release"
    position: Point
    button: str | None = None  # "left" | "right", press only

    def __post_init__(self) -> None:
        if self.kind not in ("press", "move", "release"):
            raise ValueError(f"unknown pointer event kind {self.kind!r}")
        if self.kind == "press" and self.button not in ("left", "right"):
            raise ValueError(f"press needs button left or right, got {self.button!r}")


@dataclass
class Grab:
    """Everything captured at press time; exists only until release."""

    object_id: str
    node_index: int
    mode: str
    press_world: Point
    handle: Handle | None = None
    # move: object origin minus press point, per co-moving member (grabbed first)
    member_offsets: dict[str, tuple[float, float]] = field(default_factory=dict)
    # resize/rotate anchors
    start_angle: float = 0.0
    start_translation: Point = Point(0.0, 0.0)
    start_size_params: dict[str, Any] = field(default_factory=dict)
    pivot_local: Point | None = None
    pivot_world: Point | None = None


def on_press(scene: Scene, p: Point, button: str = "left") -> Grab | None:
    """Hit test and open a grab; no hit means no grab."""
    hit = scene.hit_test(p)
    if hit is None:
        return None
    object_id, node_index = hit
    if scene.auto_raise:
        scene.bring_to_top(object_id)
    obj = scene.object(object_id)
    node = obj.cover.nodes[node_index]

    if button == "right":
        mode = ROTATE
        handle = None
    elif isinstance(node.action, MoveWhole):
        mode = MOVE
        handle = None
    else:
        mode = RESIZE
        handle = node.action.handle

    grab = Grab(
        object_id=object_id,
        node_index=node_index,
        mode=mode,
        press_world=p,
        handle=handle,
        start_angle=obj.transform.angle,
        start_translation=obj.transform.translation,
        start_size_params=copy.deepcopy(obj.size_params),
    )
    if mode == MOVE:
        member_ids = [object_id]
        group = scene.sync_group_of(object_id)
        if group is not None:
            member_ids += [
                m for m in group.members if m != object_id and scene.is_visible(m)
            ]
        for member_id in member_ids:
            origin = scene.object(member_id).transform.translation
            grab.member_offsets[member_id] = (origin.x - p.x, origin.y - p.y)
    elif mode == ROTATE:
        grab.pivot_local = obj.center_local()
        grab.pivot_world = to_world(obj.transform, grab.pivot_local)
    return grab


def apply_move(scene: Scene, grab: Grab, p: Point) -> None:
    """Forward movement: translation = pointer + press offset, for the
    grabbed object and every visible synchronous co-member."""
    moved: list[str] = []
    for object_id, (ox, oy) in grab.member_offsets.items():
        obj = scene.object(object_id)
        obj.transform = Transform(Point(p.x + ox, p.y + oy), obj.transform.angle)
        moved.append(object_id)
    _propagate_after_move(scene, moved)


def apply_resize(scene: Scene, grab: Grab, p: Point) -> None:
    """Anchored resizing; out-of-range pointers clamp, never fail."""
    obj = scene.object(grab.object_id)
    assert grab.handle is not None
    if obj.kind in ("rect", "labeled-field"):
        _resize_rect(obj, grab.handle, p)
    elif obj.kind == "circle":
        _resize_circle(obj, p)
    else:
        _resize_polygon(obj, grab.handle, p)
    _propagate_after_move(scene, [grab.object_id])


def apply_rotate(scene: Scene, grab: Grab, p: Point) -> None:
    """Rotation about the object center captured at press time.

    The translation is rebuilt from the press-time anchors, so sweeping
    back to the press point restores angle, translation, and center
    bit-exactly.
    """
    obj = scene.object(grab.object_id)
    pivot = grab.pivot_world
    c = grab.pivot_local
    assert pivot is not None and c is not None
    if p.x == pivot.x and p.y == pivot.y:
        return  # degenerate pointer at the center: angle unchanged
    sweep = math.atan2(p.y - pivot.y, p.x - pivot.x) - math.atan2(
        grab.press_world.y - pivot.y, grab.press_world.x - pivot.x
    )
    new_angle = normalize_angle(grab.start_angle + sweep)
    rsx, rsy = rotate_vector(grab.start_angle, c.x, c.y)
    rnx, rny = rotate_vector(new_angle, c.x, c.y)
    obj.transform = Transform(
        Point(grab.start_translation.x + (rsx - rnx), grab.start_translation.y + (rsy - rny)),
        new_angle,
    )
    _propagate_after_move(scene, [grab.object_id])


def apply_related(scene: Scene, master_id: str) -> None:
    """Reposition every visible dependent to master + stored offset."""
    group = scene.related_group_mastered_by(master_id)
    if group is None:
        raise SceneError(f"object {master_id!r} masters no related group")
    _propagate_related(scene, group, skip=set(), visited={master_id})


def on_release(scene: Scene, grab: Grab | None) -> None:
    """Nothing to finalize: every move event already mutated the scene."""


def process_event(scene: Scene, grab: Grab | None, event: PointerEvent) -> Grab | None:
    """Fold one pointer event into the scene; returns the new grab state.

    A press during an active grab simply opens the new grab (state from
    the old one is already applied); stray moves and releases without a
    grab are legal no-ops.
    """
    if event.kind == "press":
        return on_press(scene, event.position, event.button or "left")
    if event.kind == "move":
        if grab is not None:
            if grab.mode == MOVE:
                apply_move(scene, grab, event.position)
            elif grab.mode == RESIZE:
                apply_resize(scene, grab, event.position)
            else:
                apply_rotate(scene, grab, event.position)
        return grab
    on_release(scene, grab)
    return None


# -- resize helpers -------------------------------------------------------


def _resize_rect(obj, handle: Handle, p: Point) -> None:
    local = to_local(obj.transform, p)
    w = obj.size_params["width"]
    h = obj.size_params["height"]
    dx = 0.0
    dy = 0.0
    new_w = w
    new_h = h
    k = handle.kind
    if k in ("right", "corner-ne", "corner-se"):
        new_w = max(local.x, MIN_RECT_SIDE)
    if k in ("bottom", "corner-se", "corner-sw"):
        new_h = max(local.y, MIN_RECT_SIDE)
    if k in ("left", "corner-nw", "corner-sw"):
        dx = min(local.x, w - MIN_RECT_SIDE)
        new_w = w - dx
    if k in ("top", "corner-nw", "corner-ne"):
        dy = min(local.y, h - MIN_RECT_SIDE)
        new_h = h - dy
    if dx != 0.0 or dy != 0.0:
        obj.transform = Transform(to_world(obj.transform, Point(dx, dy)), obj.transform.angle)
    obj.size_params["width"] = new_w
    obj.size_params["height"] = new_h
    obj.rebuild_cover()


def _resize_circle(obj, p: Point) -> None:
    center = obj.transform.translation
    r = math.hypot(p.x - center.x, p.y - center.y)
    obj.size_params["radius"] = max(r, MIN_CIRCLE_RADIUS)
    obj.rebuild_cover()


def _resize_polygon(obj, handle: Handle, p: Point) -> None:
    local = to_local(obj.transform, p)
    verts = [list(v) for v in obj.size_params["vertices"]]
    if handle.kind == "vertex":
        verts[handle.index] = [local.x, local.y]
    else:
        i = handle.index
        j = (i + 1) % len(verts)
        ax, ay = verts[i]
        bx, by = verts[j]
        ex, ey = bx - ax, by - ay
        length = math.hypot(ex, ey)
        nx, ny = ey / length, -ex / length
        s = (local.x - ax) * nx + (local.y - ay) * ny
        verts[i] = [ax + s * nx, ay + s * ny]
        verts[j] = [bx + s * nx, by + s * ny]
    new_params = {"vertices": verts}
    try:
        validate_size_params("polygon", new_params)
    except (SceneError, ValueError):
        return  # would break convexity or the minimum size: keep last valid
    obj.size_params = new_params
    obj.rebuild_cover()


# -- related-group propagation --------------------------------------------


def _propagate_after_move(scene: Scene, moved_ids: list[str]) -> None:
    """After direct translation changes: drive dependents of moved
    masters, re-anchor offsets of directly moved dependents."""
    moved_set = set(moved_ids)
    for object_id in moved_ids:
        group = scene.related_group_mastered_by(object_id)
        if group is not None:
            _propagate_related(scene, group, skip=moved_set, visited={object_id})
    for object_id in moved_ids:
        group = scene.related_group_with_dependent(object_id)
        if group is not None and group.master not in moved_set:
            master = scene.object(group.master)  # type: ignore[arg-type]
            dep = scene.object(object_id)
            group.offsets[object_id] = (
                dep.transform.translation.x - master.transform.translation.x,
                dep.transform.translation.y - master.transform.translation.y,
            )


def _propagate_related(scene: Scene, group: GroupSpec, skip: set[str], visited: set[str]) -> None:
    master = scene.object(group.master)  # type: ignore[arg-type]
    for dep_id in sorted(group.offsets):
        if dep_id in skip or dep_id in visited:
            continue
        visited.add(dep_id)
        if dep_id not in scene.visible:
            continue  # hidden in the parallel world: skipped, offset retained
        ox, oy = group.offsets[dep_id]
        dep = scene.object(dep_id)
        dep.transform = Transform(
            Point(master.transform.translation.x + ox, master.transform.translation.y + oy),
            dep.transform.angle,
        )
        sub = scene.related_group_mastered_by(dep_id)
        if sub is not None:
            _propagate_related(scene, sub, skip, visited)

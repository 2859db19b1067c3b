"""Layout persistence: canonical snapshots, save/load, default layout.

A snapshot captures every user-controlled parameter of every object —
transform, size, style, z position or parallel placement — plus the
group table with its live anchor offsets. Serialization is canonical:
keys sorted, no insignificant whitespace, every float printed with
exactly six decimals (negative zero normalized), so two equal scenes
always produce byte-identical text.

Restore is all-or-nothing: the payload is fully validated against the
registered objects first, then applied in one sweep.
"""

from __future__ import annotations

import copy
import json
import math
import os
from typing import Any

from .geometry import Point, Transform
from .scene import (
    MIN_FONT_SIZE,
    GroupSpec,
    Scene,
    SceneError,
    StyleParams,
    validate_size_params,
)

FORMAT_VERSION = 1


class PersistenceError(Exception):
    pass


class SnapshotError(PersistenceError):
    """Malformed snapshot payload or mismatch with the registered scene."""


class VersionError(PersistenceError):
    """Snapshot written by an incompatible format version."""


# -- canonical writer ------------------------------------------------------


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite float {value!r}")
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _write_canonical(value: Any, out: list[str]) -> None:
    if value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif value is None:
        out.append("null")
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=True))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(_format_float(value))
    elif isinstance(value, dict):
        out.append("{")
        for i, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"canonical JSON keys must be strings, got {key!r}")
            if i:
                out.append(",")
            out.append(json.dumps(key, ensure_ascii=True))
            out.append(":")
            _write_canonical(value[key], out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _write_canonical(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__} canonically")


def canonical_json(value: Any) -> str:
    out: list[str] = []
    _write_canonical(value, out)
    return "".join(out)


# -- snapshot capture ------------------------------------------------------


def snapshot(scene: Scene) -> dict[str, Any]:
    """Plain-data snapshot of the whole scene (full float precision)."""
    z_of = {object_id: z for z, object_id in enumerate(scene.visible)}
    objects: dict[str, Any] = {}
    for object_id, obj in scene.objects.items():
        objects[object_id] = {
            "placement": "visible" if object_id in z_of else "parallel",
            "size_params": copy.deepcopy(obj.size_params),
            "style": {
                "fill_color": list(obj.style.fill_color),
                "font_size": obj.style.font_size,
                "text": obj.style.text,
                "text_color": list(obj.style.text_color),
            },
            "transform": {
                "angle": obj.transform.angle,
                "x": obj.transform.translation.x,
                "y": obj.transform.translation.y,
            },
            "z_index": z_of.get(object_id, -1),
        }
    groups: list[dict[str, Any]] = []
    for g in scene.groups:
        if g.mode == "synchronous":
            groups.append({"members": sorted(g.members), "mode": "synchronous"})
        else:
            groups.append(
                {
                    "master": g.master,
                    "mode": "related",
                    "offsets": {k: [v[0], v[1]] for k, v in g.offsets.items()},
                }
            )
    groups.sort(key=canonical_json)
    return {"format_version": FORMAT_VERSION, "groups": groups, "objects": objects}


def snapshot_json(scene: Scene) -> str:
    return canonical_json(snapshot(scene))


# -- restore ---------------------------------------------------------------


def _require_keys(record: Any, keys: set[str], what: str) -> None:
    if not isinstance(record, dict):
        raise SnapshotError(f"{what} must be an object, got {type(record).__name__}")
    if set(record) != keys:
        raise SnapshotError(f"{what} must have keys {sorted(keys)}, got {sorted(record)}")


def _require_number(value: Any, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SnapshotError(f"{what} must be a number, got {value!r}")
    result = float(value)
    if not math.isfinite(result):
        raise SnapshotError(f"{what} must be finite, got {value!r}")
    return result


def _validate_style(record: Any, object_id: str) -> StyleParams:
    _require_keys(record, {"fill_color", "font_size", "text", "text_color"}, f"style of {object_id!r}")
    size = _require_number(record["font_size"], f"font_size of {object_id!r}")
    if size < MIN_FONT_SIZE:
        raise SnapshotError(f"font_size of {object_id!r} below minimum {MIN_FONT_SIZE}")
    if not isinstance(record["text"], str):
        raise SnapshotError(f"text of {object_id!r} must be a string")
    try:
        return StyleParams(
            fill_color=tuple(record["fill_color"]) if isinstance(record["fill_color"], list) else record["fill_color"],
            text_color=tuple(record["text_color"]) if isinstance(record["text_color"], list) else record["text_color"],
            font_size=size,
            text=record["text"],
        )
    except SceneError as exc:
        raise SnapshotError(f"style of {object_id!r}: {exc}") from None


def _validate_groups(scene: Scene, payload: Any) -> list[GroupSpec]:
    if not isinstance(payload, list):
        raise SnapshotError("groups must be a list")
    groups: list[GroupSpec] = []
    for record in payload:
        if not isinstance(record, dict) or "mode" not in record:
            raise SnapshotError(f"group record must be an object with a mode, got {record!r}")
        mode = record["mode"]
        if mode == "synchronous":
            _require_keys(record, {"members", "mode"}, "synchronous group")
            members = record["members"]
            if (
                not isinstance(members, list)
                or len(members) < 2
                or len(set(members)) != len(members)
                or not all(isinstance(m, str) for m in members)
            ):
                raise SnapshotError(f"synchronous group needs 2+ distinct member ids, got {members!r}")
            for member in members:
                if member not in scene.objects:
                    raise SnapshotError(f"group refers to unknown object {member!r}")
            groups.append(GroupSpec(mode="synchronous", members=tuple(members)))
        elif mode == "related":
            _require_keys(record, {"master", "mode", "offsets"}, "related group")
            master = record["master"]
            if not isinstance(master, str) or master not in scene.objects:
                raise SnapshotError(f"related group master {master!r} is not a known object")
            offsets_in = record["offsets"]
            if not isinstance(offsets_in, dict) or not offsets_in:
                raise SnapshotError("related group needs a non-empty offsets table")
            offsets: dict[str, tuple[float, float]] = {}
            for dep_id, pair in offsets_in.items():
                if dep_id == master:
                    raise SnapshotError("master cannot be its own dependent")
                if dep_id not in scene.objects:
                    raise SnapshotError(f"group refers to unknown object {dep_id!r}")
                if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                    raise SnapshotError(f"offset of {dep_id!r} must be an [dx, dy] pair")
                offsets[dep_id] = (
                    _require_number(pair[0], f"offset dx of {dep_id!r}"),
                    _require_number(pair[1], f"offset dy of {dep_id!r}"),
                )
            groups.append(GroupSpec(mode="related", master=master, offsets=offsets))
        else:
            raise SnapshotError(f"unknown group mode {mode!r}")
    return groups


def restore(scene: Scene, data: Any) -> None:
    """Validate a snapshot against the scene's registered objects, then
    apply it atomically (nothing changes if any part is invalid)."""
    _require_keys(data, {"format_version", "groups", "objects"}, "snapshot")
    version = data["format_version"]
    if isinstance(version, bool) or not isinstance(version, int):
        raise SnapshotError(f"format_version must be an integer, got {version!r}")
    if version != FORMAT_VERSION:
        raise VersionError(f"snapshot format_version {version} not supported (expected {FORMAT_VERSION})")

    records = data["objects"]
    if not isinstance(records, dict):
        raise SnapshotError("objects must be an object keyed by id")
    if set(records) != set(scene.objects):
        missing = sorted(set(scene.objects) - set(records))
        unexpected = sorted(set(records) - set(scene.objects))
        raise SnapshotError(f"object set mismatch: missing {missing}, unexpected {unexpected}")

    staged: dict[str, dict[str, Any]] = {}
    rank_of: dict[str, int] = {}
    parallel: set[str] = set()
    for object_id in sorted(records):
        record = records[object_id]
        _require_keys(
            record,
            {"placement", "size_params", "style", "transform", "z_index"},
            f"record of {object_id!r}",
        )
        placement = record["placement"]
        if placement not in ("visible", "parallel"):
            raise SnapshotError(f"placement of {object_id!r} must be visible or parallel")
        tf = record["transform"]
        _require_keys(tf, {"angle", "x", "y"}, f"transform of {object_id!r}")
        angle = _require_number(tf["angle"], f"angle of {object_id!r}")
        x = _require_number(tf["x"], f"x of {object_id!r}")
        y = _require_number(tf["y"], f"y of {object_id!r}")
        kind = scene.object(object_id).kind
        size_params = record["size_params"]
        if not isinstance(size_params, dict):
            raise SnapshotError(f"size_params of {object_id!r} must be an object")
        try:
            validate_size_params(kind, size_params)
        except (SceneError, TypeError) as exc:
            raise SnapshotError(f"size_params of {object_id!r}: {exc}") from None
        style = _validate_style(record["style"], object_id)
        z = record["z_index"]
        if isinstance(z, bool) or not isinstance(z, int):
            raise SnapshotError(f"z_index of {object_id!r} must be an integer")
        if placement == "visible":
            if z < 0:
                raise SnapshotError(f"visible object {object_id!r} needs z_index >= 0")
            rank_of[object_id] = z
        else:
            if z != -1:
                raise SnapshotError(f"parallel object {object_id!r} needs z_index -1")
            parallel.add(object_id)
        staged[object_id] = {
            "transform": Transform(Point(x, y), angle),
            "size_params": copy.deepcopy(size_params),
            "style": style,
        }

    z_values = sorted(rank_of.values())
    if z_values != list(range(len(rank_of))):
        raise SnapshotError(f"visible z_index values must be 0..{len(rank_of) - 1}, got {z_values}")
    groups = _validate_groups(scene, data["groups"])

    for object_id, fields in staged.items():
        obj = scene.objects[object_id]
        obj.transform = fields["transform"]
        obj.size_params = fields["size_params"]
        obj.style = fields["style"]
        obj.rebuild_cover()
    scene.visible = sorted(rank_of, key=rank_of.__getitem__)
    scene.parallel = parallel
    scene.groups = groups


# -- default layout --------------------------------------------------------


def capture_default(scene: Scene) -> None:
    """Record the current state as the scene's default layout."""
    scene.default_layout = snapshot(scene)


def restore_default(scene: Scene) -> None:
    if scene.default_layout is None:
        raise SnapshotError("scene has no default layout recorded")
    restore(scene, scene.default_layout)


# -- files -----------------------------------------------------------------


def save_layout(scene: Scene, path: str | os.PathLike[str]) -> None:
    text = snapshot_json(scene) + "\n"
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def load_layout(scene: Scene, path: str | os.PathLike[str]) -> None:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SnapshotError(f"not valid JSON: {exc}") from None
    restore(scene, data)

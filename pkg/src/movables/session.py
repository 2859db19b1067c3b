"""Wire protocol and deterministic replay.

One inbound line is one message; every message yields exactly one reply
line. Replies are canonical JSON (sorted keys, fixed 6-decimal floats),
so a deterministic state always produces deterministic bytes.

Inbound grammar (tokens separated by whitespace, line-oriented):

    press X Y left|right
    move X Y
    release
    restore_default
    hide OBJECT_ID
    restore OBJECT_ID
    set_style OBJECT_ID KEY VALUE   (VALUE = rest of line; colors R,G,B)
    save PATH                        (PATH = rest of line)
    load PATH
    snapshot
    render

Replies: {"items": [...], "type": "render_list"} for everything that
reads or changes the picture, {"data": ..., "type": "snapshot"} for
snapshot, {"code": ..., "message": ..., "type": "error"} on failure.
Failed messages never change state.
"""

from __future__ import annotations

import math
from typing import Any, Callable

from . import persistence
from .geometry import Point
from .interaction import Grab, PointerEvent, process_event
from .scene import (
    ObjectStateError,
    Scene,
    SceneError,
    StyleError,
    UnknownObjectError,
)

STYLE_KEYS = ("fill_color", "text_color", "font_size", "text")


class ProtocolError(Exception):
    """A line that does not parse as any message."""

    code = "parse_error"


class ScriptParseError(Exception):
    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def _parse_real(token: str, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ProtocolError(f"{what} must be a number, got {token!r}") from None
    if not math.isfinite(value):
        raise ProtocolError(f"{what} must be finite, got {token!r}")
    return value


def _parse_color(value: str) -> tuple[int, int, int]:
    parts = [p.strip() for p in value.split(",")]
    if len(parts) != 3:
        raise ProtocolError(f"color must be R,G,B, got {value!r}")
    try:
        rgb = tuple(int(p) for p in parts)
    except ValueError:
        raise ProtocolError(f"color components must be integers, got {value!r}") from None
    return rgb  # range checked by StyleParams


def parse_message(line: str) -> dict[str, Any]:
    """One line to one typed message; anything else is a ProtocolError."""
    line = line.strip()
    tokens = line.split()
    if not tokens:
        raise ProtocolError("empty message")
    head = tokens[0]

    if head == "press":
        if len(tokens) != 4:
            raise ProtocolError("press takes X Y BUTTON")
        if tokens[3] not in ("left", "right"):
            raise ProtocolError(f"button must be left or right, got {tokens[3]!r}")
        return {
            "type": "press",
            "x": _parse_real(tokens[1], "x"),
            "y": _parse_real(tokens[2], "y"),
            "button": tokens[3],
        }
    if head == "move":
        if len(tokens) != 3:
            raise ProtocolError("move takes X Y")
        return {"type": "move", "x": _parse_real(tokens[1], "x"), "y": _parse_real(tokens[2], "y")}
    if head == "release":
        if len(tokens) != 1:
            raise ProtocolError("release takes no arguments")
        return {"type": "release"}
    if head in ("restore_default", "snapshot", "render"):
        if len(tokens) != 1:
            raise ProtocolError(f"{head} takes no arguments")
        return {"type": head}
    if head in ("hide", "restore"):
        if len(tokens) != 2:
            raise ProtocolError(f"{head} takes OBJECT_ID")
        return {"type": head, "id": tokens[1]}
    if head == "set_style":
        parts = line.split(None, 3)
        if len(parts) != 4:
            raise ProtocolError("set_style takes OBJECT_ID KEY VALUE")
        _, object_id, key, raw = parts
        if key not in STYLE_KEYS:
            raise ProtocolError(f"unknown style key {key!r}")
        value: Any
        if key in ("fill_color", "text_color"):
            value = _parse_color(raw)
        elif key == "font_size":
            value = _parse_real(raw, "font_size")
        else:
            value = raw
        return {"type": "set_style", "id": object_id, "key": key, "value": value}
    if head in ("save", "load"):
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ProtocolError(f"{head} takes PATH")
        return {"type": head, "path": parts[1]}
    raise ProtocolError(f"unknown message {head!r}")


class Engine:
    """Folds messages into one scene; one reply line per message."""

    def __init__(self, scene: Scene) -> None:
        self.scene = scene
        self.grab: Grab | None = None

    # -- replies -----------------------------------------------------------

    def _render_reply(self) -> str:
        items = [item.to_payload() for item in self.scene.render_list()]
        return persistence.canonical_json({"items": items, "type": "render_list"})

    def _error_reply(self, code: str, message: str) -> str:
        return persistence.canonical_json({"code": code, "message": message, "type": "error"})

    # -- entry points ------------------------------------------------------

    def handle_line(self, line: str) -> str:
        try:
            msg = parse_message(line)
        except ProtocolError as exc:
            return self._error_reply(exc.code, str(exc))
        return self.handle_message(msg)

    def handle_message(self, msg: dict[str, Any]) -> str:
        try:
            return self._dispatch(msg)
        except ProtocolError as exc:
            return self._error_reply(exc.code, str(exc))
        except UnknownObjectError as exc:
            return self._error_reply("unknown_object", str(exc))
        except ObjectStateError as exc:
            return self._error_reply("state_error", str(exc))
        except StyleError as exc:
            return self._error_reply("style_error", str(exc))
        except persistence.VersionError as exc:
            return self._error_reply("version_error", str(exc))
        except persistence.SnapshotError as exc:
            return self._error_reply("snapshot_error", str(exc))
        except SceneError as exc:
            return self._error_reply("state_error", str(exc))
        except OSError as exc:
            return self._error_reply("io_error", str(exc))
        except Exception as exc:  # total protocol: never propagate
            return self._error_reply("internal", f"{type(exc).__name__}: {exc}")

    def _dispatch(self, msg: dict[str, Any]) -> str:
        kind = msg["type"]
        if kind in ("press", "move", "release"):
            event = PointerEvent(
                kind=kind,
                position=Point(msg.get("x", 0.0), msg.get("y", 0.0)),
                button=msg.get("button"),
            )
            self.grab = process_event(self.scene, self.grab, event)
            return self._render_reply()
        if kind == "restore_default":
            persistence.restore_default(self.scene)
            self.grab = None  # press-time anchors are gone with the old layout
            return self._render_reply()
        if kind == "hide":
            self.scene.hide_object(msg["id"])
            self.grab = None
            return self._render_reply()
        if kind == "restore":
            self.scene.restore_object(msg["id"])
            self.grab = None
            return self._render_reply()
        if kind == "set_style":
            self.scene.set_style(msg["id"], msg["key"], msg["value"])
            return self._render_reply()
        if kind == "save":
            persistence.save_layout(self.scene, msg["path"])
            return self._render_reply()
        if kind == "load":
            persistence.load_layout(self.scene, msg["path"])
            self.grab = None
            return self._render_reply()
        if kind == "snapshot":
            return persistence.canonical_json(
                {"data": persistence.snapshot(self.scene), "type": "snapshot"}
            )
        if kind == "render":
            return self._render_reply()
        raise ProtocolError(f"unknown message type {kind!r}")


# -- scenes ----------------------------------------------------------------


def scene_registry() -> dict[str, Callable[[], Scene]]:
    from .demo import build_empty_scene, build_personal_data_scene

    return {"personal-data": build_personal_data_scene, "empty": build_empty_scene}


def build_scene(name: str) -> Scene:
    registry = scene_registry()
    if name not in registry:
        raise ValueError(f"unknown scene {name!r} (available: {', '.join(sorted(registry))})")
    return registry[name]()


# -- replay ----------------------------------------------------------------


def parse_script(text: str) -> list[dict[str, Any]]:
    """Script file: one message per line, # comments, blanks ignored."""
    messages: list[dict[str, Any]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            messages.append(parse_message(line))
        except ProtocolError as exc:
            raise ScriptParseError(number, str(exc)) from None
    return messages


def replay(scene_name: str, messages: list[dict[str, Any]]) -> dict[str, Any]:
    """Fold a script over a fresh default scene; error replies are kept
    in the reply stream but never abort the run."""
    scene = build_scene(scene_name)
    engine = Engine(scene)
    for msg in messages:
        engine.handle_message(msg)
    return persistence.snapshot(scene)

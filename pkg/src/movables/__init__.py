"""movables: every screen object movable and resizable by its user.

The engine attaches an invisible cover — an ordered list of sensitive
nodes — to each object, so any inner point moves it and any border
point resizes it. On top of that sit rotation, synchronous and related
group movement, a parallel world for temporarily hidden objects, and
canonical layout persistence, all driven through a deterministic
line-oriented protocol.
"""

from .cover import Cover, Handle, MoveWhole, Node, Resize, circle_cover, polygon_cover, rect_cover
from .demo import build_personal_data_scene
from .geometry import Point, Transform
from .interaction import Grab, PointerEvent, process_event
from .persistence import canonical_json, restore, restore_default, snapshot, snapshot_json
from .scene import GroupSpec, MovableObject, Scene, StyleParams, make_object
from .session import Engine, parse_message, parse_script, replay

__version__ = "0.1.0"

__all__ = [
    "Cover",
    "Engine",
    "Grab",
    "GroupSpec",
    "Handle",
    "MovableObject",
    "MoveWhole",
    "Node",
    "Point",
    "PointerEvent",
    "Resize",
    "Scene",
    "StyleParams",
    "Transform",
    "__version__",
    "build_personal_data_scene",
    "canonical_json",
    "circle_cover",
    "make_object",
    "parse_message",
    "parse_script",
    "polygon_cover",
    "process_event",
    "rect_cover",
    "replay",
    "restore",
    "restore_default",
    "snapshot",
    "snapshot_json",
]

"""The PersonalData demo scene: a form whose owner rearranges it at will.

Six objects — a title bar and five labeled fields (name, birth date,
address, contact, profession). A related group makes the title the
form's handle: dragging the title carries every visible field along via
stored offsets, while each field remains individually movable (moving
one simply re-anchors its offset). Hiding fields into the parallel
world produces reduced views, like the address-book subset someone
keeps around while sending Christmas cards; the default view comes back
with one command.
"""

from __future__ import annotations

from .persistence import capture_default
from .scene import GroupSpec, Scene, StyleParams, make_object

TITLE_STYLE = StyleParams(
    fill_color=(70, 110, 170),
    text_color=(255, 255, 255),
    font_size=20.0,
    text="Personal Data",
)

FIELD_FILL = (245, 245, 240)
FIELD_TEXT_COLOR = (20, 20, 20)
FIELD_FONT_SIZE = 13.0

# id, x, y, width, height, field text
FIELDS = (
    ("name", 60.0, 100.0, 300.0, 56.0, "Alexandra Bergson"),
    ("birth_date", 440.0, 100.0, 260.0, 56.0, "1982-03-14"),
    ("address", 60.0, 200.0, 420.0, 56.0, "12 Hanover Square, London W1S 1JP"),
    ("contact", 60.0, 300.0, 340.0, 56.0, "alex.bergson@example.org"),
    ("profession", 60.0, 400.0, 380.0, 56.0, "Mathematical modelling; numerical optimisation"),
)

TITLE_POS = (220.0, 24.0)
TITLE_SIZE = (360.0, 44.0)


def build_personal_data_scene() -> Scene:
    """Deterministic default layout, readable at 800x600."""
    scene = Scene()
    scene.add_object(
        make_object(
            "title",
            "rect",
            TITLE_POS[0],
            TITLE_POS[1],
            {"width": TITLE_SIZE[0], "height": TITLE_SIZE[1]},
            style=TITLE_STYLE,
        )
    )
    offsets: dict[str, tuple[float, float]] = {}
    for object_id, x, y, width, height, text in FIELDS:
        scene.add_object(
            make_object(
                object_id,
                "labeled-field",
                x,
                y,
                {"width": width, "height": height},
                style=StyleParams(
                    fill_color=FIELD_FILL,
                    text_color=FIELD_TEXT_COLOR,
                    font_size=FIELD_FONT_SIZE,
                    text=text,
                ),
            )
        )
        offsets[object_id] = (x - TITLE_POS[0], y - TITLE_POS[1])
    scene.add_group(GroupSpec(mode="related", master="title", offsets=offsets))
    capture_default(scene)
    return scene


def build_empty_scene() -> Scene:
    """A scene with no objects; useful as a protocol smoke target."""
    scene = Scene()
    capture_default(scene)
    return scene

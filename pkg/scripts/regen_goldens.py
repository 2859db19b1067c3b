"""Regenerate the golden layout files under tests/golden/.

Run after a deliberate change to the demo scene or the demo script,
then review the diff by hand — the goldens encode hand-checked
expectations (field positions, z order, re-anchored offsets), so a
surprising diff means the engine changed behavior, not that the golden
is stale.
"""

from __future__ import annotations

from pathlib import Path

from movables.persistence import canonical_json, snapshot_json
from movables.session import build_scene, parse_script, replay

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "tests" / "golden"
SCRIPT = ROOT / "scripts" / "personal_data_demo.session"


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)

    default_path = GOLDEN / "personal_data_default.layout.json"
    default_path.write_text(snapshot_json(build_scene("personal-data")) + "\n", encoding="ascii")
    print(f"wrote {default_path}")

    messages = parse_script(SCRIPT.read_text(encoding="utf-8"))
    final_path = GOLDEN / "personal_data_demo_final.layout.json"
    final_path.write_text(canonical_json(replay("personal-data", messages)) + "\n", encoding="ascii")
    print(f"wrote {final_path}")


if __name__ == "__main__":
    main()

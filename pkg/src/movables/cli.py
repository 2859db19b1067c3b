"""Command line entry points.

engine run                      interactive protocol on stdio
engine replay SCRIPT            fold a script, print the final snapshot
engine demo [SCENE]             serve the browser demo on localhost
engine dump-default SCENE       print a scene's default layout snapshot

Exit codes: 0 success, 1 script parse error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import persistence
from .server import DemoServer
from .session import Engine, ScriptParseError, build_scene, parse_script, replay, scene_registry


def _build_parser() -> argparse.ArgumentParser:
    scenes = sorted(scene_registry())
    parser = argparse.ArgumentParser(
        prog="engine",
        description="Direct-manipulation engine: movable objects over a line protocol.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="speak the session protocol on stdin/stdout")
    run_p.add_argument("--scene", default="personal-data", choices=scenes)

    replay_p = sub.add_parser("replay", help="replay a script file, print final snapshot")
    replay_p.add_argument("script", help="script file, one message per line")
    replay_p.add_argument("--scene", default="personal-data", choices=scenes)
    replay_p.add_argument("--snapshot-out", default=None, help="write snapshot here instead of stdout")

    demo_p = sub.add_parser("demo", help="serve the browser demo on localhost")
    demo_p.add_argument("scene", nargs="?", default="personal-data", choices=scenes)
    demo_p.add_argument("--port", type=int, default=7341)

    dump_p = sub.add_parser("dump-default", help="print a scene's default layout snapshot")
    dump_p.add_argument("scene", choices=scenes)
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    engine = Engine(build_scene(args.scene))
    for line in sys.stdin:
        sys.stdout.write(engine.handle_line(line) + "\n")
        sys.stdout.flush()
    return 0


def _cmd_replay(args: argparse.Namespace) -> int:
    try:
        text = open(args.script, "r", encoding="utf-8").read()
    except OSError as exc:
        print(f"engine: cannot read script: {exc}", file=sys.stderr)
        return 2
    try:
        messages = parse_script(text)
    except ScriptParseError as exc:
        print(f"engine: {args.script}: {exc}", file=sys.stderr)
        return 1
    snapshot_text = persistence.canonical_json(replay(args.scene, messages)) + "\n"
    if args.snapshot_out:
        try:
            with open(args.snapshot_out, "w", encoding="ascii") as fh:
                fh.write(snapshot_text)
        except OSError as exc:
            print(f"engine: cannot write snapshot: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(snapshot_text)
    return 0


def _cmd_demo(args: argparse.Namespace) -> int:
    try:
        server = DemoServer(scene_name=args.scene, port=args.port)
    except OSError as exc:
        print(f"engine: cannot bind port {args.port}: {exc}", file=sys.stderr)
        return 2
    print(f"serving {args.scene} demo on http://{server.host}:{server.port}/ (Ctrl-C stops)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.shutdown()
    return 0


def _cmd_dump_default(args: argparse.Namespace) -> int:
    scene = build_scene(args.scene)
    sys.stdout.write(persistence.snapshot_json(scene) + "\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "replay": _cmd_replay,
        "demo": _cmd_demo,
        "dump-default": _cmd_dump_default,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())

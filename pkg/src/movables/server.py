"""Local demo transport: the session protocol served over a WebSocket.

Browsers cannot open raw TCP sockets, so the demo serves the
newline-delimited protocol verbatim over a WebSocket endpoint (/ws):
one text frame in = one message line, one text frame out = one reply
line. The same server also hands out the static client files, so the
whole demo is one process and one port on localhost.

The engine is shared by all connections and outlives them, which is
what lets a client disconnect, reconnect, and fetch the same picture.
A lock serializes message handling, so replies never interleave.

The WebSocket side is a deliberately small RFC 6455 subset: text
frames, fragmentation, ping/pong, close. No extensions, no TLS.
"""

from __future__ import annotations

import base64
import hashlib
import mimetypes
import struct
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import BinaryIO

from .session import Engine, build_scene

_WS_GUID = "258EAFA5-E914-47DA-95CA-C5AB0DC85B11"

OP_CONT = 0x0
OP_TEXT = 0x1
OP_BINARY = 0x2
OP_CLOSE = 0x8
OP_PING = 0x9
OP_PONG = 0xA

_FALLBACK_PAGE = b"""<!doctype html>
<meta charset="utf-8">
<title>movables demo</title>
<body style="font-family: sans-serif; max-width: 40em; margin: 4em auto">
<h1>Engine is running</h1>
<p>The WebSocket endpoint is live at <code>/ws</code>, but no client
build was found. Build the browser client first:</p>
<pre>cd frontend
npm install
npm run build</pre>
<p>then reload this page.</p>
</body>
"""


class WebSocketClosed(Exception):
    pass


def _read_exact(rfile: BinaryIO, n: int) -> bytes:
    data = b""
    while len(data) < n:
        chunk = rfile.read(n - len(data))
        if not chunk:
            raise WebSocketClosed("connection closed mid-frame")
        data += chunk
    return data


def read_frame(rfile: BinaryIO) -> tuple[bool, int, bytes]:
    """One raw frame: (fin, opcode, unmasked payload)."""
    head = _read_exact(rfile, 2)
    fin = bool(head[0] & 0x80)
    opcode = head[0] & 0x0F
    masked = bool(head[1] & 0x80)
    length = head[1] & 0x7F
    if length == 126:
        (length,) = struct.unpack(">H", _read_exact(rfile, 2))
    elif length == 127:
        (length,) = struct.unpack(">Q", _read_exact(rfile, 8))
    mask = _read_exact(rfile, 4) if masked else b""
    payload = _read_exact(rfile, length) if length else b""
    if masked:
        payload = bytes(b ^ mask[i % 4] for i, b in enumerate(payload))
    return fin, opcode, payload


def write_frame(wfile: BinaryIO, opcode: int, payload: bytes) -> None:
    head = bytes([0x80 | opcode])
    n = len(payload)
    if n < 126:
        head += bytes([n])
    elif n < 1 << 16:
        head += bytes([126]) + struct.pack(">H", n)
    else:
        head += bytes([127]) + struct.pack(">Q", n)
    wfile.write(head + payload)
    wfile.flush()


def read_message(rfile: BinaryIO, wfile: BinaryIO) -> str | None:
    """Next complete text message; answers pings; None once closed."""
    buffer = b""
    while True:
        fin, opcode, payload = read_frame(rfile)
        if opcode == OP_CLOSE:
            try:
                write_frame(wfile, OP_CLOSE, payload[:2])
            except OSError:
                pass
            return None
        if opcode == OP_PING:
            write_frame(wfile, OP_PONG, payload)
            continue
        if opcode == OP_PONG:
            continue
        if opcode in (OP_TEXT, OP_CONT):
            buffer += payload
            if fin:
                return buffer.decode("utf-8", errors="replace")
            continue
        raise WebSocketClosed(f"unsupported frame opcode {opcode}")


def accept_key(client_key: str) -> str:
    digest = hashlib.sha1((client_key + _WS_GUID).encode("ascii")).digest()
    return base64.b64encode(digest).decode("ascii")


def default_frontend_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "frontend"


class _DemoHTTPServer(ThreadingHTTPServer):
    daemon_threads = True
    allow_reuse_address = True

    def __init__(self, address, handler, engine: Engine, frontend_dir: Path) -> None:
        super().__init__(address, handler)
        self.engine = engine
        self.engine_lock = threading.Lock()
        self.frontend_dir = frontend_dir


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server: _DemoHTTPServer

    def log_message(self, format: str, *args) -> None:  # quiet by default
        pass

    def do_GET(self) -> None:
        if self.path == "/ws":
            self._serve_websocket()
        else:
            self._serve_static()

    # -- websocket ---------------------------------------------------------

    def _serve_websocket(self) -> None:
        key = self.headers.get("Sec-WebSocket-Key")
        upgrade = (self.headers.get("Upgrade") or "").lower()
        if upgrade != "websocket" or not key:
            self.send_error(400, "expected a WebSocket upgrade")
            return
        handshake = (
            "HTTP/1.1 101 Switching Protocols\r\n"
            "Upgrade: websocket\r\n"
            "Connection: Upgrade\r\n"
            f"Sec-WebSocket-Accept: {accept_key(key)}\r\n"
            "\r\n"
        )
        self.wfile.write(handshake.encode("ascii"))
        self.wfile.flush()
        try:
            while True:
                message = read_message(self.rfile, self.wfile)
                if message is None:
                    break
                with self.server.engine_lock:
                    reply = self.server.engine.handle_line(message)
                write_frame(self.wfile, OP_TEXT, reply.encode("utf-8"))
        except (WebSocketClosed, OSError):
            pass
        self.close_connection = True

    # -- static files ------------------------------------------------------

    def _serve_static(self) -> None:
        root = self.server.frontend_dir.resolve()
        rel = self.path.split("?", 1)[0].lstrip("/") or "index.html"
        target = (root / rel).resolve()
        # keep requests inside the client directory
        if root not in target.parents and target != root:
            self.send_error(404)
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            if rel == "index.html":
                self._send_bytes(_FALLBACK_PAGE, "text/html; charset=utf-8")
            else:
                self.send_error(404)
            return
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        if ctype.startswith("text/") or ctype in ("application/javascript", "application/json"):
            ctype += "; charset=utf-8"
        self._send_bytes(target.read_bytes(), ctype)

    def _send_bytes(self, body: bytes, ctype: str) -> None:
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Cache-Control", "no-store")
        self.end_headers()
        self.wfile.write(body)


class DemoServer:
    """One engine, one port: static client plus /ws protocol endpoint."""

    def __init__(
        self,
        scene_name: str = "personal-data",
        host: str = "127.0.0.1",
        port: int = 7341,
        frontend_dir: Path | None = None,
    ) -> None:
        self.engine = Engine(build_scene(scene_name))
        self._httpd = _DemoHTTPServer(
            (host, port),
            _Handler,
            self.engine,
            frontend_dir if frontend_dir is not None else default_frontend_dir(),
        )
        self._thread: threading.Thread | None = None

    @property
    def port(self) -> int:
        return self._httpd.server_address[1]

    @property
    def host(self) -> str:
        return self._httpd.server_address[0]

    def serve_forever(self) -> None:
        self._httpd.serve_forever()

    def start_background(self) -> None:
        self._thread = threading.Thread(target=self.serve_forever, daemon=True)
        self._thread.start()

    def shutdown(self) -> None:
        self._httpd.shutdown()
        self._httpd.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)
            self._thread = None

"""Demo server tests: WebSocket handshake and frames, shared state, static files.

The client half of the WebSocket conversation is implemented right here
on raw sockets, so the server is exercised by an independent peer rather
than by its own frame helpers.
"""

from __future__ import annotations

import base64
import http.client
import inspect
import json
import os
import socket
import struct

import pytest

from movables.server import DemoServer, accept_key

OP_CONT = 0x0
OP_TEXT = 0x1
OP_CLOSE = 0x8
OP_PING = 0x9
OP_PONG = 0xA


class WSClient:
    """Tiny RFC 6455 client: handshake, masked frames, fragmentation."""

    def __init__(self, host, port, path="/ws"):
        self.sock = socket.create_connection((host, port), timeout=10)
        self.rfile = self.sock.makefile("rb")
        self.key = base64.b64encode(os.urandom(16)).decode("ascii")
        request = (
            f"GET {path} HTTP/1.1\r\n"
            f"Host: {host}:{port}\r\n"
            "Upgrade: websocket\r\n"
            "Connection: Upgrade\r\n"
            f"Sec-WebSocket-Key: {self.key}\r\n"
            "Sec-WebSocket-Version: 13\r\n"
            "\r\n"
        )
        self.sock.sendall(request.encode("ascii"))
        self.status = self.rfile.readline().decode("ascii")
        self.headers = {}
        while True:
            line = self.rfile.readline().decode("ascii")
            if line in ("\r\n", "\n", ""):
                break
            name, _, value = line.partition(":")
            self.headers[name.strip().lower()] = value.strip()

    def send_frame(self, opcode, payload, fin=True):
        head = bytes([(0x80 if fin else 0x00) | opcode])
        n = len(payload)
        if n < 126:
            head += bytes([0x80 | n])
        elif n < 1 << 16:
            head += bytes([0x80 | 126]) + struct.pack(">H", n)
        else:
            head += bytes([0x80 | 127]) + struct.pack(">Q", n)
        mask = os.urandom(4)
        masked = bytes(b ^ mask[i % 4] for i, b in enumerate(payload))
        self.sock.sendall(head + mask + masked)

    def send_text(self, text):
        self.send_frame(OP_TEXT, text.encode("utf-8"))

    def recv_frame(self):
        head = self.rfile.read(2)
        assert len(head) == 2, "connection closed mid-frame"
        fin = bool(head[0] & 0x80)
        opcode = head[0] & 0x0F
        assert not head[1] & 0x80, "server frames must be unmasked"
        length = head[1] & 0x7F
        if length == 126:
            (length,) = struct.unpack(">H", self.rfile.read(2))
        elif length == 127:
            (length,) = struct.unpack(">Q", self.rfile.read(8))
        return fin, opcode, self.rfile.read(length) if length else b""

    def recv_text(self):
        buffer = b""
        while True:
            fin, opcode, payload = self.recv_frame()
            if opcode == OP_CLOSE:
                return None
            if opcode in (OP_PONG, OP_PING):
                continue
            buffer += payload
            if fin:
                return buffer.decode("utf-8")

    def ask(self, line):
        self.send_text(line)
        return json.loads(self.recv_text())

    def close(self):
        try:
            self.send_frame(OP_CLOSE, struct.pack(">H", 1000))
            while True:
                _, opcode, _ = self.recv_frame()
                if opcode == OP_CLOSE:
                    break
        except (AssertionError, OSError):
            pass
        self.sock.close()


@pytest.fixture()
def server(tmp_path):
    srv = DemoServer(scene_name="personal-data", port=0, frontend_dir=tmp_path / "web")
    srv.start_background()
    yield srv
    srv.shutdown()


@pytest.fixture()
def client(server):
    ws = WSClient(server.host, server.port)
    yield ws
    ws.close()


def http_get(server, path):
    conn = http.client.HTTPConnection(server.host, server.port, timeout=10)
    try:
        conn.request("GET", path)
        response = conn.getresponse()
        return response.status, dict(response.getheaders()), response.read()
    finally:
        conn.close()


# -- handshake -----------------------------------------------------------------


def test_handshake_upgrades_with_correct_accept_key(client):
    assert " 101 " in client.status
    assert client.headers["upgrade"].lower() == "websocket"
    assert client.headers["sec-websocket-accept"] == accept_key(client.key)


def test_ws_without_upgrade_headers_is_rejected(server):
    status, _, _ = http_get(server, "/ws")
    assert status == 400


def test_default_port_is_7341():
    signature = inspect.signature(DemoServer.__init__)
    assert signature.parameters["port"].default == 7341
    srv = DemoServer(port=7341)
    srv.start_background()
    try:
        assert srv.port == 7341
    finally:
        srv.shutdown()


# -- protocol over frames ---------------------------------------------------------


def test_render_over_websocket(client):
    reply = client.ask("render")
    assert reply["type"] == "render_list"
    assert [item["id"] for item in reply["items"]][0] == "title"
    assert len(reply["items"]) == 6


def test_drag_over_websocket(client):
    client.ask("press 200 230 left")
    client.ask("move 400 230")
    reply = client.ask("release")
    address = next(item for item in reply["items"] if item["id"] == "address")
    assert address["angle"] == 0.0
    assert address["outline"]["points"][0] == [260.0, 200.0]


def test_one_reply_per_message_in_order(client):
    client.send_text("hide name")
    client.send_text("snapshot")
    client.send_text("bogus")
    assert json.loads(client.recv_text())["type"] == "render_list"
    assert json.loads(client.recv_text())["type"] == "snapshot"
    assert json.loads(client.recv_text())["code"] == "parse_error"


def test_state_survives_reconnect(server):
    first = WSClient(server.host, server.port)
    first.ask("press 200 230 left")
    first.ask("move 400 230")
    first.ask("release")
    first.close()

    second = WSClient(server.host, server.port)
    try:
        reply = second.ask("render")
        address = next(item for item in reply["items"] if item["id"] == "address")
        assert address["outline"]["points"][0] == [260.0, 200.0]
    finally:
        second.close()


def test_two_connections_share_one_scene(server):
    a = WSClient(server.host, server.port)
    b = WSClient(server.host, server.port)
    try:
        a.ask("hide profession")
        reply = b.ask("render")
        assert all(item["id"] != "profession" for item in reply["items"])
    finally:
        a.close()
        b.close()


def test_ping_is_answered_with_matching_pong(client):
    client.send_frame(OP_PING, b"heartbeat")
    fin, opcode, payload = client.recv_frame()
    assert fin and opcode == OP_PONG and payload == b"heartbeat"
    assert client.ask("render")["type"] == "render_list"  # stream still usable


def test_fragmented_message_is_reassembled(client):
    client.send_frame(OP_TEXT, b"sna", fin=False)
    client.send_frame(OP_CONT, b"psh", fin=False)
    client.send_frame(OP_CONT, b"ot", fin=True)
    assert json.loads(client.recv_text())["type"] == "snapshot"


def test_long_message_uses_extended_lengths(client):
    long_text = "x" * 70000  # needs the 64-bit length form on the way in
    reply = client.ask("set_style name text " + long_text)
    assert reply["type"] == "render_list"
    snap = client.ask("snapshot")
    assert snap["data"]["objects"]["name"]["style"]["text"] == long_text


def test_close_handshake_is_echoed(server):
    ws = WSClient(server.host, server.port)
    ws.send_frame(OP_CLOSE, struct.pack(">H", 1000))
    fin, opcode, payload = ws.recv_frame()
    assert fin and opcode == OP_CLOSE
    assert payload == struct.pack(">H", 1000)
    ws.sock.close()


# -- static files ------------------------------------------------------------------


def test_static_serves_client_files(server, tmp_path):
    web = tmp_path / "web"
    web.mkdir()
    (web / "index.html").write_text("<h1>client</h1>", encoding="utf-8")
    (web / "app.js").write_text("console.log(1)", encoding="utf-8")

    status, headers, body = http_get(server, "/")
    assert status == 200
    assert body == b"<h1>client</h1>"
    assert headers["Content-Type"].startswith("text/html")

    status, headers, body = http_get(server, "/app.js")
    assert status == 200
    assert body == b"console.log(1)"
    assert "javascript" in headers["Content-Type"]


def test_static_without_build_shows_instructions(server):
    status, _, body = http_get(server, "/")
    assert status == 200
    assert b"npm run build" in body


def test_static_missing_file_404(server):
    status, _, _ = http_get(server, "/nothing.js")
    assert status == 404


def test_static_refuses_paths_outside_client_dir(server, tmp_path):
    web = tmp_path / "web"
    web.mkdir()
    (tmp_path / "secret.txt").write_text("keep out", encoding="utf-8")
    status, _, body = http_get(server, "/../secret.txt")
    assert status == 404
    assert b"keep out" not in body

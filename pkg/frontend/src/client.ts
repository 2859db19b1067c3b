/** Request/reply transport over a WebSocket.  The engine answers every
 * line with exactly one reply line, so the client keeps at most one
 * message in flight and queues the rest — replies can never be
 * misattributed. */

import { parseReply, type Reply } from "./protocol.js";

/** Structural subset of the browser WebSocket, so tests can drive the
 * client with a fake or with the "ws" package under node. */
export interface SocketLike {
  readonly readyState: number;
  send(data: string): void;
  close(): void;
  addEventListener(type: "open", listener: () => void): void;
  addEventListener(type: "close", listener: () => void): void;
  addEventListener(type: "error", listener: () => void): void;
  addEventListener(type: "message", listener: (event: { data: unknown }) => void): void;
}

const SOCKET_OPEN = 1;

interface Pending {
  line: string;
  resolve: (reply: Reply) => void;
  reject: (err: Error) => void;
}

export class LineClient {
  private socket: SocketLike;
  private queue: Pending[] = [];
  private inFlight: Pending | null = null;
  private opened: Promise<void>;
  private closed = false;

  onClose: (() => void) | null = null;

  constructor(socket: SocketLike) {
    this.socket = socket;
    this.opened = new Promise((resolve, reject) => {
      if (socket.readyState === SOCKET_OPEN) {
        resolve();
        return;
      }
      socket.addEventListener("open", () => resolve());
      socket.addEventListener("error", () => reject(new Error("connection failed")));
    });
    socket.addEventListener("message", (event) => this.handleMessage(String(event.data)));
    socket.addEventListener("close", () => this.handleClose());
    socket.addEventListener("error", () => this.handleClose());
  }

  ready(): Promise<void> {
    return this.opened;
  }

  isOpen(): boolean {
    return !this.closed && this.socket.readyState === SOCKET_OPEN;
  }

  /** True while a reply is outstanding or lines are queued.  Pointer
   * move events are coalesced behind this flag so a burst of mousemoves
   * never outruns the request/reply lockstep. */
  get busy(): boolean {
    return this.inFlight !== null || this.queue.length > 0;
  }

  /** Send one command line; resolves with its reply.  Rejects instead
   * of buffering when the connection is gone — callers drop input and
   * show the banner. */
  request(line: string): Promise<Reply> {
    if (!this.isOpen()) {
      return Promise.reject(new Error("disconnected"));
    }
    return new Promise<Reply>((resolve, reject) => {
      this.queue.push({ line, resolve, reject });
      this.pump();
    });
  }

  close(): void {
    this.socket.close();
  }

  private pump(): void {
    if (this.inFlight !== null || this.queue.length === 0) {
      return;
    }
    const next = this.queue.shift() as Pending;
    this.inFlight = next;
    try {
      this.socket.send(next.line);
    } catch (exc) {
      this.inFlight = null;
      next.reject(exc instanceof Error ? exc : new Error(String(exc)));
      this.pump();
    }
  }

  private handleMessage(data: string): void {
    const pending = this.inFlight;
    if (pending === null) {
      return;
    }
    this.inFlight = null;
    try {
      pending.resolve(parseReply(data));
    } finally {
      this.pump();
    }
  }

  private handleClose(): void {
    if (this.closed) {
      return;
    }
    this.closed = true;
    const orphans = this.queue.splice(0);
    if (this.inFlight !== null) {
      orphans.unshift(this.inFlight);
      this.inFlight = null;
    }
    for (const pending of orphans) {
      pending.reject(new Error("disconnected"));
    }
    if (this.onClose !== null) {
      this.onClose();
    }
  }
}

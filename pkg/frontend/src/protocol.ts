/** Line protocol spoken with the engine: builders for outgoing command
 * lines and typed parsing of the JSON reply lines.  The engine answers
 * every line with exactly one of three reply shapes: a render list, a
 * snapshot, or an error. */

export type Vec2 = [number, number];
export type Color = [number, number, number];

export interface PolygonOutline {
  type: "polygon";
  points: Vec2[];
}

export interface CircleOutline {
  type: "circle";
  center: Vec2;
  radius: number;
}

export type Outline = PolygonOutline | CircleOutline;

export interface ItemStyle {
  fill_color: Color;
  text_color: Color;
  font_size: number;
  text: string;
}

export interface RenderItem {
  id: string;
  kind: string;
  z: number;
  angle: number;
  outline: Outline;
  style: ItemStyle;
}

export interface RenderListReply {
  type: "render_list";
  items: RenderItem[];
}

export interface ObjectRecord {
  placement: "visible" | "parallel";
  z_index: number;
  [extra: string]: unknown;
}

export interface SnapshotData {
  format_version: number;
  objects: Record<string, ObjectRecord>;
  groups: unknown[];
}

export interface SnapshotReply {
  type: "snapshot";
  data: SnapshotData;
}

export interface ErrorReply {
  type: "error";
  code: string;
  message: string;
}

export type Reply = RenderListReply | SnapshotReply | ErrorReply;

export type Button = "left" | "right";

function num(value: number): string {
  if (!Number.isFinite(value)) {
    throw new Error(`non-finite coordinate: ${value}`);
  }
  return String(value);
}

export function pressLine(x: number, y: number, button: Button): string {
  return `press ${num(x)} ${num(y)} ${button}`;
}

export function moveLine(x: number, y: number): string {
  return `move ${num(x)} ${num(y)}`;
}

export function releaseLine(): string {
  return "release";
}

export function renderLine(): string {
  return "render";
}

export function snapshotLine(): string {
  return "snapshot";
}

export function hideLine(id: string): string {
  return `hide ${id}`;
}

export function restoreLine(id: string): string {
  return `restore ${id}`;
}

export function restoreDefaultLine(): string {
  return "restore_default";
}

export function setFillColorLine(id: string, color: Color): string {
  return `set_style ${id} fill_color ${color[0]},${color[1]},${color[2]}`;
}

export function setFontSizeLine(id: string, size: number): string {
  return `set_style ${id} font_size ${num(size)}`;
}

export function parseReply(line: string): Reply {
  let raw: unknown;
  try {
    raw = JSON.parse(line);
  } catch (exc) {
    throw new Error(`reply is not JSON: ${line}`);
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new Error(`reply is not an object: ${line}`);
  }
  const reply = raw as { type?: unknown };
  if (reply.type === "render_list" || reply.type === "snapshot" || reply.type === "error") {
    return raw as Reply;
  }
  throw new Error(`unknown reply type: ${line}`);
}

/** Ids of objects currently parked in the parallel world, in sorted
 * order.  These populate the restore entries of the context menu. */
export function hiddenIds(data: SnapshotData): string[] {
  const out: string[] = [];
  for (const [id, record] of Object.entries(data.objects)) {
    if (record.placement === "parallel") {
      out.push(id);
    }
  }
  out.sort();
  return out;
}

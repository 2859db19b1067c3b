/** Canvas painter.  The screen is a pure function of the last render
 * list: clear, then paint items in list order (bottom first), so later
 * items cover earlier ones.  No layout knowledge lives here — outlines
 * arrive in world coordinates and world maps 1:1 onto the canvas. */

import type { Color, RenderItem, Vec2 } from "./protocol.js";

/** Structural subset of CanvasRenderingContext2D used by the painter;
 * tests substitute a recording fake. */
export interface Canvas2D {
  fillStyle: string | object;
  strokeStyle: string | object;
  lineWidth: number;
  font: string;
  textBaseline: string;
  textAlign: string;
  save(): void;
  restore(): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  arc(x: number, y: number, radius: number, start: number, end: number): void;
  fill(): void;
  stroke(): void;
  clip(): void;
  fillText(text: string, x: number, y: number): void;
  translate(x: number, y: number): void;
  rotate(angle: number): void;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
}

export const BACKGROUND = "#e4e7eb";
const OUTLINE_STROKE = "rgba(30, 30, 30, 0.3)";

export function rgb(color: Color): string {
  return `rgb(${color[0]}, ${color[1]}, ${color[2]})`;
}

/** Field caption derived from the object id: "birth_date" reads as
 * "Birth date". */
export function caption(id: string): string {
  const words = id.replace(/_/g, " ");
  return words.charAt(0).toUpperCase() + words.slice(1);
}

function dist(a: Vec2, b: Vec2): number {
  return Math.hypot(b[0] - a[0], b[1] - a[1]);
}

function tracePolygon(ctx: Canvas2D, points: Vec2[]): void {
  ctx.beginPath();
  ctx.moveTo(points[0][0], points[0][1]);
  for (let i = 1; i < points.length; i += 1) {
    ctx.lineTo(points[i][0], points[i][1]);
  }
  ctx.closePath();
}

function fillShape(ctx: Canvas2D, item: RenderItem): void {
  ctx.fillStyle = rgb(item.style.fill_color);
  ctx.strokeStyle = OUTLINE_STROKE;
  ctx.lineWidth = 1;
  if (item.outline.type === "circle") {
    const [cx, cy] = item.outline.center;
    ctx.beginPath();
    ctx.arc(cx, cy, item.outline.radius, 0, Math.PI * 2);
  } else {
    tracePolygon(ctx, item.outline.points);
  }
  ctx.fill();
  ctx.stroke();
}

function drawCenteredText(ctx: Canvas2D, item: RenderItem, cx: number, cy: number): void {
  const { text, text_color, font_size } = item.style;
  if (text === "") {
    return;
  }
  ctx.save();
  ctx.translate(cx, cy);
  ctx.rotate(item.angle);
  ctx.fillStyle = rgb(text_color);
  ctx.font = `${font_size}px sans-serif`;
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  ctx.fillText(text, 0, 0);
  ctx.restore();
}

function drawLabeledField(ctx: Canvas2D, item: RenderItem, points: Vec2[]): void {
  const width = dist(points[0], points[1]);
  const height = dist(points[0], points[3]);
  const { text, text_color, font_size } = item.style;
  const captionSize = Math.max(9, Math.round(font_size * 0.72));
  ctx.save();
  ctx.translate(points[0][0], points[0][1]);
  ctx.rotate(item.angle);
  ctx.beginPath();
  ctx.moveTo(0, 0);
  ctx.lineTo(width, 0);
  ctx.lineTo(width, height);
  ctx.lineTo(0, height);
  ctx.closePath();
  ctx.clip();
  ctx.textAlign = "left";
  ctx.textBaseline = "top";
  ctx.fillStyle = "rgba(60, 60, 60, 0.85)";
  ctx.font = `${captionSize}px sans-serif`;
  ctx.fillText(caption(item.id), 8, 5);
  if (text !== "") {
    ctx.fillStyle = rgb(text_color);
    ctx.font = `${font_size}px sans-serif`;
    ctx.fillText(text, 8, 5 + captionSize + 5);
  }
  ctx.restore();
}

function drawText(ctx: Canvas2D, item: RenderItem): void {
  const outline = item.outline;
  if (outline.type === "circle") {
    drawCenteredText(ctx, item, outline.center[0], outline.center[1]);
    return;
  }
  const points = outline.points;
  if (item.kind === "labeled-field" && points.length === 4) {
    drawLabeledField(ctx, item, points);
    return;
  }
  let cx = 0;
  let cy = 0;
  for (const [px, py] of points) {
    cx += px;
    cy += py;
  }
  drawCenteredText(ctx, item, cx / points.length, cy / points.length);
}

export function drawScene(ctx: Canvas2D, items: RenderItem[], width: number, height: number): void {
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = BACKGROUND;
  ctx.fillRect(0, 0, width, height);
  for (const item of items) {
    fillShape(ctx, item);
    drawText(ctx, item);
  }
}

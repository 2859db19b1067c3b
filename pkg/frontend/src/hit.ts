/** Point-in-outline tests over the last render list.  Used for exactly
 * one decision: whether a right press lands on an object (rotate) or on
 * empty space (context menu).  Dragging never hit-tests here — the
 * engine owns move/resize/rotate resolution. */

import type { Outline, RenderItem, Vec2 } from "./protocol.js";

export function pointInPolygon(points: Vec2[], x: number, y: number): boolean {
  let inside = false;
  const n = points.length;
  for (let i = 0, j = n - 1; i < n; j = i, i += 1) {
    const [xi, yi] = points[i];
    const [xj, yj] = points[j];
    const crosses = yi > y !== yj > y;
    if (crosses && x < ((xj - xi) * (y - yi)) / (yj - yi) + xi) {
      inside = !inside;
    }
  }
  return inside;
}

export function pointInCircle(center: Vec2, radius: number, x: number, y: number): boolean {
  const dx = x - center[0];
  const dy = y - center[1];
  return dx * dx + dy * dy <= radius * radius;
}

export function pointInOutline(outline: Outline, x: number, y: number): boolean {
  if (outline.type === "circle") {
    return pointInCircle(outline.center, outline.radius, x, y);
  }
  return pointInPolygon(outline.points, x, y);
}

/** Topmost item under the point, or null.  Render lists arrive in
 * painter's order (bottom first), so the scan runs back to front. */
export function hitTest(items: RenderItem[], x: number, y: number): RenderItem | null {
  for (let i = items.length - 1; i >= 0; i -= 1) {
    if (pointInOutline(items[i].outline, x, y)) {
      return items[i];
    }
  }
  return null;
}

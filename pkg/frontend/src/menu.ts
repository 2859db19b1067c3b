/** Context menu model.  The menu is the only chrome in the demo: it
 * opens on a right press over empty space and every entry emits exactly
 * one protocol line — the menu adds no semantics of its own. */

import { caption } from "./draw.js";
import {
  hiddenIds,
  hideLine,
  restoreDefaultLine,
  restoreLine,
  setFillColorLine,
  setFontSizeLine,
  type Color,
  type RenderItem,
  type SnapshotData,
} from "./protocol.js";

export interface MenuModel {
  /** Object the hide and style entries act on. */
  targetId: string | null;
  /** Candidate targets, topmost first. */
  visibleIds: string[];
  /** Objects in the parallel world, one restore entry each. */
  hiddenIds: string[];
}

export interface MenuAction {
  label: string;
  line: string;
}

export function menuModel(items: RenderItem[], data: SnapshotData): MenuModel {
  const visible = items.map((item) => item.id).reverse();
  return {
    targetId: visible.length > 0 ? visible[0] : null,
    visibleIds: visible,
    hiddenIds: hiddenIds(data),
  };
}

export function hideAction(id: string): MenuAction {
  return { label: `Hide ${caption(id)}`, line: hideLine(id) };
}

export function restoreAction(id: string): MenuAction {
  return { label: `Restore ${caption(id)}`, line: restoreLine(id) };
}

export function restoreDefaultAction(): MenuAction {
  return { label: "Restore default view", line: restoreDefaultLine() };
}

export function fillColorAction(id: string, color: Color): MenuAction {
  return { label: "Set fill color", line: setFillColorLine(id, color) };
}

export function fontSizeAction(id: string, size: number): MenuAction {
  return { label: "Set font size", line: setFontSizeLine(id, size) };
}

/** "#rrggbb" from a color input widget to protocol channels. */
export function parseHexColor(hex: string): Color {
  const m = /^#([0-9a-fA-F]{6})$/.exec(hex);
  if (m === null) {
    throw new Error(`not a #rrggbb color: ${hex}`);
  }
  const v = parseInt(m[1], 16);
  return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff];
}

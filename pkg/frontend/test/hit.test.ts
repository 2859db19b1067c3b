import { describe, expect, it } from "vitest";
import { hitTest, pointInCircle, pointInOutline, pointInPolygon } from "../src/hit.js";
import type { RenderItem, Vec2 } from "../src/protocol.js";

function rectItem(id: string, x: number, y: number, w: number, h: number, z: number): RenderItem {
  const points: Vec2[] = [
    [x, y],
    [x + w, y],
    [x + w, y + h],
    [x, y + h],
  ];
  return {
    id,
    kind: "rect",
    z,
    angle: 0,
    outline: { type: "polygon", points },
    style: { fill_color: [200, 200, 200], text_color: [0, 0, 0], font_size: 12, text: "" },
  };
}

function circleItem(id: string, cx: number, cy: number, r: number, z: number): RenderItem {
  return {
    id,
    kind: "circle",
    z,
    angle: 0,
    outline: { type: "circle", center: [cx, cy], radius: r },
    style: { fill_color: [200, 200, 200], text_color: [0, 0, 0], font_size: 12, text: "" },
  };
}

describe("point in polygon", () => {
  const square: Vec2[] = [
    [10, 10],
    [50, 10],
    [50, 50],
    [10, 50],
  ];

  it("accepts interior points and rejects exterior ones", () => {
    expect(pointInPolygon(square, 30, 30)).toBe(true);
    expect(pointInPolygon(square, 11, 49)).toBe(true);
    expect(pointInPolygon(square, 9, 30)).toBe(false);
    expect(pointInPolygon(square, 51, 30)).toBe(false);
    expect(pointInPolygon(square, 30, 60)).toBe(false);
  });

  it("handles a rotated triangle", () => {
    const tri: Vec2[] = [
      [100, 100],
      [160, 120],
      [110, 170],
    ];
    expect(pointInPolygon(tri, 120, 125)).toBe(true);
    expect(pointInPolygon(tri, 100, 170)).toBe(false);
  });
});

describe("point in circle", () => {
  it("uses the closed disc", () => {
    expect(pointInCircle([100, 100], 20, 100, 100)).toBe(true);
    expect(pointInCircle([100, 100], 20, 119.9, 100)).toBe(true);
    expect(pointInCircle([100, 100], 20, 120, 100)).toBe(true);
    expect(pointInCircle([100, 100], 20, 120.1, 100)).toBe(false);
  });
});

describe("render list hit test", () => {
  it("misses on an empty list", () => {
    expect(hitTest([], 10, 10)).toBeNull();
  });

  it("returns the topmost overlapping item", () => {
    const bottom = rectItem("bottom", 0, 0, 100, 100, 0);
    const top = rectItem("top", 50, 50, 100, 100, 1);
    const items = [bottom, top];
    expect(hitTest(items, 75, 75)?.id).toBe("top");
    expect(hitTest(items, 25, 25)?.id).toBe("bottom");
    expect(hitTest(items, 200, 200)).toBeNull();
  });

  it("tests circles by their outline", () => {
    const disc = circleItem("disc", 300, 300, 40, 0);
    expect(hitTest([disc], 300, 335)?.id).toBe("disc");
    expect(hitTest([disc], 300, 345)).toBeNull();
    expect(pointInOutline(disc.outline, 339, 300)).toBe(true);
  });

  it("decides rotate versus menu the way the demo needs", () => {
    const items = [rectItem("address", 60, 200, 420, 56, 3)];
    expect(hitTest(items, 200, 230)).not.toBeNull();
    expect(hitTest(items, 600, 500)).toBeNull();
  });
});

import { describe, expect, it } from "vitest";
import { caption, drawScene, rgb } from "../src/draw.js";
import type { RenderItem } from "../src/protocol.js";
import { RecordingContext } from "./recording.js";

function item(id: string, kind: string, z: number, fill: [number, number, number]): RenderItem {
  return {
    id,
    kind,
    z,
    angle: 0,
    outline: {
      type: "polygon",
      points: [
        [0, 0],
        [100, 0],
        [100, 40],
        [0, 40],
      ],
    },
    style: { fill_color: fill, text_color: [0, 0, 0], font_size: 12, text: `${id} text` },
  };
}

describe("painter", () => {
  it("clears to a blank canvas for an empty list", () => {
    const ctx = new RecordingContext();
    drawScene(ctx, [], 800, 600);
    expect(ctx.ops[0]).toBe("clearRect 0 0 800 600");
    expect(ctx.ops[1]).toBe("fillRect 0 0 800 600");
    expect(ctx.ops).toHaveLength(2);
  });

  it("paints items in list order so later items cover earlier ones", () => {
    const ctx = new RecordingContext();
    const below = item("below", "rect", 0, [10, 20, 30]);
    const above = item("above", "rect", 1, [40, 50, 60]);
    drawScene(ctx, [below, above], 800, 600);
    const belowFill = ctx.ops.indexOf(`fill ${rgb([10, 20, 30])}`);
    const aboveFill = ctx.ops.indexOf(`fill ${rgb([40, 50, 60])}`);
    expect(belowFill).toBeGreaterThan(-1);
    expect(aboveFill).toBeGreaterThan(belowFill);
  });

  it("does not draw absent items", () => {
    const ctx = new RecordingContext();
    drawScene(ctx, [item("kept", "rect", 0, [1, 2, 3])], 800, 600);
    const text = ctx.ops.join("\n");
    expect(text).toContain("kept text");
    expect(text).not.toContain("hidden text");
  });

  it("draws each item's fill before its label", () => {
    const ctx = new RecordingContext();
    drawScene(ctx, [item("one", "labeled-field", 0, [9, 9, 9])], 800, 600);
    const fillAt = ctx.ops.indexOf(`fill ${rgb([9, 9, 9])}`);
    const labelAt = ctx.ops.findIndex((op) => op.startsWith("fillText One"));
    const textAt = ctx.ops.findIndex((op) => op.startsWith("fillText one text"));
    expect(fillAt).toBeGreaterThan(-1);
    expect(labelAt).toBeGreaterThan(fillAt);
    expect(textAt).toBeGreaterThan(labelAt);
  });

  it("uses the item angle when placing text", () => {
    const ctx = new RecordingContext();
    const rotated = item("spun", "labeled-field", 0, [5, 5, 5]);
    rotated.angle = 0.75;
    drawScene(ctx, [rotated], 800, 600);
    expect(ctx.ops).toContain("rotate 0.75");
  });

  it("draws circles with their center and radius", () => {
    const ctx = new RecordingContext();
    const disc: RenderItem = {
      id: "disc",
      kind: "circle",
      z: 0,
      angle: 0,
      outline: { type: "circle", center: [300, 200], radius: 45 },
      style: { fill_color: [1, 1, 1], text_color: [0, 0, 0], font_size: 10, text: "" },
    };
    drawScene(ctx, [disc], 800, 600);
    expect(ctx.ops).toContain("arc 300 200 45");
  });
});

describe("labels", () => {
  it("humanizes object ids", () => {
    expect(caption("birth_date")).toBe("Birth date");
    expect(caption("address")).toBe("Address");
    expect(caption("profession")).toBe("Profession");
  });

  it("formats css colors", () => {
    expect(rgb([70, 110, 170])).toBe("rgb(70, 110, 170)");
  });
});

import { describe, expect, it } from "vitest";

import {
  DEFAULT_PARAMS,
  initialLayout,
  layoutStep,
  reconcileLayout,
  runLayout,
} from "./layout.js";

const vertices = ["1", "2", "3", "4"];
const edges = [
  { source: "1", target: "2" },
  { source: "2", target: "4" },
  { source: "1", target: "3" },
  { source: "3", target: "4" },
];

describe("force layout", () => {
  it("is deterministic for a given vertex order", () => {
    const a = runLayout(initialLayout(vertices), edges, 200);
    const b = runLayout(initialLayout(vertices), edges, 200);
    expect(a).toEqual(b);
  });

  it("keeps pinned nodes fixed", () => {
    const nodes = initialLayout(vertices);
    nodes[0].pinned = true;
    const x = nodes[0].x;
    const y = nodes[0].y;
    runLayout(nodes, edges, 100);
    expect(nodes[0].x).toBe(x);
    expect(nodes[0].y).toBe(y);
  });

  it("keeps every coordinate finite and near the canvas", () => {
    const nodes = runLayout(initialLayout(vertices), edges, 400);
    for (const node of nodes) {
      expect(Number.isFinite(node.x)).toBe(true);
      expect(Number.isFinite(node.y)).toBe(true);
      expect(Math.abs(node.x - DEFAULT_PARAMS.width / 2)).toBeLessThan(1000);
      expect(Math.abs(node.y - DEFAULT_PARAMS.height / 2)).toBeLessThan(1000);
    }
  });

  it("settles below the stop threshold", () => {
    const nodes = runLayout(initialLayout(vertices), edges, 1000);
    expect(layoutStep(nodes, edges)).toBeLessThan(0.5);
  });

  it("reconcile keeps surviving positions and adds new vertices", () => {
    const nodes = runLayout(initialLayout(vertices), edges, 100);
    const kept = nodes[1];
    const next = reconcileLayout(nodes, ["2", "5"]);
    expect(next.find((n) => n.id === "2")).toBe(kept);
    expect(next.find((n) => n.id === "5")).toBeDefined();
    expect(next).toHaveLength(2);
  });
});

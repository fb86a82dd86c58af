// Turn a service state plus a layout into a render-ready diagram model.
// The invariant the tests pin down: the rendered arrow set equals the
// state's arrow set, and an edge is dashed exactly when its degree is 1.

import { LayoutNode } from "./layout.js";
import { Classification, StateModel } from "./types.js";

export interface DiagramNode {
  id: string;
  x: number;
  y: number;
  classification: Classification;
}

export interface DiagramEdge {
  name: string;
  source: string;
  target: string;
  dashed: boolean;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  /** control-point offset separating parallel arrows and loops */
  bend: number;
  loop: boolean;
}

export interface DiagramModel {
  nodes: DiagramNode[];
  edges: DiagramEdge[];
}

export function diagramModel(state: StateModel, layout: LayoutNode[]): DiagramModel {
  const position = new Map(layout.map((n) => [n.id, n]));
  const nodes: DiagramNode[] = state.vertices.map((id) => {
    const p = position.get(id);
    return {
      id,
      x: p ? p.x : 0,
      y: p ? p.y : 0,
      classification: state.classifications[id] ?? "neither",
    };
  });
  // group parallel and antiparallel arrows so their curves separate
  const groups = new Map<string, number>();
  const edges: DiagramEdge[] = state.arrows.map((arrow) => {
    const key = [arrow.source, arrow.target].sort().join("|");
    const seen = groups.get(key) ?? 0;
    groups.set(key, seen + 1);
    const a = position.get(arrow.source);
    const b = position.get(arrow.target);
    return {
      name: arrow.name,
      source: arrow.source,
      target: arrow.target,
      dashed: arrow.degree === 1,
      x1: a ? a.x : 0,
      y1: a ? a.y : 0,
      x2: b ? b.x : 0,
      y2: b ? b.y : 0,
      bend: seen * 26,
      loop: arrow.source === arrow.target,
    };
  });
  return { nodes, edges };
}

export function edgePath(edge: DiagramEdge): string {
  if (edge.loop) {
    const r = 24 + edge.bend / 2;
    return (
      `M ${edge.x1} ${edge.y1 - 10} ` +
      `C ${edge.x1 - r} ${edge.y1 - r - 24}, ` +
      `${edge.x1 + r} ${edge.y1 - r - 24}, ${edge.x2} ${edge.y2 - 10}`
    );
  }
  const mx = (edge.x1 + edge.x2) / 2;
  const my = (edge.y1 + edge.y2) / 2;
  const dx = edge.x2 - edge.x1;
  const dy = edge.y2 - edge.y1;
  const d = Math.max(Math.hypot(dx, dy), 1);
  const ox = (-dy / d) * edge.bend;
  const oy = (dx / d) * edge.bend;
  return `M ${edge.x1} ${edge.y1} Q ${mx + ox} ${my + oy} ${edge.x2} ${edge.y2}`;
}

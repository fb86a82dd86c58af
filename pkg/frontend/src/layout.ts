// Small force-directed layout with draggable pinning.  Positions are
// view-only and never exported; determinism comes from seeding the
// initial placement on a circle in vertex order.

export interface LayoutNode {
  id: string;
  x: number;
  y: number;
  vx: number;
  vy: number;
  pinned: boolean;
}

export interface LayoutEdge {
  source: string;
  target: string;
}

export interface LayoutParams {
  width: number;
  height: number;
  repulsion: number;
  springLength: number;
  springForce: number;
  centering: number;
  damping: number;
}

export const DEFAULT_PARAMS: LayoutParams = {
  width: 640,
  height: 480,
  repulsion: 24000,
  springLength: 120,
  springForce: 0.04,
  centering: 0.01,
  damping: 0.85,
};

export function initialLayout(
  vertices: string[],
  params: LayoutParams = DEFAULT_PARAMS,
): LayoutNode[] {
  const cx = params.width / 2;
  const cy = params.height / 2;
  const radius = Math.min(params.width, params.height) / 2 - 60;
  return vertices.map((id, i) => {
    const angle = (2 * Math.PI * i) / Math.max(vertices.length, 1) - Math.PI / 2;
    return {
      id,
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
      vx: 0,
      vy: 0,
      pinned: false,
    };
  });
}

/** One simulation tick; returns the total movement for convergence checks. */
export function layoutStep(
  nodes: LayoutNode[],
  edges: LayoutEdge[],
  params: LayoutParams = DEFAULT_PARAMS,
): number {
  const byId = new Map(nodes.map((n) => [n.id, n]));
  for (let i = 0; i < nodes.length; i++) {
    for (let j = i + 1; j < nodes.length; j++) {
      const a = nodes[i];
      const b = nodes[j];
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d2 = Math.max(dx * dx + dy * dy, 25);
      const f = params.repulsion / d2;
      const d = Math.sqrt(d2);
      a.vx -= (f * dx) / d;
      a.vy -= (f * dy) / d;
      b.vx += (f * dx) / d;
      b.vy += (f * dy) / d;
    }
  }
  for (const edge of edges) {
    const a = byId.get(edge.source);
    const b = byId.get(edge.target);
    if (!a || !b || a === b) continue;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
    const f = params.springForce * (d - params.springLength);
    a.vx += (f * dx) / d;
    a.vy += (f * dy) / d;
    b.vx -= (f * dx) / d;
    b.vy -= (f * dy) / d;
  }
  const cx = params.width / 2;
  const cy = params.height / 2;
  let moved = 0;
  for (const node of nodes) {
    node.vx += (cx - node.x) * params.centering;
    node.vy += (cy - node.y) * params.centering;
    node.vx *= params.damping;
    node.vy *= params.damping;
    if (node.pinned) {
      node.vx = 0;
      node.vy = 0;
      continue;
    }
    node.x += node.vx;
    node.y += node.vy;
    moved += Math.abs(node.vx) + Math.abs(node.vy);
  }
  return moved;
}

export function runLayout(
  nodes: LayoutNode[],
  edges: LayoutEdge[],
  iterations = 300,
  params: LayoutParams = DEFAULT_PARAMS,
): LayoutNode[] {
  let quiet = 0;
  for (let i = 0; i < iterations; i++) {
    quiet = layoutStep(nodes, edges, params) < 0.5 ? quiet + 1 : 0;
    if (quiet >= 5) break;
  }
  return nodes;
}

/** Carry pinned/settled positions over to the next state's vertex set. */
export function reconcileLayout(
  previous: LayoutNode[],
  vertices: string[],
  params: LayoutParams = DEFAULT_PARAMS,
): LayoutNode[] {
  const old = new Map(previous.map((n) => [n.id, n]));
  const fresh = initialLayout(vertices, params);
  return fresh.map((node) => old.get(node.id) ?? node);
}

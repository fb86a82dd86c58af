// DOM wiring: load a document, draw the diagram, click vertices to
// mutate, inspect panels, walk the timeline.  The server is the only
// authority; this file never computes a mutation locally.

import { Client } from "./api.js";
import { LayoutNode, reconcileLayout, runLayout } from "./layout.js";
import { diagramModel, edgePath } from "./render.js";
import { ExplorerStore } from "./store.js";
import { StateModel } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const serviceBase =
  new URLSearchParams(window.location.search).get("service") ?? "http://127.0.0.1:8000";
const store = new ExplorerStore(new Client(serviceBase));

const byId = (id: string) => document.getElementById(id)!;
const svg = byId("diagram") as unknown as SVGSVGElement;
let layout: LayoutNode[] = [];
let dragging: LayoutNode | null = null;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  text?: string,
  cls?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (text !== undefined) node.textContent = text;
  if (cls) node.className = cls;
  return node;
}

function drawToasts(): void {
  const host = byId("toasts");
  host.textContent = "";
  for (const toast of store.toasts.slice(-3)) {
    host.appendChild(el("div", toast.message, `toast ${toast.kind}`));
  }
}

function drawPanels(state: StateModel): void {
  byId("potential").textContent = state.potential_text || "0";
  const cut = byId("cut");
  cut.textContent = state.has_cut ? state.cut.join(" ") || "(empty)" : "(none)";
  const relations = byId("relations");
  relations.textContent = "";
  for (const relation of state.relations) {
    relations.appendChild(el("div", `${relation.name}: ${relation.text}`));
  }
  if (!state.relations.length) relations.appendChild(el("div", "(no relations)"));
  const badges = byId("classifications");
  badges.textContent = "";
  for (const vertex of state.vertices) {
    const kind = state.classifications[vertex];
    badges.appendChild(el("span", `${vertex}: ${kind}`, `badge ${kind}`));
  }
}

function drawTimeline(): void {
  const host = byId("timeline");
  host.textContent = "";
  store.timeline.forEach((_, index) => {
    const label =
      index === 0 ? "start" : `${index}. ${store.steps[index - 1].vertex}${store.steps[index - 1].side[0].toUpperCase()}`;
    const button = el("button", label, index === store.cursor ? "active" : "");
    button.addEventListener("click", () => {
      void store.jumpTo(index).then(redraw);
    });
    host.appendChild(button);
  });
}

function drawDiagram(state: StateModel): void {
  layout = reconcileLayout(layout, state.vertices);
  runLayout(
    layout,
    state.arrows.map((a) => ({ source: a.source, target: a.target })),
  );
  svg.textContent = "";
  const model = diagramModel(state, layout);
  for (const edge of model.edges) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", edgePath(edge));
    path.setAttribute("class", edge.dashed ? "edge dashed" : "edge");
    path.setAttribute("marker-end", "url(#arrowhead)");
    svg.appendChild(path);
    const label = document.createElementNS(SVG_NS, "text");
    const mx = (edge.x1 + edge.x2) / 2;
    const my = (edge.y1 + edge.y2) / 2;
    label.setAttribute("x", String(edge.loop ? edge.x1 : mx + 8));
    label.setAttribute("y", String(edge.loop ? edge.y1 - 46 : my - 8));
    label.setAttribute("class", "edge-label");
    label.textContent = edge.name;
    svg.appendChild(label);
  }
  for (const node of model.nodes) {
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", `vertex ${node.classification}`);
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(node.x));
    circle.setAttribute("cy", String(node.y));
    circle.setAttribute("r", "16");
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(node.x));
    label.setAttribute("y", String(node.y + 5));
    label.setAttribute("text-anchor", "middle");
    label.textContent = node.id;
    group.appendChild(circle);
    group.appendChild(label);
    group.addEventListener("click", (event) => {
      if (dragging) return;
      void store.clickVertex(node.id, event.shiftKey).then(redraw);
    });
    group.addEventListener("mousedown", (event) => {
      const hit = layout.find((n) => n.id === node.id);
      if (hit) {
        dragging = hit;
        hit.pinned = true;
        event.preventDefault();
      }
    });
    svg.appendChild(group);
  }
}

svg.addEventListener("mousemove", (event) => {
  if (!dragging) return;
  const rect = svg.getBoundingClientRect();
  dragging.x = event.clientX - rect.left;
  dragging.y = event.clientY - rect.top;
  if (store.current) drawDiagram(store.current);
});
svg.addEventListener("mouseup", () => {
  // a short delay so the click handler can tell drags from clicks
  setTimeout(() => {
    dragging = null;
  }, 0);
});

function redraw(): void {
  const state = store.current;
  if (state) {
    drawDiagram(state);
    drawPanels(state);
    drawTimeline();
  }
  drawToasts();
}

async function loadDocument(text: string): Promise<void> {
  try {
    await store.load(text);
    layout = [];
    redraw();
  } catch (error) {
    store.toast("error", String(error));
    drawToasts();
  }
}

async function boot(): Promise<void> {
  const picker = byId("examples") as HTMLSelectElement;
  try {
    const { examples } = await store.client.listExamples();
    for (const name of examples) {
      const option = el("option", name);
      option.value = name;
      picker.appendChild(option);
    }
  } catch {
    store.toast("error", `cannot reach the service at ${serviceBase}`);
    drawToasts();
    return;
  }
  picker.addEventListener("change", () => {
    void store.client.getExample(picker.value).then((text) => {
      (byId("document") as HTMLTextAreaElement).value = text;
      void loadDocument(text);
    });
  });
  byId("load").addEventListener("click", () => {
    void loadDocument((byId("document") as HTMLTextAreaElement).value);
  });
  byId("undo").addEventListener("click", () => {
    void store.undo().then(redraw);
  });
  byId("export-qp").addEventListener("click", () => {
    if (!store.sessionId) return;
    void store.client.exportText(store.sessionId, "qp").then((text) => {
      const blob = new Blob([text], { type: "text/plain" });
      const link = el("a");
      link.href = URL.createObjectURL(blob);
      link.download = "state.qp";
      link.click();
    });
  });
}

void boot();

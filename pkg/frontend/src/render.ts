// DOM rendering: quiver SVG with clickable vertices, cluster variable
// slots, summand labels, history strip and the detail panel.  Every string
// placed in the document is a payload string (optionally passed through the
// cosmetic formatter, with the canonical string kept in the title).

import { QuiverPayload } from "./api.js";
import { prettyDisplay, prettyIndex, prettyPoly } from "./format.js";
import { hashSeed, layoutQuiver } from "./layout.js";
import { ViewStore } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const W = 560;
const H = 220;

function el(tag: string, cls?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderQuiver(
  quiver: QuiverPayload,
  seedText: string,
  onVertexClick: (v: number) => void,
): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${W} ${H}`);
  svg.setAttribute("class", "quiver");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "7");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const tip = document.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M0,0 L7,3 L0,6 Z");
  marker.appendChild(tip);
  svg.appendChild(marker);

  const pts = layoutQuiver(quiver, W, H, hashSeed(seedText));
  // parallel arrows bend apart
  const seen = new Map<string, number>();
  for (const a of quiver.arrows) {
    const key = `${Math.min(a.s, a.t)}-${Math.max(a.s, a.t)}`;
    const k = seen.get(key) ?? 0;
    seen.set(key, k + 1);
    const p = pts[a.s - 1];
    const q = pts[a.t - 1];
    const dx = q.x - p.x;
    const dy = q.y - p.y;
    const len = Math.max(Math.hypot(dx, dy), 1);
    const ux = dx / len;
    const uy = dy / len;
    const sx = p.x + ux * 18;
    const sy = p.y + uy * 18;
    const ex = q.x - ux * 20;
    const ey = q.y - uy * 20;
    const bend = k === 0 ? 0 : (k % 2 ? 1 : -1) * 14 * Math.ceil(k / 2);
    const mx = (sx + ex) / 2 - uy * bend;
    const my = (sy + ey) / 2 + ux * bend;
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", `M${sx},${sy} Q${mx},${my} ${ex},${ey}`);
    path.setAttribute("class", "arrow");
    path.setAttribute("marker-end", "url(#arrowhead)");
    svg.appendChild(path);
  }
  pts.forEach((p, i) => {
    const g = document.createElementNS(SVG_NS, "g");
    g.setAttribute("class", "vertex");
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    circle.setAttribute("r", "16");
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 5));
    label.setAttribute("text-anchor", "middle");
    label.textContent = String(i + 1);
    g.appendChild(circle);
    g.appendChild(label);
    g.addEventListener("click", () => onVertexClick(i + 1));
    svg.appendChild(g);
  });
  return svg as SVGSVGElement;
}

export function render(root: HTMLElement, store: ViewStore, actions: {
  mutate: (v: number) => void;
  inspect: (slot: number) => void;
  replay: () => void;
}): void {
  root.textContent = "";
  const session = store.session;
  if (!session) {
    root.appendChild(el("p", "status", "connecting..."));
    return;
  }

  const left = el("div", "column");
  left.appendChild(el("h2", undefined, "quiver (click a vertex to mutate)"));
  left.appendChild(renderQuiver(session.seed.quiver, session.id, actions.mutate));

  const historyStrip = el("div", "history");
  historyStrip.appendChild(el("span", "history-title", "history:"));
  if (session.history.length === 0) {
    historyStrip.appendChild(el("span", "history-step", "(initial)"));
  }
  session.history.forEach((v) => {
    historyStrip.appendChild(el("span", "history-step", `μ${v}`));
  });
  const replayBtn = el("button", "replay", "replay");
  replayBtn.addEventListener("click", actions.replay);
  historyStrip.appendChild(replayBtn);
  left.appendChild(historyStrip);

  if (store.error) {
    left.appendChild(el("p", "error", store.error));
  }

  const vars = el("div", "panel");
  vars.appendChild(el("h2", undefined, "cluster variables"));
  session.seed.cluster.forEach((u, i) => {
    const row = el("div", "slot");
    row.appendChild(el("span", "slot-index", `u${i + 1} =`));
    const value = el("span", "value", prettyDisplay(u.display));
    value.title = u.canonical;
    row.appendChild(value);
    vars.appendChild(row);
  });
  left.appendChild(vars);

  const right = el("div", "column");
  if (session.ct) {
    const mirror = el("div", "panel");
    mirror.appendChild(el("h2", undefined, "cluster-tilting object (click to inspect)"));
    session.ct.summands.forEach((s, i) => {
      const row = el("div", "slot clickable");
      row.appendChild(el("span", "slot-index", s.label));
      const name = el("span", "value", s.name);
      name.title = s.cc.canonical;
      row.appendChild(name);
      row.addEventListener("click", () => actions.inspect(i + 1));
      mirror.appendChild(row);
    });
    right.appendChild(mirror);
  } else {
    right.appendChild(el("p", "status", "no categorical mirror for this quiver"));
  }

  if (store.detail) {
    const d = store.detail;
    const panel = el("div", "panel detail");
    panel.appendChild(el("h2", undefined, `object ${d.label} = ${d.name}`));
    const cc = el("p", undefined, `CC = ${prettyDisplay(d.ccDisplay)}`);
    cc.title = d.ccCanonical;
    panel.appendChild(cc);
    panel.appendChild(el("p", undefined, `index = ${prettyIndex(d.index)}`));
    panel.appendChild(el("p", undefined, `F = ${prettyPoly(d.fpoly)}`));
    if (d.grassmannian) {
      const table = el("table", "grass");
      const head = el("tr");
      head.appendChild(el("th", undefined, "e"));
      head.appendChild(el("th", undefined, "χ"));
      table.appendChild(head);
      for (const row of d.grassmannian) {
        const tr = el("tr");
        tr.appendChild(el("td", undefined, `(${row.e.join(",")})`));
        tr.appendChild(el("td", undefined, String(row.chi)));
        table.appendChild(tr);
      }
      panel.appendChild(table);
    }
    right.appendChild(panel);
  }

  root.appendChild(left);
  root.appendChild(right);
}

// Vertex placement for the quiver view.  Type A quivers (underlying path
// in natural order) sit on a fixed horizontal line so screenshots are
// reproducible; anything else gets a small deterministic force layout
// seeded per session, so repeated renders of one session never jump.

import { QuiverPayload } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export function isPathGraph(quiver: QuiverPayload): boolean {
  if (quiver.arrows.length !== quiver.n - 1) return false;
  const edges = quiver.arrows
    .map((a) => [Math.min(a.s, a.t), Math.max(a.s, a.t)] as const)
    .sort((p, q) => p[0] - q[0]);
  return edges.every(([lo, hi], k) => lo === k + 1 && hi === k + 2);
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function hashSeed(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

export function layoutQuiver(
  quiver: QuiverPayload,
  width: number,
  height: number,
  seed: number,
): Point[] {
  const n = quiver.n;
  if (n === 1) return [{ x: width / 2, y: height / 2 }];
  if (isPathGraph(quiver)) {
    const pad = 40;
    const step = (width - 2 * pad) / (n - 1);
    return Array.from({ length: n }, (_, i) => ({ x: pad + i * step, y: height / 2 }));
  }
  // deterministic force layout: fixed iteration count, seeded start
  const rand = mulberry32(seed);
  const pts: Point[] = Array.from({ length: n }, () => ({
    x: width * (0.2 + 0.6 * rand()),
    y: height * (0.2 + 0.6 * rand()),
  }));
  const edges = quiver.arrows.map((a) => [a.s - 1, a.t - 1] as const);
  const ideal = Math.min(width, height) / 2.2;
  for (let iter = 0; iter < 200; iter++) {
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pts[i].x - pts[j].x;
        const dy = pts[i].y - pts[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const f = (ideal * ideal) / d2;
        const d = Math.sqrt(d2);
        fx[i] += (dx / d) * f;
        fy[i] += (dy / d) * f;
        fx[j] -= (dx / d) * f;
        fy[j] -= (dy / d) * f;
      }
    }
    for (const [s, t] of edges) {
      const dx = pts[t].x - pts[s].x;
      const dy = pts[t].y - pts[s].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const f = (d * d) / ideal / d;
      fx[s] += dx * f * 0.05;
      fy[s] += dy * f * 0.05;
      fx[t] -= dx * f * 0.05;
      fy[t] -= dy * f * 0.05;
    }
    const cool = 1 - iter / 200;
    for (let i = 0; i < n; i++) {
      pts[i].x += Math.max(-8, Math.min(8, fx[i] * 0.02)) * cool;
      pts[i].y += Math.max(-8, Math.min(8, fy[i] * 0.02)) * cool;
      pts[i].x = Math.max(30, Math.min(width - 30, pts[i].x));
      pts[i].y = Math.max(30, Math.min(height - 30, pts[i].y));
    }
  }
  return pts;
}

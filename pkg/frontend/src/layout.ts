/** Force-directed positions for the workspace drawing: core vertices repel
 * and pull along edges; chordal-path beads then sit on smooth arcs between
 * their endpoints so chains stay visually distinct from core edges. */

import type { SessionView } from './api';

export interface Point {
  x: number;
  y: number;
}

export interface LayoutResult {
  core: Point[];
  /** per path, the bead positions of its internal vertices in order */
  arcs: Point[][];
}

const WIDTH = 640;
const HEIGHT = 440;

export function layoutView(view: SessionView, iterations = 250): LayoutResult {
  const n = view.core_n;
  if (n === 0) {
    return { core: [], arcs: [] };
  }
  // seed on a circle for determinism, then relax
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n;
    pts.push({
      x: WIDTH / 2 + 160 * Math.cos(angle),
      y: HEIGHT / 2 + 160 * Math.sin(angle),
    });
  }
  // treat chordal paths as soft links so endpoints drift together
  const links: number[][] = [...view.core_edges];
  for (const p of view.paths) {
    if (p.u !== p.v) {
      links.push([p.u, p.v]);
    }
  }
  const ideal = 170;
  for (let step = 0; step < iterations; step++) {
    const temp = 24 * (1 - step / iterations) + 2;
    const disp: Point[] = pts.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pts[i].x - pts[j].x;
        const dy = pts[i].y - pts[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const f = (ideal * ideal) / d2 / 2;
        disp[i].x += dx * f;
        disp[i].y += dy * f;
        disp[j].x -= dx * f;
        disp[j].y -= dy * f;
      }
    }
    for (const [u, v] of links) {
      const dx = pts[u].x - pts[v].x;
      const dy = pts[u].y - pts[v].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1;
      const f = (d - ideal / 2.2) / d / 3;
      disp[u].x -= dx * f;
      disp[u].y -= dy * f;
      disp[v].x += dx * f;
      disp[v].y += dy * f;
    }
    for (let i = 0; i < n; i++) {
      const d = Math.sqrt(disp[i].x ** 2 + disp[i].y ** 2) || 1;
      const move = Math.min(d, temp);
      pts[i].x += (disp[i].x / d) * move;
      pts[i].y += (disp[i].y / d) * move;
    }
  }
  // normalize into the viewport
  const xs = pts.map((p) => p.x);
  const ys = pts.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = Math.max(maxX - minX, 1);
  const spanY = Math.max(maxY - minY, 1);
  const margin = 50;
  for (const p of pts) {
    p.x = margin + ((p.x - minX) / spanX) * (WIDTH - 2 * margin);
    p.y = margin + ((p.y - minY) / spanY) * (HEIGHT - 2 * margin);
  }

  const arcs: Point[][] = view.paths.map((path, index) => {
    const a = pts[path.u];
    const b = pts[path.v];
    return beadPositions(a, b, path.s, index, path.u === path.v);
  });
  return { core: pts, arcs };
}

function beadPositions(a: Point, b: Point, s: number, index: number, loop: boolean): Point[] {
  const beads: Point[] = [];
  if (s === 0) {
    return beads;
  }
  if (loop) {
    // lay the loop's beads on a small circle hanging off the vertex
    const r = 30 + 12 * index;
    for (let k = 1; k <= s; k++) {
      const angle = (2 * Math.PI * k) / (s + 1);
      beads.push({
        x: a.x + r * Math.sin(angle),
        y: a.y - r * (1 - Math.cos(angle)),
      });
    }
    return beads;
  }
  // quadratic arc bulging away from the straight segment, alternating side
  const side = index % 2 === 0 ? 1 : -1;
  const bulge = 28 + 16 * Math.floor(index / 2);
  const mx = (a.x + b.x) / 2;
  const my = (a.y + b.y) / 2;
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.sqrt(dx * dx + dy * dy) || 1;
  const cx = mx + (side * bulge * -dy) / len;
  const cy = my + (side * bulge * dx) / len;
  for (let k = 1; k <= s; k++) {
    const t = k / (s + 1);
    const omt = 1 - t;
    beads.push({
      x: omt * omt * a.x + 2 * omt * t * cx + t * t * b.x,
      y: omt * omt * a.y + 2 * omt * t * cy + t * t * b.y,
    });
  }
  return beads;
}

/** Linear colour scale from coolest (minimum transmission) to hottest. */
export function transmissionColor(value: number, min: number, max: number): string {
  const t = max > min ? (value - min) / (max - min) : 0;
  const hue = 210 - 190 * t;
  return `hsl(${hue.toFixed(0)}, 75%, 55%)`;
}

/** Screen placement of polygon vertices and quiver nodes.
 *
 * Labels run clockwise starting at the top, matching the engine's
 * convention that rotating one step clockwise is the label shift v -> v+1.
 * SVG's y axis points down, so increasing the parameter angle moves
 * clockwise on screen.
 */

import type { Pair } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export function polygonVertices(m: number, cx: number, cy: number, r: number): Point[] {
  const points: Point[] = [];
  for (let v = 0; v < m; v++) {
    const angle = -Math.PI / 2 + (2 * Math.PI * v) / m;
    points.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return points;
}

export function midpoint(d: Pair, vertices: Point[]): Point {
  const a = vertices[d[0]];
  const b = vertices[d[1]];
  if (a === undefined || b === undefined) {
    throw new Error(`diagonal [${d}] outside the polygon`);
  }
  return { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
}

/** Endpoints of an arrow segment pulled back from both node centers. */
export function shrunkSegment(from: Point, to: Point, gap: number): [Point, Point] {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const length = Math.hypot(dx, dy);
  if (length < 2 * gap) {
    return [from, to];
  }
  const ux = dx / length;
  const uy = dy / length;
  return [
    { x: from.x + ux * gap, y: from.y + uy * gap },
    { x: to.x - ux * gap, y: to.y - uy * gap },
  ];
}

export function fmt(value: number): string {
  return value.toFixed(1);
}

/** Pure SVG/HTML builders: the scene is a function of the state, nothing else. */

import { fmt, midpoint, polygonVertices, shrunkSegment, type Point } from "./geometry.js";
import type { CatalogResponse, Pair, QuiverJson, StateView } from "./types.js";

export const SCENE_SIZE = 440;
const CENTER = SCENE_SIZE / 2;
const RADIUS = CENTER - 36;
const NODE_RADIUS = 11;

/** Arrow pairs that lie on some directed triangle, for highlighting. */
export function arrowsOnTriangles(arrows: Pair[]): Set<string> {
  const present = new Set(arrows.map(([i, j]) => `${i},${j}`));
  const on = new Set<string>();
  for (const [i, j] of arrows) {
    for (const [j2, k] of arrows) {
      if (j2 === j && present.has(`${k},${i}`)) {
        for (const key of [`${i},${j}`, `${j},${k}`, `${k},${i}`]) {
          on.add(key);
        }
      }
    }
  }
  return on;
}

function svgPolygonBorder(vertices: Point[]): string {
  const points = vertices.map((p) => `${fmt(p.x)},${fmt(p.y)}`).join(" ");
  return `<polygon class="border" points="${points}" />`;
}

function svgPolygonVertices(vertices: Point[]): string {
  const parts: string[] = [];
  vertices.forEach((p, v) => {
    const labelPos = labelOffset(p);
    parts.push(`<circle class="corner" cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="3.5" />`);
    parts.push(
      `<text class="corner-label" x="${fmt(labelPos.x)}" y="${fmt(labelPos.y)}">${v}</text>`,
    );
  });
  return parts.join("");
}

function labelOffset(p: Point): Point {
  const dx = p.x - CENTER;
  const dy = p.y - CENTER;
  const len = Math.hypot(dx, dy) || 1;
  return { x: p.x + (dx / len) * 18, y: p.y + (dy / len) * 18 + 4 };
}

function diagonalClasses(state: StateView, index: number, selection: number | null,
                         hover: number | null): string {
  const classes = ["diagonal"];
  if (state.close_to_border[index]) classes.push("close");
  if (state.classification[index] === "on_cycle") classes.push("on-cycle");
  if (selection === index) classes.push("selected");
  if (hover === index) classes.push("hover");
  return classes.join(" ");
}

/** The polygon with its triangulation and the quiver drawn at diagonal midpoints. */
export function renderScene(state: StateView, selection: number | null = null,
                            hover: number | null = null): string {
  const m = state.polygon_size;
  const vertices = polygonVertices(m, CENTER, CENTER, RADIUS);
  const mids = state.diagonals.map((d) => midpoint(d, vertices));
  const highlighted = arrowsOnTriangles(state.arrows);

  const parts: string[] = [];
  parts.push(
    `<svg class="scene" viewBox="0 0 ${SCENE_SIZE} ${SCENE_SIZE}" ` +
      `xmlns="http://www.w3.org/2000/svg">`,
  );
  parts.push(
    `<defs>` +
      `<marker id="arrow-head" markerWidth="8" markerHeight="8" refX="6.5" refY="3" ` +
      `orient="auto"><path d="M0,0 L7,3 L0,6 z" /></marker>` +
      `<marker id="arrow-head-cycle" markerWidth="8" markerHeight="8" refX="6.5" refY="3" ` +
      `orient="auto"><path d="M0,0 L7,3 L0,6 z" /></marker>` +
      `</defs>`,
  );
  parts.push(svgPolygonBorder(vertices));
  parts.push(svgPolygonVertices(vertices));

  // visible diagonals plus fat transparent hit areas for comfortable clicking
  state.diagonals.forEach((d, index) => {
    const a = vertices[d[0]]!;
    const b = vertices[d[1]]!;
    const coords =
      `x1="${fmt(a.x)}" y1="${fmt(a.y)}" x2="${fmt(b.x)}" y2="${fmt(b.y)}"`;
    parts.push(
      `<line class="${diagonalClasses(state, index, selection, hover)}" ` +
        `data-diagonal-index="${index}" ${coords} />`,
    );
    parts.push(
      `<line class="diagonal-hit" data-diagonal-index="${index}" ${coords} />`,
    );
  });

  // quiver arrows between diagonal midpoints
  state.arrows.forEach(([i, j]) => {
    const [from, to] = shrunkSegment(mids[i]!, mids[j]!, NODE_RADIUS + 4);
    const onCycle = highlighted.has(`${i},${j}`);
    const cls = onCycle ? "arrow on-cycle" : "arrow";
    const marker = onCycle ? "arrow-head-cycle" : "arrow-head";
    parts.push(
      `<line class="${cls}" x1="${fmt(from.x)}" y1="${fmt(from.y)}" ` +
        `x2="${fmt(to.x)}" y2="${fmt(to.y)}" marker-end="url(#${marker})" />`,
    );
  });

  // quiver vertices at the diagonal midpoints, clickable
  mids.forEach((p, index) => {
    const classes = selection === index ? "node selected" : "node";
    parts.push(
      `<g class="${classes}" data-vertex-index="${index}">` +
        `<circle cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="${NODE_RADIUS}" />` +
        `<text x="${fmt(p.x)}" y="${fmt(p.y + 4)}">${index}</text>` +
        `</g>`,
    );
  });

  parts.push("</svg>");
  return parts.join("");
}

/** Sidebar facts for the current state. */
export function renderFacts(state: StateView, historyDepth: number): string {
  const rows = state.diagonals.map((d, index) => {
    const cls = state.classification[index];
    const tag = cls === null || cls === undefined ? "-" : cls.replace("_", " ");
    const close = state.close_to_border[index] ? "close to border" : "inner";
    return (
      `<tr><td>${index}</td><td>(${d[0]}, ${d[1]})</td>` +
      `<td>${close}</td><td>${tag}</td></tr>`
    );
  });
  return (
    `<table class="facts"><thead><tr>` +
    `<th>vertex</th><th>diagonal</th><th>position</th><th>shape</th>` +
    `</tr></thead><tbody>${rows.join("")}</tbody></table>` +
    `<p class="orbit">rotation orbit size ${state.orbit_size}` +
    ` &middot; moves applied ${historyDepth}</p>`
  );
}

function quiverCard(quiver: QuiverJson, index: number): string {
  // small circular layout; vertices of the abstract quiver, not a polygon
  const size = 120;
  const c = size / 2;
  const r = c - 18;
  const spots = polygonVertices(quiver.n, c, c, r);
  const parts = [
    `<svg class="card-scene" viewBox="0 0 ${size} ${size}" ` +
      `xmlns="http://www.w3.org/2000/svg">`,
  ];
  quiver.arrows.forEach(([i, j]) => {
    const [from, to] = shrunkSegment(spots[i]!, spots[j]!, 8);
    parts.push(
      `<line class="arrow" x1="${fmt(from.x)}" y1="${fmt(from.y)}" ` +
        `x2="${fmt(to.x)}" y2="${fmt(to.y)}" marker-end="url(#arrow-head)" />`,
    );
  });
  spots.forEach((p, v) => {
    parts.push(`<circle class="card-node" cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="6" />`);
    parts.push(`<text class="card-label" x="${fmt(p.x)}" y="${fmt(p.y + 3)}">${v}</text>`);
  });
  parts.push("</svg>");
  return `<figure class="card"><figcaption>#${index}</figcaption>${parts.join("")}</figure>`;
}

/** The catalog browser pane: every quiver class of one rank. */
export function renderCatalog(catalog: CatalogResponse): string {
  const cards = catalog.quivers.map((q, index) => quiverCard(q, index)).join("");
  return (
    `<h2>catalog: rank ${catalog.n}, ${catalog.count} classes</h2>` +
    `<div class="cards">${cards}</div>`
  );
}

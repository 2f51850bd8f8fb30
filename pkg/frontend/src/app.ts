/** Controller: wires DOM events to service calls and re-renders on changes.
 *
 * Every state transition is a round trip: click a diagonal -> POST /flip,
 * click a quiver vertex -> POST /mutate, and the response replaces the view.
 * At most one state-changing request is in flight; controls are disabled
 * while it runs.
 */

import { ApiClient, ApiError, NetworkError } from "./api.js";
import { renderCatalog, renderFacts, renderScene } from "./render.js";
import { ExplorerStore, initialUiState, type UiState } from "./state.js";
import type { Pair, StateView } from "./types.js";

const RANK_CHOICES = [2, 3, 4, 5, 6, 7, 8];

export class ExplorerApp {
  readonly store: ExplorerStore;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    initialN = 3,
  ) {
    this.store = new ExplorerStore(initialUiState(initialN));
    this.store.subscribe(() => this.renderAll());
    this.root.addEventListener("click", (event) => this.onClick(event));
    this.root.addEventListener("mouseover", (event) => this.onHover(event, true));
    this.root.addEventListener("mouseout", (event) => this.onHover(event, false));
  }

  async start(): Promise<void> {
    await this.reset(this.store.state.n);
  }

  async reset(n: number): Promise<void> {
    if (!this.store.beginRequest()) return;
    try {
      const session = await this.api.createSession(n);
      this.store.startSession(n, session.id, session.state);
    } catch (err) {
      this.fail(err);
    } finally {
      this.store.endRequest();
    }
  }

  private async move(action: (sessionId: string) => Promise<StateView>,
                     undo = false): Promise<void> {
    const sessionId = this.store.state.sessionId;
    if (sessionId === null || !this.store.beginRequest()) return;
    try {
      const view = await action(sessionId);
      if (undo) {
        this.store.applyUndo(view);
      } else {
        this.store.applyMove(view);
      }
    } catch (err) {
      this.fail(err);
    } finally {
      this.store.endRequest();
    }
  }

  flipDiagonal(index: number): Promise<void> {
    const view = this.store.state.view;
    if (view === null) return Promise.resolve();
    const diagonal = view.diagonals[index];
    if (diagonal === undefined) return Promise.resolve();
    return this.move((sid) => this.api.flip(sid, diagonal as Pair));
  }

  mutateVertex(index: number): Promise<void> {
    return this.move((sid) => this.api.mutate(sid, index));
  }

  rotate(steps: number): Promise<void> {
    return this.move((sid) => this.api.rotate(sid, steps));
  }

  undo(): Promise<void> {
    return this.move((sid) => this.api.undo(sid), true);
  }

  async browseCatalog(n: number): Promise<void> {
    if (!this.store.beginRequest()) return;
    try {
      this.store.showCatalog(await this.api.catalog(n));
    } catch (err) {
      this.fail(err);
    } finally {
      this.store.endRequest();
    }
  }

  private fail(err: unknown): void {
    if (err instanceof NetworkError) {
      this.store.setNetworkDown(true);
    } else if (err instanceof ApiError) {
      this.store.showToast(`${err.code}: ${err.message}`);
    } else {
      this.store.showToast(String(err));
    }
  }

  private onClick(event: Event): void {
    const target = event.target as HTMLElement | null;
    if (target === null) return;
    const diagonal = target.closest<HTMLElement>("[data-diagonal-index]");
    if (diagonal?.dataset.diagonalIndex !== undefined) {
      void this.flipDiagonal(Number(diagonal.dataset.diagonalIndex));
      return;
    }
    const vertex = target.closest<HTMLElement>("[data-vertex-index]");
    if (vertex?.dataset.vertexIndex !== undefined) {
      void this.mutateVertex(Number(vertex.dataset.vertexIndex));
      return;
    }
    const control = target.closest<HTMLElement>("[data-action]");
    if (control?.dataset.action !== undefined) {
      this.runControl(control.dataset.action, control.dataset);
    }
  }

  private runControl(action: string, data: DOMStringMap): void {
    switch (action) {
      case "rotate-cw":
        void this.rotate(1);
        break;
      case "rotate-ccw":
        void this.rotate(-1);
        break;
      case "undo":
        void this.undo();
        break;
      case "reset":
        void this.reset(Number(data.n ?? this.store.state.n));
        break;
      case "catalog":
        void this.browseCatalog(Number(data.n ?? this.store.state.n));
        break;
      case "close-catalog":
        this.store.closeCatalog();
        break;
      case "retry":
        void this.start();
        break;
    }
  }

  private onHover(event: Event, entering: boolean): void {
    const target = event.target as HTMLElement | null;
    const diagonal = target?.closest<HTMLElement>("[data-diagonal-index]");
    if (diagonal?.dataset.diagonalIndex !== undefined) {
      this.store.setHover(entering ? Number(diagonal.dataset.diagonalIndex) : null);
    }
  }

  private renderAll(): void {
    this.root.innerHTML = renderPage(this.store.state);
  }
}

export function renderPage(state: UiState): string {
  const parts: string[] = [];
  parts.push(`<header class="controls${state.pending ? " pending" : ""}">`);
  parts.push(`<span class="title">triangulation &harr; quiver explorer</span>`);
  for (const n of RANK_CHOICES) {
    const current = n === state.n ? " current" : "";
    parts.push(
      `<button class="rank${current}" data-action="reset" data-n="${n}"` +
        `${state.pending ? " disabled" : ""}>n=${n}</button>`,
    );
  }
  const dis = state.pending ? " disabled" : "";
  parts.push(`<button data-action="rotate-ccw"${dis}>&#8634; rotate</button>`);
  parts.push(`<button data-action="rotate-cw"${dis}>rotate &#8635;</button>`);
  parts.push(`<button data-action="undo"${dis}>undo</button>`);
  parts.push(`<button data-action="catalog" data-n="${state.n}"${dis}>catalog</button>`);
  parts.push(`</header>`);

  if (state.networkDown) {
    parts.push(
      `<div class="banner">service unreachable ` +
        `<button data-action="retry">retry</button></div>`,
    );
  }
  if (state.toast !== null) {
    parts.push(`<div class="toast">${state.toast}</div>`);
  }

  if (state.catalog !== null) {
    parts.push(
      `<section class="catalog">` +
        `<button data-action="close-catalog">back to the polygon</button>` +
        renderCatalog(state.catalog) +
        `</section>`,
    );
  } else if (state.view !== null) {
    parts.push(`<main class="stage">`);
    parts.push(renderScene(state.view, state.selection, state.hover));
    parts.push(`<aside>${renderFacts(state.view, state.historyDepth)}</aside>`);
    parts.push(`</main>`);
  }
  return parts.join("");
}

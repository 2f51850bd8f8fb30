/** UI state container.  The view field only ever holds what the server sent
 * back last; nothing in the UI edits diagonals or arrows locally.
 */

import type { CatalogResponse, StateView } from "./types.js";

export interface UiState {
  sessionId: string | null;
  n: number;
  view: StateView | null;
  selection: number | null;
  hover: number | null;
  historyDepth: number;
  pending: boolean;
  toast: string | null;
  networkDown: boolean;
  catalog: CatalogResponse | null;
}

export function initialUiState(n: number): UiState {
  return {
    sessionId: null,
    n,
    view: null,
    selection: null,
    hover: null,
    historyDepth: 0,
    pending: false,
    toast: null,
    networkDown: false,
    catalog: null,
  };
}

type Listener = (state: UiState) => void;

export class ExplorerStore {
  private listeners: Listener[] = [];

  constructor(public state: UiState) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Claim the single in-flight slot; false when a request is already running. */
  beginRequest(): boolean {
    if (this.state.pending) {
      return false;
    }
    this.state = { ...this.state, pending: true, toast: null };
    this.emit();
    return true;
  }

  endRequest(): void {
    this.state = { ...this.state, pending: false };
    this.emit();
  }

  startSession(n: number, sessionId: string, view: StateView): void {
    this.state = {
      ...initialUiState(n),
      sessionId,
      view,
      networkDown: false,
    };
    this.emit();
  }

  /** A move succeeded: the returned view becomes the whole truth. */
  applyMove(view: StateView): void {
    this.state = {
      ...this.state,
      view,
      selection: null,
      hover: null,
      historyDepth: this.state.historyDepth + 1,
      networkDown: false,
    };
    this.emit();
  }

  applyUndo(view: StateView): void {
    this.state = {
      ...this.state,
      view,
      selection: null,
      hover: null,
      historyDepth: Math.max(0, this.state.historyDepth - 1),
      networkDown: false,
    };
    this.emit();
  }

  select(index: number | null): void {
    this.state = { ...this.state, selection: index };
    this.emit();
  }

  setHover(index: number | null): void {
    this.state = { ...this.state, hover: index };
    this.emit();
  }

  showToast(message: string): void {
    this.state = { ...this.state, toast: message };
    this.emit();
  }

  setNetworkDown(down: boolean): void {
    this.state = { ...this.state, networkDown: down };
    this.emit();
  }

  showCatalog(catalog: CatalogResponse): void {
    this.state = { ...this.state, catalog };
    this.emit();
  }

  closeCatalog(): void {
    this.state = { ...this.state, catalog: null };
    this.emit();
  }
}

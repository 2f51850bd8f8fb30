/** Wire types of the explorer service, mirrored verbatim. */

export type Pair = [number, number];

export interface StateView {
  polygon_size: number;
  /** Sorted; the position of a diagonal is its quiver vertex index. */
  diagonals: Pair[];
  arrows: Pair[];
  close_to_border: boolean[];
  classification: (string | null)[];
  orbit_size: number;
}

export interface SessionResponse {
  id: string;
  state: StateView;
}

export interface QuiverJson {
  n: number;
  arrows: Pair[];
}

export interface CatalogResponse {
  n: number;
  count: number;
  quivers: QuiverJson[];
}

export interface ErrorBody {
  error: string;
  message: string;
}

"""Diagonals and triangulations of a convex polygon, flips, and the quiver map.

Polygon vertices are labeled 0..m-1 in clockwise order, so rotating the
polygon one step clockwise is the label shift v -> v+1 (mod m).  A diagonal
is an unordered pair of non-adjacent vertices, stored with the smaller label
first.  A triangulation of the m-gon is a maximal non-crossing set of
diagonals and always has exactly m-3 of them.

Each triangulation determines a quiver: one vertex per diagonal, and an
arrow between two diagonals bounding a common triangle, oriented from the
diagonal that reaches the other by an anticlockwise pivot about their shared
polygon vertex.  With clockwise labels, "anticlockwise about p" means the far
endpoint moves toward decreasing labels.  Flipping a diagonal corresponds
exactly to mutating the quiver at that diagonal's vertex.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .quiver import Quiver

Pair = tuple[int, int]


def distance(a: int, b: int, m: int) -> int:
    """Smallest number of border edges between vertices a and b of the m-gon."""
    if m < 3:
        raise ValueError(f"polygon size must be at least 3, got {m}")
    if not (0 <= a < m and 0 <= b < m):
        raise ValueError(f"vertices {a}, {b} out of range for an {m}-gon")
    return min((b - a) % m, (a - b) % m)


def diagonal(a: int, b: int, m: int) -> Pair:
    """Normalize endpoints to (min, max), rejecting border edges and loops."""
    if not (0 <= a < m and 0 <= b < m):
        raise ValueError(f"vertices {a}, {b} out of range for an {m}-gon")
    if distance(a, b, m) < 2:
        raise ValueError(f"({a}, {b}) is not a diagonal of the {m}-gon")
    return (a, b) if a < b else (b, a)


def crosses(d1: Pair, d2: Pair, m: int) -> bool:
    """Whether two diagonals cross strictly inside the polygon.

    True iff exactly one endpoint of d2 lies strictly between d1's endpoints
    in cyclic order.  Diagonals sharing an endpoint never cross.
    """
    a, b = d1
    c, d = d2
    if a in d2 or b in d2:
        return False
    span = (b - a) % m
    inside_c = 0 < (c - a) % m < span
    inside_d = 0 < (d - a) % m < span
    return inside_c != inside_d


def is_close_to_border(d: Pair, m: int) -> bool:
    """Whether the diagonal's endpoints are at border distance exactly 2."""
    return distance(d[0], d[1], m) == 2


class Triangulation:
    """Immutable maximal non-crossing diagonal set of a convex m-gon.

    ``diagonals`` is kept sorted; its positions define the quiver vertex
    indices used by :func:`quiver_of`.  Size 3 (a bare triangle with no
    diagonals) is permitted so that factoring out a diagonal of a square has
    a result, but no quiver can be built from it.
    """

    __slots__ = ("size", "diagonals", "_hash")

    def __init__(self, size: int, diagonals: Iterable[Pair] = ()):
        if not isinstance(size, int) or size < 3:
            raise ValueError(f"polygon size must be an integer >= 3, got {size!r}")
        diags = tuple(sorted(diagonal(a, b, size) for a, b in diagonals))
        if len(set(diags)) != len(diags):
            raise ValueError("duplicate diagonal")
        if len(diags) != size - 3:
            raise ValueError(
                f"a triangulation of the {size}-gon needs {size - 3} diagonals, "
                f"got {len(diags)}"
            )
        for i, d1 in enumerate(diags):
            for d2 in diags[i + 1:]:
                if crosses(d1, d2, size):
                    raise ValueError(f"diagonals {d1} and {d2} cross")
        self.size = size
        self.diagonals = diags
        self._hash = hash((size, diags))

    def index_of(self, d: Pair) -> int:
        """Quiver vertex index of a diagonal (its position in sorted order)."""
        try:
            return self.diagonals.index(d)
        except ValueError:
            raise ValueError(f"diagonal {d} not in triangulation") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.size == other.size and self.diagonals == other.diagonals

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Triangulation({self.size}, {list(self.diagonals)})"


class RotationClass:
    """Orbit of a triangulation under polygon rotation, with canonical member."""

    __slots__ = ("representative", "orbit_size")

    def __init__(self, representative: Triangulation, orbit_size: int):
        self.representative = representative
        self.orbit_size = orbit_size

    def __eq__(self, other) -> bool:
        if not isinstance(other, RotationClass):
            return NotImplemented
        return (
            self.representative == other.representative
            and self.orbit_size == other.orbit_size
        )

    def __hash__(self) -> int:
        return hash((self.representative, self.orbit_size))

    def __repr__(self) -> str:
        return f"RotationClass({self.representative!r}, orbit_size={self.orbit_size})"


class DiagonalClass(enum.Enum):
    """Local shape of a close-to-border diagonal's quiver vertex."""

    SINK = "sink"
    SOURCE = "source"
    ON_CYCLE = "on_cycle"


def fan_triangulation(m: int, apex: int = 0) -> Triangulation:
    """All diagonals from one apex; its quiver is a linearly oriented path."""
    if m < 4:
        raise ValueError(f"fan triangulation needs a polygon of size >= 4, got {m}")
    if not (0 <= apex < m):
        raise ValueError(f"apex {apex} out of range for an {m}-gon")
    return Triangulation(m, [((apex + k) % m, apex) for k in range(2, m - 1)])


def _edge_set(t: Triangulation) -> set[Pair]:
    edges = {tuple(sorted(((v + 1) % t.size, v))) for v in range(t.size)}
    edges.update(t.diagonals)
    return edges


def triangles(t: Triangulation) -> list[tuple[int, int, int]]:
    """The m-2 triangles of the triangulation, as sorted vertex triples.

    A vertex triple bounds a triangle exactly when all three connecting
    segments are border edges or diagonals of t: no other polygon vertex can
    lie inside such a triple, and no diagonal can cross into it.
    """
    edges = _edge_set(t)
    m = t.size
    found = []
    for a in range(m):
        for b in range(a + 1, m):
            if (a, b) not in edges:
                continue
            for c in range(b + 1, m):
                if (a, c) in edges and (b, c) in edges:
                    found.append((a, b, c))
    return found


def _anticlockwise_first(p: int, x: int, y: int, m: int) -> bool:
    """Whether x precedes y when walking anticlockwise (decreasing labels) from p."""
    return (p - x) % m < (p - y) % m


def quiver_of(t: Triangulation) -> Quiver:
    """Quiver of a triangulation: one vertex per diagonal, in sorted order.

    Within each triangle, two diagonal sides meeting at polygon vertex p get
    an arrow from the side whose anticlockwise pivot about p reaches the
    other inside the triangle.
    """
    if not t.diagonals:
        raise ValueError("triangulation has no diagonals, quiver would be empty")
    m = t.size
    index = {d: i for i, d in enumerate(t.diagonals)}
    diag_set = set(t.diagonals)
    arrows = []
    for tri in triangles(t):
        sides = [
            pair
            for pair in (
                (tri[0], tri[1]),
                (tri[0], tri[2]),
                (tri[1], tri[2]),
            )
            if pair in diag_set
        ]
        for s1_pos in range(len(sides)):
            for s2_pos in range(s1_pos + 1, len(sides)):
                s1, s2 = sides[s1_pos], sides[s2_pos]
                shared = set(s1) & set(s2)
                p = shared.pop()
                x = s1[0] if s1[1] == p else s1[1]
                y = s2[0] if s2[1] == p else s2[1]
                if _anticlockwise_first(p, x, y, m):
                    arrows.append((index[s1], index[s2]))
                else:
                    arrows.append((index[s2], index[s1]))
    return Quiver(len(t.diagonals), arrows)


def flip(t: Triangulation, d: Pair) -> Triangulation:
    """Replace diagonal d by the only other diagonal of its quadrilateral."""
    if d not in t.diagonals:
        raise ValueError(f"diagonal {d} not in triangulation")
    a, b = d
    edges = _edge_set(t)
    apexes = [
        c
        for c in range(t.size)
        if c != a and c != b
        and tuple(sorted((a, c))) in edges
        and tuple(sorted((b, c))) in edges
    ]
    assert len(apexes) == 2, f"diagonal {d} should bound exactly two triangles"
    replacement = diagonal(apexes[0], apexes[1], t.size)
    diags = set(t.diagonals)
    diags.remove(d)
    diags.add(replacement)
    return Triangulation(t.size, diags)


def _rotated(diags: tuple[Pair, ...], i: int, m: int) -> tuple[Pair, ...]:
    out = []
    for a, b in diags:
        a = (a + i) % m
        b = (b + i) % m
        out.append((a, b) if a < b else (b, a))
    out.sort()
    return tuple(out)


def rotate(t: Triangulation, i: int) -> Triangulation:
    """Rotate the triangulation i steps clockwise (label shift v -> v+i mod m)."""
    return Triangulation(t.size, _rotated(t.diagonals, i % t.size, t.size))


def rotation_canonical(t: Triangulation) -> RotationClass:
    """Canonical representative and orbit size under the m polygon rotations."""
    m = t.size
    seen = {t.diagonals}
    best = t.diagonals
    for i in range(1, m):
        rot = _rotated(t.diagonals, i, m)
        seen.add(rot)
        if rot < best:
            best = rot
    return RotationClass(Triangulation(m, best), len(seen))


def classify_close_diagonal(t: Triangulation, d: Pair) -> DiagonalClass:
    """Sink / source / on-cycle trichotomy for a close-to-border diagonal.

    The vertex of a close-to-border diagonal either lies on an oriented
    triangle of the quiver or has at most one neighbor.  The lone diagonal
    of a square has an isolated vertex and counts as a sink.
    """
    if d not in t.diagonals:
        raise ValueError(f"diagonal {d} not in triangulation")
    if not is_close_to_border(d, t.size):
        raise ValueError(f"diagonal {d} is not close to the border")
    q = quiver_of(t)
    v = t.index_of(d)
    out_nbrs = [j for (i, j) in q.arrows if i == v]
    in_nbrs = [i for (i, j) in q.arrows if j == v]
    for x in out_nbrs:
        for (i, j) in q.arrows:
            if i == x and (j, v) in q.arrows:
                return DiagonalClass.ON_CYCLE
    if not out_nbrs:
        return DiagonalClass.SINK
    if not in_nbrs:
        return DiagonalClass.SOURCE
    raise AssertionError(f"close-to-border diagonal {d} has unexpected arrows")


def factor_out(t: Triangulation, d: Pair) -> Triangulation:
    """Shrink the polygon so that a close-to-border diagonal becomes a border edge.

    The single border vertex between d's endpoints is deleted (no other
    diagonal can touch it without crossing d), labels above it shift down by
    one, and d leaves the diagonal set.
    """
    if d not in t.diagonals:
        raise ValueError(f"diagonal {d} not in triangulation")
    m = t.size
    if not is_close_to_border(d, m):
        raise ValueError(f"diagonal {d} is not close to the border")
    a, b = d
    cut = (a + 1) % m if (b - a) % m == 2 else (b + 1) % m
    remaining = []
    for x, y in t.diagonals:
        if (x, y) == d:
            continue
        x -= x > cut
        y -= y > cut
        remaining.append((x, y))
    return Triangulation(m - 1, remaining)


def extend_at(t: Triangulation, e: int) -> Triangulation:
    """Insert a polygon vertex inside border edge (e, e+1) and add the spanning diagonal.

    Old labels above e shift up by one; the new vertex takes label e+1.  The
    added diagonal joins the original endpoints of the edge, so it is close
    to the border, and factoring it back out restores t exactly.
    """
    m = t.size
    if not (0 <= e < m):
        raise ValueError(f"border edge index {e} out of range for an {m}-gon")
    shifted = [(x + (x > e), y + (y > e)) for x, y in t.diagonals]
    other = (e + 1) % m
    new_diag = (e, other + (other > e))
    shifted.append(new_diag if new_diag[0] < new_diag[1] else (new_diag[1], new_diag[0]))
    return Triangulation(m + 1, shifted)


def triangulation_to_json(t: Triangulation) -> dict:
    """JSON-ready dict: {"polygon_size": m, "diagonals": [[a, b], ...]} sorted."""
    return {"polygon_size": t.size, "diagonals": [list(d) for d in t.diagonals]}


def triangulation_from_json(data: dict) -> Triangulation:
    if not isinstance(data, dict):
        raise ValueError(f"expected a JSON object, got {type(data).__name__}")
    try:
        size = data["polygon_size"]
        raw = data["diagonals"]
    except KeyError as exc:
        raise ValueError(f"missing triangulation field {exc}") from exc
    if not isinstance(raw, list):
        raise ValueError("'diagonals' must be a list of [a, b] pairs")
    diags = []
    for pair in raw:
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise ValueError(f"bad diagonal entry {pair!r}")
        diags.append((pair[0], pair[1]))
    return Triangulation(size, diags)

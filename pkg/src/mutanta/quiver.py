"""Cluster quivers: mutation, type-A structure checks, and canonical forms.

A quiver here is a finite directed graph with no loops, no 2-cycles and no
parallel arrows.  Mutation at a vertex is the local rewrite used in cluster
theory; repeatedly mutating a linearly oriented A_n path stays inside the
class of quivers whose cycles are oriented triangles.  Canonical forms give
a stable byte key per isomorphism class, used to deduplicate that class
during enumeration.
"""

from __future__ import annotations

import struct
from collections import deque
from typing import Iterable

Arrow = tuple[int, int]

_U16 = struct.Struct(">H")


class Quiver:
    """Immutable directed graph on vertices 0..n-1.

    Invariants enforced on construction: no loops, no 2-cycles and no
    parallel arrows (arrows are a set of ordered pairs).
    """

    __slots__ = ("n", "arrows", "_hash")

    def __init__(self, n: int, arrows: Iterable[Arrow] = ()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        arrow_set = set()
        for arrow in arrows:
            i, j = arrow
            if not (isinstance(i, int) and isinstance(j, int)):
                raise ValueError(f"arrow endpoints must be integers, got {arrow!r}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"arrow {arrow!r} out of range for {n} vertices")
            if i == j:
                raise ValueError(f"loop at vertex {i} is not allowed")
            arrow_set.add((i, j))
        for i, j in arrow_set:
            if (j, i) in arrow_set:
                raise ValueError(f"2-cycle between {i} and {j} is not allowed")
        self.n = n
        self.arrows = frozenset(arrow_set)
        self._hash = hash((self.n, self.arrows))

    def sorted_arrows(self) -> tuple[Arrow, ...]:
        return tuple(sorted(self.arrows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.n == other.n and self.arrows == other.arrows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Quiver({self.n}, {sorted(self.arrows)})"


class CanonicalQuiver:
    """Stable byte encoding of a quiver isomorphism class.

    Two quivers get equal encodings exactly when some relabeling of one gives
    the other.  The encoding is the vertex count followed by the sorted arrow
    list of the lexicographically smallest relabeling, packed as fixed-width
    big-endian integers, so it is identical across runs and platforms.
    """

    __slots__ = ("encoding", "n", "_hash")

    def __init__(self, encoding: bytes, n: int):
        self.encoding = encoding
        self.n = n
        self._hash = hash(encoding)

    def to_quiver(self) -> Quiver:
        """Decode the canonical representative back into a labeled quiver."""
        count = len(self.encoding) // 2
        values = struct.unpack(f">{count}H", self.encoding)
        arrows = list(zip(values[1::2], values[2::2]))
        return Quiver(values[0], arrows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalQuiver):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CanonicalQuiver(n={self.n}, encoding={self.encoding.hex()})"


def linear_quiver(n: int) -> Quiver:
    """Linearly oriented path 0 -> 1 -> ... -> n-1, the seed quiver of rank n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")
    return Quiver(n, [(i, i + 1) for i in range(n - 1)])


def _mutate_arrows(arrows: frozenset[Arrow], k: int) -> frozenset[Arrow]:
    """Arrow set after mutation at k; assumes the Quiver invariants hold."""
    ins = [i for (i, j) in arrows if j == k]
    outs = [j for (i, j) in arrows if i == k]
    added = set()
    removed = set()
    for i in ins:
        for j in outs:
            if (j, i) in arrows:
                removed.add((j, i))
            else:
                added.add((i, j))
    conflicts = added & arrows
    if conflicts:
        raise ValueError(
            f"mutation at {k} would create parallel arrows {sorted(conflicts)}; "
            "input quiver is outside the supported mutation class"
        )
    new_arrows = (set(arrows) - removed) | added
    for i in ins:
        new_arrows.discard((i, k))
        new_arrows.add((k, i))
    for j in outs:
        new_arrows.discard((k, j))
        new_arrows.add((j, k))
    return frozenset(new_arrows)


def mutate(q: Quiver, k: int) -> Quiver:
    """Mutate q at vertex k.

    For every path i -> k -> j, toggle the closing arrow: remove j -> i if
    present, otherwise add i -> j.  Then reverse every arrow incident to k.
    The vertex set is unchanged.  Raises ValueError when the toggle would
    create a parallel arrow, which cannot happen for quivers in the type-A
    mutation class.
    """
    if not (0 <= k < q.n):
        raise ValueError(f"vertex {k} out of range for {q.n} vertices")
    return Quiver(q.n, _mutate_arrows(q.arrows, k))


def mutation_is_involutive(q: Quiver, k: int) -> bool:
    """Whether mutating twice at k returns exactly the input (same labels)."""
    return mutate(mutate(q, k), k) == q


def _undirected_adjacency(q: Quiver) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(q.n)]
    for i, j in q.arrows:
        adj[i].append(j)
        adj[j].append(i)
    return adj


def is_connected(q: Quiver) -> bool:
    """Connectivity of the underlying undirected graph; one vertex counts as connected."""
    adj = _undirected_adjacency(q)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == q.n


def is_type_a_quiver(q: Quiver) -> bool:
    """Structural test for quivers of the type-A mutation class.

    True iff q is connected, every cycle of the underlying graph is an
    oriented directed cycle of length exactly 3, and no two of those
    triangles share an arrow.  Edge-disjoint triangles are independent in
    the cycle space, so they account for every cycle exactly when their
    number equals the cyclomatic number |E| - |V| + 1.
    """
    if not is_connected(q):
        return False
    edges = {tuple(sorted(a)) for a in q.arrows}
    n = q.n
    triangles = []
    for a, b in sorted(edges):
        for c in range(b + 1, n):
            if (a, c) in edges and (b, c) in edges:
                triangles.append((a, b, c))
    if len(edges) - n + 1 != len(triangles):
        return False
    used = set()
    for a, b, c in triangles:
        for edge in ((a, b), (a, c), (b, c)):
            if edge in used:
                return False
            used.add(edge)
    for a, b, c in triangles:
        forward = {(a, b), (b, c), (c, a)}
        backward = {(a, c), (c, b), (b, a)}
        if not (forward <= q.arrows or backward <= q.arrows):
            return False
    return True


def delete_vertex(q: Quiver, v: int) -> Quiver:
    """Remove vertex v and its arrows, relabeling the rest to 0..n-2 in order."""
    if not (0 <= v < q.n):
        raise ValueError(f"vertex {v} out of range for {q.n} vertices")
    if q.n < 2:
        raise ValueError("cannot delete the only vertex")
    arrows = [
        (i - (i > v), j - (j > v))
        for (i, j) in q.arrows
        if i != v and j != v
    ]
    return Quiver(q.n - 1, arrows)


def _neighbor_lists(n: int, arrows: Iterable[Arrow]) -> tuple[list[list[int]], list[list[int]]]:
    out: list[list[int]] = [[] for _ in range(n)]
    inn: list[list[int]] = [[] for _ in range(n)]
    for i, j in arrows:
        out[i].append(j)
        inn[j].append(i)
    return out, inn


def _refine(n: int, out: list[list[int]], inn: list[list[int]], colors: list[int]) -> list[int]:
    """Split color classes by in/out neighbor color multisets until stable.

    Colors are kept as ranks 0..k-1 of the sorted signature keys, so the
    stable coloring is independent of the input vertex labeling.
    """
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in out[v])),
                tuple(sorted(colors[w] for w in inn[v])),
            )
            for v in range(n)
        ]
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_arrows(n: int, arrows: frozenset[Arrow]) -> tuple[Arrow, ...]:
    """Arrow list of the lexicographically smallest admissible relabeling.

    Refinement narrows the candidate labelings; remaining ties are broken by
    individualizing each vertex of the first non-singleton color class in
    turn and recursing.  The branch set is label-invariant, so the minimum
    over all leaves is a true canonical form.
    """
    out, inn = _neighbor_lists(n, arrows)
    degrees = [(len(out[v]), len(inn[v])) for v in range(n)]
    rank = {d: r for r, d in enumerate(sorted(set(degrees)))}
    start = [rank[d] for d in degrees]
    best: list[Arrow] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, out, inn, colors)
        k = max(colors) + 1
        if k == n:
            relabeled = sorted((colors[i], colors[j]) for (i, j) in arrows)
            if best is None or relabeled < best:
                best = relabeled
            return
        counts = [0] * k
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(k) if counts[c] > 1)
        for v in sorted(w for w in range(n) if colors[w] == target):
            branched = [
                c + 1 if (c > target or (c == target and w != v)) else c
                for w, c in enumerate(colors)
            ]
            search(branched)

    search(start)
    assert best is not None
    return tuple(best)


def _encode(n: int, canon_arrows: tuple[Arrow, ...]) -> bytes:
    flat = [n]
    for i, j in canon_arrows:
        flat.append(i)
        flat.append(j)
    return struct.pack(f">{len(flat)}H", *flat)


def canonical_form(q: Quiver) -> CanonicalQuiver:
    """Canonical byte encoding of q's isomorphism class."""
    return CanonicalQuiver(_encode(q.n, _canonical_arrows(q.n, q.arrows)), q.n)


def canonical_quiver(q: Quiver) -> Quiver:
    """The canonically relabeled representative of q's isomorphism class."""
    return Quiver(q.n, _canonical_arrows(q.n, q.arrows))


def are_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    """Whether some relabeling of q1 equals q2 (arrow directions preserved)."""
    if q1.n != q2.n or len(q1.arrows) != len(q2.arrows):
        return False
    return canonical_form(q1) == canonical_form(q2)


def quiver_to_json(q: Quiver) -> dict:
    """JSON-ready dict: {"n": ..., "arrows": [[i, j], ...]} with sorted arrows."""
    return {"n": q.n, "arrows": [list(a) for a in sorted(q.arrows)]}


def quiver_from_json(data: dict) -> Quiver:
    if not isinstance(data, dict):
        raise ValueError(f"expected a JSON object, got {type(data).__name__}")
    try:
        n = data["n"]
        raw = data["arrows"]
    except KeyError as exc:
        raise ValueError(f"missing quiver field {exc}") from exc
    if not isinstance(raw, list):
        raise ValueError("'arrows' must be a list of [i, j] pairs")
    arrows = []
    for pair in raw:
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise ValueError(f"bad arrow entry {pair!r}")
        arrows.append((pair[0], pair[1]))
    return Quiver(n, arrows)


def quiver_to_dot(q: Quiver, name: str = "quiver") -> str:
    """DOT text with one `i -> j;` line per arrow, in deterministic order."""
    lines = [f"digraph {name} {{"]
    for v in range(q.n):
        lines.append(f"  {v};")
    for i, j in sorted(q.arrows):
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

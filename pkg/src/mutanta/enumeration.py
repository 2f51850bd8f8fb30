"""Exhaustive generation of triangulations and mutation classes, with counts.

Three independent routes to the same number are kept side by side: a closed
formula built from Catalan numbers, a breadth-first closure of the mutation
rule deduplicated by canonical form, and the count of triangulation rotation
orbits.  The verification reports check that the routes agree and that the
rotation orbits behave as the divisibility statements predict.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .polygon import (
    RotationClass,
    Triangulation,
    _rotated,
    flip,
    is_close_to_border,
    classify_close_diagonal,
    quiver_of,
)
from .quiver import (
    CanonicalQuiver,
    Quiver,
    _canonical_arrows,
    _encode,
    _mutate_arrows,
    canonical_form,
    delete_vertex,
    is_connected,
    is_type_a_quiver,
    linear_quiver,
    mutate,
)

DEFAULT_TRIANGULATION_LIMIT = 14  # polygon size m
DEFAULT_MUTATION_CLASS_LIMIT = 13  # rank n
DEFAULT_BIJECTION_LIMIT = 9  # rank n for pairwise verification suites


def catalan(i: int) -> int:
    """Exact Catalan number (2i)! / ((i+1)! i!)."""
    if not isinstance(i, int) or i < 0:
        raise ValueError(f"catalan is defined for non-negative integers, got {i!r}")
    value, rem = divmod(math.factorial(2 * i), math.factorial(i + 1) * math.factorial(i))
    if rem:
        raise ArithmeticError(f"catalan({i}) division was not exact")
    return value


def mutation_class_count(n: int) -> int:
    """Closed-form count of rank-n mutation classes (equivalently, rotation orbits).

    catalan(n+1)/(n+3), plus catalan((n+1)/2)/2 when (n+1)/2 is an integer,
    plus (2/3)*catalan(n/3) when n/3 is an integer.  The individual terms are
    fractions; only their sum is an integer, which is asserted.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    total = Fraction(catalan(n + 1), n + 3)
    if (n + 1) % 2 == 0:
        total += Fraction(catalan((n + 1) // 2), 2)
    if n % 3 == 0:
        total += Fraction(2 * catalan(n // 3), 3)
    if total.denominator != 1:
        raise ArithmeticError(f"class count for n={n} came out non-integer: {total}")
    return int(total)


@dataclass(frozen=True)
class FrontierStats:
    """Shape of the breadth-first search that produced a mutation-class catalog."""

    depth: int
    expansions: int
    level_sizes: tuple[int, ...]


@dataclass(frozen=True)
class MutationClassCatalog:
    """All quivers mutation-equivalent to the linear seed, up to isomorphism."""

    n: int
    members: tuple[CanonicalQuiver, ...]
    frontier_stats: FrontierStats

    def encodings(self) -> set[bytes]:
        return {member.encoding for member in self.members}


@dataclass(frozen=True)
class TriangulationCatalog:
    """Every triangulation of the m-gon, plus the partition into rotation orbits."""

    m: int
    members: tuple[Triangulation, ...]
    rotation_classes: tuple[RotationClass, ...]


def _interval_diagonals(i: int, j: int) -> Iterator[tuple[tuple[int, int], ...]]:
    # Diagonal sets triangulating the sub-polygon on vertices i..j; the
    # triangle on chord (i, j) has some apex c, giving the Catalan recursion.
    if j - i < 2:
        yield ()
        return
    for c in range(i + 1, j):
        extras = []
        if c - i >= 2:
            extras.append((i, c))
        if j - c >= 2:
            extras.append((c, j))
        base = tuple(extras)
        for left in _interval_diagonals(i, c):
            for right in _interval_diagonals(c, j):
                yield base + left + right


def enumerate_triangulations(m: int, limit: int | None = None) -> TriangulationCatalog:
    """All triangulations of the m-gon, each exactly once, in sorted order."""
    ceiling = DEFAULT_TRIANGULATION_LIMIT if limit is None else limit
    if not isinstance(m, int) or m < 4:
        raise ValueError(f"polygon size must be an integer >= 4, got {m!r}")
    if m > ceiling:
        raise ValueError(f"polygon size {m} above the configured limit {ceiling}")
    members = sorted(
        (Triangulation(m, diags) for diags in _interval_diagonals(0, m - 1)),
        key=lambda t: t.diagonals,
    )
    assigned: set[tuple[tuple[int, int], ...]] = set()
    classes = []
    for t in members:
        if t.diagonals in assigned:
            continue
        rotations = {_rotated(t.diagonals, i, m) for i in range(m)}
        assigned.update(rotations)
        classes.append(RotationClass(Triangulation(m, min(rotations)), len(rotations)))
    classes.sort(key=lambda rc: rc.representative.diagonals)
    return TriangulationCatalog(m, tuple(members), tuple(classes))


def _expand_states(args: tuple[int, list[tuple[tuple[int, int], ...]]]):
    # Worker for one slice of a BFS level: mutate at every vertex and
    # canonicalize.  Top-level so process pools can pickle it.
    n, states = args
    results = []
    for state in states:
        arrows = frozenset(state)
        for k in range(n):
            canon = _canonical_arrows(n, _mutate_arrows(arrows, k))
            results.append((_encode(n, canon), canon))
    return results


def enumerate_mutation_class(n: int, limit: int | None = None, jobs: int = 1) -> MutationClassCatalog:
    """Breadth-first closure of mutation from the linear quiver, deduplicated.

    States are canonical representatives, so the visited set holds one entry
    per isomorphism class.  Levels may be partitioned across worker
    processes; membership is a set union, so the resulting catalog does not
    depend on the schedule or the worker count.
    """
    ceiling = DEFAULT_MUTATION_CLASS_LIMIT if limit is None else limit
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    if n > ceiling:
        raise ValueError(f"rank {n} above the configured limit {ceiling}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")

    seed = _canonical_arrows(n, linear_quiver(n).arrows)
    visited: dict[bytes, tuple] = {_encode(n, seed): seed}
    frontier = [seed]
    level_sizes = [1]
    expansions = 0

    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while frontier:
            frontier.sort()
            expansions += len(frontier) * n
            if pool is None:
                batches = [_expand_states((n, frontier))]
            else:
                step = -(-len(frontier) // jobs)
                chunks = [frontier[i:i + step] for i in range(0, len(frontier), step)]
                batches = list(pool.map(_expand_states, [(n, c) for c in chunks]))
            new: dict[bytes, tuple] = {}
            for batch in batches:
                for encoding, canon in batch:
                    if encoding not in visited and encoding not in new:
                        new[encoding] = canon
            visited.update(new)
            frontier = list(new.values())
            if new:
                level_sizes.append(len(new))
    finally:
        if pool is not None:
            pool.shutdown()

    members = tuple(
        CanonicalQuiver(encoding, n) for encoding in sorted(visited)
    )
    stats = FrontierStats(
        depth=len(level_sizes) - 1,
        expansions=expansions,
        level_sizes=tuple(level_sizes),
    )
    return MutationClassCatalog(n, members, stats)


def orbit_statistics(m: int, limit: int | None = None) -> dict[int, int]:
    """Histogram mapping rotation-orbit size to the number of orbits of that size."""
    catalog = enumerate_triangulations(m, limit=limit)
    return dict(sorted(Counter(rc.orbit_size for rc in catalog.rotation_classes).items()))


@dataclass
class Report:
    """Outcome of one verification suite: counts plus any violations found."""

    title: str
    n: int
    counts: dict
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"n": self.n, "counts": self.counts, "violations": self.violations}

    def to_text(self) -> str:
        lines = [f"{self.title} (n={self.n})"]
        for key, value in self.counts.items():
            lines.append(f"  {key}: {value}")
        if self.violations:
            lines.append(f"  VIOLATIONS ({len(self.violations)}):")
            for v in self.violations:
                lines.append(f"    {v}")
        else:
            lines.append("  no violations")
        return "\n".join(lines)


def verify_rotation_bijection(n: int, limit: int | None = None, jobs: int = 1) -> Report:
    """Check that rotation orbits of triangulations match quiver classes one-to-one.

    Injectivity: distinct orbits must give non-isomorphic quivers.
    Surjectivity: every quiver in the mutation-class catalog must be hit.
    """
    ceiling = DEFAULT_BIJECTION_LIMIT if limit is None else limit
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    if n > ceiling:
        raise ValueError(f"rank {n} above the configured limit {ceiling}")
    catalog = enumerate_triangulations(n + 3)
    violations = []
    by_encoding: dict[bytes, list[RotationClass]] = {}
    for rc in catalog.rotation_classes:
        encoding = canonical_form(quiver_of(rc.representative)).encoding
        by_encoding.setdefault(encoding, []).append(rc)
    for encoding, classes in by_encoding.items():
        if len(classes) > 1:
            violations.append({
                "type": "injectivity",
                "encoding": encoding.hex(),
                "representatives": [
                    [list(d) for d in rc.representative.diagonals] for rc in classes
                ],
            })
    mutation_catalog = enumerate_mutation_class(n, jobs=jobs)
    hit = set(by_encoding)
    class_encodings = mutation_catalog.encodings()
    for encoding in sorted(class_encodings - hit):
        violations.append({"type": "not_hit", "encoding": encoding.hex()})
    for encoding in sorted(hit - class_encodings):
        violations.append({"type": "outside_class", "encoding": encoding.hex()})
    counts = {
        "rotation_classes": len(catalog.rotation_classes),
        "mutation_class": len(mutation_catalog.members),
        "formula": mutation_class_count(n),
    }
    return Report("rotation-orbit / quiver-class bijection", n, counts, violations)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def rotation_orbit_report(n: int, limit: int | None = None) -> Report:
    """Per-orbit checks: quivers constant on orbits, distinct across orbits, sizes divide m.

    Each orbit corresponds to one quiver class; the orbit size is the number
    of distinct triangulations producing it, which must divide the polygon
    size, lie between 2 and m, and equal m whenever m is prime.
    """
    ceiling = DEFAULT_BIJECTION_LIMIT if limit is None else limit
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    if n > ceiling:
        raise ValueError(f"rank {n} above the configured limit {ceiling}")
    m = n + 3
    catalog = enumerate_triangulations(m)
    violations = []

    orbit_encoding: dict[tuple, bytes] = {}
    seen_encodings: dict[bytes, tuple] = {}
    for rc in catalog.rotation_classes:
        key = rc.representative.diagonals
        encoding = canonical_form(quiver_of(rc.representative)).encoding
        orbit_encoding[key] = encoding
        if encoding in seen_encodings:
            violations.append({
                "type": "distinct_orbits_isomorphic",
                "orbits": [
                    [list(d) for d in seen_encodings[encoding]],
                    [list(d) for d in key],
                ],
            })
        else:
            seen_encodings[encoding] = key

    for t in catalog.members:
        rotations = {_rotated(t.diagonals, i, m) for i in range(m)}
        key = min(rotations)
        encoding = canonical_form(quiver_of(t)).encoding
        if encoding != orbit_encoding[key]:
            violations.append({
                "type": "orbit_not_constant",
                "triangulation": [list(d) for d in t.diagonals],
            })

    histogram = Counter()
    for rc in catalog.rotation_classes:
        size = rc.orbit_size
        histogram[size] += 1
        if m % size != 0:
            violations.append({"type": "size_not_divisor", "orbit_size": size})
        if size < 2:
            violations.append({"type": "size_below_two", "orbit_size": size})
        if size > m:
            violations.append({"type": "size_above_polygon", "orbit_size": size})
        if _is_prime(m) and size != m:
            violations.append({"type": "prime_size_mismatch", "orbit_size": size})

    counts = {
        "algebras": len(catalog.rotation_classes),
        "triangulations": len(catalog.members),
        "orbit_size_histogram": dict(sorted(histogram.items())),
    }
    return Report("rotation orbits as tilting-object counts", n, counts, violations)


def commutation_report(n: int, limit: int | None = None) -> Report:
    """Exhaustive flip-vs-mutation agreement on every triangulation of the (n+3)-gon.

    For every triangulation t and every diagonal d, the quiver of the
    flipped triangulation must be isomorphic to the mutation of t's quiver
    at d's vertex.
    """
    ceiling = DEFAULT_BIJECTION_LIMIT if limit is None else limit
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be an integer >= 1, got {n!r}")
    if n > ceiling:
        raise ValueError(f"rank {n} above the configured limit {ceiling}")
    catalog = enumerate_triangulations(n + 3)
    violations = []
    checked = 0
    for t in catalog.members:
        q = quiver_of(t)
        for idx, d in enumerate(t.diagonals):
            checked += 1
            flipped = canonical_form(quiver_of(flip(t, d)))
            mutated = canonical_form(mutate(q, idx))
            if flipped != mutated:
                violations.append({
                    "type": "commutation",
                    "triangulation": [list(x) for x in t.diagonals],
                    "diagonal": list(d),
                })
    counts = {"triangulations": len(catalog.members), "flips_checked": checked}
    return Report("flip / mutation commutation", n, counts, violations)


def lemma_report(n: int, limit: int | None = None) -> Report:
    """Close-to-border structure checks over every triangulation of the (n+3)-gon.

    Every close-to-border diagonal must classify as exactly one of sink,
    source or on-cycle, with on-cycle exactly when its vertex lies on a
    directed triangle; and deleting a diagonal's vertex must leave the
    quiver connected exactly when that diagonal is close to the border.
    """
    ceiling = DEFAULT_BIJECTION_LIMIT if limit is None else limit
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be an integer >= 1, got {n!r}")
    if n > ceiling:
        raise ValueError(f"rank {n} above the configured limit {ceiling}")
    catalog = enumerate_triangulations(n + 3)
    m = n + 3
    violations = []
    classified = 0
    deletion_checks = 0
    for t in catalog.members:
        q = quiver_of(t)
        for idx, d in enumerate(t.diagonals):
            close = is_close_to_border(d, m)
            if close:
                classified += 1
                try:
                    label = classify_close_diagonal(t, d)
                except Exception as exc:  # totality failure
                    violations.append({
                        "type": "classification_failed",
                        "triangulation": [list(x) for x in t.diagonals],
                        "diagonal": list(d),
                        "message": str(exc),
                    })
                    continue
                on_cycle = _on_directed_triangle(q, idx)
                if (label.value == "on_cycle") != on_cycle:
                    violations.append({
                        "type": "cycle_mismatch",
                        "triangulation": [list(x) for x in t.diagonals],
                        "diagonal": list(d),
                    })
                outdeg = sum(1 for (i, _) in q.arrows if i == idx)
                indeg = sum(1 for (_, j) in q.arrows if j == idx)
                if label.value == "sink" and outdeg:
                    violations.append({"type": "sink_has_out", "diagonal": list(d)})
                if label.value == "source" and (indeg or not outdeg):
                    violations.append({"type": "source_mismatch", "diagonal": list(d)})
            if q.n >= 2:
                deletion_checks += 1
                still_connected = is_connected(delete_vertex(q, idx))
                if still_connected != close:
                    violations.append({
                        "type": "deletion_connectivity",
                        "triangulation": [list(x) for x in t.diagonals],
                        "diagonal": list(d),
                        "close_to_border": close,
                        "connected_after_deletion": still_connected,
                    })
    counts = {
        "triangulations": len(catalog.members),
        "close_diagonals_classified": classified,
        "deletions_checked": deletion_checks,
    }
    return Report("close-to-border structure", n, counts, violations)


def _on_directed_triangle(q: Quiver, v: int) -> bool:
    for (i, j) in q.arrows:
        if i == v and any((j, w) in q.arrows and (w, v) in q.arrows for w in range(q.n)):
            return True
    return False


def structural_report(n: int, limit: int | None = None, jobs: int = 1) -> Report:
    """Every member of the mutation-class catalog passes the type-A structure test."""
    catalog = enumerate_mutation_class(n, limit=limit, jobs=jobs)
    violations = []
    for member in catalog.members:
        if not is_type_a_quiver(member.to_quiver()):
            violations.append({"type": "structure", "encoding": member.encoding.hex()})
    counts = {"members": len(catalog.members)}
    return Report("type-A structural facts", n, counts, violations)

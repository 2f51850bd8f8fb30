"""Rotation orbits of triangulations: sizes, divisibility, and the prime case.

Two triangulations related by rotating the polygon give isomorphic quivers,
and (less obviously) only those do.  So each quiver class corresponds to one
rotation orbit, and the orbit size counts how many distinct triangulations
realize it.  Orbit sizes always divide the polygon size m, are at least 2,
and when m is prime every orbit is free, which forces

    class count * m == catalan(m - 2).

Run with:  python demos/04_rotation_orbits.py
"""

from mutanta import (
    catalan,
    factor_out,
    extend_at,
    fan_triangulation,
    orbit_statistics,
    rotation_canonical,
    rotate,
    triangulation_to_json,
)

for m in range(4, 12):
    histogram = orbit_statistics(m)
    total = sum(size * count for size, count in histogram.items())
    prime = all(m % d for d in range(2, m)) and m > 1
    note = "  (prime: all orbits free)" if prime else ""
    print(f"m={m:>2}: {histogram}  covering {total} triangulations{note}")
    assert total == catalan(m - 2)

# A hand-sized example of a small orbit: the hexagon triangulation whose
# diagonals form an inner triangle returns to itself after two clockwise
# steps, so its orbit has size 2 instead of 6.
from mutanta import Triangulation

pinwheel = Triangulation(6, [(0, 2), (2, 4), (0, 4)])
print()
print("pinwheel:", triangulation_to_json(pinwheel))
print("rotated by 2:", triangulation_to_json(rotate(pinwheel, 2)))
print("orbit size:", rotation_canonical(pinwheel).orbit_size)

# Shrinking and growing the polygon: a close-to-border diagonal can be
# factored out (its in-between vertex disappears), and any border edge can
# be extended back.  The two moves are exact inverses.
fan = fan_triangulation(6, 0)
smaller = factor_out(fan, (0, 2))
print()
print("hexagon fan:", triangulation_to_json(fan))
print("factored at (0,2):", triangulation_to_json(smaller))
regrown = extend_at(smaller, 0)
print("extended back at edge 0:", triangulation_to_json(regrown))
assert regrown == fan

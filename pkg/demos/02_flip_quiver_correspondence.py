"""Flipping a diagonal of the polygon is the same move as mutating its quiver.

Every triangulation of a convex polygon determines a quiver: one vertex per
diagonal, arrows between diagonals that bound a common triangle, oriented by
the anticlockwise pivot about the shared corner.  Flipping diagonal number k
and mutating quiver vertex k land on the same isomorphism class -- this demo
walks one example and then checks the statement exhaustively for a heptagon.

Run with:  python demos/02_flip_quiver_correspondence.py
"""

from mutanta import (
    canonical_form,
    enumerate_triangulations,
    fan_triangulation,
    flip,
    mutate,
    quiver_of,
    triangulation_to_json,
)

# A hexagon fan: all diagonals hang off vertex 0, the quiver is a path.
t = fan_triangulation(6, 0)
print("fan:", triangulation_to_json(t))
print("its quiver arrows:", sorted(quiver_of(t).arrows))

# Flip the middle diagonal (0, 3).  The two triangles around it form the
# quadrilateral 0-2-3-4, so (0, 3) is replaced by (2, 4).
flipped = flip(t, (0, 3))
print("after flipping (0,3):", triangulation_to_json(flipped))
print("flipped quiver arrows:", sorted(quiver_of(flipped).arrows))

# The same move on the quiver side: (0, 3) is diagonal number 1 in sorted
# order, so mutate the quiver at vertex 1 and compare isomorphism classes.
idx = t.index_of((0, 3))
assert canonical_form(quiver_of(flipped)) == canonical_form(mutate(quiver_of(t), idx))
print("flip and mutation agree on this example")

# Now the exhaustive version: every triangulation of the 7-gon, every diagonal.
checked = 0
for tri in enumerate_triangulations(7).members:
    q = quiver_of(tri)
    for k, d in enumerate(tri.diagonals):
        assert canonical_form(quiver_of(flip(tri, d))) == canonical_form(mutate(q, k))
        checked += 1
print(f"verified flip == mutation for all {checked} flips in the heptagon")

"""Quiver mutation basics: reversal, triangle formation, involution.

Run with:  python demos/01_quiver_mutation.py
"""

from mutanta import linear_quiver, mutate, quiver_to_dot, quiver_to_json

# The seed of everything: a linearly oriented path 0 -> 1 -> 2 -> 3.
q = linear_quiver(4)
print("seed quiver:", quiver_to_json(q))

# Mutating at an endpoint only reverses the arrows touching it.
at_end = mutate(q, 0)
print("after mutating at 0:", quiver_to_json(at_end))

# Mutating at an interior vertex with a through-path i -> k -> j also adds
# the shortcut arrow i -> j, so an oriented triangle appears.
at_mid = mutate(q, 1)
print("after mutating at 1:", quiver_to_json(at_mid))

# Mutating again at the same vertex undoes everything, exactly.
assert mutate(at_mid, 1) == q
print("mutating twice at 1 restores the seed")

# Mutating a triangle vertex opens the triangle back into a path shape.
reopened = mutate(at_mid, 0)
print("triangle mutated at 0:", quiver_to_json(reopened))

# DOT output for graphviz, one arrow per line, deterministic order.
print()
print(quiver_to_dot(at_mid, name="triangle"))

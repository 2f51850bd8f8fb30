"""Count mutation classes three independent ways and watch them agree.

For each rank n the number of quivers reachable from the linear A_n path by
mutation, counted up to isomorphism, equals both the number of rotation
orbits of triangulations of the (n+3)-gon and a closed formula built from
Catalan numbers:

    catalan(n+1)/(n+3)  [+ catalan((n+1)/2)/2 if (n+1)/2 is an integer]
                        [+ (2/3)*catalan(n/3) if n/3 is an integer]

Run with:  python demos/03_counting_three_ways.py
"""

import time

from mutanta import (
    enumerate_mutation_class,
    enumerate_triangulations,
    mutation_class_count,
)

print(f"{'n':>3} {'formula':>9} {'bfs':>9} {'orbits':>9} {'bfs time':>9}")
for n in range(2, 10):
    formula = mutation_class_count(n)

    start = time.perf_counter()
    bfs = len(enumerate_mutation_class(n).members)
    elapsed = time.perf_counter() - start

    orbits = len(enumerate_triangulations(n + 3).rotation_classes)

    agree = "  " if formula == bfs == orbits else " MISMATCH"
    print(f"{n:>3} {formula:>9} {bfs:>9} {orbits:>9} {elapsed:>8.2f}s{agree}")

# The breadth-first search also records how the class fills up by distance
# from the linear seed.
stats = enumerate_mutation_class(8).frontier_stats
print()
print("rank 8 search profile:")
print("  new classes per level:", list(stats.level_sizes))
print("  mutations applied:   ", stats.expansions)

"""
Embedding counts and volumes
============================

A bipartite graph G with white and black vertices embeds into a diagram by
sending white vertices to columns and black vertices to rows so that each
edge lands on a box.  On a continuous diagram the count becomes a volume.
"""
from fractions import Fraction

from youngcalc import (BipartiteGraph, DecoratedGraph, Partition, count_embeddings,
                       decorated_value, embedding_volume, mc_volume, profile_of_partition,
                       triangle_profile)
from youngcalc.embeddings import count_embeddings_bruteforce

lam = Partition.parse("4,3,1")
edge = BipartiteGraph.from_edges([(0, 0)])
black_star = BipartiteGraph.from_edges([(0, 0), (1, 0)])   # two whites share a black vertex
white_star = BipartiteGraph.from_edges([(0, 0), (0, 1)])

for name, g in [("edge", edge), ("black star", black_star), ("white star", white_star)]:
    fast = count_embeddings(g, lam)
    slow = count_embeddings_bruteforce(g, lam)
    print(f"N_{name}({lam}) = {fast}   brute force: {slow}")

# The triangle x + y <= 2 is a strict profile (omega = 2 on [-2, 2]).
tri = triangle_profile(2, 2)
print("\nvolume of the black star on the triangle:", embedding_volume(black_star, tri))

# Decorating an edge pins it to the boundary point with content z.
d = DecoratedGraph(black_star, (0, 0))
for z in (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1)):
    print(f"decorated black star at z = {z}: {decorated_value(d, tri, z)}")

# Monte Carlo as an independent check; the seed fixes every sample
res = mc_volume(black_star, tri, samples=500_000, seed=1)
print(f"\nMonte Carlo: {res.estimate:.4f} +- {res.stderr:.4f}  (exact {float(Fraction(8, 3)):.4f})")

square = BipartiteGraph.from_edges([(0, 0), (0, 1), (1, 0), (1, 1)])
res = mc_volume(square, profile_of_partition(lam), samples=500_000, seed=2)
print(f"4-cycle on {lam}: Monte Carlo {res.estimate:.3f}, exact count {count_embeddings(square, lam)}")

"""
Bi-paths, triplets and bi-spanners
==================================

Run the triplet propagation from one source, rebuild the bi-paths it
found, and assemble a bidirectional spanner.
"""
import random
from pathlib import Path

from tgreach import NON_STRICT, STRICT, TemporalGraph, build_bispanner, compute_bipaths
from tgreach import critical_bispanner_edges, is_bidirectionally_connected, min_bispanner_bruteforce
from tgreach import read_temporal_graph

fig2 = read_temporal_graph(Path(__file__).parent / "data" / "fig2.tg")

res = compute_bipaths(fig2, 0, NON_STRICT)
for v in fig2.vertices():
    print(v, list(res[v]))

# The triplet (b, 11, 4) reaching f through the cycle is dominated by
# (b, 4, 4) and does not survive.
for v in fig2.vertices():
    print(f"bi-path 0 <-> {v}:", res.reconstruct(v))

print("bidirectionally connected:", is_bidirectionally_connected(fig2, NON_STRICT))
H = build_bispanner(fig2, NON_STRICT)
print("bi-spanner edges:", H.num_edges(), "of", fig2.num_edges())
print("minimum:", min_bispanner_bruteforce(fig2, NON_STRICT)[0])

###############################################################################
# Happy cliques cannot be thinned
# -------------------------------
# One label per edge, no label shared at a vertex: every edge is the only
# bi-path between its endpoints.

rng = random.Random(0)
n = 5
labels = rng.sample(range(1, 100), n * (n - 1) // 2)
clique = TemporalGraph(n, {(u, v): [labels.pop()] for u in range(n) for v in range(u + 1, n)})
print("critical edges:", len(critical_bispanner_edges(clique, STRICT)), "of", clique.num_edges())

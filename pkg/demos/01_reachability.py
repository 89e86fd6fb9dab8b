"""
Temporal reachability on two small graphs
=========================================

Load the labeled square and the six-vertex graph shipped in ``data/``,
look at their snapshots, earliest arrivals and pivots.
"""
from pathlib import Path

from tgreach import NON_STRICT, STRICT, classify, earliest_arrival, find_pivots, is_temporally_connected
from tgreach import read_temporal_graph, snapshot, tst_bruteforce

DATA = Path(__file__).parent / "data"

square = read_temporal_graph(DATA / "square.tg")
print(square)
print("class:", classify(square))

# Each snapshot of the square is a perfect matching.
for t in range(1, square.tau + 1):
    print(f"snapshot at {t}:", snapshot(square, t))

# Earliest arrival from vertex 0; the source itself is reported as -inf.
print("arrivals from 0:", earliest_arrival(square, 0, NON_STRICT))
print("connected:", is_temporally_connected(square, NON_STRICT))

# Yet every spanning tree loses a direction somewhere.
print("spanning tree:", tst_bruteforce(square, NON_STRICT).verdict)

###############################################################################
# A graph with a pivot
# --------------------
# Vertex 3 (``d``) is reached by everybody by time 6 and reaches everybody
# from time 6 on.

fig2 = read_temporal_graph(DATA / "fig2.tg")
print("non-strict pivots:", find_pivots(fig2, NON_STRICT))
print("strict pivots:", find_pivots(fig2, STRICT))

"""
Temporal spanning trees
=======================

Exhaustive search against the shortcut available for simple graphs.
"""
from tgreach import NON_STRICT, STRICT, TemporalGraph, tst_bruteforce, tst_simple

star = TemporalGraph(4, {(0, 1): [1, 2], (0, 2): [1, 2], (0, 3): [1, 2]})
print("star:", tst_bruteforce(star, STRICT))

# Simple graph: a tree must sit inside one snapshot (non-strict) and
# cannot exist at all beyond two vertices (strict).
G = TemporalGraph(4, {(0, 1): [2], (1, 2): [2], (2, 3): [2], (0, 3): [1], (0, 2): [5]})
for setting in (STRICT, NON_STRICT):
    fast = tst_simple(G, setting)
    slow = tst_bruteforce(G, setting)
    print(setting.value, fast.verdict.value, slow.verdict.value)
    if fast.tree is not None:
        print("  tree:", fast.tree)

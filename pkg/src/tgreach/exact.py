"""Exact solvers for small instances: temporal spanning trees and minimum bi-spanners.

Both searches rely on monotonicity: deleting edges never creates journeys,
so an edge whose removal from the whole graph already breaks connectivity
belongs to every solution, and a branch whose remaining edges are no
longer connected can be cut.
"""
from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass

from .bipath import is_bidirectionally_connected
from .core import Edge, Setting, TemporalGraph, classify, snapshot
from .reach import is_temporally_connected

DEFAULT_MAX_N = 10
DEFAULT_MAX_FREE_EDGES = 20


class SizeGuardError(RuntimeError):
    """Instance exceeds the configured bound for an exhaustive search."""


class Verdict(enum.Enum):
    EXISTS = "exists"
    NOT_EXISTS = "not-exists"
    NEVER_FOR_SIMPLE_STRICT = "never-for-simple-strict"


@dataclass(frozen=True)
class SpanningTreeResult:
    verdict: Verdict
    tree: TemporalGraph | None = None

    @property
    def exists(self) -> bool:
        return self.verdict is Verdict.EXISTS


def _components(n: int, edges) -> list[int]:
    comp = list(range(n))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for u, v in edges:
        comp[find(u)] = find(v)
    return [find(x) for x in range(n)]


def _spans(n: int, edges) -> bool:
    return n <= 1 or len(set(_components(n, edges))) == 1


def is_spanning_tree(G: TemporalGraph) -> bool:
    """Whether the footprint of ``G`` is a tree on all of its vertices."""
    return G.num_edges() == max(G.n - 1, 0) and G.footprint_is_connected()


def tst_bruteforce(G: TemporalGraph, setting: Setting, max_n: int = DEFAULT_MAX_N) -> SpanningTreeResult:
    """Search the spanning trees of the footprint for a temporally connected one.

    Trees inherit every label of their edges. Raises :class:`SizeGuardError`
    when ``G.n > max_n``.
    """
    if G.n > max_n:
        raise SizeGuardError(f"{G.n} vertices exceeds the limit of {max_n} for spanning tree search")
    n = G.n
    if n <= 1:
        return SpanningTreeResult(Verdict.EXISTS, TemporalGraph(n))
    if not G.footprint_is_connected() or not is_temporally_connected(G, setting):
        return SpanningTreeResult(Verdict.NOT_EXISTS)

    edges = G.edge_keys()
    forced = {e for e in edges if not is_temporally_connected(G.without_edge(*e), setting)}
    if len(forced) > n - 1 or not _is_forest(n, forced):
        return SpanningTreeResult(Verdict.NOT_EXISTS)
    order = sorted(forced) + [e for e in edges if e not in forced]

    def search(i: int, chosen: list[Edge], dropped: set[Edge]) -> TemporalGraph | None:
        if len(chosen) == n - 1:
            tree = G.restrict(chosen)
            return tree if is_temporally_connected(tree, setting) else None
        if len(order) - i < n - 1 - len(chosen):
            return None
        e = order[i]
        comp = _components(n, chosen)
        if comp[e[0]] != comp[e[1]]:
            found = search(i + 1, chosen + [e], dropped)
            if found is not None:
                return found
        if e in forced:
            return None
        rest = G.restrict(x for x in edges if x not in dropped and x != e)
        if not _spans(n, rest.edge_keys()) or not is_temporally_connected(rest, setting):
            return None
        return search(i + 1, chosen, dropped | {e})

    tree = search(0, [], set())
    if tree is None:
        return SpanningTreeResult(Verdict.NOT_EXISTS)
    return SpanningTreeResult(Verdict.EXISTS, tree)


def _is_forest(n: int, edges) -> bool:
    comp = list(range(n))

    def find(x):
        while comp[x] != x:
            x = comp[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        comp[ru] = rv
    return True


def tst_simple(G: TemporalGraph, setting: Setting) -> SpanningTreeResult:
    """Decide the spanning tree question on a simple temporal graph directly.

    Strict journeys cannot retrace a path of two or more single-label edges,
    so no tree on more than two vertices works. Non-strict trees must use
    one label throughout, hence live inside a single snapshot.
    """
    if not classify(G).simple:
        raise ValueError("tst_simple requires a simple temporal graph (one label per edge)")
    n = G.n
    if setting.is_strict:
        if n > 2:
            return SpanningTreeResult(Verdict.NEVER_FOR_SIMPLE_STRICT)
        if is_spanning_tree(G):
            return SpanningTreeResult(Verdict.EXISTS, G)
        return SpanningTreeResult(Verdict.NOT_EXISTS)
    if n <= 1:
        return SpanningTreeResult(Verdict.EXISTS, TemporalGraph(n))
    times = sorted({t for _, t in G.contacts()})
    for t in times:
        tree = _bfs_tree(n, snapshot(G, t))
        if tree is not None:
            return SpanningTreeResult(Verdict.EXISTS, G.restrict(tree))
    return SpanningTreeResult(Verdict.NOT_EXISTS)


def _bfs_tree(n: int, edges: list[Edge]) -> list[Edge] | None:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    tree = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w not in seen:
                seen.add(w)
                tree.append((u, w))
                queue.append(w)
    return tree if len(seen) == n else None


def critical_bispanner_edges(G: TemporalGraph, setting: Setting) -> list[Edge]:
    """Footprint edges without which ``G`` stops being bidirectionally connected."""
    if not is_bidirectionally_connected(G, setting):
        raise ValueError("graph is not bidirectionally connected")
    return [e for e in G.edge_keys() if not is_bidirectionally_connected(G.without_edge(*e), setting)]


def min_bispanner_bruteforce(
    G: TemporalGraph,
    setting: Setting,
    max_k: int | None = None,
    max_free_edges: int = DEFAULT_MAX_FREE_EDGES,
) -> tuple[int, TemporalGraph] | None:
    """Smallest bi-spanner by footprint edge count, with a witness.

    Critical edges are always kept; subsets of the remaining edges are tried
    by increasing size. Returns ``None`` when ``G`` is not bidirectionally
    connected, or when no bi-spanner has at most ``max_k`` edges.
    Raises :class:`SizeGuardError` when more than ``max_free_edges``
    non-critical edges would have to be searched.
    """
    if not is_bidirectionally_connected(G, setting):
        return None
    edges = G.edge_keys()
    forced = [e for e in edges if not is_bidirectionally_connected(G.without_edge(*e), setting)]
    free = [e for e in edges if e not in forced]
    if len(free) > max_free_edges:
        raise SizeGuardError(
            f"{len(free)} non-critical edges exceeds the limit of {max_free_edges} for bi-spanner search"
        )
    for extra in range(len(free) + 1):
        if max_k is not None and len(forced) + extra > max_k:
            return None
        for combo in itertools.combinations(free, extra):
            H = G.restrict(forced + list(combo))
            if is_bidirectionally_connected(H, setting):
                return len(forced) + extra, H
    raise AssertionError("the full graph is bidirectionally connected")

"""One-directional temporal reachability: earliest arrival, connectivity, pivots."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

from .core import Setting, TemporalGraph

# Arrival entry of the source vertex: it may leave at any time.
SOURCE = -math.inf


@dataclass(frozen=True)
class Journey:
    """A temporal path ``vertices[0] -> ... -> vertices[-1]``.

    ``labels[i]`` is the time at which edge ``vertices[i] vertices[i+1]`` is crossed.
    """

    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    @property
    def contacts(self) -> list[tuple[tuple[int, int], int]]:
        return [((u, v), t) for u, v, t in zip(self.vertices, self.vertices[1:], self.labels)]

    def is_valid(self, G: TemporalGraph, setting: Setting) -> bool:
        if len(self.labels) != len(self.vertices) - 1 or len(set(self.vertices)) != len(self.vertices):
            return False
        for (u, v), t in self.contacts:
            if t not in G.labels(u, v):
                return False
        return is_monotone(self.labels, setting)


def is_monotone(labels, setting: Setting) -> bool:
    """Non-decreasing (non-strict) or increasing (strict)."""
    if setting.is_strict:
        return all(a < b for a, b in zip(labels, labels[1:]))
    return all(a <= b for a, b in zip(labels, labels[1:]))


def _check_vertex(G: TemporalGraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range [0, {G.n})")


def _snapshots(G: TemporalGraph) -> list[tuple[int, list[tuple[int, int]]]]:
    by_time: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e, t in G.contacts():
        by_time[t].append(e)
    return sorted(by_time.items())


def _sweep(G: TemporalGraph, s: int, setting: Setting, start: float = SOURCE):
    """Earliest arrivals from ``s`` when ``s`` is available from time ``start`` on.

    Returns ``(arrival, parent)``; ``parent[v]`` is ``(u, t)`` for the contact
    that first reached ``v``.
    """
    arrival: list[float | None] = [None] * G.n
    parent: list[tuple[int, int] | None] = [None] * G.n
    arrival[s] = start
    strict = setting.is_strict
    for t, edges in _snapshots(G):
        if t < start or (strict and t == start):
            continue
        if strict:
            found = {}
            for u, v in edges:
                for x, y in ((u, v), (v, u)):
                    ax = arrival[x]
                    if ax is not None and ax < t and arrival[y] is None and y not in found:
                        found[y] = x
            for y, x in found.items():
                arrival[y] = t
                parent[y] = (x, t)
        else:
            adj: dict[int, list[int]] = defaultdict(list)
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            stack = [x for x in sorted(adj) if arrival[x] is not None]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if arrival[y] is None:
                        arrival[y] = t
                        parent[y] = (x, t)
                        stack.append(y)
    return arrival, parent


def earliest_arrival(G: TemporalGraph, s: int, setting: Setting) -> list[float | None]:
    """Earliest arrival time at every vertex from ``s``.

    The source entry is :data:`SOURCE`; unreachable vertices map to ``None``.
    """
    _check_vertex(G, s)
    return _sweep(G, s, setting)[0]


def foremost_journey(G: TemporalGraph, s: int, v: int, setting: Setting) -> Journey | None:
    """A journey from ``s`` to ``v`` arriving at the earliest possible time."""
    _check_vertex(G, s)
    _check_vertex(G, v)
    arrival, parent = _sweep(G, s, setting)
    if arrival[v] is None:
        return None
    verts, labels = [v], []
    while verts[-1] != s:
        u, t = parent[verts[-1]]
        verts.append(u)
        labels.append(t)
    return Journey(tuple(reversed(verts)), tuple(reversed(labels)))


def is_temporally_connected(G: TemporalGraph, setting: Setting) -> bool:
    for s in G.vertices():
        if any(a is None for a in _sweep(G, s, setting)[0]):
            return False
    return True


def find_pivots(G: TemporalGraph, setting: Setting) -> list[tuple[int, int]]:
    """Vertices ``p`` with a time ``t`` such that all others reach ``p`` by ``t``
    and ``p`` reaches all others departing at ``t`` or later.

    The witness ``t`` is the latest earliest-arrival at ``p``. Comparisons are
    inclusive in the non-strict setting; in the strict setting ``p`` departs
    strictly after ``t``. A graph with fewer than two vertices has no pivot.
    """
    if G.n < 2:
        return []
    arrivals = [_sweep(G, v, setting)[0] for v in G.vertices()]
    if any(a is None for row in arrivals for a in row):
        return []
    pivots = []
    for p in G.vertices():
        deadline = max(arrivals[v][p] for v in G.vertices() if v != p)
        forward, _ = _sweep(G, p, setting, start=deadline)
        if all(a is not None for a in forward):
            pivots.append((p, int(deadline)))
    return pivots

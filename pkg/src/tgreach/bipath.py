"""All bidirectional temporal paths from a source, by triplet propagation.

Every vertex ``v`` holds a set of triplets ``(via, arrive, depart)``: some
bi-path from the source reaches ``v`` from neighbor ``via`` at time
``arrive``, and its return journey leaves ``v`` towards ``via`` at time
``depart``. Triplets are extended edge by edge and dominated ones (same
neighbor, later arrival and earlier departure) are dropped, until nothing
changes.
"""
from __future__ import annotations

import bisect
import math
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import Setting, TemporalGraph, edge_key
from .reach import Journey


class Triplet(NamedTuple):
    via: int | None
    arrive: float
    depart: float

    def dominates(self, other: Triplet) -> bool:
        return self.via == other.via and self.arrive <= other.arrive and self.depart >= other.depart


# Held by the source only: a zero-length bi-path usable at any time.
SENTINEL = Triplet(None, -math.inf, math.inf)


def extend_triplet(t: Triplet, v: int, labels: Sequence[int], setting: Setting) -> Triplet | None:
    """Extend triplet ``t`` held at ``v`` across an edge ``vw`` carrying ``labels``.

    ``labels`` must be sorted. The forward journey takes the first label not
    before ``t.arrive``, the return journey the last label not after
    ``t.depart`` (strictly after/before in the strict setting). Returns the
    triplet ``(v, a', d')`` for ``w``, or ``None`` when either label is missing.
    """
    if setting.is_strict:
        i = bisect.bisect_right(labels, t.arrive)
        j = bisect.bisect_left(labels, t.depart) - 1
    else:
        i = bisect.bisect_left(labels, t.arrive)
        j = bisect.bisect_right(labels, t.depart) - 1
    if i >= len(labels) or j < 0:
        return None
    return Triplet(v, labels[i], labels[j])


@dataclass
class TripletSet:
    """Dominance-free triplets held at one vertex."""

    owner: int
    triplets: list[Triplet] = field(default_factory=list)

    def add(self, t: Triplet) -> bool:
        """Insert ``t`` unless dominated, evicting what it dominates.

        Returns ``True`` when the set changed.
        """
        if any(old.dominates(t) for old in self.triplets):
            return False
        self.triplets = [old for old in self.triplets if not t.dominates(old)]
        self.triplets.append(t)
        return True

    def copy(self) -> TripletSet:
        return TripletSet(self.owner, list(self.triplets))

    def as_set(self) -> frozenset[Triplet]:
        return frozenset(self.triplets)

    def __contains__(self, t: object) -> bool:
        return t in self.triplets

    def __iter__(self) -> Iterator[Triplet]:
        return iter(sorted(self.triplets, key=_sort_key))

    def __len__(self) -> int:
        return len(self.triplets)


def _sort_key(t: Triplet):
    return (t.arrive, -t.depart, -1 if t.via is None else t.via)


def add_with_elimination(B: TripletSet, t: Triplet) -> tuple[TripletSet, bool]:
    """Non-mutating form of :meth:`TripletSet.add`."""
    out = B.copy()
    improved = out.add(t)
    return out, improved


@dataclass(frozen=True)
class BiPath:
    """Two opposite journeys over one simple path ``vertices[0] .. vertices[-1]``.

    ``forward[i]`` and ``backward[i]`` are labels of edge
    ``vertices[i] vertices[i+1]``; the return journey uses ``backward`` in
    reverse order.
    """

    vertices: tuple[int, ...]
    forward: tuple[int, ...]
    backward: tuple[int, ...]

    @property
    def forward_journey(self) -> Journey:
        return Journey(self.vertices, self.forward)

    @property
    def backward_journey(self) -> Journey:
        return Journey(self.vertices[::-1], self.backward[::-1])

    def contacts(self) -> list[tuple[tuple[int, int], int]]:
        out = []
        for u, v, f, b in zip(self.vertices, self.vertices[1:], self.forward, self.backward):
            out.append((edge_key(u, v), f))
            out.append((edge_key(u, v), b))
        return out

    def is_valid(self, G: TemporalGraph, setting: Setting) -> bool:
        return (
            len(self.forward) == len(self.backward)
            and self.forward_journey.is_valid(G, setting)
            and self.backward_journey.is_valid(G, setting)
        )


@dataclass
class BipathResult:
    """Output of :func:`compute_bipaths`: triplet sets plus parent links."""

    graph: TemporalGraph
    source: int
    setting: Setting
    sets: list[TripletSet]
    parents: dict[tuple[int, Triplet], tuple[int, Triplet]]

    def __getitem__(self, v: int) -> TripletSet:
        return self.sets[v]

    def reachable(self, v: int) -> bool:
        return len(self.sets[v]) > 0

    def all_reachable(self) -> bool:
        return all(self.sets)

    def reconstruct(self, v: int) -> BiPath | None:
        return reconstruct_bipath(self, v)


def compute_bipaths(G: TemporalGraph, s: int, setting: Setting, order: str = "fifo") -> BipathResult:
    """Triplet sets at every vertex for bi-paths from ``s``.

    ``order`` ("fifo" or "lifo") only picks the worklist discipline; the final
    triplet sets do not depend on it.
    """
    if not 0 <= s < G.n:
        raise ValueError(f"vertex {s} out of range [0, {G.n})")
    if order not in ("fifo", "lifo"):
        raise ValueError(f"unknown worklist order {order!r}")
    sets = [TripletSet(v) for v in G.vertices()]
    sets[s].add(SENTINEL)
    parents: dict[tuple[int, Triplet], tuple[int, Triplet]] = {}
    work = deque([(s, SENTINEL)])
    pop = work.popleft if order == "fifo" else work.pop
    while work:
        v, t = pop()
        if t not in sets[v]:
            # evicted meanwhile; whatever replaced it dominates its extensions
            continue
        for w in G.neighbors(v):
            if w == t.via or w == s:
                continue
            new = extend_triplet(t, v, G.labels(v, w), setting)
            if new is not None and sets[w].add(new):
                parents[(w, new)] = (v, t)
                work.append((w, new))
    return BipathResult(G, s, setting, sets, parents)


def _cut_loops(verts: list[int], fwd: list[int], bwd: list[int]) -> BiPath:
    # Jumping to the last visit of a vertex keeps both journeys valid: forward
    # arrivals only grow along the walk and return departures only shrink.
    last = {x: i for i, x in enumerate(verts)}
    out_v, out_f, out_b = [], [], []
    i = last[verts[0]]
    out_v.append(verts[0])
    while i < len(verts) - 1:
        out_f.append(fwd[i])
        out_b.append(bwd[i])
        i = last[verts[i + 1]]
        out_v.append(verts[i])
    return BiPath(tuple(out_v), tuple(out_f), tuple(out_b))


def reconstruct_bipath(result: BipathResult, v: int) -> BiPath | None:
    """A simple bi-path from the source to ``v``, or ``None`` if there is none.

    Picks the triplet with the earliest arrival, then latest departure, then
    smallest neighbor, and follows parent links back to the source.
    """
    s = result.source
    if v == s:
        return BiPath((s,), (), ())
    if not result.sets[v]:
        return None
    t = min(result.sets[v], key=_sort_key)
    verts, fwd, bwd = [v], [], []
    node = v
    while t != SENTINEL:
        fwd.append(int(t.arrive))
        bwd.append(int(t.depart))
        node, t = result.parents[(node, t)]
        verts.append(node)
    verts.reverse()
    fwd.reverse()
    bwd.reverse()
    return _cut_loops(verts, fwd, bwd)


def is_bidirectionally_connected(G: TemporalGraph, setting: Setting) -> bool:
    # bi-paths are symmetric, so the last source has nothing left to check
    for s in range(G.n - 1):
        res = compute_bipaths(G, s, setting)
        if not all(res.sets[v] for v in range(s + 1, G.n)):
            return False
    return True


def build_bispanner(G: TemporalGraph, setting: Setting) -> TemporalGraph | None:
    """Union of one reconstructed bi-path per ordered vertex pair.

    Returns ``None`` when ``G`` is not bidirectionally connected.
    """
    kept: dict[tuple[int, int], set[int]] = {}
    for s in G.vertices():
        res = compute_bipaths(G, s, setting)
        for v in G.vertices():
            bp = res.reconstruct(v)
            if bp is None:
                return None
            for e, t in bp.contacts():
                kept.setdefault(e, set()).add(t)
    return TemporalGraph(G.n, kept)


def all_pairs_bipaths(G: TemporalGraph, setting: Setting) -> dict[tuple[int, int], BiPath | None]:
    """Reconstructed bi-path for every ordered pair of distinct vertices."""
    out = {}
    for s in G.vertices():
        res = compute_bipaths(G, s, setting)
        for v in G.vertices():
            if v != s:
                out[(s, v)] = res.reconstruct(v)
    return out

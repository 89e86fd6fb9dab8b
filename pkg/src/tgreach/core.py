"""Temporal graph data model.

A temporal graph is an undirected footprint on vertices ``0..n-1`` whose
edges carry strictly increasing lists of positive integer time labels.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

Edge = tuple[int, int]


class Setting(enum.Enum):
    """Whether consecutive labels of a journey must increase (strict) or may repeat."""

    STRICT = "strict"
    NON_STRICT = "non-strict"

    @property
    def is_strict(self) -> bool:
        return self is Setting.STRICT


STRICT = Setting.STRICT
NON_STRICT = Setting.NON_STRICT


class ParseError(ValueError):
    """Malformed temporal graph text. ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class TemporalGraph:
    """Immutable undirected temporal graph.

    ``edges`` maps unordered vertex pairs to label collections. Keys are
    normalized to ``(min, max)`` and labels to a sorted, deduplicated tuple.
    """

    __slots__ = ("_n", "_edges", "_adj", "_tau")

    def __init__(self, n: int, edges: Mapping[Edge, Iterable[int]] | Iterable[tuple[Edge, Iterable[int]]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        items = edges.items() if isinstance(edges, Mapping) else edges
        norm: dict[Edge, tuple[int, ...]] = {}
        for (u, v), labels in items:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            key = edge_key(u, v)
            if key in norm:
                raise ValueError(f"repeated edge {key}")
            labs = tuple(sorted(set(int(t) for t in labels)))
            if not labs:
                raise ValueError(f"edge {key} has no labels")
            if labs[0] < 1:
                raise ValueError(f"edge {key} has label {labs[0]} < 1")
            norm[key] = labs
        self._n = n
        self._edges = dict(sorted(norm.items()))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._tau = max((labs[-1] for labs in self._edges.values()), default=0)

    @property
    def n(self) -> int:
        return self._n

    @property
    def tau(self) -> int:
        """Lifetime: the largest label present (0 when edgeless)."""
        return self._tau

    @property
    def edges(self) -> dict[Edge, tuple[int, ...]]:
        return dict(self._edges)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def edge_keys(self) -> list[Edge]:
        return list(self._edges)

    def num_edges(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def labels(self, u: int, v: int) -> tuple[int, ...]:
        """Labels of edge ``{u, v}``; empty tuple if the edge is absent."""
        return self._edges.get(edge_key(u, v), ())

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edges

    def contacts(self) -> Iterator[tuple[Edge, int]]:
        for e, labs in self._edges.items():
            for t in labs:
                yield e, t

    def restrict(self, keep: Iterable[Edge]) -> TemporalGraph:
        """Temporal subgraph on the same vertices keeping all labels of ``keep``."""
        keys = {edge_key(*e) for e in keep}
        return TemporalGraph(self._n, {e: labs for e, labs in self._edges.items() if e in keys})

    def without_edge(self, u: int, v: int) -> TemporalGraph:
        key = edge_key(u, v)
        return TemporalGraph(self._n, {e: labs for e, labs in self._edges.items() if e != key})

    def is_subgraph_of(self, other: TemporalGraph) -> bool:
        if self._n != other._n:
            return False
        return all(set(labs) <= set(other.labels(*e)) for e, labs in self._edges.items())

    def footprint_is_connected(self) -> bool:
        if self._n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._edges.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}-{v}:{list(labs)}" for (u, v), labs in self._edges.items())
        return f"TemporalGraph(n={self._n}, {{{body}}})"


@dataclass(frozen=True)
class GraphClass:
    simple: bool
    proper: bool

    @property
    def happy(self) -> bool:
        return self.simple and self.proper


def classify(G: TemporalGraph) -> GraphClass:
    simple = all(len(labs) == 1 for labs in G.edges.values())
    proper = True
    for v in G.vertices():
        seen: set[int] = set()
        for w in G.neighbors(v):
            labs = G.labels(v, w)
            if seen.intersection(labs):
                proper = False
                break
            seen.update(labs)
        if not proper:
            break
    return GraphClass(simple=simple, proper=proper)


def snapshot(G: TemporalGraph, t: int) -> list[Edge]:
    """Edges present at time ``t``, in sorted order."""
    return [e for e, labs in G.edges.items() if t in labs]


def parse_temporal_graph(text: str) -> TemporalGraph:
    n: int | None = None
    edges: dict[Edge, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            n = _parse_int(fields[1], lineno)
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(fields) < 3:
            raise ParseError("edge line needs two endpoints and at least one label", lineno)
        u, v, *labels = (_parse_int(f, lineno) for f in fields)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range [0, {n})", lineno)
        if min(labels) < 1:
            raise ParseError(f"label {min(labels)} < 1", lineno)
        key = edge_key(u, v)
        if key in edges:
            raise ParseError(f"repeated edge {key[0]} {key[1]}", lineno)
        edges[key] = tuple(labels)
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return TemporalGraph(n, edges)


def _parse_int(field: str, lineno: int) -> int:
    try:
        return int(field)
    except ValueError:
        raise ParseError(f"not an integer: {field!r}", lineno) from None


def serialize_temporal_graph(G: TemporalGraph) -> str:
    lines = [f"n {G.n}"]
    for (u, v), labs in G.edges.items():
        lines.append(" ".join(map(str, (u, v, *labs))))
    return "\n".join(lines)


def read_temporal_graph(path) -> TemporalGraph:
    with open(path) as fh:
        return parse_temporal_graph(fh.read())


def write_temporal_graph(G: TemporalGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_temporal_graph(G) + "\n")


def to_dot(G: TemporalGraph, names: Mapping[int, str] | None = None) -> str:
    """Graphviz description; edge labels list the time labels."""
    lines = ["graph G {"]
    for v in G.vertices():
        if names and v in names:
            lines.append(f'  {v} [label="{names[v]}"];')
        else:
            lines.append(f"  {v};")
    for (u, v), labs in G.edges.items():
        lines.append(f'  {u} -- {v} [label="{",".join(map(str, labs))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

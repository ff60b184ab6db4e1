"""Immutable simple undirected graphs and structural vertex detectors."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional

from .errors import Disconnected, DuplicateLabel, InvalidEdge


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``, in sorted order,
    so edge ``i`` has a stable index usable in bitmaps.  Labels are optional
    human-readable names, one per vertex.

    Build instances with :func:`from_edges`; the constructor trusts its input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[str, ...]] = None
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    edge_index: Mapping[tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "edge_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, label: str) -> int:
        """Index of the vertex carrying ``label``."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def relabel(self, labels: Mapping[int, str] | Iterable[str]) -> "Graph":
        return from_edges(self.n, self.edges, labels)

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (u, v) if u < v else (v, u)
        return Graph(self.n, tuple(f for f in self.edges if f != e), self.labels)

    def without_vertex(self, v: int) -> "Graph":
        """Induced subgraph on all vertices but ``v`` (indices above ``v`` shift down)."""
        shift = lambda x: x - 1 if x > v else x  # noqa: E731
        edges = tuple((shift(a), shift(b)) for a, b in self.edges if v not in (a, b))
        labels = None
        if self.labels is not None:
            labels = self.labels[:v] + self.labels[v + 1:]
        return Graph(self.n - 1, edges, labels)


def from_edges(n: int, edge_list: Iterable[tuple[int, int]],
               labels: Mapping[int, str] | Iterable[str] | None = None) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Self-loops, endpoints outside ``range(n)`` and repeated unordered pairs raise
    :class:`InvalidEdge`; repeated labels raise :class:`DuplicateLabel`.

    >>> from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).m
    4
    """
    if n < 0:
        raise InvalidEdge(f"negative vertex count {n}")
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise InvalidEdge(f"duplicate edge {e}")
        seen.add(e)

    label_tuple = None
    if labels is not None:
        if isinstance(labels, Mapping):
            label_tuple = tuple(labels.get(v, str(v)) for v in range(n))
        else:
            label_tuple = tuple(labels)
            if len(label_tuple) != n:
                raise DuplicateLabel(f"expected {n} labels, got {len(label_tuple)}")
        if len(set(label_tuple)) != n:
            dup = next(x for x in label_tuple if label_tuple.count(x) > 1)
            raise DuplicateLabel(f"label {dup!r} used more than once")
    return Graph(n, tuple(sorted(seen)), label_tuple)


def bfs_distances(g: Graph, source: int, skip: int | None = None) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable (and ``skip``)."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        p = queue.popleft()
        for q in g.adj[p]:
            if dist[q] < 0 and q != skip:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(bfs_distances(g, 0)) >= 0


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose removal disconnects ``g``.

    Removal-and-BFS per vertex; quadratic, which is plenty for the graph sizes
    the exact solvers can handle.
    """
    require_connected(g)
    cuts = set()
    for v in range(g.n):
        if g.n <= 2:
            break
        start = 0 if v != 0 else 1
        dist = bfs_distances(g, start, skip=v)
        if any(d < 0 for x, d in enumerate(dist) if x != v):
            cuts.add(v)
    return frozenset(cuts)


def pendant_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(vs[j] in g.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose open neighbourhood is a clique (pendants included)."""
    return frozenset(v for v in range(g.n) if is_clique(g, g.adj[v]))


class TwinPair(NamedTuple):
    u: int
    v: int
    kind: str  # "open" or "closed"


def twin_pairs(g: Graph) -> frozenset[TwinPair]:
    pairs = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] == g.adj[v]:
                pairs.add(TwinPair(u, v, "open"))
            elif g.adj[u] | {u} == g.adj[v] | {v}:
                pairs.add(TwinPair(u, v, "closed"))
    return frozenset(pairs)


def twin_vertices(g: Graph) -> frozenset[int]:
    """Members of twin pairs with positive degree."""
    return frozenset(x for p in twin_pairs(g) for x in (p.u, p.v) if g.adj[x])


# Small named graphs used throughout tests and examples.

def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

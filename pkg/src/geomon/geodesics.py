"""Distances, shortest-path counts and per-pair geodesic coverage.

Everything here works on hop distances in a connected :class:`~geomon.graph.Graph`.
Coverage sets are Python ``int`` bitmaps: bit ``x`` for vertex ``x`` and bit ``i``
for edge ``g.edges[i]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bfs_distances, require_connected

DEFAULT_GEODESIC_CAP = 100_000


@dataclass(frozen=True)
class GeodesicTables:
    """All-pairs hop distances ``dist`` and shortest-path counts ``sigma``.

    ``sigma`` entries are Python ints, so counts never wrap around.
    """

    dist: tuple[tuple[int, ...], ...]
    sigma: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.dist)


def _bfs_counts(g: Graph, s: int) -> tuple[list[int], list[int]]:
    dist = [-1] * g.n
    sigma = [0] * g.n
    dist[s], sigma[s] = 0, 1
    queue = deque([s])
    while queue:
        p = queue.popleft()
        for q in g.adj[p]:
            if dist[q] < 0:
                dist[q] = dist[p] + 1
                queue.append(q)
            if dist[q] == dist[p] + 1:
                sigma[q] += sigma[p]
    return dist, sigma


def geodesic_tables(g: Graph) -> GeodesicTables:
    require_connected(g)
    rows = [_bfs_counts(g, s) for s in range(g.n)]
    return GeodesicTables(tuple(tuple(d) for d, _ in rows), tuple(tuple(c) for _, c in rows))


def vertex_on_some_geodesic(t: GeodesicTables, u: int, v: int, x: int) -> bool:
    return t.dist[u][x] + t.dist[x][v] == t.dist[u][v]


def _orientation(t: GeodesicTables, u: int, v: int, x: int, y: int):
    """Return ``(a, b)`` when edge ``ab`` is crossed from ``a`` to ``b`` on a u-v geodesic."""
    du, dv, d = t.dist[u], t.dist[v], t.dist[u][v]
    if du[x] + 1 + dv[y] == d:
        return x, y
    if du[y] + 1 + dv[x] == d:
        return y, x
    return None


def edge_on_some_geodesic(t: GeodesicTables, u: int, v: int, e: tuple[int, int]) -> bool:
    return _orientation(t, u, v, *e) is not None


def geodesics_through_edge(t: GeodesicTables, u: int, v: int, e: tuple[int, int]) -> int:
    """Number of u-v geodesics using edge ``e``."""
    o = _orientation(t, u, v, *e)
    if o is None:
        return 0
    a, b = o
    return t.sigma[u][a] * t.sigma[b][v]


def edge_monitored_by(t: GeodesicTables, u: int, v: int, e: tuple[int, int]) -> bool:
    """True when every shortest u-v path uses ``e``."""
    return geodesics_through_edge(t, u, v, e) == t.sigma[u][v]


def edge_monitored_by_deletion(g: Graph, u: int, v: int, e: tuple[int, int]) -> bool:
    """Independent check of :func:`edge_monitored_by`: deleting ``e`` must stretch d(u, v)."""
    before = bfs_distances(g, u)[v]
    after = bfs_distances(g.without_edge(*e), u)[v]
    return after < 0 or after > before


@dataclass(frozen=True)
class CoverageTables:
    """Per-pair coverage bitmaps, keyed by ``(u, v)`` with ``u < v``.

    ``vertex_cover`` holds vertices on some u-v geodesic, ``edge_cover`` edges on
    some u-v geodesic and ``monitor_cover`` edges on every u-v geodesic.
    """

    n: int
    m: int
    vertex_cover: dict[tuple[int, int], int]
    edge_cover: dict[tuple[int, int], int]
    monitor_cover: dict[tuple[int, int], int]

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def all_edges(self) -> int:
        return (1 << self.m) - 1


def coverage_tables(g: Graph, t: GeodesicTables | None = None) -> CoverageTables:
    if t is None:
        t = geodesic_tables(g)
    require_connected(g)
    vcov, ecov, mcov = {}, {}, {}
    dist, sigma = t.dist, t.sigma
    for u, v in combinations(range(g.n), 2):
        du, dv, d, total = dist[u], dist[v], dist[u][v], sigma[u][v]
        vmask = 0
        for x in range(g.n):
            if du[x] + dv[x] == d:
                vmask |= 1 << x
        emask = mmask = 0
        for i, (x, y) in enumerate(g.edges):
            if du[x] + 1 + dv[y] == d:
                through = sigma[u][x] * sigma[y][v]
            elif du[y] + 1 + dv[x] == d:
                through = sigma[u][y] * sigma[x][v]
            else:
                continue
            emask |= 1 << i
            if through == total:
                mmask |= 1 << i
        vcov[u, v], ecov[u, v], mcov[u, v] = vmask, emask, mmask
    return CoverageTables(g.n, g.m, vcov, ecov, mcov)


@dataclass(frozen=True)
class GeodesicList:
    pair: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]
    truncated: bool


def enumerate_geodesics(g: Graph, t: GeodesicTables, u: int, v: int,
                        cap: int = DEFAULT_GEODESIC_CAP) -> GeodesicList:
    """All shortest u-v paths in lexicographic order, at most ``cap`` of them.

    Walks the shortest-path DAG towards ``v``, so only geodesics are generated.
    """
    dv = t.dist[v]
    paths: list[tuple[int, ...]] = []
    truncated = False
    path = [u]
    # stack of iterators over the next admissible steps
    stack = [iter(sorted(q for q in g.adj[u] if dv[q] == dv[u] - 1))]
    if u == v:
        return GeodesicList((u, v), ((u,),), False)
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            path.pop()
            continue
        path.append(nxt)
        if nxt == v:
            if len(paths) == cap:
                truncated = True
                break
            paths.append(tuple(path))
            path.pop()
            continue
        stack.append(iter(sorted(q for q in g.adj[nxt] if dv[q] == dv[nxt] - 1)))
    return GeodesicList((u, v), tuple(paths), truncated)


def path_edge_mask(g: Graph, path) -> int:
    mask = 0
    for a, b in zip(path, path[1:]):
        mask |= 1 << g.edge_id(a, b)
    return mask

"""Exact solvers for the geodetic, edge-geodetic, strong edge-geodetic and
monitoring edge-geodetic numbers.

Each solver enumerates vertex subsets by increasing size, in lexicographic
order, so the returned set is the lexicographically smallest minimum set.
Vertices known to lie in every valid set are pinned, and for monitoring sets
cut vertices are dropped from the candidate pool.  Turning that pruning off
gives a plain brute force that the tests use as an oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import ChainViolation, EnumerationCapExceeded, InvalidParameters
from .geodesics import (
    DEFAULT_GEODESIC_CAP,
    CoverageTables,
    GeodesicTables,
    coverage_tables,
    enumerate_geodesics,
    geodesic_tables,
    path_edge_mask,
)
from .graph import (
    Graph,
    cut_vertices,
    pendant_vertices,
    require_connected,
    simplicial_vertices,
    twin_vertices,
)


class ParamKind(enum.Enum):
    GEODETIC = "g"
    EDGE_GEODETIC = "eg"
    STRONG_EDGE_GEODETIC = "seg"
    MONITORING_EDGE_GEODETIC = "meg"

    @classmethod
    def parse(cls, text: str) -> "ParamKind":
        return cls(text.strip().lower())


KINDS = tuple(ParamKind)


@dataclass(frozen=True)
class SolverConfig:
    use_lemma_pruning: bool = True
    geodesic_cap: int = DEFAULT_GEODESIC_CAP


@dataclass(frozen=True)
class Certificate:
    """An optimal set together with evidence that it is valid.

    ``witness`` depends on the kind: ``None`` for geodetic sets, a map
    edge -> covering pair for edge-geodetic sets, a map pair -> chosen path for
    strong edge-geodetic sets and a map edge -> monitoring pair for MEG-sets.
    """

    kind: ParamKind
    vertices: tuple[int, ...]
    witness: Optional[dict] = None

    @property
    def size(self) -> int:
        return len(self.vertices)


def _pairs(S: Iterable[int]):
    return combinations(sorted(S), 2)


def _union(cover: dict, S) -> int:
    mask = 0
    for p in _pairs(S):
        mask |= cover[p]
    return mask


def is_geodetic_set(ct: CoverageTables, S) -> bool:
    return _union(ct.vertex_cover, S) == ct.all_vertices


def is_edge_geodetic_set(ct: CoverageTables, S) -> bool:
    return _union(ct.edge_cover, S) == ct.all_edges


def is_meg_set(ct: CoverageTables, S) -> bool:
    return _union(ct.monitor_cover, S) == ct.all_edges


class _StrongSearch:
    """Backtracking search for a geodesic-per-pair assignment covering every edge.

    Candidate geodesics are cached per pair, so repeated queries on the same
    graph (as the subset enumeration makes) only enumerate each pair once.
    """

    def __init__(self, g: Graph, t: GeodesicTables, cap: int):
        self.g, self.t, self.cap = g, t, cap
        self.full = (1 << g.m) - 1
        self._cache: dict[tuple[int, int], tuple[tuple, tuple]] = {}

    def options(self, u: int, v: int):
        key = (u, v)
        if key not in self._cache:
            found = enumerate_geodesics(self.g, self.t, u, v, self.cap)
            if found.truncated:
                raise EnumerationCapExceeded(
                    f"more than {self.cap} geodesics between {u} and {v}")
            masks = tuple(path_edge_mask(self.g, p) for p in found.paths)
            self._cache[key] = (found.paths, masks)
        return self._cache[key]

    def solve(self, S) -> Optional[dict[tuple[int, int], tuple[int, ...]]]:
        pairs = sorted(_pairs(S), key=lambda p: (len(self.options(*p)[1]), p))
        opts = [self.options(*p)[1] for p in pairs]
        reach = [0] * (len(pairs) + 1)
        for i in range(len(pairs) - 1, -1, -1):
            acc = 0
            for mask in opts[i]:
                acc |= mask
            reach[i] = reach[i + 1] | acc
        full = self.full
        if reach[0] != full:
            return None

        choice = [0] * len(pairs)
        dead: set[tuple[int, int]] = set()

        def go(i: int, covered: int) -> bool:
            if covered == full:
                return True
            if i == len(pairs) or covered | reach[i] != full or (i, covered) in dead:
                return False
            for j, mask in enumerate(opts[i]):
                choice[i] = j
                if go(i + 1, covered | mask):
                    return True
            dead.add((i, covered))
            return False

        if not go(0, 0):
            return None
        # pairs never reached keep a stale or zero index: any geodesic will do
        return {p: self.options(*p)[0][choice[i]] for i, p in enumerate(pairs)}


def has_strong_assignment(g: Graph, S, t: GeodesicTables | None = None,
                          cap: int = DEFAULT_GEODESIC_CAP):
    """Pick one geodesic per pair of ``S`` so the chosen paths cover every edge.

    Returns the assignment ``{(u, v): path}`` or ``None`` when none exists.
    Raises :class:`EnumerationCapExceeded` if a pair has more than ``cap``
    geodesics, since a truncated search could miss an assignment.
    """
    if t is None:
        t = geodesic_tables(g)
    return _StrongSearch(g, t, cap).solve(S)


def four_cycle_forced(g: Graph) -> frozenset[int]:
    """Vertices ``v`` with a neighbour ``u`` such that every induced 2-path
    ``u v x`` closes into a 4-cycle through a common neighbour of ``u`` and ``x``."""
    forced = set()
    for v in range(g.n):
        nv = g.adj[v]
        for u in sorted(nv):
            nu = g.adj[u]
            if all(x in nu or (nu & g.adj[x]) - {v}
                   for x in nv if x != u):
                forced.add(v)
                break
    return frozenset(forced)


def forced_vertices(g: Graph, kind: ParamKind) -> frozenset[int]:
    """Vertices that belong to every set of the given kind."""
    if kind is ParamKind.GEODETIC:
        return pendant_vertices(g)
    if kind in (ParamKind.EDGE_GEODETIC, ParamKind.STRONG_EDGE_GEODETIC):
        return simplicial_vertices(g)
    return simplicial_vertices(g) | twin_vertices(g) | four_cycle_forced(g)


def excluded_vertices(g: Graph, kind: ParamKind) -> frozenset[int]:
    """Vertices that never appear in a minimal set of the given kind."""
    if kind is ParamKind.MONITORING_EDGE_GEODETIC:
        return cut_vertices(g)
    return frozenset()


class Solver:
    """Shared tables for all four parameters of one graph."""

    def __init__(self, g: Graph, cfg: SolverConfig | None = None):
        require_connected(g)
        if g.n < 2:
            raise InvalidParameters("solvers need at least two vertices")
        self.g = g
        self.cfg = cfg or SolverConfig()
        self.t = geodesic_tables(g)
        self.ct = coverage_tables(g, self.t)
        self.strong = _StrongSearch(g, self.t, self.cfg.geodesic_cap)

    def is_valid(self, kind: ParamKind, S) -> bool:
        if kind is ParamKind.GEODETIC:
            return is_geodetic_set(self.ct, S)
        if kind is ParamKind.EDGE_GEODETIC:
            return is_edge_geodetic_set(self.ct, S)
        if kind is ParamKind.MONITORING_EDGE_GEODETIC:
            return is_meg_set(self.ct, S)
        return is_edge_geodetic_set(self.ct, S) and self.strong.solve(S) is not None

    def _predicate(self, kind: ParamKind):
        ct = self.ct
        if kind is ParamKind.GEODETIC:
            cover, full = ct.vertex_cover, ct.all_vertices
        elif kind is ParamKind.MONITORING_EDGE_GEODETIC:
            cover, full = ct.monitor_cover, ct.all_edges
        else:
            cover, full = ct.edge_cover, ct.all_edges

        def check(S) -> bool:
            return _union(cover, S) == full

        if kind is ParamKind.STRONG_EDGE_GEODETIC:
            return lambda S: check(S) and self.strong.solve(S) is not None
        return check

    def minimum(self, kind: ParamKind, lower_bound: int = 2) -> Certificate:
        g = self.g
        if self.cfg.use_lemma_pruning:
            forced = forced_vertices(g, kind)
            pool = [v for v in range(g.n) if v not in forced and v not in excluded_vertices(g, kind)]
        else:
            forced, pool, lower_bound = frozenset(), list(range(g.n)), 2
        check = self._predicate(kind)
        pinned = tuple(sorted(forced))
        for k in range(max(2, len(forced), lower_bound), g.n + 1):
            for extra in combinations(pool, k - len(pinned)):
                S = tuple(sorted(pinned + extra))
                if check(S):
                    return Certificate(kind, S, self.witness(kind, S))
        raise RuntimeError(f"no {kind.value} set found; candidate pool is inconsistent")

    def witness(self, kind: ParamKind, S):
        ct, edges = self.ct, self.g.edges
        if kind is ParamKind.GEODETIC:
            return None
        if kind is ParamKind.STRONG_EDGE_GEODETIC:
            return self.strong.solve(S)
        cover = ct.edge_cover if kind is ParamKind.EDGE_GEODETIC else ct.monitor_cover
        out = {}
        for p in _pairs(S):
            mask = cover[p]
            for i, e in enumerate(edges):
                if mask >> i & 1 and e not in out:
                    out[e] = p
        return out

    def quadruple(self) -> "Profile":
        certs = {}
        lower = 2
        for kind in KINDS:
            cert = self.minimum(kind, lower)
            certs[kind] = cert
            lower = cert.size
        prof = Profile(certs)
        if not (prof.g <= prof.eg <= prof.seg <= prof.meg):
            raise ChainViolation(f"chain violated: {prof.values}")
        return prof


@dataclass(frozen=True)
class Profile:
    """The four parameters of one graph with their certificates."""

    certificates: dict[ParamKind, Certificate] = field(default_factory=dict)

    @property
    def g(self) -> int:
        return self.certificates[ParamKind.GEODETIC].size

    @property
    def eg(self) -> int:
        return self.certificates[ParamKind.EDGE_GEODETIC].size

    @property
    def seg(self) -> int:
        return self.certificates[ParamKind.STRONG_EDGE_GEODETIC].size

    @property
    def meg(self) -> int:
        return self.certificates[ParamKind.MONITORING_EDGE_GEODETIC].size

    @property
    def values(self) -> tuple[int, int, int, int]:
        return self.g, self.eg, self.seg, self.meg


def minimum(g: Graph, kind: ParamKind, cfg: SolverConfig | None = None) -> Certificate:
    return Solver(g, cfg).minimum(kind)


def quadruple(g: Graph, cfg: SolverConfig | None = None) -> Profile:
    """Compute ``(g, eg, seg, meg)`` with certificates, sharing one set of tables.

    >>> from geomon.graph import cycle_graph
    >>> quadruple(cycle_graph(4)).values
    (2, 2, 3, 4)
    """
    return Solver(g, cfg).quadruple()


def check_certificate(g: Graph, cert: Certificate, ct: CoverageTables | None = None,
                      t: GeodesicTables | None = None) -> bool:
    """Re-validate a certificate's set and witness from scratch."""
    t = t or geodesic_tables(g)
    ct = ct or coverage_tables(g, t)
    S = set(cert.vertices)
    kind = cert.kind
    if kind is ParamKind.GEODETIC:
        return is_geodetic_set(ct, S)
    if kind is ParamKind.STRONG_EDGE_GEODETIC:
        assignment = cert.witness or {}
        if set(assignment) != set(_pairs(S)):
            return False
        covered = 0
        for (u, v), path in assignment.items():
            if path[0] != u or path[-1] != v or len(path) != t.dist[u][v] + 1:
                return False
            if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
                return False
            covered |= path_edge_mask(g, path)
        return covered == ct.all_edges
    cover = ct.edge_cover if kind is ParamKind.EDGE_GEODETIC else ct.monitor_cover
    witness = cert.witness or {}
    if set(witness) != set(g.edges):
        return False
    for e, (u, v) in witness.items():
        if u not in S or v not in S or not cover[min(u, v), max(u, v)] >> g.edge_id(*e) & 1:
            return False
    return True

"""Shared test helpers.  ``nx_params`` recomputes the four parameters with
networkx path listings and plain subset search, sharing no code with geomon."""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx

from geomon.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _geodesics(h):
    out = {}
    for u, v in combinations(sorted(h.nodes), 2):
        paths = list(nx.all_shortest_paths(h, u, v))
        out[u, v] = [frozenset(frozenset(e) for e in zip(p, p[1:])) for p in paths], paths
    return out


def nx_params(g: Graph) -> tuple[int, int, int, int]:
    h = to_nx(g)
    geo = _geodesics(h)
    verts = set(h.nodes)
    edges = {frozenset(e) for e in h.edges}

    def g_ok(S):
        seen = set()
        for p in combinations(sorted(S), 2):
            for path in geo[p][1]:
                seen.update(path)
        return seen == verts

    def eg_ok(S):
        seen = set()
        for p in combinations(sorted(S), 2):
            for es in geo[p][0]:
                seen |= es
        return seen == edges

    def seg_ok(S):
        pairs = list(combinations(sorted(S), 2))
        for choice in product(*(geo[p][0] for p in pairs)):
            if set().union(*choice) == edges:
                return True
        return False

    def meg_ok(S):
        seen = set()
        for p in combinations(sorted(S), 2):
            seen |= frozenset.intersection(*geo[p][0])
        return seen == edges

    def smallest(ok):
        for k in range(2, g.n + 1):
            if any(ok(S) for S in combinations(range(g.n), k)):
                return k

    return smallest(g_ok), smallest(eg_ok), smallest(seg_ok), smallest(meg_ok)

"""Batch verification: quadruple sweeps, small-graph enumeration, random graphs
and per-graph checks of the structural lemmas.

The lemma checks never trust the solvers' shortcuts.  A vertex ``v`` counts as
forced for a kind when ``V - {v}`` is not a set of that kind (all four
properties are closed under supersets, so this is exact).
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .constructions import (
    Feasibility,
    Quadruple,
    feasibility,
    realize,
)
from .errors import InfeasibleQuadruple, RangeTooLarge
from .geodesics import enumerate_geodesics, path_edge_mask
from .graph import (
    Graph,
    cut_vertices,
    from_edges,
    is_connected,
    simplicial_vertices,
    twin_vertices,
)
from .solvers import (
    ParamKind,
    Solver,
    SolverConfig,
    four_cycle_forced,
    is_meg_set,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyRecord:
    """Outcome of checking one quadruple against its construction."""

    quadruple: Quadruple
    status: Feasibility
    passed: bool
    size: Optional[int] = None
    solved: Optional[tuple[int, int, int, int]] = None
    family: Optional[str] = None
    seconds: float = 0.0
    cause: Optional[str] = None

    @property
    def rejected(self) -> bool:
        return self.status is not Feasibility.FEASIBLE


def verify_quadruple(q, cfg: SolverConfig | None = None) -> VerifyRecord:
    """Build ``q`` and compare the exact parameters with ``q``.

    Infeasible quadruples pass when :func:`realize` rejects them.  Solver errors
    become failures carrying their message.
    """
    q = Quadruple(*q)
    status = feasibility(q)
    start = time.perf_counter()
    try:
        g, plan = realize(q)
    except InfeasibleQuadruple as exc:
        return VerifyRecord(q, status, exc.status is status and status is not Feasibility.FEASIBLE,
                            seconds=time.perf_counter() - start, cause=status.reason)
    try:
        solved = Solver(g, cfg).quadruple().values
    except Exception as exc:  # recorded, not raised
        return VerifyRecord(q, status, False, g.n, None, plan.family.value,
                            time.perf_counter() - start, f"{type(exc).__name__}: {exc}")
    ok = solved == tuple(q)
    return VerifyRecord(q, status, ok, g.n, solved, plan.family.value,
                        time.perf_counter() - start, None if ok else f"solver gave {solved}")


def admissible_quadruples(max_d: int) -> list[Quadruple]:
    """All ``2 <= a <= b <= c <= d <= max_d``, ordered by ``d`` and then lexicographically."""
    out = []
    for d in range(2, max_d + 1):
        for a in range(2, d + 1):
            for b in range(a, d + 1):
                for c in range(b, d + 1):
                    out.append(Quadruple(a, b, c, d))
    return out


@dataclass
class SweepReport:
    max_d: int
    entries: list[VerifyRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(e.passed and not e.rejected for e in self.entries)
        rejected = sum(e.passed and e.rejected for e in self.entries)
        return {
            "total": len(self.entries),
            "passed": passed,
            "rejected": rejected,
            "failed": len(self.entries) - passed - rejected,
        }

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0


def sweep(max_d: int, cfg: SolverConfig | None = None, progress=None) -> SweepReport:
    """Verify every admissible quadruple with ``d <= max_d``.

    ``progress`` is called with each record as it is produced.

    >>> [e.quadruple for e in sweep(3).entries if not e.rejected]
    [Quadruple(a=2, b=2, c=2, d=2), Quadruple(a=2, b=2, c=3, d=3), Quadruple(a=3, b=3, c=3, d=3)]
    """
    if max_d < 2:
        raise RangeTooLarge(f"max_d must be at least 2, got {max_d}")
    report = SweepReport(max_d)
    for q in admissible_quadruples(max_d):
        rec = verify_quadruple(q, cfg)
        report.entries.append(rec)
        if progress is not None:
            progress(rec)
    return report


# small graph universes

MAX_ENUMERATION_ORDER = 7


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices, exactly once."""
    if not 2 <= n <= MAX_ENUMERATION_ORDER:
        raise RangeTooLarge(f"enumeration supports 2 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = from_edges(n, edges)
        if is_connected(g):
            yield g


def connected_graph_count(n: int) -> int:
    """Number of connected labelled graphs on ``n`` vertices, by the standard
    recurrence (root the component containing vertex 0)."""
    counts = [0, 1]
    for k in range(2, n + 1):
        total = 2 ** comb(k, 2)
        total -= sum(comb(k - 1, j - 1) * counts[j] * 2 ** comb(k - j, 2) for j in range(1, k))
        counts.append(total)
    return counts[n]


@dataclass(frozen=True)
class RandomSample:
    """Seeded Erdos-Renyi graphs, redrawn until connected.

    Each graph's order is uniform in ``[n_min, n_max]``; ``p`` is the edge
    probability and ``draws`` the number of graphs generated in total.
    """

    seed: int
    count: int
    n_min: int
    n_max: int
    p: float
    draws: int
    graphs: tuple[Graph, ...]

    @property
    def params(self) -> dict:
        return {"seed": self.seed, "count": self.count, "n_min": self.n_min,
                "n_max": self.n_max, "p": self.p, "draws": self.draws}


def random_connected_graph(n: int, p: float, rng: random.Random) -> tuple[Graph, int]:
    """One connected G(n, p) sample and the number of draws it took."""
    pairs = list(combinations(range(n), 2))
    draws = 0
    while True:
        draws += 1
        g = from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g, draws


def random_connected_graphs(count: int, n_min: int, n_max: int, p: float = 0.4,
                            seed: int = 0) -> RandomSample:
    rng = random.Random(seed)
    graphs, draws = [], 0
    for _ in range(count):
        g, k = random_connected_graph(rng.randint(n_min, n_max), p, rng)
        graphs.append(g)
        draws += k
    sample = RandomSample(seed, count, n_min, n_max, p, draws, tuple(graphs))
    log.info("random sample %s", sample.params)
    return sample


# lemma checks

LEMMA_IDS = ("L2.1", "L2.2", "L2.3", "P2.4", "T2.5", "L3.1", "L3.2", "C3.1")


class _Oracle:
    """Direct evaluation of the set properties for one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.solver = Solver(g, SolverConfig(use_lemma_pruning=False))
        self.ct = self.solver.ct
        self.everything = frozenset(range(g.n))

    def forced(self, kind: ParamKind, v: int) -> bool:
        return not self.solver.is_valid(kind, sorted(self.everything - {v}))

    def meg_sets(self):
        for k in range(2, self.g.n + 1):
            for S in combinations(range(self.g.n), k):
                if is_meg_set(self.ct, S):
                    yield S


def _unavoidable(g: Graph, t, S, e_index: int) -> bool:
    """Some pair of ``S`` has every geodesic through edge ``e_index`` (checked
    by listing the geodesics, not by counting them)."""
    bit = 1 << e_index
    for u, v in combinations(sorted(S), 2):
        paths = enumerate_geodesics(g, t, u, v).paths
        if all(path_edge_mask(g, p) & bit for p in paths):
            return True
    return False


def _check_l21(o: _Oracle) -> bool:
    # removing a cut vertex from any MEG-set leaves a MEG-set
    cuts = cut_vertices(o.g)
    if not cuts:
        return True
    for S in o.meg_sets():
        for v in cuts & set(S):
            if not is_meg_set(o.ct, [x for x in S if x != v]):
                return False
    return True


def _check_l22(o: _Oracle) -> bool:
    return all(o.forced(ParamKind.EDGE_GEODETIC, v) and o.forced(ParamKind.MONITORING_EDGE_GEODETIC, v)
               for v in simplicial_vertices(o.g))


def _check_l23(o: _Oracle) -> bool:
    return all(o.forced(ParamKind.MONITORING_EDGE_GEODETIC, v) for v in twin_vertices(o.g))


def _check_p24(o: _Oracle, max_subsets: int = 256) -> bool:
    # is_meg_set(S) iff every edge is unavoidable for some pair of S
    g = o.g
    t = o.solver.t
    subsets = [S for k in range(2, g.n + 1) for S in combinations(range(g.n), k)]
    if len(subsets) > max_subsets:
        rng = random.Random(g.n * 1009 + g.m)
        subsets = rng.sample(subsets, max_subsets)
    for S in subsets:
        strong_for_all = all(_unavoidable(g, t, S, i) for i in range(g.m))
        if strong_for_all != is_meg_set(o.ct, S):
            return False
    return True


def _check_t25(o: _Oracle) -> bool:
    criterion = four_cycle_forced(o.g)
    return all((v in criterion) == o.forced(ParamKind.MONITORING_EDGE_GEODETIC, v)
               for v in range(o.g.n))


def _check_l31(o: _Oracle) -> bool:
    return all(o.forced(ParamKind.STRONG_EDGE_GEODETIC, v)
               for v in range(o.g.n) if o.forced(ParamKind.EDGE_GEODETIC, v))


def _check_l32(o: _Oracle) -> bool:
    return all(o.forced(ParamKind.MONITORING_EDGE_GEODETIC, v)
               for v in range(o.g.n) if o.forced(ParamKind.STRONG_EDGE_GEODETIC, v))


def _check_c31(o: _Oracle) -> bool:
    return all(o.forced(ParamKind.MONITORING_EDGE_GEODETIC, v)
               for v in range(o.g.n) if o.forced(ParamKind.EDGE_GEODETIC, v))


_CHECKS = {
    "L2.1": _check_l21,
    "L2.2": _check_l22,
    "L2.3": _check_l23,
    "P2.4": _check_p24,
    "T2.5": _check_t25,
    "L3.1": _check_l31,
    "L3.2": _check_l32,
    "C3.1": _check_c31,
}

LEMMA_NAMES = {
    "L2.1": "cut vertices are never in a minimal MEG-set",
    "L2.2": "simplicial vertices are in every edge-geodetic set and MEG-set",
    "L2.3": "twins of positive degree are in every MEG-set",
    "P2.4": "MEG-sets are exactly the sets strong under every path choice",
    "T2.5": "four-cycle criterion characterizes MEG-forced vertices",
    "L3.1": "eg-forced vertices are seg-forced",
    "L3.2": "seg-forced vertices are meg-forced",
    "C3.1": "eg-forced vertices are meg-forced",
}


def lemma_suite(g: Graph) -> list[tuple[str, bool]]:
    """Evaluate every structural claim on ``g``; returns ``(id, passed)`` pairs.

    >>> from geomon.graph import cycle_graph
    >>> all(ok for _, ok in lemma_suite(cycle_graph(4)))
    True
    """
    o = _Oracle(g)
    return [(lid, _CHECKS[lid](o)) for lid in LEMMA_IDS]


def chain_holds(g: Graph, cfg: SolverConfig | None = None) -> tuple[bool, tuple[int, int, int, int]]:
    """Compute all four parameters independently and test ``g <= eg <= seg <= meg``."""
    s = Solver(g, cfg)
    values = tuple(s.minimum(kind).size for kind in ParamKind)
    return list(values) == sorted(values), values

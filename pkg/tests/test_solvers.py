import pytest
from hypothesis import given, settings

from geomon.errors import EnumerationCapExceeded, InvalidParameters
from geomon.geodesics import coverage_tables
from geomon.graph import complete_graph, cycle_graph, from_edges, path_graph, star_graph
from geomon.harness import enumerate_connected_graphs
from geomon.solvers import (
    Certificate,
    ParamKind,
    Solver,
    SolverConfig,
    check_certificate,
    excluded_vertices,
    forced_vertices,
    four_cycle_forced,
    has_strong_assignment,
    is_meg_set,
    minimum,
    quadruple,
)

from conftest import nx_params
from test_graph import connected_graphs

BRUTE = SolverConfig(use_lemma_pruning=False)


@pytest.mark.parametrize("g, expected", [
    (cycle_graph(4), (2, 2, 3, 4)),
    (complete_graph(4), (4, 4, 4, 4)),
    (star_graph(3), (3, 3, 3, 3)),
    (path_graph(2), (2, 2, 2, 2)),
    (path_graph(6), (2, 2, 2, 2)),
    (cycle_graph(5), (3, 3, 3, 3)),
    (cycle_graph(6), (2, 2, 3, 3)),
])
def test_known_values(g, expected):
    assert quadruple(g).values == expected
    assert quadruple(g, BRUTE).values == expected


def test_param_kind_parse():
    assert ParamKind.parse(" MEG ") is ParamKind.MONITORING_EDGE_GEODETIC
    with pytest.raises(ValueError):
        ParamKind.parse("xyz")


def test_single_vertex_rejected():
    with pytest.raises(InvalidParameters):
        Solver(from_edges(1, []))


def test_lexicographically_smallest_optimum():
    # on C_6 every antipodal pair is geodetic; the first one is returned
    assert minimum(cycle_graph(6), ParamKind.GEODETIC).vertices == (0, 3)


def test_forced_and_excluded_sets():
    g = path_graph(4)
    assert forced_vertices(g, ParamKind.GEODETIC) == {0, 3}
    assert excluded_vertices(g, ParamKind.MONITORING_EDGE_GEODETIC) == {1, 2}
    assert excluded_vertices(g, ParamKind.EDGE_GEODETIC) == frozenset()
    assert four_cycle_forced(cycle_graph(4)) == {0, 1, 2, 3}
    assert four_cycle_forced(cycle_graph(5)) == frozenset()


def test_strong_assignment_needs_cap():
    g = cycle_graph(4)
    with pytest.raises(EnumerationCapExceeded):
        has_strong_assignment(g, (0, 2), cap=1)
    with pytest.raises(EnumerationCapExceeded):
        Solver(g, SolverConfig(geodesic_cap=1)).minimum(ParamKind.STRONG_EDGE_GEODETIC)


def test_strong_assignment_on_c4():
    g = cycle_graph(4)
    assert has_strong_assignment(g, (0, 2)) is None
    found = has_strong_assignment(g, (0, 1, 2))
    assert set(found) == {(0, 1), (0, 2), (1, 2)}


def test_certificates_validate_and_tampering_is_caught():
    g = cycle_graph(6)
    prof = quadruple(g)
    for cert in prof.certificates.values():
        assert check_certificate(g, cert)
    seg = prof.certificates[ParamKind.STRONG_EDGE_GEODETIC]
    pair = next(iter(seg.witness))
    bad = dict(seg.witness)
    bad[pair] = bad[pair][:-1]
    assert not check_certificate(g, Certificate(seg.kind, seg.vertices, bad))
    meg = prof.certificates[ParamKind.MONITORING_EDGE_GEODETIC]
    short = Certificate(meg.kind, meg.vertices[:-1], meg.witness)
    assert not check_certificate(g, short)


def test_meg_set_predicate_on_c4():
    ct = coverage_tables(cycle_graph(4))
    assert not is_meg_set(ct, (0, 1, 2))
    assert is_meg_set(ct, (0, 1, 2, 3))


def test_pruning_neutral_on_all_graphs_up_to_4():
    for n in (2, 3, 4):
        for g in enumerate_connected_graphs(n):
            fast, slow = Solver(g), Solver(g, BRUTE)
            for kind in ParamKind:
                assert fast.minimum(kind).vertices == slow.minimum(kind).vertices


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=6))
def test_solver_matches_networkx_oracle(g):
    assert quadruple(g).values == nx_params(g)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geomon.constructions import (
    Family,
    Feasibility,
    Quadruple,
    build_23cc,
    build_23cd,
    build_23cd_twinned,
    build_2bcd,
    build_abcd,
    feasibility,
    order_23cd,
    realize,
)
from geomon.errors import InfeasibleQuadruple, InvalidParameters
from geomon.graph import is_clique, is_connected, twin_pairs
from geomon.harness import admissible_quadruples
from geomon.solvers import quadruple


def solved(built):
    return quadruple(built[0]).values


@pytest.mark.parametrize("q, status", [
    ((2, 2, 2, 5), Feasibility.INFEASIBLE_222),
    ((2, 3, 3, 4), Feasibility.INFEASIBLE_233),
    ((2, 3, 3, 3), Feasibility.INFEASIBLE_233),
    ((3, 4, 5, 6), Feasibility.FEASIBLE),
    ((2, 2, 2, 2), Feasibility.FEASIBLE),
    ((3, 2, 4, 5), Feasibility.INVALID_ORDER),
    ((1, 2, 3, 4), Feasibility.INVALID_ORDER),
])
def test_feasibility(q, status):
    assert feasibility(q) is status


@given(st.tuples(*[st.integers(-3, 9)] * 4))
def test_feasibility_is_total(q):
    status = feasibility(q)
    assert (status is Feasibility.INVALID_ORDER) == (not Quadruple(*q).admissible)


def test_realize_rejects_with_status():
    with pytest.raises(InfeasibleQuadruple) as info:
        realize((2, 3, 3, 5))
    assert info.value.status is Feasibility.INFEASIBLE_233
    with pytest.raises(InfeasibleQuadruple):
        realize((4, 3, 5, 6))


@pytest.mark.parametrize("q, family", [
    ((2, 2, 2, 2), Family.PATH),
    ((2, 3, 4, 9), Family.F23CD),
    ((2, 3, 6, 6), Family.F23CC),
    ((2, 3, 5, 8), Family.F23CD_TWINNED),
    ((2, 2, 5, 6), Family.F2BCD),
    ((2, 4, 4, 4), Family.F2BCD),
    ((5, 5, 5, 5), Family.FABCD),
])
def test_realize_dispatch(q, family):
    g, plan = realize(q)
    assert plan.family is family and plan.quadruple == q
    assert is_connected(g)


def test_path_family():
    g, _ = realize((2, 2, 2, 2))
    assert (g.n, g.m) == (2, 1)


def test_rows_for_4_4():
    g, plan = build_23cd(4, 4)
    assert plan.r == 0 and plan.twins == ()
    assert solved((g, plan)) == (2, 3, 4, 4)


def test_rows_for_4_5_have_one_twin_pair():
    g, plan = build_23cd(4, 5)
    assert plan.r == 2
    assert [(g.label(u), g.label(v)) for u, v in plan.twins] == [("v_0,1", "v'_0,1")]
    assert solved((g, plan)) == (2, 3, 4, 5)


def test_rows_for_5_7():
    g, plan = build_23cd(5, 7)
    assert plan.r == 2
    assert {g.label(t) for _, t in plan.twins} == {"v'_0,1", "v'_1,1"}
    assert solved((g, plan)) == (2, 3, 5, 7)


@pytest.mark.parametrize("d", range(4, 10))
def test_rows_realize_c4(d):
    assert solved(build_23cd(4, d)) == (2, 3, 4, d)


def test_rows_undershoot_once_c_reaches_5():
    # the reason realize() switches families for c >= 5
    assert solved(build_23cd(5, 5)) == (2, 3, 4, 5)
    assert solved(build_23cd(6, 6)) == (2, 3, 5, 6)


@pytest.mark.parametrize("c", range(5, 9))
def test_hub_family(c):
    g, plan = build_23cc(c)
    assert g.n == plan.expected_order == c + 3
    assert len(plan.classes["H"]) == c - 4
    assert solved((g, plan)) == (2, 3, c, c)


@pytest.mark.parametrize("c, d", [(5, 6), (5, 7), (5, 8), (5, 9), (5, 10), (6, 7), (6, 8),
                                  (6, 9), (6, 10), (6, 11), (7, 8), (7, 10)])
def test_twinned_rows(c, d):
    assert solved(build_23cd_twinned(c, d)) == (2, 3, c, d)


def test_2bcd_examples():
    assert solved(build_2bcd(4, 4, 4)) == (2, 4, 4, 4)
    assert solved(build_2bcd(2, 3, 3)) == (2, 2, 3, 3)
    g, plan = build_2bcd(4, 5, 7)
    assert plan.r == 3
    assert len(plan.twins) == 1
    assert solved((g, plan)) == (2, 4, 5, 7)


def test_2bcd_b2_has_no_spokes():
    g, plan = build_2bcd(2, 4, 4)
    assert "W" not in plan.classes and len(plan.classes["V"]) == 3


def test_abcd_3333_is_c5_with_pendant():
    g, plan = build_abcd(3, 3, 3, 3)
    assert [g.label(v) for v in range(g.n)] == ["x", "y", "w_1", "z", "v_1", "x_1"]
    core = g.without_vertex(5)
    assert core.m == 5 and all(core.degree(v) == 2 for v in range(5)) and is_connected(core)
    assert g.adj[5] == {g.vertex("x")}
    assert solved((g, plan)) == (3, 3, 3, 3)


def test_abcd_4567():
    g, plan = build_abcd(4, 5, 6, 7)
    labels = lambda cls: sorted(g.label(v) for v in plan.classes.get(cls, ()))  # noqa: E731
    assert labels("U") == ["u_1"]
    assert labels("W") == ["w_2", "w_3"]
    assert is_clique(g, [g.vertex(x) for x in ("w_1", "w_2", "w_3")])
    assert labels("V") == ["v_2"]
    assert plan.r == 4
    # odd d - c: the last stretch is doubled into a 6-cycle
    assert g.has_edge(g.vertex("x_1"), g.vertex("x'_2"))
    assert g.has_edge(g.vertex("x'_3"), g.vertex("x_4"))
    assert solved((g, plan)) == (4, 5, 6, 7)


def test_abcd_3455_has_no_twins():
    g, plan = build_abcd(3, 4, 5, 5)
    assert plan.r == 1 and plan.twins == ()
    assert solved((g, plan)) == (3, 4, 5, 5)


@pytest.mark.parametrize("call", [
    lambda: build_23cd(3, 5),
    lambda: build_23cd(5, 4),
    lambda: build_23cc(4),
    lambda: build_23cd_twinned(5, 5),
    lambda: build_2bcd(3, 4, 5),
    lambda: build_2bcd(2, 2, 3),
    lambda: build_abcd(2, 3, 4, 5),
    lambda: build_abcd(3, 3, 3, 2.0),
    lambda: build_abcd(3, 3, 3, True),
])
def test_bad_parameters(call):
    with pytest.raises(InvalidParameters):
        call()


def test_builders_are_deterministic():
    for q in [(2, 3, 5, 9), (2, 4, 6, 9), (4, 5, 6, 9), (2, 3, 6, 6), (2, 3, 4, 8)]:
        g1, p1 = realize(q)
        g2, p2 = realize(q)
        assert g1 == g2 and p1 == p2


FEASIBLE_UP_TO_7 = [q for q in admissible_quadruples(7) if feasibility(q) is Feasibility.FEASIBLE]


@pytest.mark.parametrize("q", FEASIBLE_UP_TO_7, ids=str)
def test_plan_is_coherent(q):
    g, plan = realize(q)
    members = sorted(v for vs in plan.classes.values() for v in vs)
    assert members == list(range(g.n))
    assert g.n == plan.expected_order
    pairs = {(p.u, p.v) for p in twin_pairs(g)}
    for u, v in plan.twins:
        assert (min(u, v), max(u, v)) in pairs
    for cls in plan.cliques:
        assert is_clique(g, plan.classes[cls])
    for cls in plan.pendants:
        assert all(g.degree(v) == 1 for v in plan.classes.get(cls, ()))


@pytest.mark.parametrize("q", FEASIBLE_UP_TO_7, ids=str)
def test_realization_is_exact(q):
    assert solved(realize(q)) == q


@pytest.mark.parametrize("c, d", [(4, 4), (4, 9), (5, 5), (5, 12), (7, 10), (8, 8)])
def test_row_order_formula(c, d):
    g, plan = build_23cd(c, d)
    assert g.n == order_23cd(c, d) == plan.expected_order
    assert g.n <= (c - 2) * (plan.r + 5) + plan.r + 3

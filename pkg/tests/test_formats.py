import json

import jsonschema
import pytest

from geomon.constructions import Feasibility, build_abcd, feasibility, realize
from geomon.errors import HeaderMismatch, ParseError
from geomon.formats import (
    certificates_from_document,
    construction_document,
    export_dot,
    export_edge_list,
    graph_from_doc,
    load_schema,
    parse_edge_list,
    result_document,
    revalidate_document,
    sweep_document,
    validate,
)
from geomon.graph import cycle_graph, path_graph
from geomon.harness import admissible_quadruples, sweep
from geomon.solvers import quadruple


def label_edges(g):
    return {frozenset((g.label(u), g.label(v))) for u, v in g.edges}


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.edges == ((0, 1), (1, 2))
    assert g.labels == ("0", "1", "2")


def test_parse_c4_with_header():
    g = parse_edge_list("p geg 4 4\n0 1\n1 2\n2 3\n3 0")
    assert (g.n, g.m) == (4, 4)
    assert quadruple(g).values == (2, 2, 3, 4)


def test_labels_in_first_appearance_order():
    g = parse_edge_list("# a comment\n\nzeta alpha  # trailing\nalpha beta\n")
    assert g.labels == ("zeta", "alpha", "beta")


@pytest.mark.parametrize("text, line, cls", [
    ("a b\nb b", 2, ParseError),
    ("a b c", 1, ParseError),
    ("a b\nb a", 2, ParseError),
    ("p geg 3 1\na b", 1, HeaderMismatch),
    ("p geg x 1\na b", 1, ParseError),
    ("a b\np geg 2 1", 2, ParseError),
    ("p geg 2 1\np geg 2 1\na b", 2, ParseError),
    ("p foo 2 1\na b", 1, ParseError),
])
def test_parse_errors_carry_line(text, line, cls):
    with pytest.raises(cls) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_self_loop_message():
    with pytest.raises(ParseError, match="line 2: self-loop"):
        parse_edge_list("a b\nb b")


FEASIBLE = [q for q in admissible_quadruples(6) if feasibility(q) is Feasibility.FEASIBLE]


@pytest.mark.parametrize("q", FEASIBLE, ids=str)
def test_round_trip_preserves_labels_and_edges(q):
    g, _ = realize(q)
    back = parse_edge_list(export_edge_list(g))
    assert set(back.labels) == set(g.labels)
    assert label_edges(back) == label_edges(g)
    assert parse_edge_list(export_edge_list(g, header=False)).m == g.m


def test_dot_for_p2():
    text = export_dot(path_graph(2))
    assert text.count("--") == 1 and text.startswith("graph G {")


def test_dot_for_3333_names_vertices():
    g, plan = build_abcd(3, 3, 3, 3)
    text = export_dot(g, plan)
    for name in ("x", "y", "w_1", "z", "v_1", "x_1"):
        assert f'"{name}" [' in text
    assert text.count(" -- ") == 6


def test_dot_styles_classes_and_is_deterministic():
    g, plan = realize((4, 5, 6, 7))
    text = export_dot(g, plan)
    assert text == export_dot(*realize((4, 5, 6, 7)))
    assert '"u_1" [class="U", shape=diamond' in text
    assert '"w_2" [class="W", style=filled' in text
    assert '"x\'_2" [class="X", shape=box' in text


def test_dot_without_plan_is_unstyled():
    text = export_dot(cycle_graph(4))
    assert "[" not in text and text.count(";") == 8


def test_result_document_validates_and_revalidates():
    g = parse_edge_list("a b\nb c\nc d\nd a\na e")
    prof = quadruple(g)
    doc = result_document(g, prof.certificates, 0.01)
    validate(doc, "result")
    doc = json.loads(json.dumps(doc))
    assert revalidate_document(doc) == {"g": True, "eg": True, "seg": True, "meg": True}
    g2, certs = certificates_from_document(doc)
    assert g2 == g
    assert {k: c.vertices for k, c in certs.items()} == \
        {k: c.vertices for k, c in prof.certificates.items()}


def test_tampered_document_fails_revalidation():
    g = cycle_graph(4).relabel("abcd")
    doc = json.loads(json.dumps(result_document(g, quadruple(g).certificates, 0.0)))
    doc["certificates"]["meg"]["vertices"] = ["a", "b", "c"]
    doc["certificates"]["meg"]["size"] = 3
    doc["parameters"]["meg"] = 3
    assert revalidate_document(doc)["meg"] is False


def test_schema_rejects_malformed_documents():
    g = cycle_graph(4)
    doc = result_document(g, quadruple(g).certificates, 0.0)
    doc["parameters"]["xyz"] = 3
    with pytest.raises(jsonschema.ValidationError):
        validate(doc, "result")


def test_construction_and_sweep_documents_validate():
    g, plan = realize((2, 3, 5, 5))
    doc = construction_document(g, plan, (2, 3, 5, 5))
    validate(doc, "construction")
    assert graph_from_doc(doc["graph"]) == g
    validate(sweep_document(sweep(3)), "sweep")


@pytest.mark.parametrize("name", ["result", "sweep", "construction"])
def test_schemas_are_valid_json_schema(name):
    jsonschema.Draft202012Validator.check_schema(load_schema(name))

"""Edge-list text, DOT output and JSON documents.

Edge lists are line oriented::

    # optional comments
    p geg 4 4
    a b
    b c

The ``p geg <n> <m>`` header is optional; when present it must agree with
the parsed content.  Vertex tokens become labels, numbered densely in order
of first appearance.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Optional

import jsonschema

from . import __version__
from .constructions import ConstructionPlan
from .errors import HeaderMismatch, ParseError
from .graph import Graph, from_edges
from .harness import SweepReport
from .solvers import Certificate, ParamKind, Profile, check_certificate


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document.

    >>> g = parse_edge_list("p geg 4 4\\n0 1\\n1 2\\n2 3\\n3 0")
    >>> g.n, g.m
    (4, 4)
    """
    index: dict[str, int] = {}
    edges: dict[tuple[int, int], int] = {}
    header: Optional[tuple[int, int, int]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("second header line", lineno)
            if edges:
                raise ParseError("header must precede the edges", lineno)
            if len(tokens) != 4 or tokens[1] != "geg":
                raise ParseError(f"malformed header {line!r}, expected 'p geg <n> <m>'", lineno)
            try:
                header = (int(tokens[2]), int(tokens[3]), lineno)
            except ValueError:
                raise ParseError(f"non-integer counts in header {line!r}", lineno) from None
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex tokens, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise ParseError(f"self-loop at {a}", lineno)
        u = index.setdefault(a, len(index))
        v = index.setdefault(b, len(index))
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge {a} {b} (first on line {edges[key]})", lineno)
        edges[key] = lineno
    if header is not None:
        n, m, lineno = header
        if (n, m) != (len(index), len(edges)):
            raise HeaderMismatch(
                f"header says n={n} m={m}, content has n={len(index)} m={len(edges)}", lineno)
    return from_edges(len(index), edges, list(index))


def export_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"p geg {g.n} {g.m}"] if header else []
    lines += [f"{g.label(u)} {g.label(v)}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# DOT

_STYLES = {
    "W": 'style=filled, fillcolor="#9ecae1"',
    "W'": 'style=filled, fillcolor="#9ecae1"',
    "X": 'shape=box, style=filled, fillcolor="#fdd0a2"',
    "X'": 'shape=box, style=filled, fillcolor="#fdae6b"',
    "U'": 'shape=box, style=filled, fillcolor="#fdd0a2"',
    "Y'": 'shape=box, style=filled, fillcolor="#fdd0a2"',
    "H": 'shape=box, style=filled, fillcolor="#fdd0a2"',
    "U": 'shape=diamond, style=filled, fillcolor="#a1d99b"',
    "V": 'style=filled, fillcolor="#dadaeb"',
}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, plan: ConstructionPlan | None = None, name: str = "G") -> str:
    """Render ``g`` as an undirected DOT graph, styling vertex classes of ``plan``.

    >>> from geomon.graph import path_graph
    >>> print(export_dot(path_graph(2)), end="")
    graph G {
      "0";
      "1";
      "0" -- "1";
    }
    """
    lines = [f"graph {_quote(name) if not name.isidentifier() else name} {{"]
    for v in range(g.n):
        attrs = []
        if plan is not None:
            cls = plan.class_of(v)
            attrs.append(f"class={_quote(cls)}")
            if cls in _STYLES:
                attrs.append(_STYLES[cls])
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(g.label(v))}{suffix};")
    for u, v in g.edges:
        lines.append(f"  {_quote(g.label(u))} -- {_quote(g.label(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# JSON documents

def load_schema(name: str) -> dict:
    """One of the shipped schemas: ``"result"``, ``"sweep"`` or ``"construction"``."""
    text = resources.files("geomon").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(doc: dict, name: str) -> None:
    """Raise ``jsonschema.ValidationError`` unless ``doc`` matches schema ``name``."""
    jsonschema.validate(doc, load_schema(name))


def _graph_doc(g: Graph) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "labels": [g.label(v) for v in range(g.n)],
        "edges": [[g.label(u), g.label(v)] for u, v in g.edges],
    }


def graph_from_doc(doc: dict) -> Graph:
    labels = doc["labels"]
    index = {lab: i for i, lab in enumerate(labels)}
    return from_edges(len(labels), [(index[a], index[b]) for a, b in doc["edges"]], labels)


def _certificate_doc(g: Graph, cert: Certificate) -> dict:
    out: dict = {"size": cert.size, "vertices": [g.label(v) for v in cert.vertices]}
    lab = g.label
    if cert.kind is ParamKind.STRONG_EDGE_GEODETIC:
        out["assignment"] = [
            {"pair": [lab(u), lab(v)], "path": [lab(x) for x in path]}
            for (u, v), path in sorted(cert.witness.items())
        ]
    elif cert.kind is not ParamKind.GEODETIC:
        out["witness"] = [
            {"edge": [lab(a), lab(b)], "pair": [lab(u), lab(v)]}
            for (a, b), (u, v) in sorted(cert.witness.items())
        ]
    return out


def result_document(g: Graph, certificates: dict[ParamKind, Certificate],
                    seconds: float) -> dict:
    """The JSON record written by ``compute --json``."""
    return {
        "tool": "geomon",
        "version": __version__,
        "graph": _graph_doc(g),
        "parameters": {k.value: c.size for k, c in certificates.items()},
        "certificates": {k.value: _certificate_doc(g, c) for k, c in certificates.items()},
        "seconds": round(seconds, 6),
    }


def certificates_from_document(doc: dict) -> tuple[Graph, dict[ParamKind, Certificate]]:
    """Rebuild the graph and certificates stored in a result document."""
    g = graph_from_doc(doc["graph"])
    index = {lab: i for i, lab in enumerate(doc["graph"]["labels"])}

    def key(pair):
        u, v = index[pair[0]], index[pair[1]]
        return (u, v) if u < v else (v, u)

    certs = {}
    for name, body in doc["certificates"].items():
        kind = ParamKind.parse(name)
        vertices = tuple(sorted(index[x] for x in body["vertices"]))
        witness = None
        if "assignment" in body:
            witness = {}
            for item in body["assignment"]:
                path = tuple(index[x] for x in item["path"])
                pair = key(item["pair"])
                witness[pair] = path if path[0] == pair[0] else path[::-1]
        elif "witness" in body:
            witness = {key(item["edge"]): key(item["pair"]) for item in body["witness"]}
        certs[kind] = Certificate(kind, vertices, witness)
    return g, certs


def revalidate_document(doc: dict) -> dict[str, bool]:
    """Check every certificate in ``doc`` against the graph it carries."""
    validate(doc, "result")
    g, certs = certificates_from_document(doc)
    out = {}
    for kind, cert in certs.items():
        ok = check_certificate(g, cert) and doc["parameters"][kind.value] == cert.size
        out[kind.value] = ok
    return out


def profile_document(g: Graph, profile: Profile, seconds: float) -> dict:
    return result_document(g, profile.certificates, seconds)


def construction_document(g: Graph, plan: ConstructionPlan,
                          verified: Optional[tuple[int, int, int, int]] = None) -> dict:
    return {
        "tool": "geomon",
        "version": __version__,
        "quadruple": list(plan.quadruple),
        "family": plan.family.value,
        "r": plan.r,
        "graph": _graph_doc(g),
        "classes": {k: [g.label(v) for v in vs] for k, vs in plan.classes.items()},
        "twins": [[g.label(u), g.label(v)] for u, v in plan.twins],
        "verified": list(verified) if verified is not None else None,
    }


def sweep_document(report: SweepReport) -> dict:
    return {
        "tool": "geomon",
        "version": __version__,
        "max_d": report.max_d,
        "summary": report.summary,
        "entries": [
            {
                "quadruple": list(e.quadruple),
                "feasibility": e.status.value,
                "size": e.size,
                "family": e.family,
                "solved": list(e.solved) if e.solved is not None else None,
                "passed": e.passed,
                "seconds": round(e.seconds, 6),
                "cause": e.cause,
            }
            for e in report.entries
        ],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


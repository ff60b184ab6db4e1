"""Feasibility of parameter quadruples and the graph families realizing them.

Every feasible ``(a, b, c, d)`` with ``2 <= a <= b <= c <= d`` is realized by
one of these builders:

* :func:`build_abcd` for ``a >= 3``: a 5-cycle grown by a clique, a fan of
  4-cycles, pendants and a twin-studded tail;
* :func:`build_2bcd` for ``a = 2, b != 3``: parallel ``y``-``x_0`` branches plus
  a twin-studded tail hanging from ``y``;
* :func:`build_23cd` for ``(2, 3, 4, d)``: two rows tied together at both ends;
* :func:`build_23cc` and :func:`build_23cd_twinned` for ``(2, 3, c, d)`` with
  ``c >= 5``.

Builders return the graph together with a :class:`ConstructionPlan` naming
every vertex class.  Row and tail vertices carry comma-separated indices
(``v_0,1``, ``v'_0,1``) so labels stay unambiguous past index 9.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InfeasibleQuadruple, InvalidParameters
from .graph import Graph, from_edges, path_graph


class Quadruple(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    @property
    def admissible(self) -> bool:
        return 2 <= self.a <= self.b <= self.c <= self.d


class Feasibility(enum.Enum):
    FEASIBLE = "feasible"
    INVALID_ORDER = "invalid-order"
    INFEASIBLE_222 = "infeasible-222d"
    INFEASIBLE_233 = "infeasible-233d"

    @property
    def reason(self) -> str:
        return {
            Feasibility.FEASIBLE: "feasible",
            Feasibility.INVALID_ORDER: "invalid (need 2 <= a <= b <= c <= d)",
            Feasibility.INFEASIBLE_222: "infeasible (Theorem 3.1)",
            Feasibility.INFEASIBLE_233: "infeasible (Theorem 3.2)",
        }[self]

    @property
    def detail(self) -> str:
        return {
            Feasibility.FEASIBLE: "",
            Feasibility.INVALID_ORDER: "parameters must be non-decreasing and at least 2",
            Feasibility.INFEASIBLE_222: "g = eg = seg = 2 forces meg = 2",
            Feasibility.INFEASIBLE_233: "no graph has g = 2 and eg = seg = 3",
        }[self]


def feasibility(q) -> Feasibility:
    """Classify any integer 4-tuple.

    >>> feasibility((2, 3, 3, 4)).reason
    'infeasible (Theorem 3.2)'
    """
    a, b, c, d = q
    if not 2 <= a <= b <= c <= d:
        return Feasibility.INVALID_ORDER
    if (a, b, c) == (2, 2, 2) and d > 2:
        return Feasibility.INFEASIBLE_222
    if (a, b, c) == (2, 3, 3):
        return Feasibility.INFEASIBLE_233
    return Feasibility.FEASIBLE


class Family(enum.Enum):
    PATH = "PathFamily"
    F23CD = "Family23cd"
    F23CC = "Family23cc"
    F23CD_TWINNED = "Family23cdTwinned"
    F2BCD = "Family2bcd"
    FABCD = "FamilyAbcd"


@dataclass(frozen=True)
class ConstructionPlan:
    """Named vertex classes of a built graph.

    ``classes`` maps a class name (``"W"``, ``"V"``, ``"U"``, ``"X"``, ``"spine"``,
    ...) to a tuple of vertex indices; every vertex lies in exactly one class.
    ``twins`` lists the twin pairs the construction introduces, ``cliques`` the
    class names that must induce complete subgraphs and ``pendants`` the class
    names whose members have degree one.
    """

    family: Family
    quadruple: Quadruple
    r: int
    classes: dict[str, tuple[int, ...]]
    twins: tuple[tuple[int, int], ...] = ()
    cliques: tuple[str, ...] = ()
    pendants: tuple[str, ...] = ()
    expected_order: int | None = None

    def class_of(self, v: int) -> str:
        for name, members in self.classes.items():
            if v in members:
                return name
        raise KeyError(v)


class _Builder:
    """Accumulates labelled vertices and edges, then freezes into a Graph."""

    def __init__(self):
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.classes: dict[str, list[int]] = {}
        self.twins: list[tuple[int, int]] = []

    def add(self, label: str, cls: str) -> int:
        if label in self.index:
            raise InvalidParameters(f"vertex {label} added twice")
        v = len(self.labels)
        self.labels.append(label)
        self.index[label] = v
        self.classes.setdefault(cls, []).append(v)
        return v

    def __getitem__(self, label: str) -> int:
        return self.index[label]

    def join(self, *labels: str) -> None:
        """Add the path through ``labels``."""
        for p, q in zip(labels, labels[1:]):
            self.edges.append((self.index[p], self.index[q]))

    def clique(self, labels) -> None:
        labels = list(labels)
        for i, p in enumerate(labels):
            for q in labels[i + 1:]:
                self.join(p, q)

    def reclass(self, label: str, cls: str) -> None:
        v = self.index[label]
        for members in self.classes.values():
            if v in members:
                members.remove(v)
        self.classes.setdefault(cls, []).append(v)

    def twin(self, label: str, of: str, cls: str) -> None:
        """Add an open twin of ``of``: a copy of its current neighbourhood."""
        src = self.index[of]
        nbrs = sorted({q for e in self.edges for q in e if src in e and q != src})
        t = self.add(label, cls)
        self.edges.extend((t, q) for q in nbrs)
        self.twins.append((src, t))

    def freeze(self, family: Family, q: Quadruple, r: int, cliques=(), pendants=(),
               expected_order=None) -> tuple[Graph, ConstructionPlan]:
        g = from_edges(len(self.labels), self.edges, self.labels)
        classes = {k: tuple(v) for k, v in self.classes.items() if v}
        plan = ConstructionPlan(family, q, r, classes, tuple(self.twins), tuple(cliques),
                                tuple(pendants), expected_order)
        return g, plan


def _check_ints(*values) -> None:
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in values):
        raise InvalidParameters(f"parameters must be integers, got {values}")


def tail_length(c: int, d: int) -> int:
    """Length of the twin-studded tail adding ``d - c`` to meg alone."""
    return d - c + 3 if (d - c) % 2 else d - c + 1


def _twin_tail(B: _Builder, root: str, name: str, k: int) -> int:
    """Hang a path ``name_1 .. name_r`` from ``root`` and stud it with open twins.

    Each twin ``name'_2i`` closes a 4-cycle; for odd ``k`` the last stretch is
    doubled into a 6-cycle instead.  Returns ``r``.
    """
    r = tail_length(0, k)
    path = [root] + [f"{name}_{i}" for i in range(1, r + 1)]
    for label in path[1:]:
        B.add(label, "tail")
    B.join(*path)
    last = (r - 3) // 2 if k % 2 else (r - 1) // 2
    for i in range(1, last + 1):
        B.twin(f"{name}'_{2 * i}", of=path[2 * i], cls="X")
        B.reclass(path[2 * i], "X")
    if k % 2:
        B.add(f"{name}'_{r - 2}", "X")
        B.add(f"{name}'_{r - 1}", "X")
        B.join(path[r - 3], f"{name}'_{r - 2}", f"{name}'_{r - 1}", path[r])
    return r


# (2, 3, c, d)

def tail_length_23cd(c: int, d: int) -> int:
    return d - c + 1 if (d - c) % 2 else d - c


def order_23cd(c: int, d: int) -> int:
    """Closed-form vertex count of ``build_23cd(c, d)``."""
    r = tail_length_23cd(c, d)
    twins = 0 if d == c else r // 2 + (1 if (d - c) % 2 == 0 else 0)
    return (c - 2) * (r + 5) + 1 + twins


def _rows_23cd(B: _Builder, c: int, d: int) -> int:
    r = tail_length_23cd(c, d)
    rows = c - 2
    for i in range(rows):
        for name in ("x", "w", "u", "y"):
            B.add(f"{name}_{i}", "spine")
        for j in range(r + 1):
            cls = "Y" if j == r and i > 0 else "V" if j == r - 1 and i > 0 else "spine"
            B.add(f"v_{i},{j}", cls)
        B.join(f"x_{i}", f"w_{i}", f"u_{i}", f"y_{i}", *(f"v_{i},{j}" for j in range(r + 1)))
    for i in range(rows - 1):
        B.join(f"x_{i}", f"x_{i + 1}")
        B.join(f"v_{i},{r}", f"v_{i + 1},{r}")
    B.add("z", "z")
    B.join("w_0", "z", "u_0")
    B.join("z", "w_1")
    if d > c:
        for j in range(1, r, 2):
            B.twin(f"v'_0,{j}", of=f"v_0,{j}", cls="X")
            B.reclass(f"v_0,{j}", "X")
        if (d - c) % 2 == 0:
            B.twin(f"v'_1,{r - 1}", of=f"v_1,{r - 1}", cls="X'")
    return r


def build_23cd(c: int, d: int) -> tuple[Graph, ConstructionPlan]:
    """Rows ``x_i w_i u_i y_i v_i,0 .. v_i,r`` for ``i < c - 2``, tied together at
    both ends, with a hub ``z`` on the first two rows and twins on row 0.

    The layout is built for any ``4 <= c <= d`` but realizes ``(2, 3, c, d)``
    reliably only for ``c = 4``; :func:`realize` sends ``c >= 5`` elsewhere.
    """
    _check_ints(c, d)
    if c < 4 or d < c:
        raise InvalidParameters(f"build_23cd needs 4 <= c <= d, got c={c}, d={d}")
    B = _Builder()
    r = _rows_23cd(B, c, d)
    return B.freeze(Family.F23CD, Quadruple(2, 3, c, d), r, expected_order=order_23cd(c, d))


def order_23cc(c: int) -> int:
    return c + 3


def build_23cc(c: int) -> tuple[Graph, ConstructionPlan]:
    """A 6-cycle ``s_0 .. s_5`` with ``c - 4`` hubs on ``s_0, s_1, s_3`` and a
    vertex ``e`` bridging ``s_1`` and ``s_5``; realizes ``(2, 3, c, c)``.

    The hubs are pairwise open twins, so each one is forced into every MEG-set,
    while a strong edge-geodetic set needs one vertex per hub as well.
    """
    _check_ints(c)
    if c < 5:
        raise InvalidParameters(f"build_23cc needs c >= 5, got c={c}")
    B = _Builder()
    cycle = [f"s_{i}" for i in range(6)]
    for label in cycle:
        B.add(label, "cycle")
    B.join(*cycle, "s_0")
    B.add("h_1", "H")
    B.join("s_0", "h_1", "s_1")
    B.join("h_1", "s_3")
    for i in range(2, c - 3):
        B.twin(f"h_{i}", of="h_1", cls="H")
    B.add("e", "e")
    B.join("s_1", "e", "s_5")
    return B.freeze(Family.F23CC, Quadruple(2, 3, c, c), 0, expected_order=order_23cc(c))


def _base_23cd_twinned(c: int, d: int) -> int:
    """The ``d`` passed to the ``c = 4`` rows underlying ``build_23cd_twinned``."""
    k = d - c
    if k == 1:
        return 4
    return k + 3 if k % 2 == 0 else k + 2


def order_23cd_twinned(c: int, d: int) -> int:
    k = d - c
    return order_23cd(4, _base_23cd_twinned(c, d)) + c - 4 + (1 if k >= 3 and k % 2 else 0)


def build_23cd_twinned(c: int, d: int) -> tuple[Graph, ConstructionPlan]:
    """Realize ``(2, 3, c, d)`` for ``c >= 5`` and ``d > c``.

    Starts from the two-row layout of ``build_23cd(4, d0)`` and adds an open
    twin ``u'_0`` of ``u_0`` and ``c - 5`` open twins ``w'_i`` of ``w_0``; each
    raises seg and meg together.  ``d0`` is chosen so the rows carry an even
    tail, and for odd ``d - c >= 3`` a twin ``y'_1`` of ``y_1`` adds the last
    unit to meg.
    """
    _check_ints(c, d)
    if c < 5 or d <= c:
        raise InvalidParameters(f"build_23cd_twinned needs 5 <= c < d, got c={c}, d={d}")
    k = d - c
    B = _Builder()
    r = _rows_23cd(B, 4, _base_23cd_twinned(c, d))
    B.twin("u'_0", of="u_0", cls="U'")
    for i in range(1, c - 4):
        B.twin(f"w'_{i}", of="w_0", cls="W'")
    if k >= 3 and k % 2:
        B.twin("y'_1", of="y_1", cls="Y'")
    return B.freeze(Family.F23CD_TWINNED, Quadruple(2, 3, c, d), r,
                    expected_order=order_23cd_twinned(c, d))


# (2, b, c, d) with b != 3

def tail_length_2bcd(c: int, d: int) -> int:
    return tail_length(c, d)


def order_2bcd(b: int, c: int, d: int) -> int:
    k = d - c
    r = tail_length(c, d)
    twins = (r - 3) // 2 + 2 if k % 2 else (r - 1) // 2
    spokes = 2 * (b - 2) if b >= 4 else 0
    return 2 + spokes + 2 * (c - b + 1) + r + twins


def build_2bcd(b: int, c: int, d: int) -> tuple[Graph, ConstructionPlan]:
    """Paths ``y z_i w_i x_0`` (``W`` a clique) and ``y f_i v_i x_0``, with a
    twin-studded tail ``t_1 .. t_r`` hanging from ``y``.

    For ``b = 2`` the ``z``/``w`` paths are dropped and ``c - 1`` branches
    remain.  The tail adds ``d - c`` to meg while its end joins every set.
    """
    _check_ints(b, c, d)
    if b < 2 or b == 3 or c < b or d < c or (b, c) == (2, 2):
        raise InvalidParameters(
            f"build_2bcd needs 2 <= b <= c <= d, b != 3 and c >= 3, got {(b, c, d)}")
    B = _Builder()
    B.add("y", "spine")
    B.add("x_0", "spine")
    if b >= 4:
        for i in range(1, b - 1):
            B.add(f"z_{i}", "Z")
            B.add(f"w_{i}", "W")
            B.join("y", f"z_{i}", f"w_{i}", "x_0")
        B.clique(f"w_{i}" for i in range(1, b - 1))
    for i in range(1, c - b + 2):
        B.add(f"f_{i}", "F")
        B.add(f"v_{i}", "V")
        B.join("y", f"f_{i}", f"v_{i}", "x_0")
    r = _twin_tail(B, "y", "t", d - c)
    cliques = ("W",) if b >= 4 else ()
    return B.freeze(Family.F2BCD, Quadruple(2, b, c, d), r, cliques,
                    expected_order=order_2bcd(b, c, d))


# a >= 3

def tail_length_abcd(c: int, d: int) -> int:
    return tail_length(c, d)


def order_abcd(a: int, b: int, c: int, d: int) -> int:
    k = d - c
    r = tail_length(c, d)
    twins = (r - 3) // 2 + 2 if k % 2 else (r - 1) // 2
    top = b - a + 1 if a == 3 else b - a + 2
    return 5 + (top - 1) + (c - b) + (a - 3) + r + twins


def build_abcd(a: int, b: int, c: int, d: int) -> tuple[Graph, ConstructionPlan]:
    """A 5-cycle ``x y w_1 z v_1`` with a clique on ``w_1 .. w_top`` (all on
    ``y`` and ``z``), vertices ``v_i`` on ``z`` and ``x``, ``a - 3`` pendants on
    ``w_top`` and a twin-studded tail from ``x``.
    """
    _check_ints(a, b, c, d)
    if not 3 <= a <= b <= c <= d:
        raise InvalidParameters(f"build_abcd needs 3 <= a <= b <= c <= d, got {(a, b, c, d)}")
    B = _Builder()
    for name in ("x", "y", "w_1", "z", "v_1"):
        B.add(name, "cycle")
    B.join("x", "y", "w_1", "z", "v_1", "x")
    top = b - a + 1 if a == 3 else b - a + 2
    for i in range(2, top + 1):
        B.add(f"w_{i}", "W")
        B.join("y", f"w_{i}", "z")
    B.clique(f"w_{i}" for i in range(1, top + 1))
    for i in range(2, c - b + 2):
        B.add(f"v_{i}", "V")
        B.join("z", f"v_{i}", "x")
    for i in range(1, a - 2):
        B.add(f"u_{i}", "U")
        B.join(f"u_{i}", f"w_{top}")
    r = _twin_tail(B, "x", "x", d - c)
    cliques = ("W",) if top >= 2 else ()
    return B.freeze(Family.FABCD, Quadruple(a, b, c, d), r, cliques, ("U",),
                    expected_order=order_abcd(a, b, c, d))


def build_path() -> tuple[Graph, ConstructionPlan]:
    g = path_graph(2).relabel(["p_0", "p_1"])
    plan = ConstructionPlan(Family.PATH, Quadruple(2, 2, 2, 2), 0, {"spine": (0, 1)},
                            expected_order=2)
    return g, plan


def realize(q) -> tuple[Graph, ConstructionPlan]:
    """Build a graph whose parameters should be exactly ``q``.

    Raises :class:`InfeasibleQuadruple` (with ``.status``) for anything not
    feasible.

    >>> g, plan = realize((3, 3, 3, 3))
    >>> g.n, plan.family.value
    (6, 'FamilyAbcd')
    """
    q = Quadruple(*q)
    _check_ints(*q)
    status = feasibility(q)
    if status is not Feasibility.FEASIBLE:
        raise InfeasibleQuadruple(q, status)
    a, b, c, d = q
    if a >= 3:
        return build_abcd(a, b, c, d)
    if (b, c, d) == (2, 2, 2):
        return build_path()
    if b != 3:
        return build_2bcd(b, c, d)
    if c == 4:
        return build_23cd(c, d)
    if d == c:
        return build_23cc(c)
    return build_23cd_twinned(c, d)

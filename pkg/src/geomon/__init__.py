"""Exact geodetic, edge-geodetic, strong edge-geodetic and monitoring
edge-geodetic numbers, plus graphs realizing any feasible quadruple of them."""

__version__ = "0.1.0"

from .constructions import ConstructionPlan, Feasibility, Quadruple, feasibility, realize
from .graph import Graph, from_edges
from .solvers import ParamKind, Solver, SolverConfig, quadruple

__all__ = [
    "ConstructionPlan",
    "Feasibility",
    "Graph",
    "ParamKind",
    "Quadruple",
    "Solver",
    "SolverConfig",
    "feasibility",
    "from_edges",
    "quadruple",
    "realize",
]

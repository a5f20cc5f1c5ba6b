"""Exact path contraction solver.

Find the largest t such that a connected graph can be edge-contracted to
the t-vertex path, with a certifying ordered partition of the vertices.
"""

from .driver import Constants, SolveReport, solve
from .errors import PathContractError
from .graph import (
    Graph,
    WitnessStructure,
    parse_graph,
    verify_witness,
)
from .kernels import BACKEND
from .oracle import oracle_path_contraction

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Constants",
    "Graph",
    "PathContractError",
    "SolveReport",
    "WitnessStructure",
    "oracle_path_contraction",
    "parse_graph",
    "solve",
    "verify_witness",
    "__version__",
]

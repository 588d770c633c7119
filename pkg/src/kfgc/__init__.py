"""Approximation algorithm and exact oracles for k-flexible graph connectivity."""

from .errors import (
    CardinalityUnreachable,
    FgcError,
    GenerationFailed,
    Infeasible,
    InputError,
    NoKArborescence,
    NotDecomposable,
    ParseError,
    RefusedScale,
    SolverBug,
)
from .exact_oracle import ExactResult, exact_k_arborescence, exact_opt
from .feasibility import global_min_cut, is_feasible_instance, is_feasible_solution
from .fgc_solver import FgcSolution, solve, verify_solution
from .graph_core import Arc, ArcSet, Digraph, Edge, FgcInstance, Safety
from .instance_io import generate, parse_instance, serialize_instance
from .reduction import build_digraph, map_back

__version__ = "0.1.0"

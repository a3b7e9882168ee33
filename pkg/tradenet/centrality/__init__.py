"""Degree, eigenvector and random-walk centralities of a trade network."""

from typing import Callable, Dict, Tuple

from tradenet.centrality.degree import degree_in, degree_out
from tradenet.centrality.eigenvector import eigenvector_in, eigenvector_out, power_iteration
from tradenet.centrality.options import (
    CentralityVector,
    DanglingPolicy,
    Direction,
    Measure,
    SolverOptions,
    check_direction,
    check_measure,
)
from tradenet.centrality.randomwalk import (
    TransitionMatrix,
    WalkKind,
    build_transition,
    randomwalk_in,
    randomwalk_out,
    stationary_distribution,
)
from tradenet.network import AdjacencyMatrix

_SOLVERS: Dict[Tuple[str, str], Callable[[AdjacencyMatrix, SolverOptions], CentralityVector]] = {
    ("degree", "in"): lambda a, _opts: degree_in(a),
    ("degree", "out"): lambda a, _opts: degree_out(a),
    ("eigenvector", "in"): eigenvector_in,
    ("eigenvector", "out"): eigenvector_out,
    ("randomwalk", "in"): randomwalk_in,
    ("randomwalk", "out"): randomwalk_out,
}


def compute_centrality(
    a: AdjacencyMatrix,
    measure: Measure,
    direction: Direction,
    opts: SolverOptions = SolverOptions(),
) -> CentralityVector:
    """Dispatch to one of the six measure/direction solvers."""
    solver = _SOLVERS[(check_measure(measure), check_direction(direction))]
    return solver(a, opts)


__all__ = [
    "CentralityVector",
    "DanglingPolicy",
    "Direction",
    "Measure",
    "SolverOptions",
    "TransitionMatrix",
    "WalkKind",
    "build_transition",
    "check_direction",
    "check_measure",
    "compute_centrality",
    "degree_in",
    "degree_out",
    "eigenvector_in",
    "eigenvector_out",
    "power_iteration",
    "randomwalk_in",
    "randomwalk_out",
    "stationary_distribution",
]

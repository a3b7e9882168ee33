"""Eigenvector centrality by power iteration.

The iteration runs on ``A + sI`` with ``s = 1/n`` (the mean row sum of a
normalized network). The shift leaves the dominant eigenvector unchanged but
makes the iteration converge on periodic networks such as the two-country
swap, where plain ``A x`` oscillates forever.
"""

from typing import Tuple

import networkx as nx
import numpy as np

from tradenet.centrality.options import CentralityVector, Direction, SolverOptions
from tradenet.errors import NoConvergence, ZeroLimit
from tradenet.logging_setup import get_logger
from tradenet.network import AdjacencyMatrix

logger = get_logger(__name__)


def _is_nilpotent(matrix: np.ndarray) -> bool:
    # A nonnegative matrix is nilpotent exactly when its support graph has no cycle
    graph = nx.DiGraph()
    graph.add_nodes_from(range(matrix.shape[0]))
    graph.add_edges_from(zip(*np.nonzero(matrix)))
    return nx.is_directed_acyclic_graph(graph)


def power_iteration(matrix: np.ndarray, opts: SolverOptions) -> Tuple[np.ndarray, float, int]:
    """
    Dominant nonnegative eigenpair of a nonnegative square matrix.

    Returns:
        (x, leading eigenvalue, sweeps) with x >= 0 and sum(x) == 1.

    Raises:
        ZeroLimit: If the matrix is nilpotent (the iterate would vanish).
        NoConvergence: If the L1 change stays above tolerance for max_iterations sweeps.
    """
    n = matrix.shape[0]
    if _is_nilpotent(matrix):
        raise ZeroLimit("Power iteration collapses to the zero vector: the network has no cycle")

    shift = 1.0 / n
    x = np.full(n, 1.0 / n)
    change = float("inf")
    for sweep in range(1, opts.max_iterations + 1):
        y = matrix @ x + shift * x
        norm = y.sum()
        if norm <= 0:
            raise ZeroLimit("Power iteration collapsed to the zero vector")
        y /= norm
        change = float(np.abs(y - x).sum())
        x = y
        if change <= opts.tolerance:
            break
    else:
        raise NoConvergence(
            f"Eigenvector iteration did not converge in {opts.max_iterations} sweeps "
            f"(last L1 change {change:.3e})",
            last_iterate=x,
            last_change=change,
            iterations=opts.max_iterations,
        )

    ax = matrix @ x
    eigenvalue = float(np.abs(ax).sum() / np.abs(x).sum())
    if eigenvalue == 0:
        raise ZeroLimit("Dominant eigenvalue is zero")
    logger.debug(
        "Power iteration converged after %d sweeps (change %.3e, lambda %.12g)",
        sweep,
        change,
        eigenvalue,
        extra={"category": "solver"},
    )
    return x, eigenvalue, sweep


def _eigenvector(a: AdjacencyMatrix, matrix: np.ndarray, direction: Direction, opts: SolverOptions) -> CentralityVector:
    x, eigenvalue, sweeps = power_iteration(matrix, opts)
    return CentralityVector(
        "eigenvector",
        direction,
        a.year,
        a.countries,
        x,
        leading_eigenvalue=eigenvalue,
        iterations=sweeps,
    )


def eigenvector_out(a: AdjacencyMatrix, opts: SolverOptions = SolverOptions()) -> CentralityVector:
    """Solve A x = lambda x: a country is central when it exports to central countries."""
    return _eigenvector(a, a.weights, "out", opts)


def eigenvector_in(a: AdjacencyMatrix, opts: SolverOptions = SolverOptions()) -> CentralityVector:
    """Solve A^T x = lambda x: a country is central when it imports from central countries."""
    return _eigenvector(a, a.weights.T, "in", opts)

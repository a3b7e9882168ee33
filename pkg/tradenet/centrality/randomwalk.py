"""Random-walk centrality: stationary distribution of a value-flow Markov chain.

Both chains are column-stochastic. ``in_walk`` moves value from exporter j to
importer i with probability a_ji / k_j^out; ``out_walk`` uses a_ij / k_j^in.
The stationary vector is found by a direct linear solve because the chain may
be periodic, in which case fixed-point iteration never settles.
"""

from dataclasses import dataclass
from typing import List, Literal

import networkx as nx
import numpy as np
import scipy.linalg

from tradenet.centrality.options import CentralityVector, DanglingPolicy, Direction, SolverOptions
from tradenet.constants import MARKOV_COLUMN_TOLERANCE, STATIONARY_RESIDUAL_TOLERANCE
from tradenet.errors import DanglingNode, DomainError, NoConvergence, ReducibleNetwork
from tradenet.logging_setup import get_logger
from tradenet.network import AdjacencyMatrix, CountryIndex

logger = get_logger(__name__)

WalkKind = Literal["in_walk", "out_walk"]


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """Column-stochastic matrix: entries[i][j] is the probability of moving j -> i."""

    kind: WalkKind
    countries: CountryIndex
    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=float, copy=True)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        if np.any(entries < 0):
            raise DomainError("Transition probabilities must be nonnegative")
        column_sums = entries.sum(axis=0)
        if np.any(np.abs(column_sums - 1.0) > MARKOV_COLUMN_TOLERANCE):
            raise DomainError("Every transition column must sum to 1")

    def components(self) -> List[List[str]]:
        """Strongly connected components of the positive-transition graph, in index order."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.countries.size))
        # Edge j -> i for a positive probability of moving from j to i
        targets, sources = np.nonzero(self.entries)
        graph.add_edges_from(zip(sources.tolist(), targets.tolist()))
        components = sorted(
            (sorted(component) for component in nx.strongly_connected_components(graph)),
            key=lambda members: members[0],
        )
        return [[self.countries.names[i] for i in members] for members in components]


def build_transition(
    a: AdjacencyMatrix, kind: WalkKind, policy: DanglingPolicy = "error"
) -> TransitionMatrix:
    """
    Scale the adjacency matrix into a column-stochastic transition matrix.

    With ``policy="uniform"`` a column whose degree is zero becomes 1/n.

    Raises:
        DanglingNode: If some degree is zero and the policy is "error".
    """
    if kind == "in_walk":
        # Column j of A^T holds country j's exports
        base = a.weights.T
        degrees = a.weights.sum(axis=1)
        missing = "exports"
    elif kind == "out_walk":
        base = a.weights
        degrees = a.weights.sum(axis=0)
        missing = "imports"
    else:
        raise ValueError(f"Unknown walk kind {kind!r}")

    n = a.size
    dangling = degrees == 0
    if dangling.any():
        names = [a.countries.names[i] for i in np.flatnonzero(dangling)]
        if policy != "uniform":
            raise DanglingNode(
                f"No {missing} recorded for {', '.join(names)}; "
                f"use the uniform dangling policy to repair",
                countries=names,
            )
        logger.warning(
            "Replacing %d dangling column(s) with 1/n in %s %s: %s",
            len(names),
            a.year,
            kind,
            ", ".join(names),
            extra={"category": "solver"},
        )

    safe = np.where(dangling, 1.0, degrees)
    entries = base / safe[np.newaxis, :]
    entries[:, dangling] = 1.0 / n
    return TransitionMatrix(kind, a.countries, entries)


def stationary_distribution(transition: TransitionMatrix) -> np.ndarray:
    """
    Unique p with M p = p, sum(p) = 1, p >= 0.

    Raises:
        ReducibleNetwork: If the chain is not irreducible.
        NoConvergence: If the solved vector misses the residual bound.
    """
    components = transition.components()
    if len(components) > 1:
        listing = "; ".join("{" + ", ".join(c) + "}" for c in components)
        raise ReducibleNetwork(
            f"Network is not strongly connected ({len(components)} components: {listing})",
            components=components,
        )

    m = transition.entries
    n = m.shape[0]
    system = m - np.eye(n)
    system[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    p = scipy.linalg.solve(system, rhs)

    # Irreducible chains have a strictly positive solution; clip round-off only
    p = np.clip(p, 0.0, None)
    p /= p.sum()

    residual = float(np.abs(m @ p - p).max())
    if residual > STATIONARY_RESIDUAL_TOLERANCE:
        raise NoConvergence(
            f"Stationary solve residual {residual:.3e} exceeds {STATIONARY_RESIDUAL_TOLERANCE:.0e}",
            last_iterate=p,
            last_change=residual,
        )
    logger.debug("Stationary solve residual %.3e", residual, extra={"category": "solver"})
    return p


def _randomwalk(a: AdjacencyMatrix, kind: WalkKind, direction: Direction, opts: SolverOptions) -> CentralityVector:
    transition = build_transition(a, kind, opts.dangling_policy)
    return CentralityVector("randomwalk", direction, a.year, a.countries, stationary_distribution(transition))


def randomwalk_in(a: AdjacencyMatrix, opts: SolverOptions = SolverOptions()) -> CentralityVector:
    """Probability that circulating value sits at each country (import-driven chain)."""
    return _randomwalk(a, "in_walk", "in", opts)


def randomwalk_out(a: AdjacencyMatrix, opts: SolverOptions = SolverOptions()) -> CentralityVector:
    """Stationary vector of the export-driven chain A D_in^-1."""
    return _randomwalk(a, "out_walk", "out", opts)

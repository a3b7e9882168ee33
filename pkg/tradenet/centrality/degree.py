"""Degree centrality: a country's share of world exports or imports."""

from tradenet.centrality.options import CentralityVector
from tradenet.network import AdjacencyMatrix


def degree_out(a: AdjacencyMatrix) -> CentralityVector:
    """Row sums of the adjacency matrix (export shares)."""
    return CentralityVector("degree", "out", a.year, a.countries, a.weights.sum(axis=1))


def degree_in(a: AdjacencyMatrix) -> CentralityVector:
    """Column sums of the adjacency matrix (import shares)."""
    return CentralityVector("degree", "in", a.year, a.countries, a.weights.sum(axis=0))

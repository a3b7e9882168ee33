"""Trade matrices and their normalized adjacency form.

All types are frozen and hold read-only numpy arrays, so they can be shared
between threads without copying.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple, Union

import numpy as np

from tradenet.constants import ADJACENCY_SUM_TOLERANCE
from tradenet.errors import (
    AllZeroMatrix,
    DomainError,
    DuplicateCountry,
    DuplicateFlow,
    IndexMismatch,
    NegativeValue,
    SelfLoop,
    UnknownCountry,
)
from tradenet.logging_setup import get_logger

logger = get_logger(__name__)

FlowRecord = Tuple[str, str, float]


def _frozen_array(values: Union[np.ndarray, Sequence[Sequence[float]]]) -> np.ndarray:
    array = np.array(values, dtype=float, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class CountryIndex:
    """Ordered, unique country labels. Position i is row/column i everywhere."""

    names: Tuple[str, ...]
    _positions: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        positions: Dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise UnknownCountry(f"Country labels must be non-empty strings, got {name!r}")
            if name in positions:
                raise DuplicateCountry(f"Country {name!r} appears twice in the index")
            positions[name] = i
        object.__setattr__(self, "_positions", positions)

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "CountryIndex":
        """Index over the sorted set of labels."""
        return cls(tuple(sorted(set(labels))))

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, label: object) -> bool:
        return label in self._positions

    def position(self, label: str) -> int:
        """Row/column of ``label``; raises UnknownCountry when absent."""
        try:
            return self._positions[label]
        except KeyError:
            raise UnknownCountry(f"Unknown country {label!r}") from None

    def permutation_to(self, other: "CountryIndex") -> np.ndarray:
        """Positions in self of each label of ``other`` (same label set required)."""
        if set(self.names) != set(other.names):
            missing = sorted(set(self.names) ^ set(other.names))
            raise IndexMismatch(f"Country sets differ: {', '.join(missing)}")
        return np.array([self._positions[name] for name in other.names], dtype=int)


def _check_square(values: np.ndarray, countries: CountryIndex, what: str) -> None:
    n = countries.size
    if values.shape != (n, n):
        raise IndexMismatch(
            f"{what} has shape {values.shape}, expected ({n}, {n}) for {n} countries"
        )


@dataclass(frozen=True, eq=False)
class TradeMatrix:
    """Raw bilateral flows for one year: flows[i][j] is the export from i to j."""

    year: int
    countries: CountryIndex
    flows: np.ndarray

    def __post_init__(self) -> None:
        flows = _frozen_array(self.flows)
        object.__setattr__(self, "flows", flows)
        _check_square(flows, self.countries, "Trade matrix")
        if not np.all(np.isfinite(flows)) or np.any(flows < 0):
            i, j = np.argwhere(~(np.isfinite(flows) & (flows >= 0)))[0]
            raise NegativeValue(
                f"Flow {self.countries.names[i]} -> {self.countries.names[j]} "
                f"must be a finite nonnegative number, got {flows[i, j]!r}"
            )
        diagonal = np.flatnonzero(np.diagonal(flows))
        if diagonal.size:
            name = self.countries.names[diagonal[0]]
            raise SelfLoop(f"Country {name!r} has positive trade with itself")

    def reindexed(self, countries: CountryIndex) -> "TradeMatrix":
        """Same flows with rows/columns reordered to ``countries``."""
        order = self.countries.permutation_to(countries)
        return TradeMatrix(self.year, countries, self.flows[np.ix_(order, order)])

    def scaled(self, factor: float) -> "TradeMatrix":
        return TradeMatrix(self.year, self.countries, self.flows * factor)

    def flow(self, exporter: str, importer: str) -> float:
        return float(self.flows[self.countries.position(exporter), self.countries.position(importer)])


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """Globally normalized trade network: nonnegative, zero diagonal, entries sum to 1."""

    year: int
    countries: CountryIndex
    weights: np.ndarray

    def __post_init__(self) -> None:
        weights = _frozen_array(self.weights)
        object.__setattr__(self, "weights", weights)
        _check_square(weights, self.countries, "Adjacency matrix")
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise NegativeValue("Adjacency weights must be finite and nonnegative")
        if np.any(np.diagonal(weights) != 0):
            raise SelfLoop("Adjacency diagonal must be exactly zero")
        total = math.fsum(weights.ravel())
        if abs(total - 1.0) > ADJACENCY_SUM_TOLERANCE:
            raise DomainError(
                f"Adjacency weights must sum to 1 within {ADJACENCY_SUM_TOLERANCE}, got {total!r}"
            )

    @property
    def size(self) -> int:
        return self.countries.size

    def transposed(self) -> "AdjacencyMatrix":
        """Network with every edge reversed (exports become imports)."""
        return AdjacencyMatrix(self.year, self.countries, self.weights.T)

    def reindexed(self, countries: CountryIndex) -> "AdjacencyMatrix":
        order = self.countries.permutation_to(countries)
        return AdjacencyMatrix(self.year, countries, self.weights[np.ix_(order, order)])


def build_trade_matrix(
    records: Iterable[FlowRecord], countries: CountryIndex, year: int
) -> TradeMatrix:
    """
    Place (exporter, importer, value) records into a dense matrix.

    Pairs without a record are zero flows. A zero-valued self record is
    accepted and ignored; a positive one is an error.

    Raises:
        UnknownCountry, DuplicateFlow, SelfLoop, NegativeValue
    """
    n = countries.size
    flows = np.zeros((n, n), dtype=float)
    seen = set()
    for exporter, importer, value in records:
        i = countries.position(exporter)
        j = countries.position(importer)
        value = float(value)
        if not math.isfinite(value) or value < 0:
            raise NegativeValue(
                f"Flow {exporter} -> {importer} in {year} must be a finite nonnegative number, got {value!r}"
            )
        if (i, j) in seen:
            raise DuplicateFlow(f"Flow {exporter} -> {importer} appears twice in {year}")
        seen.add((i, j))
        if i == j:
            if value > 0:
                raise SelfLoop(f"Country {exporter!r} reports {value!r} of trade with itself in {year}")
            continue
        flows[i, j] = value
    return TradeMatrix(year, countries, flows)


def normalize(t: TradeMatrix) -> AdjacencyMatrix:
    """
    Divide every flow by the total of all flows.

    Raises:
        AllZeroMatrix: If the matrix holds no positive flow.
    """
    total = math.fsum(t.flows.ravel())
    if total <= 0:
        raise AllZeroMatrix(f"Trade matrix for {t.year} has no positive flow")
    logger.debug("Normalized %d x %d matrix for %d (total %r)", t.countries.size, t.countries.size, t.year, total)
    return AdjacencyMatrix(t.year, t.countries, t.flows / total)

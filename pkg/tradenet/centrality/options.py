"""Solver options and the centrality result type."""

import math
from dataclasses import dataclass, field
from typing import Dict, Literal, Optional

import numpy as np

from tradenet.constants import (
    DANGLING_POLICIES,
    DEFAULT_DANGLING_POLICY,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOLERANCE,
    DIRECTIONS,
    MEASURES,
)
from tradenet.network import CountryIndex

Measure = Literal["degree", "eigenvector", "randomwalk"]
Direction = Literal["in", "out"]
DanglingPolicy = Literal["error", "uniform"]
InitialVector = Literal["uniform"]


def check_measure(measure: str) -> Measure:
    if measure not in MEASURES:
        raise ValueError(f"Unknown measure {measure!r}; expected one of {', '.join(MEASURES)}")
    return measure  # type: ignore[return-value]


def check_direction(direction: str) -> Direction:
    if direction not in DIRECTIONS:
        raise ValueError(f"Unknown direction {direction!r}; expected one of {', '.join(DIRECTIONS)}")
    return direction  # type: ignore[return-value]


@dataclass(frozen=True)
class SolverOptions:
    """Knobs for the iterative and linear-algebra centrality solvers."""

    tolerance: float = DEFAULT_TOLERANCE
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    initial_vector: InitialVector = "uniform"
    dangling_policy: DanglingPolicy = DEFAULT_DANGLING_POLICY  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if not (isinstance(self.tolerance, (int, float)) and math.isfinite(self.tolerance) and self.tolerance > 0):
            raise ValueError(f"tolerance must be a positive number, got {self.tolerance!r}")
        if isinstance(self.max_iterations, bool) or not isinstance(self.max_iterations, int) or self.max_iterations < 1:
            raise ValueError(f"max_iterations must be an integer >= 1, got {self.max_iterations!r}")
        if self.initial_vector != "uniform":
            raise ValueError(f"initial_vector must be 'uniform', got {self.initial_vector!r}")
        if self.dangling_policy not in DANGLING_POLICIES:
            raise ValueError(
                f"dangling_policy must be one of {', '.join(DANGLING_POLICIES)}, got {self.dangling_policy!r}"
            )


@dataclass(frozen=True, eq=False)
class CentralityVector:
    """One measure and direction for one year: a score per country, summing to 1."""

    measure: Measure
    direction: Direction
    year: int
    countries: CountryIndex
    values: np.ndarray
    leading_eigenvalue: Optional[float] = None
    iterations: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float, copy=True)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if values.shape != (self.countries.size,):
            raise ValueError(
                f"Centrality vector has {values.shape} entries for {self.countries.size} countries"
            )

    def value(self, country: str) -> float:
        return float(self.values[self.countries.position(country)])

    def as_dict(self) -> Dict[str, float]:
        return {name: float(v) for name, v in zip(self.countries.names, self.values)}

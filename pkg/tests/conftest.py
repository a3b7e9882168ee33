"""Pytest configuration for tradenet tests."""

import os
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
import pytest

from tradenet.network import AdjacencyMatrix, CountryIndex, TradeMatrix, normalize

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session", autouse=True)
def plain_mode_for_tests():
    """Force plain mode (no Rich styling) for all tests."""
    original = os.environ.get("TRADENET_PLAIN")
    os.environ["TRADENET_PLAIN"] = "1"
    yield
    if original is None:
        os.environ.pop("TRADENET_PLAIN", None)
    else:
        os.environ["TRADENET_PLAIN"] = original


@pytest.fixture(autouse=True)
def isolated_config_dir(tmp_path, monkeypatch):
    """Keep every test away from the user's real config file and thread cap."""
    config_dir = tmp_path / "config"
    monkeypatch.setattr("tradenet.configuration.user_config.get_config_dir", lambda: config_dir)
    monkeypatch.delenv("TRADENET_THREADS", raising=False)
    return config_dir


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def labels(n: int) -> List[str]:
    """``C00``, ``C01``, ... sorted the same way CountryIndex sorts them."""
    return [f"C{i:02d}" for i in range(n)]


def create_test_adjacency(
    weights: Sequence[Sequence[float]],
    names: Optional[Sequence[str]] = None,
    year: int = 2000,
) -> AdjacencyMatrix:
    """Normalize a flow grid (any positive scale) into an AdjacencyMatrix."""
    flows = np.asarray(weights, dtype=float)
    index = CountryIndex(tuple(names) if names is not None else tuple(labels(flows.shape[0])))
    return normalize(TradeMatrix(year, index, flows))


def create_random_flows(rng: np.random.Generator, n: int, density: float = 1.0) -> np.ndarray:
    """Random nonnegative flows with a zero diagonal; ``density`` < 1 drops edges."""
    flows = rng.uniform(1.0, 100.0, size=(n, n))
    if density < 1.0:
        flows *= rng.random((n, n)) < density
    np.fill_diagonal(flows, 0.0)
    return flows


def create_random_years(
    rng: np.random.Generator,
    n: int,
    years: Sequence[int],
) -> List[AdjacencyMatrix]:
    """Independent fully connected random networks, one per year, over one index."""
    index = CountryIndex(tuple(labels(n)))
    return [normalize(TradeMatrix(year, index, create_random_flows(rng, n))) for year in years]


def create_gdp_panel_csv(path: Path, values: Dict[str, Dict[int, float]]) -> Path:
    """Write a country,year,value panel."""
    lines = ["country,year,value"]
    for country, series in values.items():
        for year, value in sorted(series.items()):
            lines.append(f"{country},{year},{value!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def create_trade_long_csv(path: Path, yearly: Sequence[TradeMatrix]) -> Path:
    """Write matrices as year,exporter,importer,value rows (positive flows only)."""
    lines = ["year,exporter,importer,value"]
    for matrix in yearly:
        names = matrix.countries.names
        for i, exporter in enumerate(names):
            for j, importer in enumerate(names):
                if matrix.flows[i, j] > 0:
                    lines.append(f"{matrix.year},{exporter},{importer},{float(matrix.flows[i, j])!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path

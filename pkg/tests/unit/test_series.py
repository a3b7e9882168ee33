"""Tests for per-country series, GDP weighting, income groups and threading helpers."""

import logging

import numpy as np
import pytest

from tests.conftest import create_random_years, create_test_adjacency, labels
from tradenet.errors import (
    DanglingNode,
    DuplicateYear,
    IndexMismatch,
    MissingValue,
    MissingYearValue,
    NonPositiveGDP,
)
from tradenet.io import parse_groups, parse_series, values_for_year
from tradenet.network import CountryIndex
from tradenet.pipeline import CountrySeries, aligned, assign_groups, centrality_series, weighted_gdp
from tradenet.utils import InvalidThreadCount, PerformanceLogger, parallel_map, resolve_threads


def _panel(values):
    return {c: CountrySeries.from_mapping(c, "gdp", series) for c, series in values.items()}


# ============================================================================
# CountrySeries
# ============================================================================


def test_series_requires_increasing_years():
    with pytest.raises(DuplicateYear):
        CountrySeries("A", "gdp", ((2001, 1.0), (2001, 2.0)))


def test_series_rejects_non_finite_values():
    with pytest.raises(MissingValue):
        CountrySeries("A", "gdp", ((2001, float("nan")),))


def test_aligned_uses_shared_years_only():
    first = CountrySeries.from_mapping("A", "x", {2000: 1.0, 2001: 2.0, 2003: 4.0})
    second = CountrySeries.from_mapping("A", "y", {2001: 5.0, 2002: 6.0, 2003: 7.0})
    assert aligned(first, second) == ([2001, 2003], [2.0, 4.0], [5.0, 7.0])


# ============================================================================
# Weighted GDP
# ============================================================================


def test_weighted_gdp_shares_sum_to_one_each_year():
    panel = _panel({"A": {2000: 1.0, 2001: 3.0}, "B": {2000: 3.0, 2001: 1.0}})
    shares = weighted_gdp(panel)
    assert shares["A"].as_dict() == {2000: 0.25, 2001: 0.75}
    assert shares["B"].values == [0.75, 0.25]
    assert shares["A"].quantity == "weighted_gdp"


def test_weighted_gdp_total_covers_indexed_countries_only():
    panel = _panel({"A": {2000: 1.0}, "B": {2000: 1.0}, "Z": {2000: 98.0}})
    shares = weighted_gdp(panel, CountryIndex(("A", "B")))
    assert set(shares) == {"A", "B"}
    assert shares["A"].values == [0.5]


def test_weighted_gdp_restricts_years():
    panel = _panel({"A": {2000: 1.0, 2001: 1.0}, "B": {2000: 1.0}})
    shares = weighted_gdp(panel, years=[2000])
    assert shares["B"].years == [2000]


def test_weighted_gdp_missing_year_names_country():
    panel = _panel({"A": {2000: 1.0, 2001: 1.0}, "B": {2000: 1.0}})
    with pytest.raises(MissingYearValue, match="B in 2001"):
        weighted_gdp(panel)


def test_weighted_gdp_missing_country():
    with pytest.raises(MissingYearValue):
        weighted_gdp(_panel({"A": {2000: 1.0}}), CountryIndex(("A", "B")))


def test_weighted_gdp_rejects_non_positive_values():
    with pytest.raises(NonPositiveGDP):
        weighted_gdp(_panel({"A": {2000: 0.0}, "B": {2000: 1.0}}))


def test_weighted_gdp_is_scale_invariant():
    rng = np.random.default_rng(0)
    raw = {c: {y: float(rng.uniform(1, 100)) for y in range(2000, 2005)} for c in labels(5)}
    scaled = {c: {y: v * 1e9 for y, v in s.items()} for c, s in raw.items()}
    first, second = weighted_gdp(_panel(raw)), weighted_gdp(_panel(scaled))
    for country in raw:
        np.testing.assert_allclose(first[country].values, second[country].values, rtol=1e-13)


# ============================================================================
# Income groups
# ============================================================================


def test_assign_groups_takes_top_half_rounding_up():
    index = CountryIndex(("A", "B", "C", "D", "E"))
    groups = assign_groups({"A": 5.0, "B": 1.0, "C": 4.0, "D": 2.0, "E": 3.0}, index)
    assert sorted(groups.members(1)) == ["A", "C", "E"]
    assert groups.sizes == (3, 2)


def test_assign_groups_breaks_ties_by_label():
    index = CountryIndex(("A", "B", "C", "D"))
    groups = assign_groups({"A": 1.0, "B": 2.0, "C": 2.0, "D": 2.0}, index)
    assert sorted(groups.members(1)) == ["B", "C"]


def test_assign_groups_ignores_countries_outside_index():
    groups = assign_groups({"A": 1.0, "B": 2.0, "Z": 100.0}, CountryIndex(("A", "B")))
    assert groups.groups == {"A": 2, "B": 1}


def test_assign_groups_lists_missing_countries():
    with pytest.raises(MissingValue, match="B, C"):
        assign_groups({"A": 1.0}, CountryIndex(("A", "B", "C")))


def test_per_capita_ranking_reproduces_income_groups(fixtures_dir):
    """Ranking by 2014 per-capita GDP gives the same halves as the published grouping."""
    per_capita = values_for_year(parse_series(fixtures_dir / "per_capita_2014.csv", "per_capita"), 2014)
    published = parse_groups(fixtures_dir / "income_groups.csv")
    index = CountryIndex.from_labels(published.groups)

    derived = assign_groups(per_capita, index)

    assert derived.sizes == (36, 35)
    assert derived.groups == published.groups
    assert derived.group_of("Chile") == 1
    assert derived.group_of("Turkey") == 2


# ============================================================================
# Centrality series
# ============================================================================


def test_centrality_series_one_point_per_year():
    rng = np.random.default_rng(5)
    yearly = create_random_years(rng, 4, [2002, 2000, 2001])
    panel = centrality_series(yearly, "degree", "out")
    assert set(panel) == set(labels(4))
    assert panel["C00"].years == [2000, 2001, 2002]
    assert panel["C00"].quantity == "degree_out"
    for year_pos in range(3):
        assert sum(series.values[year_pos] for series in panel.values()) == pytest.approx(1.0)


def test_centrality_series_threads_do_not_change_results():
    rng = np.random.default_rng(6)
    yearly = create_random_years(rng, 6, range(1990, 2000))
    serial = centrality_series(yearly, "eigenvector", "in", threads=1)
    threaded = centrality_series(yearly, "eigenvector", "in", threads=4)
    assert {c: s.values for c, s in serial.items()} == {c: s.values for c, s in threaded.items()}


def test_centrality_series_requires_shared_index():
    first = create_test_adjacency([[0, 1], [1, 0]], ["A", "B"], year=2000)
    second = create_test_adjacency([[0, 1], [1, 0]], ["A", "C"], year=2001)
    with pytest.raises(IndexMismatch):
        centrality_series([first, second], "degree", "in")


def test_centrality_series_rejects_repeated_year():
    a = create_test_adjacency([[0, 1], [1, 0]], year=2000)
    with pytest.raises(DuplicateYear):
        centrality_series([a, a], "degree", "in")


def test_solver_error_is_tagged_with_year():
    good = create_test_adjacency([[0, 1, 1], [1, 0, 1], [1, 1, 0]], year=2000)
    bad = create_test_adjacency([[0, 0, 0], [1, 0, 1], [1, 1, 0]], year=2001)
    with pytest.raises(DanglingNode) as excinfo:
        centrality_series([good, bad], "randomwalk", "in")
    assert excinfo.value.year == 2001
    assert str(excinfo.value).startswith("year 2001:")


# ============================================================================
# Threads
# ============================================================================


def test_parallel_map_keeps_input_order():
    assert parallel_map(lambda x: x * x, range(20), threads=4) == [x * x for x in range(20)]


def test_parallel_map_raises_earliest_failure():
    def fail_on_odd(x):
        if x % 2:
            raise ValueError(f"item {x}")
        return x

    with pytest.raises(ValueError, match="item 1"):
        parallel_map(fail_on_odd, range(10), threads=3)


def test_resolve_threads_precedence(monkeypatch):
    monkeypatch.setenv("TRADENET_THREADS", "3")
    assert resolve_threads(explicit=2, configured=5) == 2
    assert resolve_threads(configured=5) == 3
    monkeypatch.delenv("TRADENET_THREADS")
    assert resolve_threads(configured=5) == 5
    assert 1 <= resolve_threads() <= 8


@pytest.mark.parametrize("raw", ["zero", "0", "-2"])
def test_invalid_thread_env(monkeypatch, raw):
    monkeypatch.setenv("TRADENET_THREADS", raw)
    with pytest.raises(InvalidThreadCount):
        resolve_threads()


# ============================================================================
# Performance logging
# ============================================================================


def test_perf_logger_requires_start():
    with pytest.raises(RuntimeError, match="start"):
        PerformanceLogger("Study").log_section("x")


def test_perf_logger_emits_sections(caplog):
    caplog.set_level(logging.INFO, logger="tradenet")
    perf = PerformanceLogger("Study").start()
    perf.log_section("Series", {"years": 31})
    with perf.section("Correlations"):
        pass
    perf.log_complete()
    messages = [r.getMessage() for r in caplog.records if r.name.endswith("perf_logger")]
    assert any("[Study] Series:" in m and "years=31" in m for m in messages)
    assert any("[Study] Complete:" in m and "sections: 2" in m for m in messages)

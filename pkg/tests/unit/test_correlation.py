"""Tests for Pearson correlation and its p-value."""

import csv
import math

import numpy as np
import pytest
from scipy import stats
from scipy.special import betainc

from tradenet.errors import DomainError, LengthMismatch, TooFewSamples, ZeroVariance
from tradenet.stats import CorrelationResult, p_value, pearson, regularized_incomplete_beta


def test_perfect_positive_correlation():
    result = pearson([1, 2, 3, 4], [2, 4, 6, 8])
    assert result.r == pytest.approx(1.0, abs=1e-12)
    assert result.p == 0.0
    assert result.significant


def test_perfect_negative_correlation():
    result = pearson([1, 2, 3], [3, 2, 1])
    assert result.r == pytest.approx(-1.0, abs=1e-12)
    assert result.p == pytest.approx(0.0, abs=1e-12)


def test_hand_computed_correlation():
    # Deviations (-2..2) against (-1.8, -0.8, -1.8, 2.2, 2.2): sxy = 11, sxx = 10, syy = 16.8
    result = pearson([1, 2, 3, 4, 5], [2, 3, 2, 6, 6])
    assert result.r == pytest.approx(11 / math.sqrt(10 * 16.8), abs=1e-12)
    assert result.n == 5


def test_uncorrelated_series_have_zero_r_and_unit_p():
    result = pearson([1, 2, 3, 4, 5], [1, 3, 5, 3, 1])
    assert result.r == pytest.approx(0.0, abs=1e-12)
    assert result.p == pytest.approx(1.0, abs=1e-12)
    assert not result.significant


def test_correlation_is_symmetric():
    rng = np.random.default_rng(1)
    x, y = rng.normal(size=20), rng.normal(size=20)
    assert pearson(x, y).r == pytest.approx(pearson(y, x).r, abs=1e-15)
    assert pearson(x, y).p == pytest.approx(pearson(y, x).p, abs=1e-15)


def test_correlation_ignores_affine_rescaling():
    rng = np.random.default_rng(2)
    x, y = rng.normal(size=15), rng.normal(size=15)
    assert pearson(3 * x + 7, 0.5 * y - 2).r == pytest.approx(pearson(x, y).r, abs=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_matches_numpy_corrcoef(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 60))
    x = rng.normal(size=n) * rng.uniform(1e-3, 1e3)
    y = rng.uniform(-1, 1) * x + rng.normal(size=n) * rng.uniform(1e-3, 1e3)
    assert pearson(x, y).r == pytest.approx(np.corrcoef(x, y)[0, 1], abs=1e-12)


def test_constant_series_has_zero_variance():
    with pytest.raises(ZeroVariance):
        pearson([1, 1, 1, 1], [1, 2, 3, 4])
    with pytest.raises(ZeroVariance):
        pearson([1, 2, 3, 4], [5, 5, 5, 5])


def test_rounding_noise_counts_as_constant():
    rng = np.random.default_rng(4)
    base = np.full(31, 1 / 3)
    noisy = base + np.spacing(base) * rng.integers(-2, 3, size=31)
    assert np.ptp(noisy) > 0
    with pytest.raises(ZeroVariance):
        pearson(noisy, np.arange(31.0))
    with pytest.raises(ZeroVariance):
        pearson(np.arange(31.0), noisy * 1e-9)


def test_small_real_variation_is_not_constant():
    x = 1.0 + 1e-9 * np.arange(31.0)
    assert pearson(x, np.arange(31.0)).r == pytest.approx(1.0, abs=1e-6)


def test_too_few_samples():
    with pytest.raises(TooFewSamples):
        pearson([1, 2], [3, 4])


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        pearson([1, 2, 3], [1, 2, 3, 4])


def test_non_finite_values_are_rejected():
    with pytest.raises(DomainError):
        pearson([1, 2, math.nan], [1, 2, 3])


# ============================================================================
# p-values
# ============================================================================


@pytest.mark.parametrize(
    "r, expected",
    [
        (0.221773975, 0.23051),
        (0.979303341, 1.1e-21),
        (0.7232935, 4.287e-06),
        (-0.431558, 0.015346),
    ],
)
def test_published_p_values_for_31_years(r, expected):
    _, p = p_value(r, 31)
    assert p == pytest.approx(expected, rel=0.05)


BRICS = ("Brazil", "Russian Federation", "India", "China, P.R.: Mainland", "South Africa")
RESULT_COLUMNS = {"inout": [("correlation", "p")], "gdp": [("in_r", "in_p"), ("out_r", "out_p")]}


def _printed_half_unit(cell: str) -> float:
    mantissa, _, exponent = cell.upper().partition("E")
    decimals = len(mantissa.partition(".")[2])
    return 0.5 * 10.0 ** (int(exponent or 0) - decimals)


def _brics_pairs(fixtures_dir):
    for kind, columns in RESULT_COLUMNS.items():
        for measure in ("degree", "eigenvector", "randomwalk"):
            with open(fixtures_dir / f"{kind}_{measure}.csv", newline="", encoding="utf-8") as f:
                for row in csv.DictReader(f):
                    if row["country"] in BRICS:
                        for r_col, p_col in columns:
                            yield f"{kind}/{measure}/{row['country']}/{r_col}", row[r_col], row[p_col]


def test_brics_table_p_values_reproduce_to_printed_precision(fixtures_dir):
    pairs = list(_brics_pairs(fixtures_dir))
    # inout tables carry four of the five; the gdp tables carry all five with in and out
    assert len(pairs) == 3 * 4 + 3 * 5 * 2

    for label, r_cell, p_cell in pairs:
        printed = float(p_cell)
        _, p = p_value(float(r_cell), 31)
        if printed < 1e-10:
            assert printed / 2 <= p <= printed * 2, label
        else:
            assert p == pytest.approx(printed, rel=1e-4, abs=_printed_half_unit(p_cell)), label


@pytest.mark.parametrize("n", [3, 4, 10, 31, 200])
@pytest.mark.parametrize("r", [-0.95, -0.3, 0.01, 0.5, 0.999])
def test_p_value_matches_scipy_incomplete_beta(r, n):
    _, p = p_value(r, n)
    expected = betainc((n - 2) / 2, 0.5, (1 - r) * (1 + r))
    assert p == pytest.approx(expected, rel=1e-9, abs=1e-300)


@pytest.mark.parametrize("seed", range(20))
def test_p_value_matches_student_t_tail(seed):
    rng = np.random.default_rng(100 + seed)
    r = float(rng.uniform(-0.99, 0.99))
    n = int(rng.integers(3, 200))
    t_stat, p = p_value(r, n)
    assert t_stat == pytest.approx(r * math.sqrt((n - 2) / (1 - r * r)), rel=1e-12)
    assert p == pytest.approx(2 * stats.t.sf(abs(t_stat), n - 2), rel=1e-8, abs=1e-300)


@pytest.mark.parametrize("n", [3, 5, 31, 500])
@pytest.mark.parametrize("r", [0.0, 1e-8, 0.2, 0.6543, 0.97, 0.999999, 1.0])
def test_p_value_is_even_in_r(r, n):
    t_pos, p_pos = p_value(r, n)
    t_neg, p_neg = p_value(-r, n)
    assert p_pos == p_neg
    assert t_neg == -t_pos


def test_t_statistic_sign_follows_r():
    t_pos, _ = p_value(0.5, 10)
    t_neg, _ = p_value(-0.5, 10)
    assert t_pos == pytest.approx(0.5 * math.sqrt(8 / 0.75))
    assert t_neg == -t_pos


def test_p_value_of_zero_correlation_is_one():
    t_stat, p = p_value(0.0, 12)
    assert t_stat == 0.0
    assert p == 1.0


def test_p_value_is_monotone_in_abs_r():
    ps = [p_value(r, 20)[1] for r in (0.1, 0.3, 0.5, 0.7, 0.9)]
    assert ps == sorted(ps, reverse=True)


@pytest.mark.parametrize("r, n", [(1.5, 10), (0.5, 2), (math.nan, 10)])
def test_p_value_domain(r, n):
    with pytest.raises(DomainError):
        p_value(r, n)


@pytest.mark.parametrize(
    "x, a, b",
    [(0.2, 2.0, 3.0), (0.7, 0.5, 0.5), (0.999, 14.5, 0.5), (1e-6, 1.0, 1.0)],
)
def test_regularized_incomplete_beta_matches_scipy(x, a, b):
    assert regularized_incomplete_beta(x, a, b) == pytest.approx(betainc(a, b, x), rel=1e-10)


def test_regularized_incomplete_beta_endpoints_and_domain():
    assert regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0
    assert regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0
    with pytest.raises(DomainError):
        regularized_incomplete_beta(1.2, 2.0, 3.0)
    with pytest.raises(DomainError):
        regularized_incomplete_beta(0.5, 0.0, 3.0)


# ============================================================================
# Results
# ============================================================================


def test_significance_is_strict():
    assert not CorrelationResult.from_reported(0.4, 0.05).significant
    assert CorrelationResult.from_reported(0.4, 0.0499).significant
    assert CorrelationResult.from_reported(-0.8, 0.001).significant


def test_with_alpha_recomputes_significance():
    result = CorrelationResult.from_reported(0.4, 0.03)
    assert result.significant
    assert not result.with_alpha(0.01).significant


@pytest.mark.parametrize("r, p", [(1.2, 0.1), (0.5, -0.1), (0.5, 1.5)])
def test_reported_result_domain(r, p):
    with pytest.raises(DomainError):
        CorrelationResult.from_reported(r, p)


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.1])
def test_alpha_must_be_open_unit_interval(alpha):
    with pytest.raises(DomainError):
        pearson([1, 2, 3], [1, 3, 2], alpha=alpha)

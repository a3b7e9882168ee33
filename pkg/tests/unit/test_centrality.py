"""Tests for degree, eigenvector and random-walk centrality."""

import math

import numpy as np
import pytest

from tests.conftest import create_random_flows, create_test_adjacency, labels
from tradenet.centrality import (
    SolverOptions,
    build_transition,
    compute_centrality,
    degree_in,
    degree_out,
    power_iteration,
    randomwalk_in,
    randomwalk_out,
    stationary_distribution,
)
from tradenet.centrality.eigenvector import eigenvector_in, eigenvector_out
from tradenet.errors import DanglingNode, NoConvergence, ReducibleNetwork, ZeroLimit
from tradenet.network import CountryIndex, TradeMatrix, normalize

TWO_COUNTRY = [[0, 0.6], [0.4, 0]]
LAMBDA_TWO = math.sqrt(0.24)


def _cesaro_limit(m: np.ndarray, squarings: int = 20) -> np.ndarray:
    """Stationary vector as the averaged long-run state of the chain."""
    n = m.shape[0]
    # (M + I)/2 is aperiodic with the same fixed points
    lazy = (m + np.eye(n)) / 2
    power = lazy.copy()
    for _ in range(squarings):
        power = power @ power
    p = power @ np.full(n, 1.0 / n)
    return p / p.sum()


def _random_adjacency(seed: int, n: int, density: float = 1.0):
    rng = np.random.default_rng(seed)
    return create_test_adjacency(create_random_flows(rng, n, density))


# ============================================================================
# Degree
# ============================================================================


def test_degree_out_is_row_sums():
    a = create_test_adjacency(TWO_COUNTRY)
    assert degree_out(a).values.tolist() == pytest.approx([0.6, 0.4])
    assert degree_in(a).values.tolist() == pytest.approx([0.4, 0.6])


def test_degree_uniform_complete_network():
    a = create_test_adjacency([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    np.testing.assert_allclose(degree_out(a).values, [1 / 3] * 3, atol=1e-15)


def test_degree_matches_pairwise_summation():
    a = _random_adjacency(3, 4)
    expected = [math.fsum(row) for row in a.weights]
    np.testing.assert_allclose(degree_out(a).values, expected, rtol=1e-14)


def test_degree_in_equals_degree_out_of_transpose():
    a = _random_adjacency(5, 6)
    np.testing.assert_array_equal(degree_in(a).values, degree_out(a.transposed()).values)


# ============================================================================
# Eigenvector
# ============================================================================


def test_eigenvector_symmetric_two_country():
    a = create_test_adjacency([[0, 0.5], [0.5, 0]])
    vector = eigenvector_out(a)
    np.testing.assert_allclose(vector.values, [0.5, 0.5], atol=1e-12)
    assert vector.leading_eigenvalue == pytest.approx(0.5, abs=1e-12)


def test_eigenvector_out_two_country_analytic():
    # Plain power iteration oscillates here; the result must still converge
    vector = eigenvector_out(create_test_adjacency(TWO_COUNTRY))
    x1 = 0.6 / (0.6 + LAMBDA_TWO)
    np.testing.assert_allclose(vector.values, [x1, 1 - x1], atol=1e-9)
    assert vector.values[0] == pytest.approx(0.550510, abs=1e-6)
    assert vector.leading_eigenvalue == pytest.approx(LAMBDA_TWO, abs=1e-9)


def test_eigenvector_in_two_country_analytic():
    vector = eigenvector_in(create_test_adjacency(TWO_COUNTRY))
    assert vector.values[0] == pytest.approx(0.449490, abs=1e-6)
    assert vector.values[1] == pytest.approx(0.550510, abs=1e-6)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_eigenvector_uniform_complete_network(n):
    flows = np.ones((n, n)) - np.eye(n)
    vector = eigenvector_out(create_test_adjacency(flows))
    weight = 1 / (n * (n - 1))
    np.testing.assert_allclose(vector.values, [1 / n] * n, atol=1e-10)
    assert vector.leading_eigenvalue == pytest.approx((n - 1) * weight, rel=1e-9)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_eigenvector_in_equals_out_of_transpose(seed):
    a = _random_adjacency(seed, 7)
    np.testing.assert_allclose(eigenvector_in(a).values, eigenvector_out(a.transposed()).values, atol=1e-10)


def test_eigenvector_satisfies_eigen_equation():
    a = _random_adjacency(11, 10)
    vector = eigenvector_out(a)
    residual = a.weights @ vector.values - vector.leading_eigenvalue * vector.values
    assert np.abs(residual).max() < 1e-10


@pytest.mark.parametrize("seed", [12, 13])
def test_eigenvector_matches_dense_eigensolver(seed):
    a = _random_adjacency(seed, 9)
    eigenvalues, eigenvectors = np.linalg.eig(a.weights)
    k = int(np.argmax(eigenvalues.real))
    expected = np.abs(eigenvectors[:, k].real)
    expected /= expected.sum()

    vector = eigenvector_out(a)
    np.testing.assert_allclose(vector.values, expected, atol=1e-9)
    assert vector.leading_eigenvalue == pytest.approx(eigenvalues[k].real, abs=1e-10)


def test_eigenvector_symmetric_network_in_equals_out():
    rng = np.random.default_rng(4)
    flows = create_random_flows(rng, 6)
    a = create_test_adjacency(flows + flows.T)
    np.testing.assert_allclose(eigenvector_in(a).values, eigenvector_out(a).values, atol=1e-10)


def test_eigenvector_acyclic_network_has_zero_limit():
    a = create_test_adjacency([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    with pytest.raises(ZeroLimit):
        eigenvector_out(a)


def test_eigenvector_no_convergence_carries_last_iterate():
    a = _random_adjacency(2, 6)
    with pytest.raises(NoConvergence) as excinfo:
        eigenvector_out(a, SolverOptions(tolerance=1e-300, max_iterations=3))
    assert excinfo.value.iterations == 3
    assert excinfo.value.last_iterate.sum() == pytest.approx(1.0)
    assert excinfo.value.last_change > 0
    assert excinfo.value.exit_code == 3


def test_power_iteration_reports_sweeps():
    x, eigenvalue, sweeps = power_iteration(np.array([[0, 1.0], [1.0, 0]]), SolverOptions())
    np.testing.assert_allclose(x, [0.5, 0.5])
    assert eigenvalue == pytest.approx(1.0)
    assert sweeps >= 1


# ============================================================================
# Random walk
# ============================================================================


def test_transition_two_country_swaps_states():
    m = build_transition(create_test_adjacency(TWO_COUNTRY), "in_walk")
    np.testing.assert_allclose(m.entries, [[0, 1], [1, 0]])


@pytest.mark.parametrize("kind", ["in_walk", "out_walk"])
def test_transition_columns_sum_to_one(kind):
    m = build_transition(_random_adjacency(9, 3), kind)
    np.testing.assert_allclose(m.entries.sum(axis=0), np.ones(3), atol=1e-12)


def test_dangling_exporter_errors_by_default():
    a = create_test_adjacency([[0, 0, 0], [1, 0, 1], [1, 1, 0]], ["A", "B", "C"])
    with pytest.raises(DanglingNode) as excinfo:
        build_transition(a, "in_walk")
    assert excinfo.value.countries == ["A"]
    assert "A" in str(excinfo.value)


def test_dangling_column_becomes_uniform_with_policy():
    a = create_test_adjacency([[0, 0, 0], [1, 0, 1], [1, 1, 0]], ["A", "B", "C"])
    m = build_transition(a, "in_walk", "uniform")
    np.testing.assert_allclose(m.entries[:, 0], [1 / 3] * 3)


def test_randomwalk_two_country():
    a = create_test_adjacency(TWO_COUNTRY)
    np.testing.assert_allclose(randomwalk_in(a).values, [0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose(randomwalk_out(a).values, [0.5, 0.5], atol=1e-12)


def test_randomwalk_uniform_complete_network():
    a = create_test_adjacency(np.ones((4, 4)) - np.eye(4))
    np.testing.assert_allclose(randomwalk_in(a).values, [0.25] * 4, atol=1e-12)


def test_randomwalk_three_country_hand_solved():
    # Exports: A->B 2, B->C 1, C->A 1, C->B 1. In-walk columns: A->(B:1),
    # B->(C:1), C->(A:1/2, B:1/2); stationary p solves pA = pC/2,
    # pB = pA + pC/2, pC = pB, so p = (1, 2, 2)/5.
    a = create_test_adjacency([[0, 2, 0], [0, 0, 1], [1, 1, 0]])
    np.testing.assert_allclose(randomwalk_in(a).values, [0.2, 0.4, 0.4], atol=1e-10)


def test_randomwalk_matches_cesaro_oracle():
    a = _random_adjacency(21, 8, density=0.8)
    m = build_transition(a, "out_walk", "uniform")
    np.testing.assert_allclose(stationary_distribution(m), _cesaro_limit(m.entries), atol=1e-10)


@pytest.mark.parametrize("seed", [0, 1])
def test_randomwalk_out_equals_in_of_transpose(seed):
    a = _random_adjacency(seed, 6)
    np.testing.assert_allclose(randomwalk_out(a).values, randomwalk_in(a.transposed()).values, atol=1e-10)


def test_reducible_network_names_components():
    # Two disconnected pairs
    a = create_test_adjacency(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], ["A", "B", "C", "D"]
    )
    with pytest.raises(ReducibleNetwork) as excinfo:
        randomwalk_in(a)
    assert excinfo.value.components == [["A", "B"], ["C", "D"]]
    assert "{C, D}" in str(excinfo.value)


# ============================================================================
# Dispatch and invariants
# ============================================================================


@pytest.mark.parametrize("measure", ["degree", "eigenvector", "randomwalk"])
@pytest.mark.parametrize("direction", ["in", "out"])
def test_every_measure_sums_to_one_and_is_nonnegative(measure, direction):
    a = _random_adjacency(31, 9)
    vector = compute_centrality(a, measure, direction)
    assert vector.values.sum() == pytest.approx(1.0, abs=1e-10)
    assert (vector.values >= 0).all()
    assert vector.measure == measure
    assert vector.direction == direction


@pytest.mark.parametrize("measure", ["degree", "eigenvector", "randomwalk"])
@pytest.mark.parametrize("direction", ["in", "out"])
def test_relabeling_permutes_values(measure, direction):
    a = _random_adjacency(8, 5)
    names = a.countries.names
    shuffled = tuple(names[i] for i in np.random.default_rng(8).permutation(len(names)))
    permuted = a.reindexed(CountryIndex(shuffled))
    original = compute_centrality(a, measure, direction).as_dict()
    relabeled = compute_centrality(permuted, measure, direction).as_dict()
    for country, value in original.items():
        assert relabeled[country] == pytest.approx(value, abs=1e-10)


@pytest.mark.parametrize("measure", ["degree", "eigenvector", "randomwalk"])
@pytest.mark.parametrize("direction", ["in", "out"])
@pytest.mark.parametrize("scale", [1e-6, 1.0, 1e6])
def test_centrality_ignores_trade_units(measure, direction, scale):
    """Test that scaling every raw flow by one factor leaves each centrality unchanged."""
    flows = create_random_flows(np.random.default_rng(17), 7, density=0.9)
    for i in range(7):
        flows[i, (i + 1) % 7] += 1.0
    raw = TradeMatrix(2000, CountryIndex(tuple(labels(7))), flows)

    reference = compute_centrality(normalize(raw), measure, direction)
    scaled = compute_centrality(normalize(raw.scaled(scale)), measure, direction)

    np.testing.assert_allclose(scaled.values, reference.values, rtol=0, atol=1e-10)


# ============================================================================
# Random strongly connected networks
# ============================================================================


def _strongly_connected_networks(seed: int, count: int):
    """Random 2-5 country networks; a ring of exports keeps each one strongly connected."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, 6))
        flows = create_random_flows(rng, n, density=float(rng.uniform(0.3, 1.0)))
        for i in range(n):
            flows[i, (i + 1) % n] += rng.uniform(1.0, 100.0)
        yield create_test_adjacency(flows)


def test_eigenvector_residual_on_random_networks():
    for a in _strongly_connected_networks(101, 1000):
        for solver, matrix in ((eigenvector_out, a.weights), (eigenvector_in, a.weights.T)):
            vector = solver(a)
            residual = matrix @ vector.values - vector.leading_eigenvalue * vector.values
            assert np.abs(residual).sum() <= 1e-8
            assert (vector.values > 0).all()


def test_randomwalk_residual_on_random_networks():
    for a in _strongly_connected_networks(202, 1000):
        for kind in ("in_walk", "out_walk"):
            m = build_transition(a, kind)
            np.testing.assert_allclose(m.entries.sum(axis=0), np.ones(a.size), atol=1e-12)
            p = stationary_distribution(m)
            assert np.abs(m.entries @ p - p).max() <= 1e-10
            assert p.sum() == pytest.approx(1.0, abs=1e-12)


def test_unknown_measure_is_rejected():
    with pytest.raises(ValueError, match="Unknown measure"):
        compute_centrality(create_test_adjacency(TWO_COUNTRY), "pagerank", "in")


def test_solver_options_validate():
    with pytest.raises(ValueError):
        SolverOptions(tolerance=0)
    with pytest.raises(ValueError):
        SolverOptions(max_iterations=0)
    with pytest.raises(ValueError):
        SolverOptions(dangling_policy="drop")

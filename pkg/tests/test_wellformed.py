import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import perturb_one_amplitude, random_simple
from qf1ca.automaton import general_from_simple
from qf1ca.wellformed import (NotIsometric, check_conditions,
                              check_matrix_unitary, check_simple,
                              complete_unitary, isometry_oracle)

ORACLE_WORDS = ["", "0", "1", "01", "10", "0011"]


def oracle_max(g, counter_bound=6):
    return max(isometry_oracle(g, w, counter_bound) for w in ORACLE_WORDS)


def test_check_matrix_unitary_accepts_and_rejects():
    ok, res = check_matrix_unitary(np.eye(3))
    assert ok and res < 1e-15
    ok, res = check_matrix_unitary(np.eye(3) * 1.01)
    assert not ok and res > 1e-3
    with pytest.raises(ValueError):
        check_matrix_unitary(np.ones((2, 3)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_random_simple_automata_are_well_formed(seed):
    rng = np.random.default_rng(seed)
    a = random_simple(rng)
    assert check_simple(a).ok
    g = general_from_simple(a)
    report = check_conditions(g, tol=1e-9, strict=True)
    assert report.ok, report.violations[:3]
    assert oracle_max(g) < 1e-9


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_conditions_agree_with_matrix_oracle_on_perturbations(seed):
    rng = np.random.default_rng(seed)
    a = perturb_one_amplitude(random_simple(rng), rng)
    g = general_from_simple(a)
    report = check_conditions(g, tol=1e-9, strict=True)
    assert not report.ok
    assert report.max_residual >= 1e-4
    assert oracle_max(g) >= 1e-4
    assert not check_simple(a).ok


def test_strict_mode_is_a_superset_of_literal_mode():
    rng = np.random.default_rng(7)
    g = general_from_simple(perturb_one_amplitude(random_simple(rng), rng))
    literal = check_conditions(g, strict=False)
    strict = check_conditions(g, strict=True)
    literal_keys = {(v.condition, v.symbol, v.signs, v.states)
                    for v in literal.violations}
    strict_keys = {(v.condition, v.symbol, v.signs, v.states)
                   for v in strict.violations}
    assert literal_keys <= strict_keys


def test_isometry_oracle_rejects_short_counter_bound():
    g = general_from_simple(random_simple(np.random.default_rng(0)))
    with pytest.raises(ValueError):
        isometry_oracle(g, "0000", counter_bound=3)


def test_complete_unitary_fills_missing_columns():
    col = np.array([1, 1, 0, 0], dtype=complex) / np.sqrt(2)
    m = complete_unitary({0: col}, 4)
    ok, res = check_matrix_unitary(m)
    assert ok, res
    assert np.allclose(m[:, 0], col)


def test_complete_unitary_empty_input_is_identity():
    assert np.allclose(complete_unitary({}, 3), np.eye(3))


def test_complete_unitary_is_deterministic():
    col = np.array([0.6, 0.8j, 0], dtype=complex)
    assert np.array_equal(complete_unitary({1: col}, 3),
                          complete_unitary({1: col}, 3))


def test_complete_unitary_rejects_non_isometric_input():
    with pytest.raises(NotIsometric):
        complete_unitary({0: np.array([1, 1], dtype=complex)}, 2)
    with pytest.raises(NotIsometric):
        complete_unitary({0: np.array([1, 0], dtype=complex),
                          1: np.array([1, 0], dtype=complex)}, 2)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 6))
def test_complete_unitary_preserves_given_columns(seed, n):
    rng = np.random.default_rng(seed)
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, _ = np.linalg.qr(z)
    k = int(rng.integers(1, n))
    cols = {int(j): q[:, j] for j in rng.choice(n, size=k, replace=False)}
    m = complete_unitary(cols, n)
    ok, res = check_matrix_unitary(m)
    assert ok, res
    for j, col in cols.items():
        assert np.allclose(m[:, j], col)

import pickle

import numpy as np
import pytest

import helpers
from pptedge.bipartite import BipartiteOperator, schmidt_coefficients
from pptedge.optimize import (
    OptResult,
    QuadraticTerm,
    SeeSawConfig,
    min_generic_quadratic,
    min_product_expectation,
    min_schmidt2_expectation,
)

QUICK = SeeSawConfig(restarts=30, max_iter=300, seed=5)


def _product_value(h: np.ndarray, pv) -> float:
    v = pv.tensor()
    return float(np.real(np.vdot(v, h @ v)))


def test_identity_objective_is_one():
    res = min_product_expectation(np.eye(9), QUICK)
    assert abs(res.best_value - 1.0) < 1e-12


def test_max_entangled_projector_reaches_zero():
    v = helpers.max_entangled_vector(3)
    res = min_product_expectation(np.outer(v, v.conj()), QUICK)
    assert res.best_value < 1e-9


def test_swap_operator_reaches_zero():
    res = min_product_expectation(helpers.swap_operator(3), QUICK)
    assert -1e-12 <= res.best_value < 1e-9


def test_zero_objective():
    res = min_generic_quadratic([QuadraticTerm(np.zeros((9, 9)))], QUICK)
    assert abs(res.best_value) < 1e-12


def test_full_space_projector_complement_is_zero():
    # objective norm((I - P) v)^2 with P the full-space projector
    res = min_generic_quadratic([QuadraticTerm(np.eye(9) - np.eye(9))], QUICK)
    assert abs(res.best_value) < 1e-12


def test_best_value_is_minimum_of_restarts():
    rng = np.random.default_rng(0)
    h = helpers.random_hermitian(rng, 9)
    res = min_product_expectation(h, QUICK)
    assert res.best_value == float(res.restart_values.min())
    assert res.best_index == int(np.argmin(res.restart_values))


def test_argmin_reevaluates_to_best_value():
    rng = np.random.default_rng(1)
    h = helpers.random_hermitian(rng, 9)
    res = min_product_expectation(h, QUICK)
    assert abs(_product_value(h, res.argmin) - res.best_value) < 1e-10


def test_argmin_reevaluation_with_conjugate_term():
    rng = np.random.default_rng(2)
    h1 = helpers.random_hermitian(rng, 9)
    h2 = helpers.random_hermitian(rng, 9)
    res = min_generic_quadratic([QuadraticTerm(h1, False), QuadraticTerm(h2, True)], QUICK)
    pv = res.argmin
    direct = np.real(np.vdot(pv.tensor(), h1 @ pv.tensor()))
    partner = pv.conjugate_partner()
    direct += np.real(np.vdot(partner, h2 @ partner))
    assert abs(direct - res.best_value) < 1e-10


def test_monotone_half_steps_product():
    rng = np.random.default_rng(3)
    cfg = SeeSawConfig(restarts=20, max_iter=200, seed=9, record_trace=True)
    h1 = helpers.random_hermitian(rng, 9)
    h2 = helpers.random_hermitian(rng, 9)
    res = min_generic_quadratic([QuadraticTerm(h1, False), QuadraticTerm(h2, True)], cfg)
    assert res.traces is not None
    for trace in res.traces:
        diffs = np.diff(np.array(trace))
        assert diffs.max(initial=-np.inf) <= 1e-14


def test_monotone_half_steps_schmidt2():
    rng = np.random.default_rng(4)
    cfg = SeeSawConfig(restarts=20, max_iter=200, seed=9, record_trace=True)
    res = min_schmidt2_expectation(helpers.random_hermitian(rng, 9), cfg)
    for trace in res.traces:
        diffs = np.diff(np.array(trace))
        assert diffs.max(initial=-np.inf) <= 1e-14


def test_deterministic_results_byte_identical():
    rng = np.random.default_rng(5)
    h = helpers.random_hermitian(rng, 9)
    first = min_product_expectation(h, QUICK)
    second = min_product_expectation(h, QUICK)
    assert pickle.dumps(first) == pickle.dumps(second)
    s_first = min_schmidt2_expectation(h, QUICK)
    s_second = min_schmidt2_expectation(h, QUICK)
    assert pickle.dumps(s_first) == pickle.dumps(s_second)


def test_brute_force_oracle_agreement_2x2():
    rng = np.random.default_rng(2024)
    cfg = SeeSawConfig(restarts=50, max_iter=300, seed=1)
    for trial in range(6):
        h = helpers.random_hermitian(rng, 4)
        res = min_product_expectation(h, cfg, dims=(2, 2))
        oracle = helpers.brute_force_product_min_2x2(h)
        assert abs(res.best_value - oracle) < 1e-4, f"trial {trial}"


def test_schmidt2_identity_is_one():
    res = min_schmidt2_expectation(np.eye(9), QUICK)
    assert abs(res.best_value - 1.0) < 1e-12


def test_schmidt2_reaches_rank_two_ground_state():
    bell = np.zeros(9, dtype=complex)
    bell[0] = bell[4] = 1.0 / np.sqrt(2)
    h = np.eye(9) - 2.0 * np.outer(bell, bell.conj())
    res = min_schmidt2_expectation(h, QUICK)
    assert abs(res.best_value + 1.0) < 1e-9


def test_schmidt2_feasibility():
    h = helpers.random_hermitian(np.random.default_rng(6), 9)
    res = min_schmidt2_expectation(h, QUICK)
    vec = res.argmin.vector
    assert abs(np.linalg.norm(vec) - 1.0) < 1e-12
    coeffs = schmidt_coefficients(vec, 3, 3)
    assert coeffs[2] < 1e-8 * coeffs[0]
    direct = float(np.real(np.vdot(vec, h @ vec)))
    assert abs(direct - res.best_value) < 1e-10


def test_restart_metadata_shapes():
    res = min_product_expectation(np.eye(9), SeeSawConfig(restarts=7, max_iter=50, seed=2))
    assert len(res.restart_values) == 7
    assert len(res.iterations_used) == 7
    assert len(res.converged) == 7
    assert res.converged.all()
    assert isinstance(res, OptResult)
    payload = res.to_dict()
    assert payload["best_value"] == res.best_value


def test_config_validation():
    with pytest.raises(ValueError):
        SeeSawConfig(restarts=0)
    with pytest.raises(ValueError):
        SeeSawConfig(max_iter=0)
    with pytest.raises(ValueError):
        SeeSawConfig(conv_tol=0.0)


def test_rejects_non_hermitian():
    bad = np.zeros((9, 9))
    bad[0, 1] = 1.0
    with pytest.raises(ValueError):
        min_product_expectation(bad, QUICK)
    with pytest.raises(ValueError):
        min_schmidt2_expectation(bad, QUICK)


def test_dims_inference_and_validation():
    op = BipartiteOperator(np.eye(6), 2, 3)
    res = min_product_expectation(op, SeeSawConfig(restarts=4, max_iter=30, seed=3))
    assert abs(res.best_value - 1.0) < 1e-12
    assert res.argmin.a.size == 2 and res.argmin.b.size == 3
    with pytest.raises(ValueError):
        min_product_expectation(np.eye(6), QUICK)  # 6 is not a perfect square, dims required
    with pytest.raises(ValueError):
        min_product_expectation(np.eye(9), QUICK, dims=(2, 3))
    with pytest.raises(ValueError):
        min_generic_quadratic([], QUICK)
    with pytest.raises(ValueError):
        min_schmidt2_expectation(np.eye(6), QUICK)

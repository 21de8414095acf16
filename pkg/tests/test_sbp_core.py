import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from charsbp.banded import BandedOperator
from charsbp.sbp1d import (BORROWING, MIN_N, ORDERS, SbpOperatorSet1D, build_first_derivative,
                           build_second_derivative, verify_operator_accuracy)


@pytest.mark.parametrize("order", ORDERS)
def test_d1_annihilates_constants_and_differentiates_linears(order):
    _, D1, _ = build_first_derivative(order, 30)
    x = np.linspace(0, 1, 31)
    assert np.abs(D1 @ np.ones(31)).max() < 1e-12
    assert np.abs(D1 @ x - 1).max() < 1e-12


def test_q_boundary_identity_order4_n50():
    _, _, Q = build_first_derivative(4, 50)
    E = np.zeros((51, 51))
    E[0, 0], E[-1, -1] = -1, 1
    assert np.abs(Q + Q.T - E).max() <= 1e-14


@pytest.mark.parametrize("order", [4, 6])
def test_d11_quadratic_interior_exact(order):
    N = 40
    x = np.linspace(0, 1, N + 1)
    D11, _, _, _ = build_second_derivative(order, N, np.ones(N + 1))
    assert np.abs(D11 @ x**2 - 2)[10:-10].max() < 1e-10


@pytest.mark.parametrize("order", ORDERS)
def test_d11_constant_and_boundary_rows(order):
    N = 30
    D11, _, b0, bN = build_second_derivative(order, N, np.ones(N + 1))
    u = np.full(N + 1, 3.0)
    assert np.abs(D11 @ u).max() < 1e-10
    assert abs(b0 @ u) < 1e-11 and abs(bN @ u) < 1e-11


def test_second_derivative_decomposition_random_c():
    rng = np.random.default_rng(0)
    N = 20
    c = rng.uniform(0.1, 3, N + 1)
    u = rng.standard_normal(N + 1)
    ops = SbpOperatorSet1D(2, N)
    D11, A, b0, bN = ops.second_derivative(c)
    lhs = ops.H @ D11 @ u
    rhs = -A @ u + c[-1] * (bN @ u) * np.eye(N + 1)[-1] - c[0] * (b0 @ u) * np.eye(N + 1)[0]
    assert np.abs(lhs - rhs).max() <= 1e-13


def test_accuracy_report_limits():
    rep2 = verify_operator_accuracy(SbpOperatorSet1D(2, 40))
    assert rep2.d1_interior[3] > 1e-8  # second order is inexact on cubics
    rep6 = verify_operator_accuracy(SbpOperatorSet1D(6, 40))
    assert rep6.d1_interior[4] <= 1e-12
    for order in ORDERS:
        rep = verify_operator_accuracy(SbpOperatorSet1D(order, 40))
        assert rep.b_residual[1] <= 1e-13 * 40


@pytest.mark.parametrize("order", ORDERS)
def test_exactness_degrees(order):
    p = order // 2
    rep = verify_operator_accuracy(SbpOperatorSet1D(order, 48))
    for k in range(0, p + 1):
        assert rep.d1_boundary[k] < 1e-9
    for k in range(0, 2 * p + 1):
        assert rep.d1_interior[k] < 1e-8
    for k in range(0, p + 1):
        assert rep.b_residual[k] < 1e-8


@pytest.mark.parametrize("order", ORDERS)
def test_sbp_identity_random(order):
    rng = np.random.default_rng(order)
    ops = SbpOperatorSet1D(order, 37)
    HD = ops.H @ ops.D1
    for _ in range(100):
        u, v = rng.standard_normal((2, ops.n))
        lhs = u @ HD @ v + v @ HD @ u
        assert abs(lhs - (u[-1] * v[-1] - u[0] * v[0])) <= 1e-13 * max(1, np.abs(u).max() * np.abs(v).max() * ops.n)


@pytest.mark.parametrize("order", ORDERS)
def test_norm_sums_to_one(order):
    ops = SbpOperatorSet1D(order, 33)
    assert abs(np.trace(ops.H) - 1) < 1e-14


@pytest.mark.parametrize("order", ORDERS)
def test_A_positive_semidefinite_random_c(order):
    rng = np.random.default_rng(10 + order)
    ops = SbpOperatorSet1D(order, 24)
    for _ in range(50):
        c = rng.uniform(0, 5, ops.n) * (rng.random(ops.n) > 0.1)
        _, A, _, _ = ops.second_derivative(c)
        ev = np.linalg.eigvalsh(A)
        assert ev.min() >= -1e-10 * np.abs(ev).max()


def test_shared_norm():
    ops = SbpOperatorSet1D(4, 20)
    H1, _, _ = build_first_derivative(4, 20)
    D11, A, b0, bN = ops.second_derivative(np.ones(21))
    # H D11 = -A + boundary terms, with the same H
    HD = -A.copy()
    HD[-1] += bN
    HD[0] -= b0
    assert np.abs(H1 @ D11 - HD).max() < 1e-10


def test_borrowing_table():
    assert BORROWING[2] == (BORROWING[2].__class__(1 / 2, 1.0, 2))
    assert (BORROWING[4].theta_bar, BORROWING[4].zeta_bar, BORROWING[4].m_b) == (17 / 48, 0.5776, 4)
    assert (BORROWING[6].theta_bar, BORROWING[6].zeta_bar, BORROWING[6].m_b) == (13649 / 43200, 0.3697, 7)


def test_errors():
    with pytest.raises(ValueError, match="unsupported order"):
        SbpOperatorSet1D(8, 40)
    for order, nmin in MIN_N.items():
        with pytest.raises(ValueError, match="too small"):
            SbpOperatorSet1D(order, nmin - 1)
    with pytest.raises(ValueError, match="nonnegative"):
        build_second_derivative(2, 10, -np.ones(11))


@pytest.mark.parametrize("order", ORDERS)
def test_banded_matches_dense(order):
    rng = np.random.default_rng(3)
    ops = SbpOperatorSet1D(order, 60)
    M = ops.D1w
    K = BandedOperator.from_dense(M)
    assert np.abs(K.to_dense() - M).max() == 0
    X = rng.standard_normal((4, ops.n, 3))
    assert np.abs(K.apply(X, axis=1) - np.einsum("ij,ajb->aib", M, X)).max() < 1e-13
    c = rng.uniform(0.5, 2, ops.n)
    u = rng.standard_normal(ops.n)
    assert np.abs(ops.apply_A(c, u) - ops.A_index(c) @ u).max() < 1e-13


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ORDERS), st.integers(0, 30), st.integers(0, 2**31 - 1))
def test_A_symmetric_property(order, extra, seed):
    ops = SbpOperatorSet1D(order, MIN_N[order] + extra)
    c = np.random.default_rng(seed).uniform(0, 3, ops.n)
    A = ops.A_index(c)
    assert np.abs(A - A.T).max() <= 1e-13 * max(1, np.abs(A).max())
    assert np.abs(A @ np.ones(ops.n)).max() < 1e-12 * max(1, np.abs(A).max())

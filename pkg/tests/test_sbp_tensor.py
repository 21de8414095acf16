import numpy as np
import pytest

from charsbp.sbp2d import SbpOperatorSet2D, verify_multidim_sbp


def grid(N):
    xi = np.linspace(0, 1, N + 1)
    X2, X1 = np.meshgrid(xi, xi, indexing="ij")
    return X1, X2


def random_spd_fields(rng, n):
    a = rng.uniform(0.5, 2, (n, n))
    b = rng.uniform(0.5, 2, (n, n))
    c = rng.uniform(-0.4, 0.4, (n, n)) * np.sqrt(a * b)
    return a, c, b


def test_face_restriction_examples():
    ops = SbpOperatorSet2D(2, 4)
    X1, X2 = grid(4)
    assert np.all(ops.face_restriction(1) @ X1.ravel() == 0)
    assert np.all(ops.face_restriction(3) @ X2.ravel() == 0)
    assert np.allclose(ops.face_restriction(2) @ (X1 + X2).ravel(), [1, 1.25, 1.5, 1.75, 2], atol=0)
    with pytest.raises(ValueError):
        ops.face_restriction(5)


def test_face_restriction_unit_rows():
    L = SbpOperatorSet2D(4, 12).face_restriction(4)
    assert np.all(L.sum(axis=1) == 1) and set(np.unique(L)) == {0.0, 1.0}


@pytest.mark.parametrize("order", [4, 6])
def test_gradient_energy_of_linear(order):
    N = 20
    ops = SbpOperatorSet2D(order, N)
    one = np.ones((N + 1, N + 1))
    A, _ = ops.build_stiffness(one, 0 * one, one)
    S = sum(A.values())
    u = grid(N)[0].ravel()
    assert abs(u @ S @ u - 1) <= 1e-10


def test_stiffness_annihilates_constants():
    N = 12
    ops = SbpOperatorSet2D(2, N)
    one = np.ones((N + 1, N + 1))
    U = np.full((N + 1, N + 1), 2.5)
    assert np.abs(ops.apply_stiffness(one, 0 * one, one, U)).max() < 1e-13


@pytest.mark.parametrize("order,N", [(2, 8), (4, 12), (6, 17)])
def test_stiffness_psd_random(order, N):
    rng = np.random.default_rng(order)
    ops = SbpOperatorSet2D(order, N)
    C11, C12, C22 = random_spd_fields(rng, N + 1)
    A, _ = ops.build_stiffness(C11, C12, C22)
    S = sum(A.values())
    assert np.abs(S - S.T).max() < 1e-12
    ev = np.linalg.eigvalsh(0.5 * (S + S.T))
    assert ev.min() >= -1e-10 * np.abs(ev).max()
    assert np.abs(A[(1, 2)].T - A[(2, 1)]).max() < 1e-13


def test_non_spd_rejected():
    ops = SbpOperatorSet2D(2, 6)
    one = np.ones((7, 7))
    with pytest.raises(ValueError):
        ops.build_stiffness(one, 2 * one, one)


@pytest.mark.parametrize("order", [2, 4, 6])
def test_multidim_sbp_identity(order):
    rng = np.random.default_rng(1)
    N = {2: 6, 4: 12, 6: 17}[order]
    ops = SbpOperatorSet2D(order, N)
    n = N + 1
    one = np.ones((n, n))
    rep = verify_multidim_sbp(ops, one, 0 * one, one)
    assert rep.residual[(1, 1)] <= 1e-13 * N
    C11, C12, C22 = random_spd_fields(rng, n)
    rep = verify_multidim_sbp(ops, C11, C12, C22)
    assert max(rep.residual.values()) <= 1e-13 * N**2
    zero = np.zeros((n, n))
    assert max(verify_multidim_sbp(ops, zero, zero, zero).residual.values()) == 0


def test_multidim_sbp_identity_exact_tolerance():
    # tolerance for N = 6, order 2
    rng = np.random.default_rng(5)
    ops = SbpOperatorSet2D(2, 6)
    one = np.ones((7, 7))
    assert verify_multidim_sbp(ops, one, 0 * one, one).residual[(1, 1)] <= 1e-13
    C11, C12, C22 = random_spd_fields(rng, 7)
    assert verify_multidim_sbp(ops, C11, C12, C22).residual[(1, 2)] <= 1e-13


@pytest.mark.parametrize("f", [1, 2, 3, 4])
def test_face_norm_quadrature(f):
    ops = SbpOperatorSet2D(4, 16)
    assert abs(np.trace(ops.face_norm(f)) - 1) < 1e-14


@pytest.mark.parametrize("order", [2, 4, 6])
def test_boundary_derivative_on_monomials(order):
    N = 24
    ops = SbpOperatorSet2D(order, N)
    X1, X2 = grid(N)
    p = order // 2
    for k in range(p + 1):
        u = (X1**k * X2**k).ravel()
        for f in (1, 2, 3, 4):
            L = ops.face_restriction(f)
            d1 = (k * X1 ** max(k - 1, 0) * X2**k).ravel() if k else 0 * u
            d2 = (k * X2 ** max(k - 1, 0) * X1**k).ravel() if k else 0 * u
            assert np.abs(ops.boundary_deriv(f, 1) @ u - L @ d1).max() < 1e-9
            assert np.abs(ops.boundary_deriv(f, 2) @ u - L @ d2).max() < 1e-9


def test_directional_sparse_matches_matrix_free():
    rng = np.random.default_rng(2)
    for order, N in [(2, 9), (4, 14), (6, 19)]:
        ops = SbpOperatorSet2D(order, N)
        C11, _, C22 = random_spd_fields(rng, N + 1)
        U = rng.standard_normal((N + 1, N + 1))
        ref = ops.apply_A11(C11, U) + ops.apply_A22(C22, U)
        got = (ops.directional_sparse(C11, C22) @ U.ravel()).reshape(U.shape)
        assert np.abs(got - ref).max() < 1e-12


def test_only_two_dimensions():
    with pytest.raises(ValueError):
        SbpOperatorSet2D(2, 8, dim=3)

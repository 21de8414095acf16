"""One-dimensional diagonal-norm SBP operators.

First derivatives satisfy ``H D1 = Q`` with ``Q + Q^T = e_N e_N^T - e_0 e_0^T``.
The variable-coefficient second derivative is built node by node,

    A^(c) = (1/h) sum_i c_i (Hw_i d_i d_i^T + R_i),

where ``d_i`` is row ``i`` of the index-space first derivative and every
``R_i`` is symmetric positive semidefinite.  In the interior ``R_i`` is a
fixed combination of squared high-order differences; the first and last few
nodes use tabulated blocks (``_remainders``) produced by
``scripts/derive_remainders.py``.  Positivity for any ``c >= 0`` and the
decomposition ``H D11 = -A + c_N e_N b_N^T - c_0 e_0 b_0^T`` hold by
construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb

import numpy as np

from .banded import BandedOperator

ORDERS = (2, 4, 6)
X1 = 0.70127127127127  # free parameter of the sixth-order first derivative


@dataclass(frozen=True)
class BorrowingConstants:
    theta_bar: float
    zeta_bar: float
    m_b: int


BORROWING = {
    2: BorrowingConstants(1 / 2, 1.0, 2),
    4: BorrowingConstants(17 / 48, 0.5776, 4),
    6: BorrowingConstants(13649 / 43200, 0.3697, 7),
}

_INTERIOR_D1 = {2: (1 / 2,), 4: (2 / 3, -1 / 12), 6: (3 / 4, -3 / 20, 1 / 60)}

_H_BOUNDARY = {
    2: (1 / 2,),
    4: (17 / 48, 59 / 48, 43 / 48, 49 / 48),
    6: (13649 / 43200, 12013 / 8640, 2711 / 4320, 5359 / 4320, 7877 / 8640, 43801 / 43200),
}

# boundary derivative rows (index units), left end
_S0 = {
    2: (-3 / 2, 2.0, -1 / 2),
    4: (-11 / 6, 3.0, -3 / 2, 1 / 3),
    6: (-25 / 12, 4.0, -3.0, 4 / 3, -1 / 4),
}

# weights of sum_k alpha_k D_k^T D_k, k = p+1..2p, giving the interior remainder
ALPHA = {2: (1 / 4,), 4: (1 / 18, 1 / 144), 6: (1 / 80, 1 / 600, 1 / 3600)}


def _q_block(order: int) -> np.ndarray:
    if order == 2:
        return np.array([[-0.5]])
    if order == 4:
        return np.array([[-1 / 2, 59 / 96, -1 / 12, -1 / 32],
                         [-59 / 96, 0, 59 / 96, 0],
                         [1 / 12, -59 / 96, 0, 59 / 96],
                         [1 / 32, 0, -59 / 96, 0]])
    x = X1
    upper = {
        (0, 1): x - 953 / 16200, (0, 2): 715489 / 259200 - 4 * x,
        (0, 3): 6 * x - 62639 / 14400, (0, 4): 147127 / 51840 - 4 * x,
        (0, 5): x - 89387 / 129600, (1, 2): 10 * x - 57139 / 8640,
        (1, 3): 745733 / 51840 - 20 * x, (1, 4): 15 * x - 18343 / 1728,
        (1, 5): 240569 / 86400 - 4 * x, (2, 3): 20 * x - 176839 / 12960,
        (2, 4): 242111 / 17280 - 20 * x, (2, 5): 6 * x - 182261 / 43200,
        (3, 4): 10 * x - 165041 / 25920, (3, 5): 710473 / 259200 - 4 * x,
        (4, 5): x,
    }
    B = np.zeros((6, 6))
    B[0, 0] = -0.5
    for (i, j), v in upper.items():
        B[i, j], B[j, i] = v, -v
    return B


def _check_order(order: int) -> None:
    if order not in ORDERS:
        raise ValueError(f"unsupported order {order}; expected one of {ORDERS}")


# smallest N for which the two boundary closures do not interfere
MIN_N = {2: 4, 4: 12, 6: 17}


def min_points(order: int) -> int:
    _check_order(order)
    return MIN_N[order]


def _check_size(order: int, N: int) -> None:
    _check_order(order)
    if N < min_points(order):
        raise ValueError(f"N={N} too small for order {order}; need N >= {min_points(order)}")


def norm_weights(order: int, N: int) -> np.ndarray:
    """Diagonal of H in index units (h = 1)."""
    _check_size(order, N)
    w = np.ones(N + 1)
    hb = np.array(_H_BOUNDARY[order])
    w[:hb.size] = hb
    w[N + 1 - hb.size:] = hb[::-1]
    return w


def q_matrix(order: int, N: int) -> np.ndarray:
    _check_size(order, N)
    n = N + 1
    Q = np.zeros((n, n))
    for k, v in enumerate(_INTERIOR_D1[order], start=1):
        idx = np.arange(n - k)
        Q[idx, idx + k] = v
        Q[idx + k, idx] = -v
    B = _q_block(order)
    m = B.shape[0]
    Q[:m, :m] = B
    Q[n - m:, n - m:] = -B[::-1, ::-1]
    return Q


def boundary_rows(order: int, N: int) -> tuple[np.ndarray, np.ndarray]:
    """(S0, SN): boundary derivative rows in index units."""
    _check_size(order, N)
    s0 = np.zeros(N + 1)
    s = np.array(_S0[order])
    s0[:s.size] = s
    return s0, -s0[::-1]


def difference_matrix(k: int, n: int) -> np.ndarray:
    """(n-k) x n undivided k-th difference, row r spanning columns r..r+k."""
    st = np.array([(-1) ** (k - j) * comb(k, j) for j in range(k + 1)], float)
    D = np.zeros((n - k, n))
    for j, v in enumerate(st):
        D[np.arange(n - k), np.arange(n - k) + j] = v
    return D


def _interior_row_weights(order: int, c: np.ndarray, K: int) -> list[np.ndarray]:
    """Per-row weights of alpha_k D_k^T W_k D_k restricted to interior nodes.

    ``c`` may carry leading batch axes; the last axis is the grid.
    Node ``i`` owns the row centred on it (even k) or half of each of the two
    rows straddling it (odd k).  Nodes closer than K to an end are excluded,
    their contribution lives in the tabulated boundary blocks.
    """
    n = c.shape[-1]
    ci = np.array(c, dtype=float, copy=True)
    ci[..., :K] = 0.0
    ci[..., n - K:] = 0.0
    p = order // 2
    out = []
    for a, k in zip(ALPHA[order], range(p + 1, 2 * p + 1)):
        m = n - k
        if k % 2 == 0:
            w = ci[..., k // 2:k // 2 + m]
        else:
            h = (k - 1) // 2
            w = 0.5 * (ci[..., h:h + m] + ci[..., h + 1:h + 1 + m])
        out.append(a * w)
    return out


@dataclass(frozen=True)
class SbpOperatorSet1D:
    """Operators of one order on the grid xi_j = j/N, j = 0..N."""

    order: int
    N: int
    borrowing: BorrowingConstants = field(init=False)

    def __post_init__(self):
        _check_size(self.order, self.N)
        object.__setattr__(self, "borrowing", BORROWING[self.order])

    @property
    def n(self) -> int:
        return self.N + 1

    @property
    def h(self) -> float:
        return 1.0 / self.N

    @cached_property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n)

    # index-space (h = 1) pieces
    @cached_property
    def Hw(self) -> np.ndarray:
        return norm_weights(self.order, self.N)

    @cached_property
    def Q(self) -> np.ndarray:
        return q_matrix(self.order, self.N)

    @cached_property
    def D1w(self) -> np.ndarray:
        return self.Q / self.Hw[:, None]

    @cached_property
    def S0(self) -> np.ndarray:
        return boundary_rows(self.order, self.N)[0]

    @cached_property
    def SN(self) -> np.ndarray:
        return boundary_rows(self.order, self.N)[1]

    # physical pieces
    @property
    def H(self) -> np.ndarray:
        return np.diag(self.h * self.Hw)

    @property
    def D1(self) -> np.ndarray:
        return self.D1w / self.h

    @property
    def Q1(self) -> np.ndarray:
        return self.Q

    @property
    def b0(self) -> np.ndarray:
        return self.S0 / self.h

    @property
    def bN(self) -> np.ndarray:
        return self.SN / self.h

    # banded kernels (index units)
    @cached_property
    def d1_kernel(self) -> BandedOperator:
        return BandedOperator.from_dense(self.D1w)

    @cached_property
    def d1t_kernel(self) -> BandedOperator:
        return BandedOperator.from_dense(self.D1w.T)

    @cached_property
    def diff_kernels(self) -> list[tuple[BandedOperator, BandedOperator]]:
        p = self.order // 2
        out = []
        for k in range(p + 1, 2 * p + 1):
            Dk = difference_matrix(k, self.n)
            out.append((BandedOperator.from_dense(Dk), BandedOperator.from_dense(Dk.T)))
        return out

    @cached_property
    def _bblocks(self) -> np.ndarray:
        from ._remainders import REMAINDERS
        return np.asarray(REMAINDERS[self.order]["blocks"], dtype=float)

    def apply_A(self, c: np.ndarray, u: np.ndarray, axis: int = -1) -> np.ndarray:
        """Index-space ``A_idx^(c) u`` along ``axis``; ``c`` has the shape of ``u``.

        ``A^(c) = A_idx^(c) / h``.
        """
        cm = np.moveaxis(np.asarray(c, float), axis, -1)
        um = np.moveaxis(np.asarray(u, float), axis, -1)
        cm = np.broadcast_to(cm, um.shape)
        out = self.d1t_kernel.apply(self.Hw * cm * self.d1_kernel.apply(um))
        R = self._bblocks
        K, S = R.shape[0], R.shape[1]
        for w, (Dk, DkT) in zip(_interior_row_weights(self.order, cm, K), self.diff_kernels):
            out += DkT.apply(w * Dk.apply(um))
        out[..., :S] += np.einsum("...i,ijk,...k->...j", cm[..., :K], R, um[..., :S])
        cr = cm[..., ::-1]
        ur = um[..., ::-1]
        out[..., self.n - S:] += np.einsum("...i,ijk,...k->...j", cr[..., :K], R, ur[..., :S])[..., ::-1]
        return np.moveaxis(out, -1, axis)

    def A_index(self, c: np.ndarray) -> np.ndarray:
        """Dense index-space A^(c) (columns obtained by applying to the identity)."""
        c = np.asarray(c, float)
        I = np.eye(self.n)
        return self.apply_A(np.broadcast_to(c, (self.n, self.n)), I, axis=-1).T

    def second_derivative(self, c) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Physical (D11, A11, b0, bN) for coefficient vector ``c >= 0``."""
        c = np.asarray(c, float)
        if c.shape != (self.n,):
            c = np.broadcast_to(c, (self.n,)).astype(float)
        if np.any(c < 0):
            raise ValueError("second-derivative coefficient must be nonnegative")
        A = self.A_index(c) / self.h
        A = 0.5 * (A + A.T)
        b0, bN = self.b0, self.bN
        HD = -A.copy()
        HD[-1] += c[-1] * bN
        HD[0] -= c[0] * b0
        D11 = HD / (self.h * self.Hw)[:, None]
        return D11, A, b0.copy(), bN.copy()


def build_first_derivative(order: int, N: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ops = SbpOperatorSet1D(order, N)
    return ops.H, ops.D1, ops.Q1


def build_second_derivative(order: int, N: int, c) -> tuple[np.ndarray, ...]:
    return SbpOperatorSet1D(order, N).second_derivative(c)


@dataclass
class AccuracyReport:
    order: int
    d1_interior: dict[int, float]
    d1_boundary: dict[int, float]
    d11_interior: dict[int, float]
    d11_boundary: dict[int, float]
    b_residual: dict[int, float]


def verify_operator_accuracy(ops: SbpOperatorSet1D) -> AccuracyReport:
    """Max residuals of D1, D11 (c = 1) and b0/bN on monomials in xi.

    Keys are monomial degrees 0..2p+1.  Boundary rows are the first and last
    few rows touched by closures; interior is everything else.
    """
    p = ops.order // 2
    x = ops.grid
    D11, _, b0, bN = ops.second_derivative(np.ones(ops.n))
    nb = max(len(_H_BOUNDARY[ops.order]), ops._bblocks.shape[1])
    inner = slice(nb, ops.n - nb)
    edge = np.r_[0:nb, ops.n - nb:ops.n]
    rep = AccuracyReport(ops.order, {}, {}, {}, {}, {})
    for k in range(0, 2 * p + 2):
        u = x ** k
        du = k * x ** (k - 1) if k else 0 * x
        d2u = k * (k - 1) * x ** (k - 2) if k > 1 else 0 * x
        r1 = np.abs(ops.D1 @ u - du)
        r2 = np.abs(D11 @ u - d2u)
        rep.d1_interior[k] = float(r1[inner].max())
        rep.d1_boundary[k] = float(r1[edge].max())
        rep.d11_interior[k] = float(r2[inner].max())
        rep.d11_boundary[k] = float(r2[edge].max())
        rep.b_residual[k] = float(max(abs(b0 @ u - du[0]), abs(bN @ u - du[-1])))
    return rep

"""Tensor-product SBP operators on the reference square.

Fields are arrays ``U[..., k2, k1]`` (xi_1 fastest when flattened).  The
stiffness operators are applied matrix free, line by line:

    A11 = (H_2 x A1^(C11) per xi_2-line),   A22 likewise,
    A12 = D_1^T H C12 D_2,                  A21 = D_2^T H C12 D_1.

In two dimensions every piece of ``A = sum A_ij`` is independent of h, so
the kernels work in index units throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .geometry import FACE_AXIS, FACE_SIGN, face_slice
from .sbp1d import SbpOperatorSet1D


def _check_face(f: int) -> None:
    if f not in (1, 2, 3, 4):
        raise ValueError(f"face index must be 1..4, got {f}")


def check_spd(C11, C12, C22) -> None:
    det = C11 * C22 - C12 * C12
    if np.any(C11 + C22 <= 0) or np.any(det <= 0):
        raise ValueError("coefficient field is not pointwise symmetric positive definite")


@dataclass(frozen=True)
class SbpOperatorSet2D:
    order: int
    N: int
    dim: int = 2

    def __post_init__(self):
        if self.dim != 2:
            raise ValueError("only d = 2 tensor-product operators are implemented")

    @cached_property
    def ops1d(self) -> SbpOperatorSet1D:
        return SbpOperatorSet1D(self.order, self.N)

    @property
    def n(self) -> int:
        return self.N + 1

    @property
    def h(self) -> float:
        return 1.0 / self.N

    @cached_property
    def W(self) -> np.ndarray:
        """Index-space volume weights Hw x Hw as a [k2, k1] field."""
        hw = self.ops1d.Hw
        return np.outer(hw, hw)

    @cached_property
    def volume_norm(self) -> np.ndarray:
        return np.diag((self.h**2 * self.W).ravel())

    def face_norm(self, f: int) -> np.ndarray:
        _check_face(f)
        return np.diag(self.h * self.ops1d.Hw)

    def face_restriction(self, f: int) -> np.ndarray:
        _check_face(f)
        n = self.n
        idx = np.arange(n * n).reshape(n, n)[face_slice(f)]
        L = np.zeros((n, n * n))
        L[np.arange(n), idx] = 1.0
        return L

    def boundary_deriv(self, f: int, j: int) -> np.ndarray:
        """Dense B^f_j (physical units), j in {1, 2}."""
        _check_face(f)
        n = self.n
        o = self.ops1d
        I = np.eye(n)
        if FACE_AXIS[f] == j - 1:
            b = o.b0 if f in (1, 3) else o.bN
            # perpendicular: boundary derivative row along the normal direction
            if j == 1:
                return np.kron(I, b[None, :])
            return np.kron(b[None, :], I)
        return o.D1 @ self.face_restriction(f)

    # ---------------------------------------------------------- matrix-free

    def apply_A11(self, C11, U):
        return self.ops1d.Hw[:, None] * self.ops1d.apply_A(C11, U, axis=-1)

    def apply_A22(self, C22, U):
        return self.ops1d.Hw[None, :] * self.ops1d.apply_A(C22, U, axis=-2)

    def apply_A12(self, C12, U):
        k = self.ops1d
        return k.d1t_kernel.apply(self.W * C12 * k.d1_kernel.apply(U, axis=-2), axis=-1)

    def apply_A21(self, C12, U):
        k = self.ops1d
        return k.d1t_kernel.apply(self.W * C12 * k.d1_kernel.apply(U, axis=-1), axis=-2)

    def apply_stiffness(self, C11, C12, C22, U):
        return (self.apply_A11(C11, U) + self.apply_A22(C22, U)
                + self.apply_A12(C12, U) + self.apply_A21(C12, U))

    def directional_sparse(self, C11, C22):
        """A11 + A22 of one block as CSR on the flattened [k2, k1] field.

        Lines are probed with comb vectors (one per colour of a period
        exceeding the bandwidth), so each entry is read off exactly.
        """
        from scipy import sparse
        n, o = self.n, self.ops1d
        bw = self._bandwidth
        P = min(n, 2 * bw + 1)
        comb = (np.arange(n)[None, :] % P == np.arange(P)[:, None]).astype(float)  # (P, n)
        idx = np.arange(n * n).reshape(n, n)
        rows, cols, vals = [], [], []
        for C, axis in ((C11, 0), (C22, 1)):
            lines = C if axis == 0 else C.T  # lines[l, :] runs along the active direction
            Y = o.apply_A(np.broadcast_to(lines[:, None, :], (n, P, n)),
                          np.broadcast_to(comb, (n, P, n)), axis=-1)
            Y *= o.Hw[:, None, None]
            i = np.arange(n)
            for d in range(-bw, bw + 1):
                j = i + d
                ok = (j >= 0) & (j < n)
                v = Y[:, j[ok] % P, i[ok]]  # (lines, count)
                node = idx if axis == 0 else idx.T
                rows.append(node[:, i[ok]].ravel())
                cols.append(node[:, j[ok]].ravel())
                vals.append(v.ravel())
        A = sparse.coo_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                              shape=(n * n, n * n)).tocsr()
        A.eliminate_zeros()
        return A

    @cached_property
    def _bandwidth(self) -> int:
        M = self.ops1d.A_index(np.linspace(1.0, 2.0, self.n))
        i, j = np.nonzero(M)
        return int(np.abs(i - j).max())

    # --------------------------------------------------------------- dense

    def _dense(self, fn, C) -> np.ndarray:
        n = self.n
        E = np.eye(n * n).reshape(n * n, n, n)
        return fn(np.broadcast_to(C, E.shape), E).reshape(n * n, n * n).T

    def build_stiffness(self, C11, C12, C22, check: bool = True):
        """Dense (A11, A12, A21, A22) and the face coefficient diagonals."""
        if check:
            check_spd(C11, C12, C22)
        A = {
            (1, 1): self._dense(self.apply_A11, C11),
            (1, 2): self._dense(self.apply_A12, C12),
            (2, 1): self._dense(self.apply_A21, C12),
            (2, 2): self._dense(self.apply_A22, C22),
        }
        C = {(1, 1): C11, (1, 2): C12, (2, 1): C12, (2, 2): C22}
        Cf = {(f, i, j): C[(i, j)][face_slice(f)] for f in (1, 2, 3, 4) for i in (1, 2) for j in (1, 2)}
        return A, Cf

    def second_derivative(self, i: int, j: int, C: np.ndarray) -> np.ndarray:
        """Dense D_ij^(C) built from 1D operators (independent of the A assembly)."""
        n = self.n
        o = self.ops1d
        I = np.eye(n)
        if i == j:
            blocks = []
            for line in range(n):
                c = C[line, :] if i == 1 else C[:, line]
                blocks.append(o.second_derivative(c)[0])
            D = np.zeros((n * n, n * n))
            for line, Dl in enumerate(blocks):
                if i == 1:
                    idx = line * n + np.arange(n)
                else:
                    idx = np.arange(n) * n + line
                D[np.ix_(idx, idx)] = Dl
            return D
        D1 = np.kron(I, o.D1)  # d/dxi1 on flattened [k2, k1]
        D2 = np.kron(o.D1, I)
        Di, Dj = (D1, D2) if i == 1 else (D2, D1)
        return Di @ (C.ravel()[:, None] * Dj)


@dataclass
class MultiSbpReport:
    residual: dict


def verify_multidim_sbp(ops: SbpOperatorSet2D, C11, C12, C22) -> MultiSbpReport:
    """Max entry of H D_ij - (-A_ij + sum_f n_i L^T H^f C^f B^f_j) for each (i, j)."""
    A, Cf = ops.build_stiffness(C11, C12, C22, check=False)
    C = {(1, 1): C11, (1, 2): C12, (2, 1): C12, (2, 2): C22}
    H = ops.volume_norm
    out = {}
    for (i, j), Aij in A.items():
        rhs = -Aij
        for f in (1, 2, 3, 4):
            if FACE_AXIS[f] != i - 1:
                continue
            L = ops.face_restriction(f)
            rhs = rhs + FACE_SIGN[f] * L.T @ (ops.face_norm(f) * Cf[(f, i, j)][None, :]) @ ops.boundary_deriv(f, j)
        lhs = H @ ops.second_derivative(i, j, C[(i, j)])
        out[(i, j)] = float(np.abs(lhs - rhs).max())
    return MultiSbpReport(out)

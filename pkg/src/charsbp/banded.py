"""Banded-apply kernels for Toeplitz-with-boundary-closure matrices.

An SBP matrix is a constant stencil in the interior with dense corrections in
a few rows at each end.  ``BandedOperator`` extracts that structure from a
dense matrix once and applies it along any axis of an ndarray with shifted
slice arithmetic, so batched application over many grid lines never builds
a large matrix.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BandedOperator:
    n_rows: int
    n_cols: int
    offsets: np.ndarray  # interior row r reads columns r + offsets
    coefs: np.ndarray
    top: np.ndarray  # (t, wt) dense rows 0..t-1 over columns 0..wt-1
    bottom: np.ndarray  # (b, wb) dense last b rows over the last wb columns

    @classmethod
    def from_dense(cls, M: np.ndarray, tol: float = 0.0) -> "BandedOperator":
        M = np.asarray(M, dtype=float)
        nr, nc = M.shape
        mid = nr // 2
        cols = np.nonzero(np.abs(M[mid]) > tol)[0]
        if cols.size == 0:
            offsets = np.zeros(0, dtype=int)
            coefs = np.zeros(0)
        else:
            offsets = cols - mid
            coefs = M[mid, cols].copy()

        def matches(r: int) -> bool:
            cidx = r + offsets
            if cidx.size and (cidx.min() < 0 or cidx.max() >= nc):
                return False
            row = np.zeros(nc)
            row[cidx] = coefs
            return bool(np.all(M[r] == row))

        t = 0
        while t < nr and not matches(t):
            t += 1
        b = 0
        while b < nr - t and not matches(nr - 1 - b):
            b += 1
        if t >= nr - b and nr > 0:
            # no interior at all; everything goes into the top block
            t, b = nr, 0

        def width(rows: np.ndarray, from_left: bool) -> int:
            nz = np.nonzero(np.abs(rows) > 0)[1] if rows.size else np.zeros(0, int)
            if nz.size == 0:
                return 1
            return int(nz.max() + 1) if from_left else int(nc - nz.min())

        top_rows = M[:t]
        wt = width(top_rows, True)
        bot_rows = M[nr - b:]
        wb = width(bot_rows, False)
        return cls(nr, nc, offsets, coefs, top_rows[:, :wt].copy(),
                   bot_rows[:, nc - wb:].copy())

    @property
    def T(self) -> "BandedOperator":
        return BandedOperator.from_dense(self.to_dense().T)

    def to_dense(self) -> np.ndarray:
        M = np.zeros((self.n_rows, self.n_cols))
        t, b = self.top.shape[0], self.bottom.shape[0]
        for r in range(t, self.n_rows - b):
            M[r, r + self.offsets] = self.coefs
        if t:
            M[:t, :self.top.shape[1]] = self.top
        if b:
            M[self.n_rows - b:, self.n_cols - self.bottom.shape[1]:] = self.bottom
        return M

    def apply(self, x: np.ndarray, axis: int = -1) -> np.ndarray:
        """Return ``M @ x`` along ``axis`` (batched over the remaining axes)."""
        x = np.asarray(x, dtype=float)
        y = np.moveaxis(x, axis, -1)
        if y.shape[-1] != self.n_cols:
            raise ValueError(f"axis length {y.shape[-1]} != operator columns {self.n_cols}")
        out = np.zeros(y.shape[:-1] + (self.n_rows,))
        t, b = self.top.shape[0], self.bottom.shape[0]
        lo, hi = t, self.n_rows - b
        if hi > lo:
            for off, c in zip(self.offsets, self.coefs):
                out[..., lo:hi] += c * y[..., lo + off:hi + off]
        if t:
            out[..., :t] = y[..., :self.top.shape[1]] @ self.top.T
        if b:
            out[..., hi:] = y[..., self.n_cols - self.bottom.shape[1]:] @ self.bottom.T
        return np.moveaxis(out, -1, axis)

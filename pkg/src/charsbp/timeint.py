"""Time integration: 2N-storage RK(5,4) and exact linear propagation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr
from typing import Callable, Optional

import numpy as np
from scipy.linalg import expm

from .geometry import effective_spacing

Rhs = Callable[[float, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class LsrkScheme:
    """Williamson-form coefficients: dU <- A_i dU + dt f; U <- U + B_i dU."""
    A: tuple[float, ...]
    B: tuple[float, ...]
    c: tuple[float, ...]

    @property
    def stages(self) -> int:
        return len(self.A)


# Carpenter-Kennedy five-stage fourth-order scheme, solution 3
LSRK54 = LsrkScheme(
    A=tuple(float(x) for x in (Fr(0), Fr(-567301805773, 1357537059087), Fr(-2404267990393, 2016746695238),
                               Fr(-3550918686646, 2091501179385), Fr(-1275806237668, 842570457699))),
    B=tuple(float(x) for x in (Fr(1432997174477, 9575080441755), Fr(5161836677717, 13612068292357),
                               Fr(1720146321549, 2090206949498), Fr(3134564353537, 4481467310338),
                               Fr(2277821191437, 14882151754819))),
    c=tuple(float(x) for x in (Fr(0), Fr(1432997174477, 9575080441755), Fr(2526269341429, 6820363962896),
                               Fr(2006345519317, 3224310063776), Fr(2802321613138, 2924317926251))),
)


def lsrk54_step(y: np.ndarray, rhs: Rhs, t: float, dt: float,
                scheme: LsrkScheme = LSRK54) -> np.ndarray:
    """One full step; returns a new array (``y`` is left untouched)."""
    if not dt > 0:
        raise ValueError("time step must be positive")
    y = np.array(y, dtype=float, copy=True)
    dy = np.zeros_like(y)
    for i, (a, b, c) in enumerate(zip(scheme.A, scheme.B, scheme.c)):
        k = rhs(t + c * dt, y)
        if not np.all(np.isfinite(k)):
            raise FloatingPointError(f"non-finite RHS at RK stage {i} (t = {t + c * dt:.6g})")
        dy *= a
        dy += dt * k
        y += b * dy
    return y


def integrate(y0: np.ndarray, rhs: Rhs, t_final: float, dt: float,
              callback: Optional[Callable[[int, float, np.ndarray], None]] = None,
              t0: float = 0.0) -> np.ndarray:
    """Uniform steps with the last one shortened to land on ``t_final``."""
    if t_final < t0:
        raise ValueError("t_final precedes t0")
    nsteps = int(np.ceil((t_final - t0) / dt - 1e-12))
    y = np.array(y0, dtype=float, copy=True)
    if callback is not None:
        callback(0, t0, y)
    if nsteps == 0:
        return y
    step = (t_final - t0) / nsteps
    for n in range(nsteps):
        t = t0 + n * step
        y = lsrk54_step(y, rhs, t, step)
        if callback is not None:
            callback(n + 1, t0 + (n + 1) * step, y)
    return y


def timestep_size(mesh, gamma: float) -> float:
    """dt = gamma * h_bar with h_bar the smallest metric length over the mesh."""
    return float(gamma) * effective_spacing(mesh)


def linear_exact_evolve(M: np.ndarray, y0: np.ndarray, t: float, cap: int = 20000) -> np.ndarray:
    """exp(t M) y0 via scaling and squaring on the dense matrix."""
    M = np.asarray(M, float)
    if M.shape[0] > cap:
        raise ValueError(f"system size {M.shape[0]} exceeds cap {cap}")
    if t == 0:
        return np.array(y0, dtype=float, copy=True)
    return expm(t * M) @ np.asarray(y0, float)

"""Friction laws and the scalar interface root problem.

At a frictional interface the slip velocity V solves

    F(V) + eta V = tau_l,   eta = Z+ Z- / (Z+ + Z-),
    tau_l = (Z+ w- - Z- w+) / (Z+ + Z-),

where w are the characteristic variables leaving each side.  For an odd,
strictly increasing F the root lies between 0 and F^{-1}(tau_l).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class FrictionError(RuntimeError):
    pass


class FrictionLaw:
    """Odd, strictly increasing strength F(V) with F(0) = 0."""

    def F(self, V: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def dF(self, V: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def Finv(self, tau: np.ndarray) -> np.ndarray:
        """Inverse of F; generic fallback by bracket expansion plus bisection."""
        tau = np.asarray(tau, float)
        lo = np.zeros_like(tau)
        hi = np.ones_like(tau)
        a = np.abs(tau)
        for _ in range(2000):
            grow = self.F(hi) < a
            if not grow.any():
                break
            hi = np.where(grow, 2 * hi, hi)
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            big = self.F(mid) >= a
            hi = np.where(big, mid, hi)
            lo = np.where(big, lo, mid)
        return np.sign(tau) * hi


@dataclass(frozen=True)
class ArcsinhLaw(FrictionLaw):
    """F(V) = alpha asinh(V)."""
    alpha: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("friction coefficient alpha must be positive")

    def F(self, V):
        return self.alpha * np.arcsinh(V)

    def dF(self, V):
        return self.alpha / np.sqrt(1.0 + np.square(V))

    def Finv(self, tau):
        with np.errstate(over="ignore"):
            return np.sinh(np.asarray(tau, float) / self.alpha)


@dataclass(frozen=True)
class LinearLaw(FrictionLaw):
    """F(V) = k V."""
    k: float

    def F(self, V):
        return self.k * np.asarray(V, float)

    def dF(self, V):
        return np.full_like(np.asarray(V, float), self.k)

    def Finv(self, tau):
        return np.asarray(tau, float) / self.k


def radiation_damping(Zp, Zm):
    Zp, Zm = np.asarray(Zp, float), np.asarray(Zm, float)
    return Zp * Zm / (Zp + Zm)


def locked_traction(Zp, Zm, wp, wm):
    """tau_l for the + side."""
    return (Zp * wm - Zm * wp) / (Zp + Zm)


def slip_bracket(eta, tau_l, law: FrictionLaw) -> tuple[np.ndarray, np.ndarray]:
    """Signed bracket (0, b) of the slip root, |b| = min(|F^-1(tau_l)|, |tau_l| / eta)."""
    tau_l = np.asarray(tau_l, float)
    a = np.abs(tau_l)
    b = np.minimum(np.abs(law.Finv(a)), a / np.asarray(eta, float))
    return np.zeros_like(b), np.sign(tau_l) * b


def solve_slip(eta, tau_l, law: FrictionLaw, rtol: float = 1e-13, maxiter: int = 200) -> np.ndarray:
    """Solve F(V) + eta V = tau_l elementwise by safeguarded Newton.

    The bracket [0, F^{-1}(tau_l)] (sign adjusted) is maintained; a Newton
    step leaving it is replaced by bisection.
    """
    eta = np.asarray(eta, float)
    tau_l = np.asarray(tau_l, float)
    eta, tau_l = np.broadcast_arrays(eta, tau_l)
    if np.any(eta <= 0):
        raise ValueError("radiation damping must be positive")
    s = np.sign(tau_l)
    a = np.abs(tau_l)  # work with the positive problem F(V) + eta V = a, V >= 0
    lo = np.zeros_like(a)
    hi = np.abs(slip_bracket(eta, a, law)[1])
    if np.any(~np.isfinite(hi)):
        raise FrictionError("friction bracket is not finite")
    V = 0.5 * (lo + hi)
    tol = rtol * np.maximum(1.0, a)
    for it in range(maxiter):
        r = law.F(V) + eta * V - a
        done = np.abs(r) <= tol
        if done.all():
            return s * V
        hi = np.where(r > 0, V, hi)
        lo = np.where(r < 0, V, lo)
        dr = law.dF(V) + eta
        Vn = V - r / dr
        bad = (Vn <= lo) | (Vn >= hi) | ~np.isfinite(Vn)
        Vn = np.where(bad, 0.5 * (lo + hi), Vn)
        V = np.where(done, V, Vn)
        if np.all(hi - lo <= 4 * np.finfo(float).eps * np.maximum(hi, 1e-300)):
            r = law.F(V) + eta * V - a
            if np.all(np.abs(r) <= tol):
                return s * V
    r = law.F(V) + eta * V - a
    if np.any(np.abs(r) > tol):
        k = int(np.argmax(np.abs(r) / tol))
        raise FrictionError(f"friction solve did not converge: residual {r.flat[k]:.3e}, "
                            f"bracket [{lo.flat[k]:.6e}, {hi.flat[k]:.6e}]")
    return s * V


@dataclass
class RootProblem:
    eta: np.ndarray
    tau_lock: np.ndarray
    law: FrictionLaw

    def residual(self, V) -> np.ndarray:
        return self.eta * V + self.law.F(V) - self.tau_lock

    def solve(self) -> np.ndarray:
        return solve_slip(self.eta, self.tau_lock, self.law)


@dataclass
class FrictionSolution:
    V: np.ndarray  # slip of the + side, V+ = v- - v+
    tau: np.ndarray  # physical traction on the + side, F(V+)
    q_plus: np.ndarray
    q_minus: np.ndarray
    dus_plus: np.ndarray  # face velocity v*+ = (q+ + w+) / (2 Z+)
    dus_minus: np.ndarray

    @property
    def tau_minus(self) -> np.ndarray:
        return -self.tau


def solve_interface_friction(Zp, Zm, wp, wm, law: FrictionLaw, g=0.0) -> FrictionSolution:
    """Characteristic friction interface in physical units (S_J = 1).

    ``g`` is an additive traction source: the + side law is F(V) + g.
    """
    Zp, Zm, wp, wm = (np.asarray(a, float) for a in (Zp, Zm, wp, wm))
    eta = radiation_damping(Zp, Zm)
    tl = locked_traction(Zp, Zm, wp, wm) - g
    V = solve_slip(eta, tl, law)
    tau = law.F(V) + g
    # q = Z v* + tau* with Z v* = w + tau*
    return FrictionSolution(V=V, tau=tau, q_plus=wp + 2 * tau, q_minus=wm - 2 * tau,
                            dus_plus=(wp + tau) / Zp, dus_minus=(wm - tau) / Zm)

"""Numerical fluxes for boundaries and block interfaces.

All functions act pointwise on face arrays in transformed quantities:
``Z`` is the transformed impedance Z-hat, ``SJ`` the surface Jacobian,
``v`` the face velocity and ``tau`` the face traction tau-hat.  The
characteristic treatment returns the rate of the face unknown u*; the
standard treatment returns u* itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .friction import ArcsinhLaw, FrictionLaw, radiation_damping, solve_slip
from .sbp1d import BORROWING

DataFn = Callable[..., np.ndarray]


# ------------------------------------------------------------- face closures

@dataclass(frozen=True)
class Dirichlet:
    """Standard treatment: u* = g_D, tau* = tau-hat."""
    g: Optional[DataFn] = None  # g(t, face) -> values
    g_dot: Optional[DataFn] = None
    characteristic = False


@dataclass(frozen=True)
class CharacteristicBC:
    """q = R w + g_C with the face unknown u* integrated in time."""
    R: float | np.ndarray = 0.0
    g: Optional[DataFn] = None
    characteristic = True

    def __post_init__(self):
        if np.any(np.abs(np.asarray(self.R)) > 1):
            raise ValueError("reflection coefficient must lie in [-1, 1]")


@dataclass(frozen=True)
class NonCharacteristicBC:
    """Standard treatment of q = R w + g_C: tau* = S_J(-alpha v + beta g_C)."""
    R: float | np.ndarray = 1.0
    g: Optional[DataFn] = None
    characteristic = False

    def __post_init__(self):
        R = np.asarray(self.R, float)
        if np.any(np.abs(R) > 1):
            raise ValueError("reflection coefficient must lie in [-1, 1]")
        if np.any(R == -1):
            raise ValueError("R = -1 makes alpha unbounded; use the Dirichlet closure instead")


@dataclass(frozen=True)
class LockedChar:
    characteristic = True


@dataclass(frozen=True)
class LockedStd:
    characteristic = False


@dataclass(frozen=True)
class NonlinearChar:
    law: FrictionLaw
    g: Optional[DataFn] = None  # traction source on the + side
    characteristic = True


@dataclass(frozen=True)
class NonlinearStd:
    law: FrictionLaw
    g: Optional[DataFn] = None
    characteristic = False


FaceClosure = (Dirichlet | CharacteristicBC | NonCharacteristicBC | LockedChar | LockedStd
               | NonlinearChar | NonlinearStd)


# ------------------------------------------------------------------ penalty

@dataclass
class PenaltyParams:
    Gamma: np.ndarray
    Xinv: np.ndarray  # (n_hat C n_hat Gamma)
    theta: float
    zeta: float
    P: np.ndarray

    @property
    def X(self) -> np.ndarray:
        return 1.0 / self.Xinv


def compute_penalty(nCn_face: np.ndarray, C_strip: np.ndarray, order: int, h: float,
                    dim: int) -> PenaltyParams:
    """Penalty at the stability limit Gamma = d/theta + P/zeta.

    ``C_strip`` holds the normal coefficient on the m_b points orthogonal to
    the face, shape (..., m_b) with the face point first.
    """
    bc = BORROWING[order]
    cmin = np.min(C_strip[..., :bc.m_b], axis=-1)
    if np.any(cmin <= 0):
        raise ValueError("zero normal coefficient next to the face: penalty P is singular")
    theta, zeta = h * bc.theta_bar, h * bc.zeta_bar
    P = nCn_face / cmin
    Gamma = dim / theta + P / zeta
    return PenaltyParams(Gamma=Gamma, Xinv=nCn_face * Gamma, theta=theta, zeta=zeta, P=P)


def face_tractions(T_hat: np.ndarray, Xinv: np.ndarray, u_star: np.ndarray,
                   u_face: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return T_hat, T_hat + Xinv * (u_star - u_face)


# ------------------------------------------------------- characteristic fluxes

def characteristic_bc_flux(Z, R, gC, SJ, v, tau):
    """(du*/dt, tau*) preserving w = Z v - tau and imposing q = R w + S_J g_C."""
    w = Z * v - tau
    dus = 0.5 * (1 + R) * (v - tau / Z) + 0.5 * SJ * gC / Z
    taus = -0.5 * (1 - R) * w + 0.5 * SJ * gC
    return dus, taus


def locked_q(Zs, Zo, ws, wo):
    """Incoming characteristic for a locked interface on side s (o = other side)."""
    return (2 * Zs * wo + (Zs - Zo) * ws) / (Zs + Zo)


def fluxes_from_q(Z, q, w):
    return 0.5 * (q + w) / Z, 0.5 * (q - w)


def characteristic_interface_flux(Zm, Zp, wm, wp, SJ=1.0, law: FrictionLaw | None = None, g=0.0):
    """Fluxes for both sides of a characteristic interface.

    With ``law`` None the interface is locked; otherwise the + side traction
    obeys tau* = S_J (F(V*) + g) with V* = du*-/dt - du*+/dt.
    Returns (dus_m, taus_m, dus_p, taus_p).
    """
    if law is None:
        qm = locked_q(Zm, Zp, wm, wp)
        qp = locked_q(Zp, Zm, wp, wm)
    else:
        Zp_, Zm_ = Zp / SJ, Zm / SJ  # physical impedances
        eta = radiation_damping(Zp_, Zm_)
        tl = (Zp * wm - Zm * wp) / (Zp + Zm) / SJ - g
        V = solve_slip(eta, tl, law)
        taup = SJ * (law.F(V) + g)
        qp = wp + 2 * taup
        qm = wm - 2 * taup
    dum, taum = fluxes_from_q(Zm, qm, wm)
    dup, taup = fluxes_from_q(Zp, qp, wp)
    return dum, taum, dup, taup


# ----------------------------------------------------------- standard fluxes

def dirichlet_flux(gD, tau):
    return np.asarray(gD, float) * np.ones_like(tau), tau


def noncharacteristic_bc_flux(Z, R, gC, SJ, v):
    """tau* = S_J(-alpha v + beta g_C); ``Z`` is the transformed impedance."""
    R = np.asarray(R, float)
    if np.any(R == -1):
        raise ValueError("R = -1 makes alpha unbounded; use the Dirichlet closure instead")
    Zphys = Z / SJ
    alpha = Zphys * (1 - R) / (1 + R)
    beta = 1 / (1 + R)
    return SJ * (-alpha * v + beta * gC)


def locked_std_flux(um, up, taum, taup):
    us = 0.5 * (um + up)
    tm = 0.5 * (taum - taup)
    return us, tm, us, -tm


def nonlinear_std_flux(vm, vp, SJ, law: FrictionLaw, g=0.0):
    """tau* from the friction law with grid velocities; returns (tau*-, tau*+)."""
    Vp = vm - vp
    tp = SJ * (law.F(Vp) + g)
    return -tp, tp


# ----------------------------------------------------------- energy audit

def face_energy_rate(Hf, taus, v, tau, dus):
    """Discrete face energy rate tau*^T H v + tau^T H (du*/dt - v)."""
    return np.sum(Hf * taus * v, axis=-1) + np.sum(Hf * tau * (dus - v), axis=-1)



def audit_face_energy_rates(n: int = 1000, nodes: int = 8, seed: int = 0) -> dict[str, float]:
    """Largest face energy rate over ``n`` random faces, relative to the face state norm.

    Every closure is fed random face states with zero data; a result <= 0,
    up to round-off, means the closure is dissipative.
    """
    rng = np.random.default_rng(seed)
    shape = (n, nodes)
    Hf = rng.uniform(0.1, 1.0, shape)
    SJ = rng.uniform(0.5, 2.0, shape)
    Zm, Zp = SJ * rng.uniform(0.2, 5.0, (2,) + shape)
    mag = 10 ** rng.uniform(-2, 2, (6, n, 1))
    vm, vp, tm, tp, um, up = rng.standard_normal((6,) + shape) * mag
    R = rng.uniform(-1, 1, shape)
    law = ArcsinhLaw(3.0)

    def rel(rate, *fields):
        scale = sum(np.sum(Hf * f * f, axis=-1) for f in fields) * np.max(Zm + Zp + 1 / Zm + 1 / Zp, axis=-1)
        return float(np.max(rate / scale))

    out = {}
    for Rv, name in ((R, "characteristic_bc"), (np.ones(shape), "characteristic_neumann"),
                     (-np.ones(shape), "characteristic_dirichlet")):
        dus, taus = characteristic_bc_flux(Zm, Rv, 0.0, SJ, vm, tm)
        out[name] = rel(face_energy_rate(Hf, taus, vm, tm, dus), vm, tm)
    wm, wp = Zm * vm - tm, Zp * vp - tp
    for lw, name in ((None, "characteristic_locked"), (law, "characteristic_nonlinear")):
        dum, taum, dup, taup = characteristic_interface_flux(Zm, Zp, wm, wp, SJ, lw)
        rate = face_energy_rate(Hf, taum, vm, tm, dum) + face_energy_rate(Hf, taup, vp, tp, dup)
        out[name] = rel(rate, vm, vp, tm, tp)
    _, taus = dirichlet_flux(0.0, tm)
    out["dirichlet"] = rel(face_energy_rate(Hf, taus, vm, tm, np.zeros(shape)), vm, tm)
    taus = noncharacteristic_bc_flux(Zm, np.where(R == -1, 0.0, R), 0.0, SJ, vm)
    out["noncharacteristic_bc"] = rel(face_energy_rate(Hf, taus, vm, tm, vm), vm, tm)
    taus = noncharacteristic_bc_flux(Zm, np.ones(shape), 0.0, SJ, vm)
    out["neumann"] = rel(face_energy_rate(Hf, taus, vm, tm, vm), vm, tm)
    _, taum, _, taup = locked_std_flux(um, up, tm, tp)
    vbar = 0.5 * (vm + vp)
    rate = face_energy_rate(Hf, taum, vm, tm, vbar) + face_energy_rate(Hf, taup, vp, tp, vbar)
    out["locked_standard"] = rel(rate, vm, vp, tm, tp)
    taum, taup = nonlinear_std_flux(vm, vp, SJ, law)
    rate = face_energy_rate(Hf, taum, vm, tm, vm) + face_energy_rate(Hf, taup, vp, tp, vp)
    out["nonlinear_standard"] = rel(rate, vm, vp, tm, tp)
    return out

"""Experiment drivers: 1D convergence and spectra, 2D MMS, Courant sweep,
energy dissipation and self-convergence."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .. import closures as cl
from ..friction import ArcsinhLaw, FrictionError
from ..geometry import build_disk_in_square_mesh, build_unit_interval_mesh, rotated_material, unit_material
from ..mms import ManufacturedSolution
from ..semidiscrete import Closures, Semidiscretization
from ..timeint import integrate, linear_exact_evolve, timestep_size
from .config import (CourantConfig, Convergence1DConfig, EnergyConfig, MeshConfig, Mms2DConfig,
                     ScenarioConfig, SelfConvConfig, SpectrumConfig)

log = logging.getLogger(__name__)


# ------------------------------------------------------------------ helpers

def convergence_rates(errors) -> list[float]:
    """log2(e_r / e_{r+1}); NaN for the first entry."""
    e = np.asarray(errors, float)
    return [float("nan")] + [float(np.log2(a / b)) for a, b in zip(e[:-1], e[1:])]


def l2_error(sd: Semidiscretization, dU: np.ndarray) -> float:
    """sqrt(sum_B du^T (J o H) du)."""
    if sd.dim == 1:
        w = sd.h * sd.ops1.Hw
    else:
        w = sd.h**2 * sd.ops2.W
    return float(np.sqrt(np.sum(dU * dU * sd.J * w)))


@dataclass
class ErrorReport:
    """Errors per resolution with pairwise rates."""
    label: dict
    N: list[int]
    h: list[float]
    error: list[float]
    rate: list[float] = field(init=False)

    def __post_init__(self):
        self.rate = convergence_rates(self.error)

    def rows(self) -> list[dict]:
        return [dict(self.label, N=n, h=h, error=e, rate=r)
                for n, h, e, r in zip(self.N, self.h, self.error, self.rate)]


# ------------------------------------------------------------------------ 1D

def default_profile(x):
    x = np.asarray(x, float)
    return np.where((x >= 0) & (x <= 1), np.sin(2 * np.pi * x) ** 6, 0.0)


def exact_solution_1d(x, t: float, R: float, profile=default_profile):
    """d'Alembert solution on [0, 1] with reflection R at both ends, t in [0, 1]."""
    if not 0 <= t <= 1:
        raise ValueError("the reflected d'Alembert formula holds for t in [0, 1] only")
    x = np.asarray(x, float)
    return 0.5 * (profile(x - t) + profile(x + t) + R * (profile(2 - x - t) + profile(-x + t)))


def build_1d(N: int, order: int, R: float, treatment: str, n_blocks: int = 1) -> Semidiscretization:
    mesh = build_unit_interval_mesh(N, order, n_blocks=n_blocks)
    bc = cl.CharacteristicBC(R) if treatment == "characteristic" else cl.NonCharacteristicBC(R)
    iface = cl.LockedChar() if treatment == "characteristic" else cl.LockedStd()
    return Semidiscretization(mesh, order, Closures({"left": bc, "right": bc}, {"locked": iface}))


def convergence_1d_case(order: int, R: float, treatment: str, Ns, t_final: float = 0.9) -> ErrorReport:
    errs = []
    for N in Ns:
        sd = build_1d(N, order, R, treatment)
        y0 = sd.initial_state(lambda X: default_profile(X[..., 0]))
        y = linear_exact_evolve(sd.system_matrix(), y0, t_final)
        U, _, _ = sd.split(y)
        errs.append(l2_error(sd, U - exact_solution_1d(sd.x, t_final, R)))
    return ErrorReport(dict(order=order, treatment=treatment, R=R), list(Ns), [1.0 / n for n in Ns], errs)


def run_convergence_1d(cfg: Convergence1DConfig) -> list[ErrorReport]:
    Ns = [cfg.base_N * 2**r for r in range(cfg.refinements)]
    out = []
    for R in cfg.reflections:
        for order in cfg.orders:
            for tr in cfg.treatments:
                rep = convergence_1d_case(order, R, tr, Ns, cfg.t_final)
                log.info("1D order %d %s R=%g: finest error %.3e", order, tr, R, rep.error[-1])
                out.append(rep)
    return out


def spectrum_1d(N: int, order: int, R: float, treatment: str) -> np.ndarray:
    """Eigenvalues h*lambda of the assembled 1D system."""
    sd = build_1d(N, order, R, treatment)
    return np.linalg.eigvals(sd.system_matrix()) * sd.h


def run_spectrum_sweep(cfg: SpectrumConfig):
    rows, dumps = [], {}
    for tr in cfg.treatments:
        for R in cfg.reflections:
            if tr == "non-characteristic" and R == -1:
                continue
            ev = spectrum_1d(cfg.N, cfg.order, R, tr)
            rows.append(dict(R=R, treatment=tr, max_neg_re_hlambda=float(np.max(-ev.real))))
            if cfg.dump_eigenvalues:
                dumps[(tr, R)] = ev
    return rows, dumps


# ------------------------------------------------------------------------ 2D

def mms_setup(N: int, order: int, treatment: str, alpha: float, mesh_cfg: MeshConfig = MeshConfig(),
              workers: int = 1):
    mesh = build_disk_in_square_mesh(N, order, unit_material, mesh_cfg.core_radius, mesh_cfg.bow)
    ms = ManufacturedSolution.for_mesh(mesh)
    sd = Semidiscretization(mesh, order, ms.closures(alpha, treatment == "characteristic"),
                            forcing=ms.forcing, workers=workers)
    return sd, ms


class Blowup(RuntimeError):
    pass


def mms_error(N: int, order: int, treatment: str, alpha: float, gamma: float, t_final: float,
              mesh_cfg: MeshConfig = MeshConfig(), workers: int = 1, blowup: float = np.inf,
              abort_error: float = np.inf, check_every: int = 8) -> float:
    """Error at t_final; ``inf`` if the solution exceeds ``blowup``, overflows, or
    its error exceeds ``abort_error`` at a checked step."""
    sd, ms = mms_setup(N, order, treatment, alpha, mesh_cfg, workers)
    y0 = sd.initial_state(lambda X: ms.u(0.0, X), lambda X: ms.ut(0.0, X))
    dt = timestep_size(sd.mesh, gamma)
    nu = sd.nb * sd.n**2

    def watch(n, t, y):
        if not np.all(np.abs(y[:nu]) < blowup):
            raise Blowup(t)
        if n % check_every == 0 and np.isfinite(abort_error):
            U, _, _ = sd.split(y)
            if not l2_error(sd, U - ms.u(t, sd.x)) <= abort_error:
                raise Blowup(t)

    try:
        with np.errstate(over="raise", invalid="raise"):
            y = integrate(y0, sd.rhs, t_final, dt, watch if np.isfinite(blowup) or np.isfinite(abort_error) else None)
    except (Blowup, FloatingPointError, ArithmeticError, FrictionError):
        return float("inf")
    U, _, _ = sd.split(y)
    return l2_error(sd, U - ms.u(t_final, sd.x))


def run_mms_2d(cfg: Mms2DConfig, workers: int = 1) -> list[ErrorReport]:
    out = []
    for order in cfg.orders:
        errs = []
        for N in cfg.resolutions:
            errs.append(mms_error(N, order, cfg.treatment, cfg.alpha, cfg.gamma, cfg.t_final, cfg.mesh, workers))
            log.info("MMS order %d N=%d: %.3e", order, N, errs[-1])
        out.append(ErrorReport(dict(order=order, treatment=cfg.treatment, alpha=cfg.alpha),
                               list(cfg.resolutions), [1.0 / n for n in cfg.resolutions], errs))
    return out


def gamma_ladder(gmax: float, gmin: float) -> list[float]:
    out, g = [], gmax
    while g >= gmin * (1 - 1e-12):
        out.append(g)
        g /= 2
    return out


def run_courant_sweep(cfg: CourantConfig, workers: int = 1):
    """Largest gamma on the halving ladder whose error stays within
    ``threshold`` times the characteristic error at ``reference_gamma``."""
    rows, detail = [], []
    for alpha in cfg.alphas:
        ref = mms_error(cfg.N, cfg.order, "characteristic", alpha, cfg.reference_gamma, cfg.t_final,
                        cfg.mesh, workers)
        if not np.isfinite(ref):
            raise RuntimeError(f"characteristic reference run diverged for alpha={alpha}")
        limit = cfg.threshold * ref
        for tr in cfg.treatments:
            stable = float("nan")
            for g in gamma_ladder(cfg.gamma_max, cfg.gamma_min):
                if tr == "characteristic" and g == cfg.reference_gamma:
                    err = ref
                else:
                    err = mms_error(cfg.N, cfg.order, tr, alpha, g, cfg.t_final, cfg.mesh, workers,
                                    blowup=1e6, abort_error=cfg.abort_factor * limit)
                detail.append(dict(alpha=alpha, treatment=tr, gamma=g, error=err, reference=ref))
                log.info("Courant alpha=%g %s gamma=%g: error %.3e (limit %.3e)", alpha, tr, g, err, limit)
                if err <= limit:
                    stable = g
                    break
            rows.append(dict(alpha=alpha, treatment=tr, gamma_stable=stable))
    return rows, detail


# ----------------------------------------------------------------- scenario

def gaussian_pulse(mu, sigma):
    def u0(X):
        return np.exp(-(X[..., 0] - mu[0]) ** 2 / (2 * sigma[0]) - (X[..., 1] - mu[1]) ** 2 / (2 * sigma[1]))
    return u0


def scenario_setup(N: int, order: int, interface: str, sc: ScenarioConfig, workers: int = 1):
    mesh = build_disk_in_square_mesh(N, order, rotated_material, sc.mesh.core_radius, sc.mesh.bow)
    if sc.boundary_treatment == "characteristic":
        boundary = {"dirichlet": cl.CharacteristicBC(-1.0), "neumann": cl.CharacteristicBC(1.0)}
    else:
        boundary = {"dirichlet": cl.Dirichlet(), "neumann": cl.NonCharacteristicBC(1.0)}
    fault = cl.NonlinearChar(ArcsinhLaw(sc.alpha)) if interface == "nonlinear" else cl.LockedChar()
    sd = Semidiscretization(mesh, order, Closures(boundary, {"locked": cl.LockedChar(), "nonlinear": fault}),
                            workers=workers)
    y0 = sd.initial_state(gaussian_pulse(sc.mu, sc.sigma))
    return sd, y0


@dataclass
class EnergyHistory:
    interface: str
    N: int
    t: np.ndarray
    E: np.ndarray

    @property
    def dissipated(self) -> np.ndarray:
        """(E(0) - E(t)) / E(0)."""
        return (self.E[0] - self.E) / self.E[0]

    @property
    def max_step_increase(self) -> float:
        """max_n (E_{n+1} - E_n) / E_0."""
        return float(np.max(np.diff(self.E)) / self.E[0]) if self.E.size > 1 else 0.0


def energy_history(N: int, order: int, interface: str, t_final: float, sc: ScenarioConfig,
                   workers: int = 1) -> EnergyHistory:
    sd, y0 = scenario_setup(N, order, interface, sc, workers)
    ts, Es = [], []

    def record(n, t, y):
        ts.append(t)
        Es.append(sd.energy(y))

    integrate(y0, sd.rhs, t_final, timestep_size(sd.mesh, sc.gamma), record)
    return EnergyHistory(interface, N, np.array(ts), np.array(Es))


def run_energy_dissipation(cfg: EnergyConfig, workers: int = 1) -> list[EnergyHistory]:
    out = []
    for interface in cfg.interfaces:
        for N in cfg.resolutions:
            h = energy_history(N, cfg.order, interface, cfg.t_final, cfg.scenario, workers)
            log.info("energy %s N=%d: dissipated %.4e, max step increase %.2e (%s)", interface, N,
                     h.dissipated[-1], h.max_step_increase,
                     "within tolerance" if h.max_step_increase <= cfg.tolerance else "EXCEEDS tolerance")
            out.append(h)
    return out


@dataclass
class SelfConvergence:
    resolutions: list[int]
    differences: list[float]

    @property
    def rate(self) -> float:
        return float(np.log2(self.differences[0]) - np.log2(self.differences[1]))


def restrict(U_fine: np.ndarray, N_coarse: int, N_fine: int) -> np.ndarray:
    """Fine-grid values at the coarse nodes (N_fine a multiple of N_coarse)."""
    if N_fine == N_coarse:
        raise ValueError("self-convergence needs distinct resolutions")
    if N_fine % N_coarse:
        raise ValueError("fine resolution must be a multiple of the coarse one")
    s = N_fine // N_coarse
    return U_fine[..., ::s, ::s]


def scenario_solution(N: int, order: int, interface: str, t_final: float, sc: ScenarioConfig,
                      workers: int = 1):
    sd, y0 = scenario_setup(N, order, interface, sc, workers)
    y = integrate(y0, sd.rhs, t_final, timestep_size(sd.mesh, sc.gamma))
    return sd, sd.split(y)[0]


def self_convergence(solutions: list[tuple[Semidiscretization, np.ndarray]]) -> SelfConvergence:
    Ns = [sd.N for sd, _ in solutions]
    if len(set(Ns)) != len(Ns):
        raise ValueError("self-convergence needs distinct resolutions")
    diffs = []
    for (sdc, Uc), (sdf, Uf) in zip(solutions[:-1], solutions[1:]):
        diffs.append(l2_error(sdc, Uc - restrict(Uf, sdc.N, sdf.N)))
    return SelfConvergence(Ns, diffs)


def run_self_convergence(cfg: SelfConvConfig, workers: int = 1) -> SelfConvergence:
    sols = []
    for N in sorted(cfg.resolutions):
        sols.append(scenario_solution(N, cfg.order, cfg.interface, cfg.t_final, cfg.scenario, workers))
        log.info("self-convergence: N=%d done", N)
    return self_convergence(sols)

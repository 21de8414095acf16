"""Acceptance criteria 1-10, each reported as one PASS/FAIL line."""
import time

import numpy as np
import pytest

from charsbp import closures as cl
from charsbp.friction import ArcsinhLaw, slip_bracket, solve_slip
from charsbp.harness import experiments as ex
from charsbp.harness.config import CourantConfig, EnergyConfig, Mms2DConfig, SelfConvConfig, SpectrumConfig
from charsbp.sbp1d import BORROWING, SbpOperatorSet1D

from conftest import record
from reference_1d import REFERENCE_1D

pytestmark = pytest.mark.acceptance


def finish(criterion, ok, detail, t0, budget):
    dt = time.perf_counter() - t0
    ok = ok and (budget is None or dt < budget)
    limit = "" if budget is None else f" / {budget:.0f} s"
    record(criterion, ok, f"{detail}; {dt:.1f} s{limit}")
    assert ok, detail


def test_criterion_01_sbp_identities():
    t0 = time.perf_counter()
    rng = np.random.default_rng(0)
    worst_id, worst_psd = 0.0, 0.0
    for order in (2, 4, 6):
        for N in (17, 50):
            ops = SbpOperatorSet1D(order, N)
            E = np.zeros((ops.n, ops.n))
            E[0, 0], E[-1, -1] = -1, 1
            worst_id = max(worst_id, np.abs(ops.Q + ops.Q.T - E).max())
            for c in (np.ones(ops.n), rng.uniform(0.1, 5, ops.n)):
                D11, A, b0, bN = ops.second_derivative(c)
                Araw = ops.A_index(c) / ops.h
                HD = -A.copy()
                HD[-1] += c[-1] * bN
                HD[0] -= c[0] * b0
                scale = np.abs(A).max()
                worst_id = max(worst_id, np.abs(Araw - Araw.T).max() / scale,
                               np.abs(ops.H @ D11 - HD).max() / scale)
                ev = np.linalg.eigvalsh(A)
                worst_psd = min(worst_psd, ev.min() / np.abs(ev).max())
    ok = worst_id <= 1e-13 and worst_psd >= -1e-10
    finish(1, ok, f"identity residual {worst_id:.1e} (<= 1e-13), min eig/max {worst_psd:.1e} (>= -1e-10)", t0, 10)


def test_criterion_02_borrowing_constants():
    t0 = time.perf_counter()
    want = {2: (1 / 2, 1.0, 2), 4: (17 / 48, 0.5776, 4), 6: (13649 / 43200, 0.3697, 7)}
    got = {k: (b.theta_bar, b.zeta_bar, b.m_b) for k, b in BORROWING.items()}
    finish(2, got == want, f"table {got}", t0, None)


def test_criterion_03_spectrum():
    t0 = time.perf_counter()
    rows, _ = ex.run_spectrum_sweep(SpectrumConfig(dump_eigenvalues=False))
    val = {(r["treatment"], round(r["R"], 2)): r["max_neg_re_hlambda"] for r in rows}
    checks = [("non-characteristic", -0.95, 110.09), ("characteristic", -0.95, 0.6888),
              ("characteristic", 0.95, 3.2707)]
    ok = all(abs(val[(tr, R)] / ref - 1) <= 0.05 for tr, R, ref in checks)
    cmax = max(v for (tr, _), v in val.items() if tr == "characteristic")
    ok = ok and cmax <= 3.5
    detail = ", ".join(f"{tr[:4]} R={R}: {val[(tr, R)]:.4f} (ref {ref})" for tr, R, ref in checks)
    finish(3, ok, f"{detail}; characteristic max {cmax:.4f} (<= 3.5)", t0, 30)


def test_criterion_04_convergence_1d():
    t0 = time.perf_counter()
    Ns = [17 * 2**r for r in range(6)]
    target = {2: 2.0, 4: 4.0, 6: 5.0}
    bad_rate, bad_ratio = [], []
    for (order, tr, R), ref in REFERENCE_1D.items():
        rep = ex.convergence_1d_case(order, R, tr, Ns)
        rates = rep.rate[-3:]
        if any(abs(r - target[order]) > 0.2 for r in rates):
            bad_rate.append(f"{order}/{tr[:4]}/R={R}: {', '.join(f'{r:.2f}' for r in rates)}")
        ratio = rep.error[-1] / ref[-1]
        if not 0.5 <= ratio <= 2.0:
            bad_ratio.append(f"{order}/{tr[:4]}/R={R}: {ratio:.4f}")
    ok = not bad_rate and not bad_ratio
    detail = (f"{len(bad_rate)}/18 cases off rate [{'; '.join(bad_rate)}]; "
              f"{len(bad_ratio)}/18 finest-error ratios outside [0.5, 2] [{'; '.join(bad_ratio)}]")
    finish(4, ok, detail, t0, 600)


def test_criterion_05_mms_2d():
    t0 = time.perf_counter()
    reps = ex.run_mms_2d(Mms2DConfig())
    floor = {2: 1.8, 4: 3.8, 6: 4.5}
    ok = True
    parts = []
    for rep in reps:
        order = rep.label["order"]
        rates = rep.rate[1:]
        ok = ok and all(r >= floor[order] for r in rates)
        parts.append(f"2p={order}: " + ", ".join(f"{r:.2f}" for r in rates) + f" (>= {floor[order]})")
    finish(5, ok, "; ".join(parts), t0, 900)


def test_criterion_06_courant():
    t0 = time.perf_counter()
    rows, _ = ex.run_courant_sweep(CourantConfig())
    char = {r["alpha"]: r["gamma_stable"] for r in rows if r["treatment"] == "characteristic"}
    std = {r["alpha"]: r["gamma_stable"] for r in rows if r["treatment"] == "non-characteristic"}
    alphas = sorted(std)
    ok = all(char[a] == 0.5 for a in alphas)
    ok = ok and all(std[a1] >= std[a2] for a1, a2 in zip(alphas, alphas[1:])) and std[alphas[0]] > std[alphas[-1]]
    ok = ok and std[128.0] <= 1 / 16
    detail = ", ".join(f"alpha={a:g}: char {char[a]:g} std {std[a]:g}" for a in alphas)
    finish(6, ok, detail, t0, 1200)


def test_criterion_07_energy():
    t0 = time.perf_counter()
    hist = {(h.interface, h.N): h for h in ex.run_energy_dissipation(EnergyConfig())}
    worst = max(h.max_step_increase for h in hist.values())
    lock = [hist[("locked", N)].dissipated[-1] for N in (34, 68)]
    nonl = [hist[("nonlinear", N)].dissipated[-1] for N in (34, 68)]
    ok = worst <= 1e-10 and lock[1] < lock[0] and all(n > l for n, l in zip(nonl, lock))
    detail = (f"max step increase {worst:.1e} (<= 1e-10); locked dissipated {lock[0]:.3e} -> {lock[1]:.3e}; "
              f"nonlinear {nonl[0]:.3e}, {nonl[1]:.3e}")
    finish(7, ok, detail, t0, 1200)


def test_criterion_08_self_convergence():
    t0 = time.perf_counter()
    sc = ex.run_self_convergence(SelfConvConfig())
    ok = 3.9 <= sc.rate <= 4.9
    finish(8, ok, f"rate {sc.rate:.3f} in [3.9, 4.9]; differences {sc.differences}", t0, None)


def test_criterion_09_friction():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    n = 1000
    eta = 10 ** rng.uniform(-3, 3, n)
    alpha = 10 ** rng.uniform(-3, 4, n)
    tl = rng.choice([-1, 1], n) * 10 ** rng.uniform(-6, 4, n)
    worst, ok = 0.0, True
    for e, a, t in zip(eta, alpha, tl):
        law = ArcsinhLaw(a)
        V = solve_slip(e, t, law)
        worst = max(worst, abs(e * V + law.F(V) - t) / max(1, abs(t)))
        lo, hi = slip_bracket(e, t, law)
        ok = ok and law.F(V) * V >= 0 and solve_slip(e, -t, law) == -V and min(lo, hi) <= V <= max(lo, hi)
    ok = ok and worst <= 1e-12
    finish(9, ok, f"{n} samples, worst relative residual {worst:.1e} (<= 1e-12)", t0, 5)


def test_criterion_10_face_energy_audit():
    t0 = time.perf_counter()
    out = cl.audit_face_energy_rates()
    worst = max(out.values())
    finish(10, worst <= 1e-12, f"{len(out)} closures, worst relative rate {worst:.1e} (<= 1e-12)", t0, 10)

import numpy as np
import pytest

from charsbp import closures as cl
from charsbp import _mms_generated as G
from charsbp.geometry import AffineMap, MeshTopology, compute_metrics
from charsbp.harness import experiments as ex
from charsbp.harness.config import CourantConfig, ScenarioConfig
from charsbp.mms import K, ManufacturedSolution
from charsbp.semidiscrete import Closures, Semidiscretization
from charsbp.timeint import integrate, timestep_size


# ------------------------------------------------------------------ 1D exact

def test_exact_solution_1d_examples():
    x = np.linspace(0, 1, 41)
    assert np.abs(ex.exact_solution_1d(x, 0.0, 0.37) - ex.default_profile(x)).max() <= 1e-15
    assert ex.exact_solution_1d(0.5, 0.9, 0.0) == 0
    with pytest.raises(ValueError):
        ex.exact_solution_1d(x, 1.5, 0.0)


def test_exact_solution_1d_against_fine_run():
    N, R = 4352, -0.99
    sd = ex.build_1d(N, 6, R, "characteristic")
    y = integrate(sd.initial_state(lambda X: ex.default_profile(X[..., 0])), sd.rhs, 0.9,
                  timestep_size(sd.mesh, 0.5))
    U, _, _ = sd.split(y)
    assert abs(U[0, N // 4] - ex.exact_solution_1d(0.25, 0.9, R)) <= 1e-6


def test_convergence_1d_second_order_rate():
    Ns = [17 * 2**r for r in range(6)]
    rep = ex.convergence_1d_case(2, 0.0, "characteristic", Ns)
    for r in rep.rate[-3:]:
        assert abs(r - 2.0) <= 0.2


def test_convergence_1d_sixth_order_finest_error():
    # reference value 2.239e-10 for h = 1/(17*32); accepted within a factor 2
    rep = ex.convergence_1d_case(6, 0.99, "characteristic", [17 * 32])
    ratio = rep.error[-1] / 2.2385309093063844e-10
    assert 0.5 <= ratio <= 2.0


def test_convergence_rates_helper():
    r = ex.convergence_rates([1.0, 0.25, 0.0625])
    assert np.isnan(r[0]) and r[1:] == [2.0, 2.0]


# ------------------------------------------------------------------ spectrum

@pytest.mark.parametrize("treatment,R,ref", [("non-characteristic", -0.95, 110.09),
                                             ("characteristic", -0.95, 0.6888),
                                             ("characteristic", 0.95, 3.2707),
                                             ("characteristic", 0.0, 0.5875)])
def test_spectrum_values(treatment, R, ref):
    ev = ex.spectrum_1d(50, 4, R, treatment)
    assert np.max(-ev.real) == pytest.approx(ref, rel=0.05)
    assert np.all(ev.real <= 1e-10)


# ----------------------------------------------------------------------- MMS

def test_mms_generated_constant():
    assert K == pytest.approx(np.e / (1 + 2 * np.e), rel=1e-15)


def fd6(f, x, h, axis):
    w = np.array([-1 / 60, 3 / 20, -3 / 4, 0, 3 / 4, -3 / 20, 1 / 60])
    out = 0.0
    for k, c in zip(range(-3, 4), w):
        if c:
            xs = [a.copy() for a in x]
            xs[axis] = xs[axis] + k * h
            out = out + c * f(*xs)
    return out / h


def fd6_second(f, x, h, axis):
    w = np.array([1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90])
    out = 0.0
    for k, c in zip(range(-3, 4), w):
        xs = [a.copy() for a in x]
        xs[axis] = xs[axis] + k * h
        out = out + c * f(*xs)
    return out / h**2


@pytest.mark.parametrize("side", ["in", "out"])
def test_mms_forcing_against_finite_differences(side):
    rng = np.random.default_rng(7)
    u = getattr(G, f"u_{side}")
    r = rng.uniform(0.3, 0.9, 20) if side == "in" else rng.uniform(1.1, 2.5, 20)
    th = rng.uniform(-np.pi, np.pi, 20)
    x = [r * np.cos(th), r * np.sin(th), rng.uniform(0.1, 2.0, 20)]
    h = 1e-2
    utt = fd6_second(u, x, h, 2)
    lap = fd6_second(u, x, h, 0) + fd6_second(u, x, h, 1)
    assert np.abs(getattr(G, f"f_{side}")(*x) - (utt - lap)).max() <= 1e-7
    for name, axis in (("ut", 2), ("ux1", 0), ("ux2", 1)):
        assert np.abs(getattr(G, f"{name}_{side}")(*x) - fd6(u, x, h, axis)).max() <= 1e-7


def test_mms_traction_continuous_across_fault():
    th = np.linspace(-np.pi, np.pi, 33)
    x1, x2, t = np.cos(th), np.sin(th), 0.7
    tn_in = x1 * G.ux1_in(x1, x2, t) + x2 * G.ux2_in(x1, x2, t)
    tn_out = x1 * G.ux1_out(x1, x2, t) + x2 * G.ux2_out(x1, x2, t)
    assert np.abs(tn_in - tn_out).max() < 1e-13


def test_mms_continuous_across_branch_cut():
    x1 = np.array([-0.5, -1.5])
    for side in ("in", "out"):
        u = getattr(G, f"u_{side}")
        assert np.abs(u(x1, 1e-12 + 0 * x1, 0.4) - u(x1, -1e-12 + 0 * x1, 0.4)).max() < 1e-10


def test_mms_zero_final_time():
    assert ex.mms_error(17, 4, "characteristic", 128.0, 0.5, 0.0) <= 1e-13


def test_mms_error_order_of_magnitude():
    e = ex.mms_error(48, 6, "characteristic", 128.0, 0.5, 0.1)
    assert 1e-10 <= e <= 1e-8


def test_mms_characteristic_and_standard_agree_when_stable():
    a = ex.mms_error(17, 2, "characteristic", 1.0, 0.25, 0.05)
    b = ex.mms_error(17, 2, "non-characteristic", 1.0, 0.25, 0.05)
    assert a < 1e-3 and b < 1e-3


# ------------------------------------------------------------------- Courant

def test_gamma_ladder():
    assert ex.gamma_ladder(1.0, 1 / 8) == [1.0, 0.5, 0.25, 0.125]


def test_courant_logic_with_stub(monkeypatch):
    def fake(N, order, tr, alpha, gamma, t_final, mesh, workers, **kw):
        if tr == "characteristic":
            return 1e-9 if gamma <= 0.5 else np.inf
        return 1e-9 if gamma <= 1 / alpha else 1.0

    monkeypatch.setattr(ex, "mms_error", fake)
    rows, detail = ex.run_courant_sweep(CourantConfig(alphas=[1.0, 4.0, 16.0]))
    got = {(r["alpha"], r["treatment"]): r["gamma_stable"] for r in rows}
    assert got[(1.0, "characteristic")] == 0.5
    assert got[(1.0, "non-characteristic")] == 1.0
    assert got[(4.0, "non-characteristic")] == 0.25
    assert got[(16.0, "non-characteristic")] == 1 / 16
    assert all(d["reference"] == 1e-9 for d in detail)


def test_mms_abort_on_error_growth():
    # an unstable standard run stops as soon as its error passes the abort level
    assert ex.mms_error(17, 2, "non-characteristic", 128.0, 0.5, 0.1, abort_error=1e-3) == np.inf
    assert ex.mms_error(17, 2, "characteristic", 1.0, 0.25, 0.05, abort_error=1e-3) < 1e-3


# -------------------------------------------------------------------- energy

def test_energy_history_small_run():
    sc = ScenarioConfig()
    h = ex.energy_history(17, 2, "nonlinear", 0.2, sc)
    assert h.dissipated[0] == 0
    assert h.max_step_increase <= 1e-10
    assert h.dissipated[-1] > 0


# ---------------------------------------------------------- self-convergence

def test_self_convergence_rejects_identical_resolutions():
    with pytest.raises(ValueError):
        ex.restrict(np.zeros((2, 18, 18)), 17, 17)
    sd = ex.build_1d(17, 2, 0.0, "characteristic")
    with pytest.raises(ValueError):
        ex.self_convergence([(sd, np.zeros((1, 18))), (sd, np.zeros((1, 18)))])


def _box_solution(N, order, t_final):
    mesh = MeshTopology([compute_metrics(AffineMap(), N)], [], {(0, f): "wall" for f in (1, 2, 3, 4)})
    sd = Semidiscretization(mesh, order, Closures({"wall": cl.Dirichlet()}, {}))
    y0 = sd.initial_state(lambda X: np.sin(np.pi * X[..., 0]) * np.sin(np.pi * X[..., 1]))
    y = integrate(y0, sd.rhs, t_final, timestep_size(mesh, 0.25))
    return sd, sd.split(y)[0]


def test_self_convergence_smooth_box():
    # t = 1 keeps N = 16 in the asymptotic range
    t_final = 1.0
    sols = [_box_solution(N, 4, t_final) for N in (16, 32, 64)]
    sc = ex.self_convergence(sols)
    assert abs(sc.rate - 4.0) <= 0.3
    # analytic oracle: the standing wave
    sd, U = sols[-1]
    exact = np.sin(np.pi * sd.x[..., 0]) * np.sin(np.pi * sd.x[..., 1]) * np.cos(np.sqrt(2) * np.pi * t_final)
    assert ex.l2_error(sd, U - exact) < 1e-5

"""Derive the boundary remainder blocks of the variable-coefficient operators.

For nodes i < K the remainder R_i is parametrised as E^T Y_i E with Y_i >= 0,
where the rows of E span the range of the boundary residual of the constant
coefficient operator.  Linear constraints:

* sum_i R_i reproduces the constant-coefficient operator exactly,
* boundary rows of H D11 are exact for (x^a (x^b)')' with a + b <= p + 1,

and the semidefinite constraints are Y_i >= t I together with the borrowing
inequality sum_{i<m_b} Y_i - zeta delta delta^T >= t I.  The margin t is
maximised.  The result is written to ``src/charsbp/_remainders.py``.

Requires cvxpy (``pip install cvxpy``); the package itself does not.
"""
from __future__ import annotations

import argparse
import pprint
from pathlib import Path

import cvxpy as cp
import numpy as np

from charsbp.sbp1d import (_interior_row_weights, boundary_rows, difference_matrix,
                           norm_weights, q_matrix)

# constant-coefficient second derivatives from the literature (index units);
# only the boundary rows differ from the central stencil
D2_BLOCKS = {
    2: ([[1, -2, 1]], [1, -2, 1]),
    4: ([[2, -5, 4, -1], [1, -2, 1, 0], [-4 / 43, 59 / 43, -110 / 43, 59 / 43, -4 / 43],
         [-1 / 49, 0, 59 / 49, -118 / 49, 64 / 49, -4 / 49]],
        [-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12]),
    6: ([[114170 / 40947, -438107 / 54596, 336409 / 40947, -276997 / 81894, 3747 / 13649,
          21035 / 163788],
         [6173 / 5860, -2066 / 879, 3283 / 1758, -303 / 293, 2111 / 3516, -601 / 4395],
         [-52391 / 81330, 134603 / 32532, -21982 / 2711, 112915 / 16266, -46969 / 16266,
          30409 / 54220],
         [68603 / 321540, -12423 / 10718, 112915 / 32154, -75934 / 16077, 53369 / 21436,
          -54899 / 160770, 48 / 5359],
         [-7053 / 39385, 86551 / 94524, -46969 / 23631, 53369 / 15754, -87904 / 23631,
          820271 / 472620, -1296 / 7877, 96 / 7877],
         [21035 / 525612, -24641 / 131403, 30409 / 87602, -54899 / 131403, 820271 / 525612,
          -117600 / 43801, 64800 / 43801, -6480 / 43801, 480 / 43801]],
        [1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90]),
}

CONFIG = {2: dict(K=2, S=3, zeta=1.0, m_b=2),
          4: dict(K=5, S=8, zeta=0.5776, m_b=4),
          6: dict(K=8, S=12, zeta=0.3696, m_b=7)}


def constant_d2(order: int, N: int) -> np.ndarray:
    rows, st = D2_BLOCKS[order]
    n = N + 1
    D = np.zeros((n, n))
    r = len(st) // 2
    for i in range(n):
        for k, v in enumerate(st):
            j = i - r + k
            if 0 <= j < n:
                D[i, j] = v
    for i, row in enumerate(rows):
        D[i] = 0
        D[i, :len(row)] = row
        D[N - i] = 0
        D[N - i, n - len(row):] = row[::-1]
    return D


def interior_remainder(order: int, c: np.ndarray, K: int) -> np.ndarray:
    n = c.size
    p = order // 2
    R = np.zeros((n, n))
    for w, k in zip(_interior_row_weights(order, c, K), range(p + 1, 2 * p + 1)):
        Dk = difference_matrix(k, n)
        R += Dk.T @ (w[:, None] * Dk)
    return R


def build(order: int, K: int, S: int, N: int = 60) -> dict:
    p = order // 2
    n = N + 1
    Hw = norm_weights(order, N)
    D1 = q_matrix(order, N) / Hw[:, None]
    S0, SN = boundary_rows(order, N)
    e0, eN = np.eye(n)[0], np.eye(n)[N]
    M = -Hw[:, None] * constant_d2(order, N) - np.outer(e0, S0) + np.outer(eN, SN)
    Rc = M - D1.T @ (Hw[:, None] * D1)
    res = Rc - interior_remainder(order, np.ones(n), K)
    ev, V = np.linalg.eigh(res[:S, :S])
    E = V[:, ev > 1e-10 * ev.max()].T.copy()
    m = E.shape[0]
    iu = np.triu_indices(m)
    nv = iu[0].size

    def ymat(z):
        Y = np.zeros((m, m))
        Y[iu] = z
        return Y + Y.T - np.diag(np.diag(Y))

    basis = np.array([E.T @ ymat(np.eye(nv)[k]) @ E for k in range(nv)])
    rows, rhs = [], []
    ru, su = np.triu_indices(S)
    A_const = np.hstack([basis[:, ru, su].T] * K)
    rows.append(A_const)
    rhs.append(res[ru, su])
    x = np.arange(n, dtype=float) / S
    for a in range(p + 2):
        c = x ** a
        Rint_c = interior_remainder(order, c, K)
        for b in range(1, p + 2 - a):
            u = x ** b
            dc = a * x ** (a - 1) if a else 0 * x
            target = (dc * b * x ** (b - 1) + c * (b * (b - 1) * x ** (b - 2) if b > 1 else 0 * x)) / S**2
            known = -(D1.T @ (Hw * c * (D1 @ u))) - Rint_c @ u
            known[0] -= c[0] * (S0 @ u)
            r_ = Hw * target - known
            if np.abs(r_[S:n // 2]).max() > 1e-10:
                raise RuntimeError(f"accuracy residual outside the free block (a={a}, b={b})")
            A = np.hstack([-(c[i] * basis[:, :S, :] @ u[:S]).T for i in range(K)])
            rows.append(A)
            rhs.append(r_[:S])
    Aeq, beq = np.vstack(rows), np.concatenate(rhs)
    U, sv, Vt = np.linalg.svd(Aeq, full_matrices=True)
    rank = int((sv > 1e-10 * sv[0]).sum())
    z0 = Vt[:rank].T @ ((U[:, :rank].T @ beq) / sv[:rank])
    if np.abs(Aeq @ z0 - beq).max() > 1e-10:
        raise RuntimeError("linear constraints are inconsistent")
    Delta = S0[:S] - D1[0, :S]
    delta = np.linalg.lstsq(E.T, Delta, rcond=None)[0]
    return dict(nv=nv, m=m, iu=iu, ymat=ymat, z0=z0, Nb=Vt[rank:].T, E=E, delta=delta, K=K, S=S)


def solve(B: dict, zeta: float, m_b: int) -> tuple[float, list[np.ndarray]]:
    nv, m, K = B["nv"], B["m"], B["K"]
    P = np.zeros((m * m, nv))
    for k, (r, s) in enumerate(zip(*B["iu"])):
        P[r * m + s, k] = 1
        P[s * m + r, k] = 1
    w = cp.Variable(B["Nb"].shape[1])
    t = cp.Variable()
    Ys = []
    for i in range(K):
        zi = B["z0"][i * nv:(i + 1) * nv] + B["Nb"][i * nv:(i + 1) * nv] @ w
        Y = cp.reshape(P @ zi, (m, m), order="C")
        Ys.append((Y + Y.T) / 2)
    I = np.eye(m)
    cons = [t <= 1, t >= -1] + [Y >> t * I for Y in Ys]
    cons.append(sum(Ys[:m_b]) - zeta * np.outer(B["delta"], B["delta"]) >> t * I)
    prob = cp.Problem(cp.Maximize(t), cons)
    for solver in ("CLARABEL", "SCS"):
        try:
            prob.solve(solver=solver)
            break
        except cp.error.SolverError:
            continue
    if t.value is None or t.value <= 0:
        raise RuntimeError(f"no strictly feasible operator (status {prob.status}, margin {t.value})")
    blocks = []
    for i in range(K):
        zi = B["z0"][i * nv:(i + 1) * nv] + B["Nb"][i * nv:(i + 1) * nv] @ w.value
        Y = B["ymat"](zi)
        blocks.append(B["E"].T @ Y @ B["E"])
    return float(t.value), blocks


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parents[1] / "src" / "charsbp" / "_remainders.py")
    args = ap.parse_args()
    data = {}
    for order, cfg in CONFIG.items():
        B = build(order, cfg["K"], cfg["S"])
        margin, blocks = solve(B, cfg["zeta"], cfg["m_b"])
        print(f"order {order}: K={cfg['K']} S={cfg['S']} zeta={cfg['zeta']} margin={margin:.3e}")
        data[order] = dict(K=cfg["K"], S=cfg["S"], zeta=cfg["zeta"], m_b=cfg["m_b"],
                           blocks=[[[float(v) for v in row] for row in blk] for blk in blocks])
    np.set_printoptions(precision=17)
    body = pprint.pformat(data, width=100, compact=True)
    args.out.write_text(
        '"""Boundary remainder blocks R_i (index units) for nodes i < K.\n\n'
        "Generated by scripts/derive_remainders.py; do not edit.\n"
        "``zeta`` is the borrowing constant the blocks were derived for.\n"
        '"""\n\nREMAINDERS = ' + body + "\n")
    print("wrote", args.out)


if __name__ == "__main__":
    main()

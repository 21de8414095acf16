"""Semidiscrete right-hand side, discrete energy and system matrix.

Per block the scheme reads

    H rho_hat dv/dt = -A u + sum_f L^T H^f tau*  - sum_f B_j^T n_i C_ij H^f (u* - L u)

with T = n_i C_ij B_j u and tau = T + X^{-1}(u* - L u).  The state vector
stacks ``u``, ``v`` and one row per stored face unknown (characteristic
faces, plus the integrated Dirichlet data of standard Dirichlet faces).

Evaluation is two-phase: traces and tractions are computed for every face
of every block, face closures are then evaluated group by group on the
gathered traces, and the resulting fluxes are lifted back into the volume.
All arrays may carry leading batch axes, which is how the system matrix is
assembled (the RHS applied to identity columns).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

import numpy as np
import scipy.sparse as sp

from . import closures as cl
from .geometry import FACE_AXIS, FACE_SIGN, face_slice
from .sbp1d import BORROWING, SbpOperatorSet1D
from .sbp2d import SbpOperatorSet2D


class ClosureError(ValueError):
    pass


@dataclass
class FaceData:
    """Geometry handed to boundary/interface data callables."""
    x: np.ndarray  # (nf, d) physical coordinates
    normal: np.ndarray  # (nf, d) outward unit normal
    SJ: np.ndarray
    Z: np.ndarray  # transformed impedance
    block: int
    face: int


@dataclass
class Closures:
    """Closure per boundary tag and per interface kind."""
    boundary: dict
    interface: dict = field(default_factory=dict)


@dataclass
class SolverState:
    u: np.ndarray
    v: np.ndarray
    u_star: np.ndarray
    t: float = 0.0


Forcing = Callable[[float, np.ndarray], np.ndarray]  # (t, x[..., d]) -> values


def _along_last(M, X):
    """Apply sparse M along the last axis of X."""
    n = X.shape[-1]
    return np.asarray(M @ X.reshape(-1, n).T).T.reshape(X.shape)


def _along_rows(M, X):
    """Apply sparse M along axis -2 of X."""
    Xt = np.moveaxis(X, -2, 0)
    return np.moveaxis(np.asarray(M @ Xt.reshape(Xt.shape[0], -1)).reshape(Xt.shape), 0, -2)


class Semidiscretization:
    def __init__(self, mesh, order: int, closures: Closures, forcing: Optional[Forcing] = None,
                 workers: int = 1):
        self.mesh = mesh
        self._face_cache: dict = {}
        self.order = order
        self.dim = mesh.dim
        self.N = mesh.N
        self.n = self.N + 1
        self.nf = self.n if self.dim == 2 else 1
        self.nfaces = 2 * self.dim
        self.ops1 = SbpOperatorSet1D(order, self.N)
        self.ops2 = SbpOperatorSet2D(order, self.N) if self.dim == 2 else None
        self.h = self.ops1.h
        self.forcing = forcing
        self.workers = max(1, int(workers))
        blocks = mesh.blocks
        self.nb = len(blocks)
        st = lambda name: np.stack([getattr(b, name) for b in blocks])
        self.rho_hat = st("rho_hat")
        self.J = st("J")
        self.C11 = st("C11")
        self.rho = st("rho")
        self.x = st("x")
        if self.dim == 2:
            self.C12 = st("C12")
            self.C22 = st("C22")
            self.WC12 = self.ops2.W * self.C12
            self.mass = self.rho_hat * self.h**2 * self.ops2.W
            from scipy import sparse
            self._Adir = sparse.block_diag([self.ops2.directional_sparse(b.C11, b.C22) for b in blocks],
                                           format="csr")
            self._Adir_chunks = {}
        else:
            self.mass = self.rho_hat * self.h * self.ops1.Hw
        self._face_geometry()
        self._assign(closures)

    # ------------------------------------------------------------ geometry

    def _face_geometry(self):
        B, F, nf = self.nb, self.nfaces, self.nf
        o = self.ops1
        mb = BORROWING[self.order].m_b
        self.SJ = np.ones((B, F, nf))
        self.Z = np.zeros((B, F, nf))
        self.Ckk = np.zeros((B, F, nf))  # n C n on the face
        self.Ckl = np.zeros((B, F, nf))  # n_i C_ij for j parallel (times sign below)
        self.Xinv = np.zeros((B, F, nf))
        self.Hf = (self.h * o.Hw) if self.dim == 2 else np.ones(1)
        for b, blk in enumerate(self.mesh.blocks):
            for f in range(1, F + 1):
                k = f - 1
                self.SJ[b, k] = blk.face_SJ(f)
                self.Z[b, k] = blk.face_Z(f)
                self.Ckk[b, k] = blk.face_nCn(f)
                if self.dim == 2:
                    self.Ckl[b, k] = blk.C12[face_slice(f)]
                    strip = blk.C11 if FACE_AXIS[f] == 0 else blk.C22.T
                    strip = strip[:, :mb] if f in (1, 3) else strip[:, ::-1][:, :mb]
                else:
                    strip = blk.C11[None, :mb] if f == 1 else blk.C11[None, ::-1][:, :mb]
                pen = cl.compute_penalty(self.Ckk[b, k], strip, self.order, self.h, self.dim)
                self.Xinv[b, k] = pen.Xinv

    def face_data(self, b: int, f: int) -> FaceData:
        """Face geometry; cached so closures may key data on the object."""
        key = (b, f)
        if key not in self._face_cache:
            self._face_cache[key] = self._make_face_data(b, f)
        return self._face_cache[key]

    def _make_face_data(self, b: int, f: int) -> FaceData:
        blk = self.mesh.blocks[b]
        if self.dim == 2:
            x, nrm = blk.face_x(f), blk.face_normal(f)
        else:
            x = blk.face_x(f)[:, None]
            nrm = np.array([[FACE_SIGN[f]]])
        return FaceData(x=x, normal=nrm, SJ=self.SJ[b, f - 1], Z=self.Z[b, f - 1], block=b, face=f)

    # ------------------------------------------------------------- closures

    def _assign(self, closures: Closures):
        n = self.nf
        self.groups = {k: [] for k in ("dirichlet", "char_bc", "nonchar", "locked_char",
                                       "locked_std", "nl_char", "nl_std")}
        slots = []
        for (b, f), tag in sorted(self.mesh.boundary.items()):
            if tag not in closures.boundary:
                raise ClosureError(f"no closure for boundary tag {tag!r} (block {b}, face {f})")
            c = closures.boundary[tag]
            if isinstance(c, cl.Dirichlet):
                # time-dependent data is integrated alongside the solution
                if c.g_dot is not None:
                    self.groups["dirichlet"].append((b, f, c, len(slots)))
                    slots.append((b, f))
                else:
                    self.groups["dirichlet"].append((b, f, c, None))
            elif isinstance(c, cl.CharacteristicBC):
                self.groups["char_bc"].append((b, f, c, len(slots)))
                slots.append((b, f))
            elif isinstance(c, cl.NonCharacteristicBC):
                self.groups["nonchar"].append((b, f, c, None))
            else:
                raise ClosureError(f"closure {c!r} cannot close a boundary")
        for con in self.mesh.connections:
            if con.kind not in closures.interface:
                raise ClosureError(f"no closure for interface kind {con.kind!r}")
            c = closures.interface[con.kind]
            key = {cl.LockedChar: "locked_char", cl.LockedStd: "locked_std",
                   cl.NonlinearChar: "nl_char", cl.NonlinearStd: "nl_std"}.get(type(c))
            if key is None:
                raise ClosureError(f"closure {c!r} cannot close an interface")
            entry = (con, c)
            if c.characteristic:
                entry = (con, c, len(slots), len(slots) + 1)
                slots.extend([con.minus, con.plus])
            self.groups[key].append(entry)
        self.slots = slots
        self.nslots = len(slots)
        self.slot_b = np.array([s[0] for s in slots], dtype=int)
        self.slot_f = np.array([s[1] - 1 for s in slots], dtype=int)
        # vectorised index sets
        self.idx = {}
        for key in ("dirichlet", "char_bc", "nonchar"):
            g = self.groups[key]
            self.idx[key] = (np.array([e[0] for e in g], int), np.array([e[1] - 1 for e in g], int),
                             np.array([-1 if e[3] is None else e[3] for e in g], int))
        rev = np.arange(n)[::-1]
        fwd = np.arange(n)
        for key in ("locked_char", "locked_std", "nl_char", "nl_std"):
            g = self.groups[key]
            mb = np.array([e[0].minus[0] for e in g], int)
            mf = np.array([e[0].minus[1] - 1 for e in g], int)
            pb = np.array([e[0].plus[0] for e in g], int)
            pf = np.array([e[0].plus[1] - 1 for e in g], int)
            perm = np.array([rev if e[0].reversed else fwd for e in g], int).reshape(len(g), n)
            sm = np.array([e[2] if len(e) > 2 else -1 for e in g], int)
            sp = np.array([e[3] if len(e) > 2 else -1 for e in g], int)
            self.idx[key] = (mb, mf, pb, pf, perm, sm, sp)
        self.nonlinear = bool(self.groups["nl_char"] or self.groups["nl_std"])
        self.R_char = np.array([np.broadcast_to(np.asarray(e[2].R, float), (n,))
                                for e in self.groups["char_bc"]]).reshape(-1, n)
        self.R_nonchar = np.array([np.broadcast_to(np.asarray(e[2].R, float), (n,))
                                   for e in self.groups["nonchar"]]).reshape(-1, n)
        self.ny = 2 * self.nb * self.n**self.dim + self.nslots * n

    # ---------------------------------------------------------------- layout

    @property
    def vol_shape(self) -> tuple:
        return (self.nb,) + (self.n,) * self.dim

    def split(self, y: np.ndarray):
        nv = self.nb * self.n**self.dim
        lead = y.shape[:-1]
        U = y[..., :nv].reshape(lead + self.vol_shape)
        V = y[..., nv:2 * nv].reshape(lead + self.vol_shape)
        S = y[..., 2 * nv:].reshape(lead + (self.nslots, self.nf))
        return U, V, S

    def join(self, U, V, S) -> np.ndarray:
        lead = U.shape[:-1 - self.dim]
        return np.concatenate([U.reshape(lead + (-1,)), V.reshape(lead + (-1,)),
                               S.reshape(lead + (-1,))], axis=-1)

    def state(self, y: np.ndarray, t: float = 0.0) -> SolverState:
        U, V, S = self.split(y)
        return SolverState(U, V, S, t)

    def initial_state(self, u0: Callable, v0: Optional[Callable] = None, t0: float = 0.0,
                      dirichlet_data: bool = True) -> np.ndarray:
        """Stack u0(x), v0(x) and the matching face unknowns."""
        X = self.x if self.dim == 2 else self.x[..., None]
        U = np.asarray(u0(X), float) * np.ones(self.vol_shape)
        V = np.zeros(self.vol_shape) if v0 is None else np.asarray(v0(X), float) * np.ones(self.vol_shape)
        tr = self.traces(U)
        S = tr[self.slot_b, self.slot_f].copy() if self.nslots else np.zeros((0, self.nf))
        if dirichlet_data:
            for b, f, c, s in self.groups["dirichlet"]:
                if s is not None:
                    S[s] = 0.0 if c.g is None else c.g(t0, self.face_data(b, f))
        return self.join(U, V, S)

    # -------------------------------------------------------- volume pieces

    def volume(self, U: np.ndarray) -> np.ndarray:
        """A u for all blocks (physical units)."""
        if self.dim == 1:
            return self.ops1.apply_A(self.C11, U, axis=-1) / self.h
        o2 = self.ops2
        if self.workers == 1 or self.nb < 2:
            return self._vol2(U, slice(None))
        chunks = np.array_split(np.arange(self.nb), self.workers)
        out = np.empty_like(U)
        def work(ix):
            sl = slice(ix[0], ix[-1] + 1)
            out[..., sl, :, :] = self._vol2(U[..., sl, :, :], sl)
        with ThreadPoolExecutor(self.workers) as ex:
            list(ex.map(work, [c for c in chunks if c.size]))
        return out

    def _dir_matrix(self, sl):
        if sl.start is None:
            return self._Adir
        key = (sl.start, sl.stop)
        if key not in self._Adir_chunks:
            nv = self.n * self.n
            self._Adir_chunks[key] = self._Adir[sl.start * nv:sl.stop * nv, sl.start * nv:sl.stop * nv]
        return self._Adir_chunks[key]

    def _vol2(self, U, sl):
        o1 = self.ops1
        flat = U.reshape((-1, U.shape[-3] * self.n * self.n))
        out = np.asarray(self._dir_matrix(sl) @ flat.T).T.reshape(U.shape)
        D, DT = self._D1_sparse
        W = self.WC12[sl]
        out += _along_last(DT, W * _along_rows(D, U)) + _along_rows(DT, W * _along_last(D, U))
        return out

    @cached_property
    def _D1_sparse(self):
        D = sp.csr_matrix(self.ops1.D1w)
        return D, sp.csr_matrix(D.T)

    def traces(self, U: np.ndarray) -> np.ndarray:
        if self.dim == 1:
            return np.stack([U[..., :1], U[..., -1:]], axis=-2)
        return np.stack([U[..., :, 0], U[..., :, -1], U[..., 0, :], U[..., -1, :]], axis=-2)

    def tractions(self, U: np.ndarray) -> np.ndarray:
        o = self.ops1
        S0, SN, h = o.S0, o.SN, self.h
        m = len(np.nonzero(S0)[0])
        if self.dim == 1:
            p0 = U[..., :m] @ S0[:m] / h
            pN = U[..., -m:] @ SN[-m:] / h
            return np.stack([-self.Ckk[:, 0, 0] * p0, self.Ckk[:, 1, 0] * pN], axis=-1)[..., None]
        perp = [U[..., :, :m] @ S0[:m], U[..., :, -m:] @ SN[-m:],
                np.einsum("...ji,j->...i", U[..., :m, :], S0[:m]),
                np.einsum("...ji,j->...i", U[..., -m:, :], SN[-m:])]
        tr = self.traces(U)
        par = o.d1_kernel.apply(tr, axis=-1)
        perp = np.stack(perp, axis=-2)
        sign = np.array([-1.0, 1.0, -1.0, 1.0])[:, None]
        return sign * (self.Ckk * perp + self.Ckl * par) / h

    def lift(self, taus: np.ndarray, delta: np.ndarray) -> np.ndarray:
        """sum_f L^T H^f tau* - B_j^T n_i C_ij H^f delta."""
        o = self.ops1
        S0, SN, h = o.S0, o.SN, self.h
        m = len(np.nonzero(S0)[0])
        lead = taus.shape[:-3]
        out = np.zeros(lead + self.vol_shape)
        sign = np.array([-1.0, 1.0, -1.0, 1.0])[:self.nfaces, None]
        g0 = self.Hf * taus
        gp = sign * self.Ckk * self.Hf * delta / h
        if self.dim == 1:
            out[..., :m] -= gp[..., 0, :] * S0[:m]
            out[..., -m:] -= gp[..., 1, :] * SN[-m:]
            out[..., 0] += g0[..., 0, 0]
            out[..., -1] += g0[..., 1, 0]
            return out
        gq = o.d1t_kernel.apply(sign * self.Ckl * self.Hf * delta, axis=-1) / h
        face = g0 - gq
        out[..., :, :m] -= gp[..., 0, :, None] * S0[:m]
        out[..., :, -m:] -= gp[..., 1, :, None] * SN[-m:]
        out[..., :m, :] -= S0[:m, None] * gp[..., 2, None, :]
        out[..., -m:, :] -= SN[-m:, None] * gp[..., 3, None, :]
        out[..., :, 0] += face[..., 0, :]
        out[..., :, -1] += face[..., 1, :]
        out[..., 0, :] += face[..., 2, :]
        out[..., -1, :] += face[..., 3, :]
        return out

    # ----------------------------------------------------------- face phase

    def _data(self, fn, t, b, f):
        return 0.0 if fn is None else fn(t, self.face_data(b, f))

    def face_phase(self, U, V, S, t: float, homogeneous: bool = False):
        """Traces, u*, tau-hat, tau* and du*/dt for every face."""
        uf = self.traces(U)
        vf = self.traces(V)
        T = self.tractions(U)
        us = uf.copy()
        if self.nslots:
            us[..., self.slot_b, self.slot_f, :] = S
        # locked standard: u* is the average of both sides
        mb, mf, pb, pf, perm, _, _ = self.idx["locked_std"]
        if mb.size:
            um = uf[..., mb, mf, :]
            up = np.take_along_axis(uf[..., pb, pf, :], np.broadcast_to(perm, uf[..., pb, pf, :].shape), -1)
            avg = 0.5 * (um + up)
            us[..., mb, mf, :] = avg
            inv = np.argsort(perm, axis=-1)
            us[..., pb, pf, :] = np.take_along_axis(avg, np.broadcast_to(inv, avg.shape), -1)
        direct = [e for e in self.groups["dirichlet"] if e[3] is None]
        if direct:
            for bb, ff, c, _ in direct:
                us[..., bb, ff - 1, :] = 0.0 if (c.g is None or homogeneous) else c.g(t, self.face_data(bb, ff))
        tau = T + self.Xinv * (us - uf)
        taus = np.zeros_like(tau)
        dS = np.zeros(U.shape[:-1 - self.dim] + (self.nslots, self.nf))
        Z, SJ = self.Z, self.SJ

        b, f, s = self.idx["dirichlet"]
        if b.size:
            taus[..., b, f, :] = tau[..., b, f, :]
            if not homogeneous:
                for (bb, ff, c, ss) in self.groups["dirichlet"]:
                    if ss is not None:
                        dS[..., ss, :] = c.g_dot(t, self.face_data(bb, ff))
        b, f, s = self.idx["char_bc"]
        if b.size:
            gC = np.zeros((b.size, self.nf))
            if not homogeneous:
                for i, (bb, ff, c, ss) in enumerate(self.groups["char_bc"]):
                    gC[i] = self._data(c.g, t, bb, ff)
            dus, ts = cl.characteristic_bc_flux(Z[b, f], self.R_char, gC, SJ[b, f],
                                                vf[..., b, f, :], tau[..., b, f, :])
            taus[..., b, f, :] = ts
            dS[..., s, :] = dus
        b, f, _ = self.idx["nonchar"]
        if b.size:
            gC = np.zeros((b.size, self.nf))
            if not homogeneous:
                for i, (bb, ff, c, _) in enumerate(self.groups["nonchar"]):
                    gC[i] = self._data(c.g, t, bb, ff)
            taus[..., b, f, :] = cl.noncharacteristic_bc_flux(Z[b, f], self.R_nonchar, gC, SJ[b, f],
                                                              vf[..., b, f, :])

        for key in ("locked_char", "nl_char", "locked_std", "nl_std"):
            mb, mf, pb, pf, perm, sm, sp = self.idx[key]
            if not mb.size:
                continue
            P = lambda A: np.take_along_axis(A[..., pb, pf, :], np.broadcast_to(perm, A[..., pb, pf, :].shape), -1)
            inv = np.argsort(perm, axis=-1)
            Pinv = lambda A: np.take_along_axis(A, np.broadcast_to(inv, A.shape), -1)
            g = 0.0
            if key.startswith("nl") and not homogeneous:
                g = np.zeros((mb.size, self.nf))
                for i, e in enumerate(self.groups[key]):
                    con, c = e[0], e[1]
                    if c.g is not None:
                        fd = self.face_data(*con.plus)
                        g[i] = np.asarray(c.g(t, fd))[perm[i]]
            if key in ("locked_char", "nl_char"):
                Zm, Zp = Z[mb, mf], P(Z)
                wm = Zm * vf[..., mb, mf, :] - tau[..., mb, mf, :]
                wp = Zp * P(vf) - P(tau)
                law = None
                if key == "nl_char":
                    laws = {e[1].law for e in self.groups[key]}
                    if len(laws) != 1:
                        raise ClosureError("all nonlinear interfaces must share one friction law")
                    law = laws.pop()
                dum, tm, dup, tp = cl.characteristic_interface_flux(Zm, Zp, wm, wp, SJ[mb, mf], law, g)
                dS[..., sm, :] = dum
                dS[..., sp, :] = Pinv(dup)
            elif key == "locked_std":
                _, tm, _, tp = cl.locked_std_flux(0.0, 0.0, tau[..., mb, mf, :], P(tau))
            else:
                laws = {e[1].law for e in self.groups[key]}
                law = laws.pop()
                tm, tp = cl.nonlinear_std_flux(vf[..., mb, mf, :], P(vf), SJ[mb, mf], law, g)
            taus[..., mb, mf, :] = tm
            taus[..., pb, pf, :] = Pinv(tp)
        # standard interfaces and non-characteristic faces: u* tracks the grid
        return dict(uf=uf, vf=vf, T=T, us=us, tau=tau, taus=taus, dS=dS)

    # ------------------------------------------------------------------ rhs

    def rhs(self, t: float, y: np.ndarray, homogeneous: bool = False) -> np.ndarray:
        U, V, S = self.split(y)
        fp = self.face_phase(U, V, S, t, homogeneous)
        tot = -self.volume(U) + self.lift(fp["taus"], fp["us"] - fp["uf"])
        dV = tot / self.mass
        if self.forcing is not None and not homogeneous:
            X = self.x if self.dim == 2 else self.x[..., None]
            dV = dV + self.forcing(t, X) / self.rho
        if not np.all(np.isfinite(dV)):
            bad = np.argwhere(~np.isfinite(dV))[0]
            raise FloatingPointError(f"non-finite RHS in block {bad[-1 - self.dim]}")
        return self.join(V, dV, fp["dS"])

    __call__ = rhs

    # --------------------------------------------------------------- energy

    def energy(self, y: np.ndarray, t: float = 0.0, per_block: bool = False):
        """Discrete energy; batched over leading axes of ``y``."""
        U, V, S = self.split(y)
        fp = self.face_phase(U, V, S, t, homogeneous=True)
        ax = tuple(range(-self.dim, 0))
        kin = 0.5 * np.sum(self.mass * V * V, axis=ax)
        pot = 0.5 * np.sum(U * self.volume(U), axis=ax)
        X = 1.0 / self.Xinv
        fe = 0.5 * np.sum(self.Hf * X * (fp["tau"] ** 2 - fp["T"] ** 2), axis=(-2, -1))
        Eb = kin + pot + fe
        if per_block:
            return Eb
        return float(np.sum(Eb)) if np.ndim(y) == 1 else np.sum(Eb, axis=-1)

    # ------------------------------------------------------------ matrix

    def system_matrix(self, cap: int = 20000, chunk: int = 256) -> np.ndarray:
        if self.nonlinear:
            raise ClosureError("system matrix requires linear closures")
        if self.ny > cap:
            raise ValueError(f"system size {self.ny} exceeds cap {cap}")
        M = np.empty((self.ny, self.ny))
        for s in range(0, self.ny, chunk):
            e = min(self.ny, s + chunk)
            E = np.zeros((e - s, self.ny))
            E[np.arange(e - s), np.arange(s, e)] = 1.0
            M[:, s:e] = self.rhs(0.0, E, homogeneous=True).T
        return M


def face_rate_total(sd: Semidiscretization, y: np.ndarray, t: float = 0.0,
                    homogeneous: bool = True) -> float:
    """Sum over faces of tau*^T H v + tau^T H (du*/dt - v)."""
    U, V, S = sd.split(y)
    fp = sd.face_phase(U, V, S, t, homogeneous)
    dy = sd.rhs(t, y, homogeneous)
    dU, dV, dS = sd.split(dy)
    dus = sd.traces(dU)  # u* tracks the grid trace unless stored, prescribed or averaged
    for b, f, _, s in sd.groups["dirichlet"]:
        if s is None:
            dus[..., b, f - 1, :] = 0.0
    if sd.nslots:
        dus[..., sd.slot_b, sd.slot_f, :] = dS
    mb, mf, pb, pf, perm, _, _ = sd.idx["locked_std"]
    if mb.size:
        vm = fp["vf"][..., mb, mf, :]
        vp = np.take_along_axis(fp["vf"][..., pb, pf, :], perm, -1)
        avg = 0.5 * (vm + vp)
        dus[..., mb, mf, :] = avg
        dus[..., pb, pf, :] = np.take_along_axis(avg, np.argsort(perm, -1), -1)
    return float(np.sum(cl.face_energy_rate(sd.Hf, fp["taus"], fp["vf"], fp["tau"], dus)))

"""Manufactured solution on the disk-in-square mesh.

Inside the unit disk ``u = sin(t) K (2 - exp(-r^2)) x2``, outside
``u = sin(t) ((r - 1)^2 x1 / r + (r - 1) x2 / r)`` with rho = 1, C = I.
The constant K makes the normal traction continuous across r = 1; the slip
across the fault is carried by the friction data g.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _mms_generated as G
from . import closures as cl
from .friction import ArcsinhLaw
from .semidiscrete import Closures, FaceData

K = G.K
_T1 = 0.5 * np.pi  # sin = 1


def _side(fn_in, fn_out, inside: np.ndarray):
    """Evaluate piecewise fields blockwise; ``inside`` is a (B,) mask."""
    def ev(t, X):
        out = np.empty(X.shape[:-1])
        for mask, fn in ((inside, fn_in), (~inside, fn_out)):
            if mask.any():
                Xm = X[mask]
                out[mask] = fn(Xm[..., 0], Xm[..., 1], t)
        return out
    return ev


@dataclass
class ManufacturedSolution:
    inside: np.ndarray  # (B,) True for blocks inside the unit disk

    def __post_init__(self):
        self._cache: dict = {}

    def _profile(self, name, fn_in, fn_out, X):
        """Time-independent factor, cached per coordinate array."""
        hit = self._cache.get(name)
        if hit is None or hit[0] is not X:
            hit = (X, _side(fn_in, fn_out, self.inside)(0.0, X))
            self._cache[name] = hit
        return hit[1]

    @classmethod
    def for_mesh(cls, mesh) -> "ManufacturedSolution":
        return cls(np.array([b.tag == "in" for b in mesh.blocks]))

    def u(self, t, X):
        return np.sin(t) * self._profile("u", G.us_in, G.us_out, X)

    def ut(self, t, X):
        return np.cos(t) * self._profile("u", G.us_in, G.us_out, X)

    def forcing(self, t, X):
        return np.sin(t) * self._profile("f", G.fs_in, G.fs_out, X)

    def _face_profile(self, name, fd: FaceData, build):
        """Spatial factor of separable face data, cached per face object."""
        key = (name, id(fd))
        hit = self._cache.get(key)
        if hit is None or hit[0] is not fd:
            hit = (fd, build(fd.x[:, 0], fd.x[:, 1]))
            self._cache[key] = hit
        return hit[1]

    def traction(self, t, fd: FaceData, inside: bool) -> np.ndarray:
        # every field is sin(t) times a profile, so evaluate once at t = pi/2
        g1, g2 = (G.ux1_in, G.ux2_in) if inside else (G.ux1_out, G.ux2_out)
        prof = self._face_profile(f"tn{inside}", fd, lambda x1, x2: fd.normal[:, 0] * g1(x1, x2, _T1)
                                  + fd.normal[:, 1] * g2(x1, x2, _T1))
        return np.sin(t) * prof

    def closures(self, alpha: float, characteristic: bool) -> Closures:
        law = ArcsinhLaw(alpha)

        def us_out(fd):
            return self._face_profile("us_out", fd, lambda x1, x2: G.us_out(x1, x2, 0.0))

        def gD(t, fd):
            return np.sin(t) * us_out(fd)

        def gD_dot(t, fd):
            return np.cos(t) * us_out(fd)

        def gN(t, fd):
            # q = R w + g with R = 1 reduces to tau = g / 2
            return 2.0 * self.traction(t, fd, inside=False)

        def g_fault(t, fd):
            # fd is the + (outside) face
            jump = self._face_profile("jump", fd, lambda x1, x2: G.us_in(x1, x2, 0.0) - G.us_out(x1, x2, 0.0))
            V = np.cos(t) * jump
            return self.traction(t, fd, inside=False) - law.F(V)

        boundary = {"dirichlet": cl.Dirichlet(gD, gD_dot), "neumann": cl.NonCharacteristicBC(1.0, gN)}
        if characteristic:
            interface = {"locked": cl.LockedChar(), "nonlinear": cl.NonlinearChar(law, g_fault)}
        else:
            interface = {"locked": cl.LockedStd(), "nonlinear": cl.NonlinearStd(law, g_fault)}
        return Closures(boundary, interface)

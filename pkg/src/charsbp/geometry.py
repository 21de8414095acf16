"""Block mappings, metric terms and mesh topology.

Grid fields are stored as ``F[k2, k1]`` so that the flattened (C order)
vector has xi_1 as the fastest index.  Faces are numbered 1..4:
xi_1 = 0, xi_1 = 1, xi_2 = 0, xi_2 = 1, with reference normals
``n_hat^f_i = (-1)^f delta_{ceil(f/2), i}``.  A face trace is ordered by
increasing tangential reference coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .sbp1d import SbpOperatorSet1D

# ---------------------------------------------------------------- mappings

MapResult = tuple[np.ndarray, np.ndarray, np.ndarray]  # x, dx/dxi1, dx/dxi2, each (..., 2)


class Curve:
    """Planar curve on s in [0, 1]."""

    def point(self, s: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def deriv(self, s: np.ndarray) -> np.ndarray:
        raise NotImplementedError


@dataclass(frozen=True)
class Segment(Curve):
    a: tuple[float, float]
    b: tuple[float, float]

    def point(self, s):
        s = np.asarray(s, float)[..., None]
        return (1 - s) * np.array(self.a) + s * np.array(self.b)

    def deriv(self, s):
        s = np.asarray(s, float)
        return np.broadcast_to(np.array(self.b) - np.array(self.a), s.shape + (2,)).copy()


@dataclass(frozen=True)
class Arc(Curve):
    radius: float
    phi0: float
    phi1: float

    def point(self, s):
        phi = self.phi0 + (self.phi1 - self.phi0) * np.asarray(s, float)
        return self.radius * np.stack([np.cos(phi), np.sin(phi)], axis=-1)

    def deriv(self, s):
        phi = self.phi0 + (self.phi1 - self.phi0) * np.asarray(s, float)
        d = self.radius * (self.phi1 - self.phi0)
        return d * np.stack([-np.sin(phi), np.cos(phi)], axis=-1)


@dataclass(frozen=True)
class Blend(Curve):
    c0: Curve
    c1: Curve
    beta: float

    def point(self, s):
        return (1 - self.beta) * self.c0.point(s) + self.beta * self.c1.point(s)

    def deriv(self, s):
        return (1 - self.beta) * self.c0.deriv(s) + self.beta * self.c1.deriv(s)


class Mapping:
    def __call__(self, xi1: np.ndarray, xi2: np.ndarray) -> MapResult:
        raise NotImplementedError


@dataclass(frozen=True)
class AffineMap(Mapping):
    """x = origin + M xi."""
    origin: tuple[float, float] = (0.0, 0.0)
    M: tuple[tuple[float, float], tuple[float, float]] = ((1.0, 0.0), (0.0, 1.0))

    def __call__(self, xi1, xi2):
        M = np.array(self.M, float)
        xi1, xi2 = np.broadcast_arrays(np.asarray(xi1, float), np.asarray(xi2, float))
        x = np.array(self.origin) + xi1[..., None] * M[:, 0] + xi2[..., None] * M[:, 1]
        return x, np.broadcast_to(M[:, 0], x.shape).copy(), np.broadcast_to(M[:, 1], x.shape).copy()


@dataclass(frozen=True)
class BilinearMap(Mapping):
    """Bilinear quadrilateral through corners p00, p10, p01, p11 (p_{xi1 xi2})."""
    p00: tuple[float, float]
    p10: tuple[float, float]
    p01: tuple[float, float]
    p11: tuple[float, float]

    def __call__(self, xi1, xi2):
        a, b, c, d = (np.array(p, float) for p in (self.p00, self.p10, self.p01, self.p11))
        s = np.asarray(xi1, float)[..., None]
        t = np.asarray(xi2, float)[..., None]
        x = (1 - s) * (1 - t) * a + s * (1 - t) * b + (1 - s) * t * c + s * t * d
        dx1 = (1 - t) * (b - a) + t * (d - c)
        dx2 = (1 - s) * (c - a) + s * (d - b)
        x, dx1, dx2 = np.broadcast_arrays(x, dx1, dx2)
        return x.copy(), dx1.copy(), dx2.copy()


@dataclass(frozen=True)
class RingMap(Mapping):
    """Linear blend between two curves: xi1 runs from ``inner`` to ``outer``."""
    inner: Curve
    outer: Curve

    def __call__(self, xi1, xi2):
        s = np.asarray(xi1, float)[..., None]
        a, b = self.inner.point(xi2), self.outer.point(xi2)
        da, db = self.inner.deriv(xi2), self.outer.deriv(xi2)
        x = (1 - s) * a + s * b
        dx1 = b - a
        dx2 = (1 - s) * da + s * db
        x, dx1, dx2 = np.broadcast_arrays(x, dx1, dx2)
        return x.copy(), dx1.copy(), dx2.copy()


@dataclass(frozen=True)
class PolarMap(Mapping):
    """Annular sector: r = r0 + (r1-r0) xi1, phi = phi0 + (phi1-phi0) xi2."""
    r0: float
    r1: float
    phi0: float
    phi1: float

    def __call__(self, xi1, xi2):
        xi1, xi2 = np.broadcast_arrays(np.asarray(xi1, float), np.asarray(xi2, float))
        r = self.r0 + (self.r1 - self.r0) * xi1
        phi = self.phi0 + (self.phi1 - self.phi0) * xi2
        c, s = np.cos(phi), np.sin(phi)
        x = np.stack([r * c, r * s], -1)
        dx1 = (self.r1 - self.r0) * np.stack([c, s], -1)
        dx2 = (self.phi1 - self.phi0) * np.stack([-r * s, r * c], -1)
        return x, dx1, dx2


# ----------------------------------------------------------------- material

Material = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]


def unit_material(x1, x2):
    """rho = 1, C = I."""
    one = np.ones_like(x1)
    return one, one.copy(), np.zeros_like(x1), one.copy()


def rotated_material(x1, x2):
    """Anisotropic field with principal axes rotated by pi/4 (2-x1)(2-x2)."""
    th = np.pi / 4 * (2 - x1) * (2 - x2)
    c, s = np.cos(th), np.sin(th)
    return np.ones_like(x1), c**2 + 0.5 * s**2, -0.5 * c * s, s**2 + 0.5 * c**2


# -------------------------------------------------------------------- blocks

FACE_AXIS = {1: 0, 2: 0, 3: 1, 4: 1}  # reference direction normal to the face (0 -> xi1)
FACE_SIGN = {1: -1.0, 2: 1.0, 3: -1.0, 4: 1.0}


def face_slice(f: int) -> tuple:
    """Index into a [k2, k1] field giving the trace on face f."""
    return {1: (slice(None), 0), 2: (slice(None), -1), 3: (0, slice(None)), 4: (-1, slice(None))}[f]


class MeshError(ValueError):
    pass


@dataclass
class Block:
    """Metric data of one curvilinear block on an (N+1) x (N+1) grid."""

    N: int
    x: np.ndarray  # (n, n, 2)
    dx1: np.ndarray  # dx/dxi1
    dx2: np.ndarray  # dx/dxi2
    J: np.ndarray
    rho_hat: np.ndarray
    C11: np.ndarray  # transformed coefficients C-hat
    C12: np.ndarray
    C22: np.ndarray
    rho: np.ndarray
    Cphys: tuple[np.ndarray, np.ndarray, np.ndarray]
    tag: str = ""

    def face_SJ(self, f: int) -> np.ndarray:
        # S_J = J |grad xi_k| = |dx/dxi_other|
        d = self.dx2 if FACE_AXIS[f] == 0 else self.dx1
        return np.linalg.norm(d[face_slice(f)], axis=-1)

    def face_nCn(self, f: int) -> np.ndarray:
        return (self.C11 if FACE_AXIS[f] == 0 else self.C22)[face_slice(f)]

    def face_Z(self, f: int) -> np.ndarray:
        return np.sqrt(self.rho_hat[face_slice(f)] * self.face_nCn(f))

    def face_normal(self, f: int) -> np.ndarray:
        """Physical outward unit normal on face f."""
        t = (self.dx2 if FACE_AXIS[f] == 0 else self.dx1)[face_slice(f)]
        # grad xi_k is perpendicular to the tangent dx/dxi_other; orient along n_hat
        nrm = np.stack([t[..., 1], -t[..., 0]], -1) / np.linalg.norm(t, axis=-1)[..., None]
        if FACE_AXIS[f] == 1:
            nrm = -nrm
        return FACE_SIGN[f] * nrm

    def face_x(self, f: int) -> np.ndarray:
        return self.x[face_slice(f)]


def compute_metrics(mapping: Mapping, N: int, material: Material = unit_material,
                    tag: str = "") -> Block:
    xi = np.linspace(0.0, 1.0, N + 1)
    XI2, XI1 = np.meshgrid(xi, xi, indexing="ij")
    x, dx1, dx2 = mapping(XI1, XI2)
    J = dx1[..., 0] * dx2[..., 1] - dx2[..., 0] * dx1[..., 1]
    if np.any(J <= 0):
        k2, k1 = np.unravel_index(np.argmin(J), J.shape)
        raise MeshError(f"mapping fold: J={J[k2, k1]:.3e} at node (k1={k1}, k2={k2}), x={x[k2, k1]}")
    return _from_coords(N, x, dx1, dx2, J, material, tag)


def _from_coords(N, x, dx1, dx2, J, material, tag):
    rho, c11, c12, c22 = material(x[..., 0], x[..., 1])
    # grad xi_1 = (dx2/dxi2_y, -dx2/dxi2_x)/J ; grad xi_2 = (-dx1_y, dx1_x)/J
    g1 = np.stack([dx2[..., 1], -dx2[..., 0]], -1) / J[..., None]
    g2 = np.stack([-dx1[..., 1], dx1[..., 0]], -1) / J[..., None]

    def quad(a, b):
        return (a[..., 0] * (c11 * b[..., 0] + c12 * b[..., 1])
                + a[..., 1] * (c12 * b[..., 0] + c22 * b[..., 1]))

    return Block(N=N, x=x, dx1=dx1, dx2=dx2, J=J, rho_hat=J * rho,
                 C11=J * quad(g1, g1), C12=J * quad(g1, g2), C22=J * quad(g2, g2),
                 rho=rho, Cphys=(c11, c12, c22), tag=tag)


def compute_metrics_discrete(mapping: Mapping, N: int, order: int,
                             material: Material = unit_material, tag: str = "") -> Block:
    """Same as ``compute_metrics`` but with SBP-differenced nodal coordinates."""
    xi = np.linspace(0.0, 1.0, N + 1)
    XI2, XI1 = np.meshgrid(xi, xi, indexing="ij")
    x, _, _ = mapping(XI1, XI2)
    D = SbpOperatorSet1D(order, N).D1
    dx1 = np.einsum("ij,ajc->aic", D, x)
    dx2 = np.einsum("ij,jbc->ibc", D, x)
    J = dx1[..., 0] * dx2[..., 1] - dx2[..., 0] * dx1[..., 1]
    if np.any(J <= 0):
        raise MeshError("mapping fold in discrete metrics")
    return _from_coords(N, x, dx1, dx2, J, material, tag)


# ------------------------------------------------------------------ topology

@dataclass(frozen=True)
class Connection:
    minus: tuple[int, int]  # (block, face)
    plus: tuple[int, int]
    reversed: bool
    kind: str = "locked"  # locked | nonlinear


@dataclass
class MeshTopology:
    blocks: list[Block]
    connections: list[Connection]
    boundary: dict[tuple[int, int], str]  # (block, face) -> dirichlet | neumann | ...
    dim: int = 2
    name: str = ""

    @property
    def N(self) -> int:
        return self.blocks[0].N

    def validate(self, tol: float = 1e-12) -> None:
        seen: dict[tuple[int, int], int] = {}
        for c in self.connections:
            for bf in (c.minus, c.plus):
                seen[bf] = seen.get(bf, 0) + 1
        for bf in self.boundary:
            seen[bf] = seen.get(bf, 0) + 1
        nf = 2 * self.dim
        for b in range(len(self.blocks)):
            for f in range(1, nf + 1):
                if seen.get((b, f), 0) != 1:
                    raise MeshError(f"face {(b, f)} appears {seen.get((b, f), 0)} times")
        if len({blk.N for blk in self.blocks}) != 1:
            raise MeshError("all blocks must share N")
        if self.dim == 2:
            for c in self.connections:
                xa = self.blocks[c.minus[0]].face_x(c.minus[1])
                xb = self.blocks[c.plus[0]].face_x(c.plus[1])
                if c.reversed:
                    xb = xb[::-1]
                err = np.abs(xa - xb).max()
                if err > tol:
                    raise MeshError(f"connection {c} not watertight ({err:.2e})")

    def area(self, ops: SbpOperatorSet1D) -> float:
        h = ops.h
        W = np.outer(ops.Hw, ops.Hw) * h * h
        return float(sum((W * b.J).sum() for b in self.blocks))


def connect_faces(blocks: Sequence[Block], tol: float = 1e-10) -> tuple[list[tuple], list[tuple]]:
    """Pair coincident faces.  Returns (pairs, unmatched) with pairs (a, b, reversed)."""
    faces = [(b, f) for b in range(len(blocks)) for f in (1, 2, 3, 4)]
    key = {}
    for bf in faces:
        xf = blocks[bf[0]].face_x(bf[1])
        key[bf] = (xf[0], xf[-1], xf.mean(axis=0))
    used = set()
    pairs = []
    for i, a in enumerate(faces):
        if a in used:
            continue
        a0, a1, am = key[a]
        for b in faces[i + 1:]:
            if b in used or b[0] == a[0]:
                continue
            b0, b1, bm = key[b]
            if np.allclose(am, bm, atol=tol):
                if np.allclose(a0, b0, atol=tol) and np.allclose(a1, b1, atol=tol):
                    pairs.append((a, b, False))
                elif np.allclose(a0, b1, atol=tol) and np.allclose(a1, b0, atol=tol):
                    pairs.append((a, b, True))
                else:
                    continue
                used.update((a, b))
                break
    unmatched = [bf for bf in faces if bf not in used]
    return pairs, unmatched


# ------------------------------------------------------------------- meshes

def build_unit_interval_mesh(N: int, order: int = 2, rho: float = 1.0, c: float = 1.0,
                             n_blocks: int = 1) -> "Mesh1D":
    from .sbp1d import min_points
    if N < min_points(order):
        raise ValueError(f"N={N} too small for order {order}; need N >= {min_points(order)}")
    return Mesh1D(N=N, n_blocks=n_blocks, rho=rho, c=c)


@dataclass
class Mesh1D:
    """[0, 1] split into ``n_blocks`` equal blocks, faces 1 (left) and 2 (right)."""

    N: int
    n_blocks: int = 1
    rho: float = 1.0
    c: float = 1.0
    dim: int = 1
    name: str = "interval"
    blocks: list = field(init=False)
    connections: list = field(init=False)
    boundary: dict = field(init=False)

    def __post_init__(self):
        L = 1.0 / self.n_blocks
        xi = np.linspace(0.0, 1.0, self.N + 1)
        self.blocks = []
        for b in range(self.n_blocks):
            x = b * L + L * xi
            J = np.full(self.N + 1, L)
            self.blocks.append(Block1D(N=self.N, x=x, J=J, rho_hat=J * self.rho,
                                       C11=np.full(self.N + 1, self.c / L),
                                       rho=np.full(self.N + 1, self.rho)))
        self.connections = [Connection((b, 2), (b + 1, 1), False) for b in range(self.n_blocks - 1)]
        self.boundary = {(0, 1): "left", (self.n_blocks - 1, 2): "right"}

    def area(self, ops):
        return float(sum((ops.h * ops.Hw * b.J).sum() for b in self.blocks))


@dataclass
class Block1D:
    N: int
    x: np.ndarray
    J: np.ndarray
    rho_hat: np.ndarray
    C11: np.ndarray
    rho: np.ndarray

    def face_SJ(self, f):
        return np.ones(1)

    def face_nCn(self, f):
        return self.C11[[0 if f == 1 else -1]]

    def face_Z(self, f):
        i = 0 if f == 1 else -1
        return np.sqrt(self.rho_hat[[i]] * self.C11[[i]])

    def face_x(self, f):
        return self.x[[0 if f == 1 else -1]]


def _square_point(phi: float, half: float = 2.0) -> tuple[float, float]:
    c, s = np.cos(phi), np.sin(phi)
    t = half / max(abs(c), abs(s))
    return (float(t * c), float(t * s))


CORE_CORNERS = (0, 4, 6, 10)


def core_vertices(core_radius: float, bow: float) -> list[tuple[float, float]]:
    """Core outline vertices on the rays -45 + 30 j degrees, j = 0..12.

    The four logical corners sit on the circle of radius ``core_radius``;
    between them the outline follows circular arcs that leave each chord at
    angle ``bow`` (radians), which opens the corner angles beyond 90 degrees.
    """
    step = np.pi / 6
    phis = [-np.pi / 4 + step * j for j in range(13)]
    corner = {j: core_radius * np.array([np.cos(phis[j]), np.sin(phis[j])]) for j in CORE_CORNERS}
    pts: list[tuple[float, float]] = []
    cs = list(CORE_CORNERS) + [12]
    for a, b in zip(cs[:-1], cs[1:]):
        A, B = corner[a], corner[b % 12]
        chord = B - A
        L = np.linalg.norm(chord)
        nrm = np.array([chord[1], -chord[0]]) / L  # outward for counter-clockwise traversal
        mid = 0.5 * (A + B)
        if bow > 0:
            center = mid - nrm * (0.5 * L / np.tan(bow))
            rad = 0.5 * L / np.sin(bow)
        for j in range(a, b):
            u = np.array([np.cos(phis[j]), np.sin(phis[j])])
            if j == a:
                p = A
            elif bow > 0:
                # largest t with |t u - center| = rad
                cu = center @ u
                t = cu + np.sqrt(cu * cu - center @ center + rad * rad)
                p = t * u
            else:
                # straight chord
                t = np.cross(A, chord) / np.cross(u, chord)
                p = t * u
            pts.append((float(p[0]), float(p[1])))
    pts.append(pts[0])
    return pts


def disk_in_square_blocks(core_radius: float = 0.6, bow: float = 0.55) -> list[tuple[Mapping, str]]:
    """The 56 mappings: 8 core blocks plus 12 sectors x 4 rings.

    Tags are ``"in"`` for blocks inside the unit disk and ``"out"`` otherwise.
    """
    step = np.pi / 6
    phis = [-np.pi / 4 + step * j for j in range(13)]
    poly = core_vertices(core_radius, bow) if bow > 0 else [
        (core_radius * np.cos(p), core_radius * np.sin(p)) for p in phis]
    square = [_square_point(p) for p in phis]
    maps: list[tuple[Mapping, str]] = []
    # core: Coons patch of the 12-gon on a 2 x 4 logical grid.  Vertex index j
    # is at angle -45 + 30 j degrees; logical corners at j = 0, 4, 6, 10.
    P = lambda j: np.array(poly[j % 12])
    bottom = [P(10), P(11), P(12)]       # xi1 = 0, 1/2, 1 at xi2 = 0
    right = [P(0), P(1), P(2), P(3), P(4)]  # xi2 = 0..1 at xi1 = 1
    top = [P(6), P(5), P(4)]             # xi1 = 0..1 at xi2 = 1
    left = [P(10), P(9), P(8), P(7), P(6)]  # xi2 = 0..1 at xi1 = 0

    def coons(i: int, j: int) -> tuple[float, float]:
        s, t = i / 2, j / 4
        B = bottom[i]
        T = top[i]
        L = left[j]
        R = right[j]
        x = ((1 - t) * B + t * T + (1 - s) * L + s * R
             - ((1 - s) * (1 - t) * bottom[0] + s * (1 - t) * bottom[2]
                + (1 - s) * t * top[0] + s * t * top[2]))
        return (float(x[0]), float(x[1]))

    for j in range(4):
        for i in range(2):
            maps.append((BilinearMap(coons(i, j), coons(i + 1, j), coons(i, j + 1),
                                     coons(i + 1, j + 1)), "in"))
    circle = lambda j: Arc(1.0, phis[j], phis[j + 1])
    sq = lambda j: Segment(square[j], square[j + 1])
    for j in range(12):
        curves = [Segment(poly[j], poly[j + 1]), circle(j),
                  Blend(circle(j), sq(j), 1 / 3), Blend(circle(j), sq(j), 2 / 3), sq(j)]
        for k in range(4):
            maps.append((RingMap(curves[k], curves[k + 1]), "in" if k == 0 else "out"))
    return maps


def build_disk_in_square_mesh(N: int, order: int = 2, material: Material = unit_material,
                              core_radius: float = 0.6, bow: float = 0.55) -> MeshTopology:
    from .sbp1d import min_points
    if N < min_points(order):
        raise ValueError(f"N={N} too small for order {order}; need N >= {min_points(order)}")
    blocks = [compute_metrics(m, N, material, tag) for m, tag in disk_in_square_blocks(core_radius, bow)]
    pairs, unmatched = connect_faces(blocks)
    conns = []
    for a, b, rev in pairs:
        ta, tb = blocks[a[0]].tag, blocks[b[0]].tag
        if ta != tb:
            minus, plus = (a, b) if ta == "in" else (b, a)
            conns.append(Connection(minus, plus, rev, "nonlinear"))
        else:
            conns.append(Connection(a, b, rev, "locked"))
    boundary = {}
    for b, f in unmatched:
        xf = blocks[b].face_x(f)
        if np.allclose(np.abs(xf[:, 0]), 2.0, atol=1e-12):
            boundary[(b, f)] = "dirichlet"
        elif np.allclose(np.abs(xf[:, 1]), 2.0, atol=1e-12):
            boundary[(b, f)] = "neumann"
        else:
            raise MeshError(f"unmatched interior face {(b, f)}")
    mesh = MeshTopology(blocks, conns, boundary, dim=2, name="disk_in_square")
    mesh.validate()
    return mesh


@dataclass(frozen=True)
class WarpedMap(Mapping):
    """Unit cell at ``origin`` displaced by ``amp * sin(pi X) sin(pi Y) (1, 1)``."""
    origin: tuple[float, float] = (0.0, 0.0)
    amp: float = 0.0

    def __call__(self, xi1, xi2):
        X = self.origin[0] + np.asarray(xi1, float)
        Y = self.origin[1] + np.asarray(xi2, float)
        X, Y = np.broadcast_arrays(X, Y)
        b = self.amp * np.sin(np.pi * X) * np.sin(np.pi * Y)
        bx = self.amp * np.pi * np.cos(np.pi * X) * np.sin(np.pi * Y)
        by = self.amp * np.pi * np.sin(np.pi * X) * np.cos(np.pi * Y)
        x = np.stack([X + b, Y + b], -1)
        return x, np.stack([1 + bx, bx], -1), np.stack([by, 1 + by], -1)


def build_patch_mesh(N: int, order: int = 2, nx: int = 2, ny: int = 2, warp: float = 0.0,
                     material: Material = unit_material, tag: str = "boundary",
                     kind: str = "locked") -> MeshTopology:
    """[0, nx] x [0, ny] split into unit blocks, optionally warped.

    All outer faces get the boundary tag ``tag``; inner faces are connected
    with interface kind ``kind``.
    """
    from .sbp1d import min_points
    if N < min_points(order):
        raise ValueError(f"N={N} too small for order {order}; need N >= {min_points(order)}")
    blocks = [compute_metrics(WarpedMap((i, j), warp), N, material) for j in range(ny) for i in range(nx)]
    pairs, unmatched = connect_faces(blocks)
    mesh = MeshTopology(blocks, [Connection(a, b, r, kind) for a, b, r in pairs],
                        {bf: tag for bf in unmatched}, dim=2, name="patch")
    mesh.validate()
    return mesh


def effective_spacing(mesh) -> float:
    """h_bar = min over blocks, nodes and directions of |dx/dxi_r| / N."""
    if mesh.dim == 1:
        return float(min(b.J.min() for b in mesh.blocks)) / mesh.N
    out = np.inf
    for b in mesh.blocks:
        out = min(out, np.linalg.norm(b.dx1, axis=-1).min(), np.linalg.norm(b.dx2, axis=-1).min())
    return float(out) / mesh.N

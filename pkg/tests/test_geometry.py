import numpy as np
import pytest

from charsbp.geometry import (AffineMap, MeshError, PolarMap, build_disk_in_square_mesh, build_patch_mesh,
                              build_unit_interval_mesh, compute_metrics, compute_metrics_discrete,
                              effective_spacing, unit_material)
from charsbp.sbp1d import SbpOperatorSet1D


def test_identity_map():
    b = compute_metrics(AffineMap(), 8)
    assert np.all(b.J == 1) and np.all(b.rho_hat == 1)
    assert np.allclose(b.C11, 1) and np.allclose(b.C22, 1) and np.allclose(b.C12, 0)
    for f in (1, 2, 3, 4):
        assert np.allclose(b.face_SJ(f), 1) and np.allclose(b.face_Z(f), 1)


def test_affine_map_metrics():
    b = compute_metrics(AffineMap(M=((2.0, 0.0), (0.0, 3.0))), 8)
    assert np.allclose(b.J, 6)
    assert np.allclose(b.C11, 6 / 4) and np.allclose(b.C22, 6 / 9) and np.allclose(b.C12, 0)
    assert np.allclose(b.face_SJ(1), 3) and np.allclose(b.face_SJ(2), 3)
    assert np.allclose(b.face_SJ(3), 2) and np.allclose(b.face_SJ(4), 2)


def test_polar_impedance_identity():
    b = compute_metrics(PolarMap(1.0, 2.0, 0.1, 1.3), 12)
    for f in (1, 2, 3, 4):
        Z2 = b.face_Z(f) ** 2
        n = b.face_normal(f)
        assert np.allclose(np.linalg.norm(n, axis=-1), 1)
        # C = I, rho = 1: n^T C n = 1
        assert np.abs(Z2 - b.face_SJ(f) ** 2).max() <= 1e-12 * Z2.max()


def test_polar_outward_normals():
    b = compute_metrics(PolarMap(1.0, 2.0, 0.0, 0.5), 10)
    x = b.face_x(2)
    assert np.allclose(b.face_normal(2), x / np.linalg.norm(x, axis=-1)[:, None])
    assert np.allclose(b.face_normal(1), -b.face_x(1))


def test_transformed_coefficients_spd():
    b = compute_metrics(PolarMap(0.5, 2.0, 0.0, 2.0), 10)
    assert np.all(b.C11 * b.C22 - b.C12**2 > 0) and np.all(b.J > 0)


def test_discrete_metrics_match_analytic_on_affine():
    m = AffineMap((1.0, -1.0), ((2.0, 0.5), (0.3, 3.0)))
    a = compute_metrics(m, 12)
    d = compute_metrics_discrete(m, 12, 4)
    for k in ("J", "C11", "C12", "C22"):
        assert np.abs(getattr(a, k) - getattr(d, k)).max() < 1e-12


def test_mapping_fold_detected():
    with pytest.raises(MeshError, match="fold"):
        compute_metrics(AffineMap(M=((1.0, 0.0), (0.0, -1.0))), 6)


def test_unit_interval():
    m = build_unit_interval_mesh(50)
    assert len(m.blocks) == 1 and set(m.boundary.values()) == {"left", "right"}
    m = build_unit_interval_mesh(17)
    assert abs(m.blocks[0].x[1] - 1 / 17) < 1e-15 and abs(1 / 17 - 0.0588) < 1e-4
    with pytest.raises(ValueError, match="too small"):
        build_unit_interval_mesh(1)


@pytest.fixture(scope="module")
def disk():
    return build_disk_in_square_mesh(24, 4)


def test_disk_block_count_and_tags(disk):
    assert len(disk.blocks) == 56
    kinds = [c.kind for c in disk.connections]
    assert kinds.count("nonlinear") > 0
    for c in disk.connections:
        ta, tb = disk.blocks[c.minus[0]].tag, disk.blocks[c.plus[0]].tag
        assert (c.kind == "nonlinear") == (ta != tb)
    for (b, f), tag in disk.boundary.items():
        x = disk.blocks[b].face_x(f)
        if tag == "dirichlet":
            assert np.allclose(np.abs(x[:, 0]), 2)
        else:
            assert tag == "neumann" and np.allclose(np.abs(x[:, 1]), 2)


def test_disk_interface_on_circle(disk):
    for c in disk.connections:
        if c.kind == "nonlinear":
            for b, f in (c.minus, c.plus):
                r = np.linalg.norm(disk.blocks[b].face_x(f), axis=-1)
                assert np.abs(r - 1).max() <= 1e-12


def test_disk_watertight(disk):
    disk.validate(1e-12)


def test_disk_area_sixth_order():
    m = build_disk_in_square_mesh(24, 6)
    assert abs(m.area(SbpOperatorSet1D(6, 24)) - 16) <= 1e-8


def test_disk_area_converges_fourth_order(disk):
    e24 = abs(disk.area(SbpOperatorSet1D(4, 24)) - 16)
    m = build_disk_in_square_mesh(48, 4)
    e48 = abs(m.area(SbpOperatorSet1D(4, 48)) - 16)
    assert e48 <= 1e-8 and e24 / e48 > 8


def test_disk_area_n48():
    m = build_disk_in_square_mesh(48, 6)
    assert abs(m.area(SbpOperatorSet1D(6, 48)) - 16) <= 1e-6


def test_surface_jacobian_matches_across_interfaces(disk):
    for c in disk.connections:
        a = disk.blocks[c.minus[0]].face_SJ(c.minus[1])
        b = disk.blocks[c.plus[0]].face_SJ(c.plus[1])
        assert np.abs(a - (b[::-1] if c.reversed else b)).max() < 1e-12


def test_every_face_closed_once(disk):
    faces = [bf for c in disk.connections for bf in (c.minus, c.plus)] + list(disk.boundary)
    assert sorted(faces) == sorted((b, f) for b in range(56) for f in (1, 2, 3, 4))


def test_patch_mesh():
    m = build_patch_mesh(8, 2, 3, 2, warp=0.05)
    assert len(m.blocks) == 6 and len(m.connections) == 7 and len(m.boundary) == 10
    assert abs(m.area(SbpOperatorSet1D(2, 8)) - 6) < 1e-2


def test_effective_spacing():
    m = build_patch_mesh(10, 2, 1, 1)
    assert abs(effective_spacing(m) - 0.1) < 1e-15
    assert effective_spacing(build_disk_in_square_mesh(48, 6, unit_material)) > 0

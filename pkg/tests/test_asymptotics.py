import math

import numpy as np
import pytest
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.special import gamma as gamma_fn

from shellmodes import (
    MaterialParams,
    MeridianProfile,
    airy_barrel_prediction,
    airy_first_zero,
    clamped_beam_constant,
    clamped_beam_root,
    cylinder_prediction,
    plate_bending_eigenvalue,
    plate_bending_minimum,
    predict,
)
from shellmodes.asymptotics import _radial_bilaplacian_eigenvalue
from shellmodes.errors import InvalidGeometry, NegativeG, UnsupportedClass

from test_eigen import hermite_beam_matrices


# -- independent oracles ------------------------------------------------------


def airy_ai_series(x, terms=60):
    """Ai(x) from its Maclaurin series (accurate for |x| <= 4)."""
    f_term, g_term = 1.0, x
    f_sum, g_sum = f_term, g_term
    for k in range(1, terms):
        f_term *= x**3 * (3 * k - 2) / ((3 * k) * (3 * k - 1) * (3 * k - 2))
        g_term *= x**3 * (3 * k - 1) / ((3 * k + 1) * (3 * k) * (3 * k - 1))
        f_sum += f_term
        g_sum += g_term
    c1 = 3.0 ** (-2.0 / 3.0) / gamma_fn(2.0 / 3.0)
    c2 = 3.0 ** (-1.0 / 3.0) / gamma_fn(1.0 / 3.0)
    return c1 * f_sum - c2 * g_sum


def bisect_airy_root(lo=2.0, hi=3.0):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if airy_ai_series(-lo) * airy_ai_series(-mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def fd_annulus_bilaplacian(r1=1.0, r2=2.0, n_r=120, n_phi=24):
    """First clamped eigenvalue of the bilaplacian on the annulus by 2D
    finite differences in polar coordinates (ghost reflection enforces the
    zero normal derivative, boundary rows enforce w = 0)."""
    dr = (r2 - r1) / n_r
    dphi = 2.0 * np.pi / n_phi
    r = r1 + dr * np.arange(n_r + 1)
    n_full = (n_r + 1) * n_phi

    def idx(i, j):
        return i * n_phi + (j % n_phi)

    rows, cols, vals = [], [], []

    def add(i_row, j_row, i_col, j_col, v):
        rows.append(idx(i_row, j_row))
        cols.append(idx(i_col, j_col))
        vals.append(v)

    # Laplacian on the full grid; ghosts reflect across clamped boundaries
    for i in range(n_r + 1):
        for j in range(n_phi):
            ri = r[i]
            c_rr, c_r, c_pp = 1.0 / dr**2, 1.0 / (2 * ri * dr), 1.0 / (ri * dphi) ** 2
            add(i, j, i, j, -2.0 * c_rr - 2.0 * c_pp)
            add(i, j, i, (j + 1) % n_phi, c_pp)
            add(i, j, i, (j - 1) % n_phi, c_pp)
            if i == 0:
                add(i, j, i + 1, j, 2.0 * c_rr)  # ghost w[-1] = w[1]
            elif i == n_r:
                add(i, j, i - 1, j, 2.0 * c_rr)
            else:
                add(i, j, i + 1, j, c_rr + c_r)
                add(i, j, i - 1, j, c_rr - c_r)
    L = sp.csr_matrix((vals, (rows, cols)), shape=(n_full, n_full))

    interior = np.array(
        [idx(i, j) for i in range(1, n_r) for j in range(n_phi)], dtype=int
    )
    P = sp.csr_matrix(
        (np.ones(interior.size), (interior, np.arange(interior.size))),
        shape=(n_full, interior.size),
    )
    B = (P.T @ (L @ (L @ P))).tocsc()
    vals_ = spla.eigs(B, k=3, sigma=0.0, which="LM", return_eigenvectors=False)
    vals_ = np.sort(np.real(vals_))
    return float(vals_[0])


# -- constants ------------------------------------------------------------------


def test_clamped_beam_constant_golden():
    assert clamped_beam_constant() == pytest.approx(500.564, abs=1e-3)
    assert clamped_beam_root() == pytest.approx(4.7300407, abs=1e-7)
    x = clamped_beam_root()
    assert math.cos(x) * math.cosh(x) - 1.0 == pytest.approx(0.0, abs=1e-11)


def test_clamped_beam_constant_against_fem_oracle():
    from shellmodes import smallest_eigenpairs
    from types import SimpleNamespace

    K, M = hermite_beam_matrices(64)
    lam = smallest_eigenpairs(
        SimpleNamespace(K=sp.csr_matrix(K), M=sp.csr_matrix(M)), m=1
    ).eigenvalues[0]
    assert lam == pytest.approx(clamped_beam_constant(), rel=1e-7)


def test_airy_zero_golden_and_series_oracle():
    z = airy_first_zero()
    assert z == pytest.approx(2.33810741, abs=1e-8)
    assert airy_ai_series(-z) == pytest.approx(0.0, abs=1e-9)
    assert bisect_airy_root() == pytest.approx(z, abs=1e-9)


# -- cylinder law -----------------------------------------------------------------


def test_cylinder_prediction_golden(steel):
    pred = cylinder_prediction(1.0, 2.0, steel)
    assert pred.k_gamma == pytest.approx(1.7437, abs=1e-3)
    assert pred.k_exponent == 0.25
    assert pred.a0 == 0.0
    assert pred.lambda_exponent == 1.0
    assert pred.a1_normalized == pytest.approx(6.770, abs=1e-3)


def test_cylinder_prediction_nu_zero():
    mat = MaterialParams(E=1.0, nu=0.0, rho=1.0)
    pred = cylinder_prediction(1.0, 2.0, mat)
    assert pred.k_gamma == pytest.approx((3.0 * clamped_beam_constant() / 16.0) ** 0.125)
    assert pred.k_gamma == pytest.approx(1.7643, abs=1e-4)


def test_cylinder_prediction_invalid_geometry(steel):
    with pytest.raises(InvalidGeometry):
        cylinder_prediction(-1.0, 2.0, steel)


def test_cylinder_gamma_material_independent(steel):
    other = MaterialParams(E=7.0e10, nu=0.3, rho=2700.0)
    assert cylinder_prediction(1.0, 2.0, steel).k_gamma == pytest.approx(
        cylinder_prediction(1.0, 2.0, other).k_gamma, rel=1e-14
    )


# -- Airy barrel law ----------------------------------------------------------------


def test_airy_barrel_prediction_golden(barrel, steel):
    pred = airy_barrel_prediction(barrel, steel)
    assert pred.k_gamma == pytest.approx(0.51738, abs=1e-4)
    assert pred.k_exponent == pytest.approx(3.0 / 7.0)
    assert pred.lambda_exponent == pytest.approx(2.0 / 7.0)
    assert pred.a0_normalized == pytest.approx(0.1724, abs=1e-4)
    assert pred.a1_normalized == pytest.approx(1.403, abs=1e-3)
    scale = steel.rho / steel.E
    assert pred.extras["g"] * scale == pytest.approx(0.13795, abs=1e-4)
    assert pred.extras["b"] * scale == pytest.approx(2.7970, abs=1e-3)
    assert pred.extras["c"] * scale == pytest.approx(0.77495, abs=1e-3)


def test_airy_barrel_scales_with_material(barrel, steel):
    # coefficients scale as E/rho; gamma is dimensionless
    mat2 = MaterialParams(E=2.0 * steel.E, nu=steel.nu, rho=0.5 * steel.rho)
    a, b = airy_barrel_prediction(barrel, steel), airy_barrel_prediction(barrel, mat2)
    assert b.k_gamma == pytest.approx(a.k_gamma, rel=1e-13)
    assert b.a0 == pytest.approx(4.0 * a.a0, rel=1e-13)
    assert b.a1 == pytest.approx(4.0 * a.a1, rel=1e-13)


def test_airy_barrel_representation_invariant(barrel, steel):
    padded = MeridianProfile.parametrized(
        list(barrel.coeffs) + [0.0, 0.0], barrel.interval
    )
    a, b = airy_barrel_prediction(barrel, steel), airy_barrel_prediction(padded, steel)
    assert b.k_gamma == pytest.approx(a.k_gamma, rel=1e-13)
    assert b.a1 == pytest.approx(a.a1, rel=1e-13)


def test_airy_barrel_both_ends_agree(barrel, steel):
    from shellmodes import barrel_coefficients, meridian_curvature_sq_grad

    z0 = barrel.interval[1]
    for z in (-z0, z0):
        g, b = barrel_coefficients(barrel, z, steel)
        assert g > 0 and b > 0
        assert abs(meridian_curvature_sq_grad(barrel, z)) == pytest.approx(
            abs(meridian_curvature_sq_grad(barrel, -z)), rel=1e-12
        )


def test_airy_barrel_rejects_other_classes(cylinder, steel):
    with pytest.raises(UnsupportedClass):
        airy_barrel_prediction(cylinder, steel)


# -- plate bending law -----------------------------------------------------------------


def test_plate_bending_scales_linearly_in_E(ring_plate, steel):
    base = plate_bending_eigenvalue(ring_plate, steel, 0)
    doubled = plate_bending_eigenvalue(
        ring_plate, MaterialParams(2.0 * steel.E, steel.nu, steel.rho), 0
    )
    assert doubled == pytest.approx(2.0 * base, rel=1e-13)


def annulus_bilaplacian_exact(r1=1.0, r2=2.0):
    """Axisymmetric clamped bilaplacian eigenvalue from the exact Bessel
    characteristic determinant: w = a J0 + b Y0 + c I0 + d K0 at beta = mu^(1/4)."""
    from scipy.optimize import brentq
    from scipy.special import i0, i1, j0, j1, k0, k1, y0, y1

    def det(beta):
        def row(r):
            return [j0(beta * r), y0(beta * r), i0(beta * r), k0(beta * r)]

        def drow(r):
            return [
                -beta * j1(beta * r),
                -beta * y1(beta * r),
                beta * i1(beta * r),
                -beta * k1(beta * r),
            ]

        M = np.array([row(r1), drow(r1), row(r2), drow(r2)])
        M /= np.max(np.abs(M), axis=1, keepdims=True)
        return np.linalg.det(M)

    grid = np.linspace(2.0, 8.0, 600)
    vals = [det(b) for b in grid]
    for lo, hi, flo, fhi in zip(grid, grid[1:], vals, vals[1:]):
        if flo * fhi < 0:
            return brentq(det, lo, hi, xtol=1e-13) ** 4
    raise AssertionError("no characteristic root found")


def test_radial_solver_matches_exact_bessel_solution(ring_plate):
    exact = annulus_bilaplacian_exact()
    assert _radial_bilaplacian_eigenvalue(1.0, 2.0, 0, n_elems=40) == pytest.approx(
        exact, rel=1e-6
    )
    assert _radial_bilaplacian_eigenvalue(1.0, 2.0, 0) == pytest.approx(
        exact, rel=1e-8
    )


def test_plate_bending_matches_2d_fd_oracle(ring_plate, steel):
    # Richardson-extrapolated second-order FD values on the full annulus
    c1 = fd_annulus_bilaplacian(n_r=96, n_phi=24)
    c2 = fd_annulus_bilaplacian(n_r=192, n_phi=24)
    extrapolated = (4.0 * c2 - c1) / 3.0
    mu = _radial_bilaplacian_eigenvalue(1.0, 2.0, 0)
    assert mu == pytest.approx(extrapolated, rel=1e-4)


def test_plate_bending_minimum_is_axisymmetric(ring_plate, steel):
    lam_b, k_b = plate_bending_minimum(ring_plate, steel, k_max=4)
    assert k_b == 0
    assert lam_b == pytest.approx(plate_bending_eigenvalue(ring_plate, steel, 0))


# -- dispatch ------------------------------------------------------------------------


def test_predict_dispatch(barrel, cylinder, ring_plate, steel):
    assert predict(cylinder, steel).k_exponent == 0.25
    assert predict(barrel, steel).k_exponent == pytest.approx(3.0 / 7.0)
    plate_pred = predict(ring_plate, steel)
    assert plate_pred.lambda_exponent == 2.0
    assert plate_pred.k_gamma is None
    assert plate_pred.a1 == pytest.approx(
        plate_bending_minimum(ring_plate, steel)[0], rel=1e-12
    )


def test_predict_gaussian_barrel_floor_only(steel):
    prof = MeridianProfile.parametrized([1.0, 0.0, -0.5, 0.0, -0.2], (-0.5, 0.5))
    pred = predict(prof, steel)
    assert pred.coefficients_unavailable
    assert pred.a1 is None and pred.k_gamma is None
    assert pred.a0_normalized == pytest.approx(1.0, rel=1e-12)


def test_predict_unsupported_classes(steel):
    hyperbolic = MeridianProfile.parametrized([1.0, 0.0, 0.5], (-0.5, 0.5))
    with pytest.raises(UnsupportedClass):
        predict(hyperbolic, steel)
    cone = MeridianProfile.parametrized([2.0, 0.5], (-1.0, 1.0))
    with pytest.raises(UnsupportedClass):
        predict(cone, steel)

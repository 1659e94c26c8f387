"""Closed-form thin-limit predictors for the first Lame eigenmode.

Cylinders: lambda(eps) ~ a1 * eps with k(eps) ~ gamma * eps^(-1/4); the
constants combine the geometry, the material, and the first eigenvalue of
the clamped-beam fourth-derivative operator on the unit interval.

Airy barrels (elliptic profiles whose squared meridian curvature attains
its minimum on the lateral boundary): lambda(eps) ~ a0 + a1 * eps^(2/7)
with k(eps) ~ gamma * eps^(-3/7); a0 is the membrane floor and the
constants are built from the curvature functionals at the boundary
minimizer and the first zero of the reversed Airy function.

Ring plates: lambda(eps) ~ lambda_B * eps^2, where lambda_B is the first
clamped eigenvalue of the scalar bending (bilaplacian) operator on the
annulus, computed here per angular mode by a conforming 1D radial solver
with Hermite elements.

All special constants are computed at call time, never hard-coded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Optional

import numpy as np
import scipy.linalg as dla
from scipy.optimize import brentq
from scipy.special import airy as _scipy_airy

from .errors import InvalidGeometry, NegativeG, UnsupportedClass
from .geometry import (
    CYLINDER_CLASS,
    ELLIPTIC_AIRY,
    ELLIPTIC_GAUSSIAN,
    PLATE,
    RING_PLATE,
    MeridianProfile,
    ShellClass,
    barrel_coefficients,
    classify,
    meridian_curvature_sq,
    meridian_curvature_sq_grad,
    profile_eval,
)
from .operators import MaterialParams


@dataclass(frozen=True)
class AsymptoticPrediction:
    """Thin-limit laws k(eps) ~ k_gamma * eps^(-k_exponent) and
    lambda(eps) ~ a0 + a1 * eps^lambda_exponent, coefficients in raw
    (rad/s)^2 units; ``extras`` records the derived constants."""

    shell_class: ShellClass
    material: MaterialParams
    a0: float
    a1: Optional[float]
    lambda_exponent: Optional[float]
    k_gamma: Optional[float] = None
    k_exponent: Optional[float] = None
    coefficients_unavailable: bool = False
    extras: dict = dc_field(default_factory=dict)

    @property
    def a0_normalized(self) -> float:
        return self.a0 * self.material.rho / self.material.E

    @property
    def a1_normalized(self) -> Optional[float]:
        if self.a1 is None:
            return None
        return self.a1 * self.material.rho / self.material.E

    def lambda_at(self, eps: float) -> float:
        if self.a1 is None or self.lambda_exponent is None:
            raise UnsupportedClass("no eigenvalue law available")
        return self.a0 + self.a1 * eps**self.lambda_exponent

    def k_at(self, eps: float) -> float:
        if self.k_gamma is None or self.k_exponent is None:
            raise UnsupportedClass("no angular-frequency law available")
        return self.k_gamma * eps ** (-self.k_exponent)


# -- special constants -------------------------------------------------------


@lru_cache(maxsize=None)
def clamped_beam_root() -> float:
    """First positive root of cos(x) cosh(x) = 1 beyond zero."""
    return brentq(
        lambda x: math.cos(x) * math.cosh(x) - 1.0,
        1.5 * math.pi,
        2.0 * math.pi,
        xtol=1e-14,
        rtol=8.9e-16,
    )


def clamped_beam_constant() -> float:
    """First eigenvalue of the fourth-derivative operator on (0, 1) with
    clamped ends: the fourth power of the characteristic root."""
    return clamped_beam_root() ** 4


@lru_cache(maxsize=None)
def airy_first_zero() -> float:
    """First positive z with Ai(-z) = 0."""
    return brentq(
        lambda z: float(_scipy_airy(-z)[0]), 2.0, 3.0, xtol=1e-14, rtol=8.9e-16
    )


# -- cylinders ----------------------------------------------------------------


def cylinder_prediction(R: float, L: float, material: MaterialParams) -> AsymptoticPrediction:
    """Thin-limit law for a clamped cylinder of radius R and length L."""
    if not (R > 0 and L > 0):
        raise InvalidGeometry(f"need R > 0 and L > 0, got R={R}, L={L}")
    mu = clamped_beam_constant()
    stiff = 3.0 * (1.0 - material.nu**2)
    gamma = (R**6 / L**4 * stiff * mu) ** 0.125
    a1 = (2.0 * material.E / (material.rho * R * L**2)) * math.sqrt(mu / stiff)
    return AsymptoticPrediction(
        shell_class=ShellClass(CYLINDER_CLASS, (), 0.0),
        material=material,
        a0=0.0,
        a1=a1,
        lambda_exponent=1.0,
        k_gamma=gamma,
        k_exponent=0.25,
        extras={"beam_constant": mu, "beam_root": clamped_beam_root()},
    )


# -- Airy barrels --------------------------------------------------------------


def airy_barrel_prediction(
    profile: MeridianProfile, material: MaterialParams
) -> AsymptoticPrediction:
    """Thin-limit law for an elliptic barrel with boundary curvature minimum.

    When both ends minimize (symmetric barrels) the predictions coincide;
    otherwise the end with the smaller correction coefficient wins, since
    the first mode localizes there.
    """
    cls = classify(profile)
    if cls.tag != ELLIPTIC_AIRY:
        raise UnsupportedClass(f"profile classifies as {cls.tag!r}, not an Airy barrel")
    z_airy = airy_first_zero()

    best = None
    for z0 in cls.z0:
        g, b = barrel_coefficients(profile, z0, material)
        if g <= 0.0:
            raise NegativeG(f"coupling coefficient {g:g} <= 0 at z0 = {z0:g}")
        dh = abs(meridian_curvature_sq_grad(profile, z0, material))
        c = z_airy * g ** (1.0 / 3.0) * dh ** (2.0 / 3.0)
        gamma = (c / (6.0 * b)) ** (3.0 / 14.0)
        a1 = (6.0 * b * c**6) ** (1.0 / 7.0) * (7.0 / 6.0)
        if best is None or a1 < best["a1"]:
            best = {"z0": z0, "g": g, "b": b, "c": c, "gamma": gamma, "a1": a1}

    a0 = meridian_curvature_sq(profile, best["z0"], material)
    return AsymptoticPrediction(
        shell_class=cls,
        material=material,
        a0=a0,
        a1=best["a1"],
        lambda_exponent=2.0 / 7.0,
        k_gamma=best["gamma"],
        k_exponent=3.0 / 7.0,
        extras={
            "airy_zero": z_airy,
            "z0": best["z0"],
            "g": best["g"],
            "b": best["b"],
            "c": best["c"],
        },
    )


# -- ring plates ----------------------------------------------------------------


def _hermite_shape(t: np.ndarray, h: float):
    """Cubic Hermite values and first/second derivatives on one element.

    Dofs: (w0, w0', w1, w1'); derivatives are with respect to the physical
    coordinate (element length h).
    """
    N = np.stack(
        [
            1.0 - 3.0 * t**2 + 2.0 * t**3,
            h * (t - 2.0 * t**2 + t**3),
            3.0 * t**2 - 2.0 * t**3,
            h * (-(t**2) + t**3),
        ],
        axis=1,
    )
    dN = np.stack(
        [
            (-6.0 * t + 6.0 * t**2) / h,
            1.0 - 4.0 * t + 3.0 * t**2,
            (6.0 * t - 6.0 * t**2) / h,
            -2.0 * t + 3.0 * t**2,
        ],
        axis=1,
    )
    d2N = np.stack(
        [
            (-6.0 + 12.0 * t) / h**2,
            (-4.0 + 6.0 * t) / h,
            (6.0 - 12.0 * t) / h**2,
            (-2.0 + 6.0 * t) / h,
        ],
        axis=1,
    )
    return N, dN, d2N


def _radial_bilaplacian_eigenvalue(
    R1: float, R2: float, k: int, n_elems: int = 80
) -> float:
    """First clamped eigenvalue of the mode-k bilaplacian on the annulus.

    Weak form: integral of (Lap_k w)(Lap_k v) r dr against integral of
    w v r dr, with w = w' = 0 at both radii; Lap_k w = w'' + w'/r - k^2 w/r^2.
    Conforming C^1 cubic Hermite elements, Gauss quadrature.

    The stiffness grows like n_elems^3, so very fine grids trade truncation
    error for roundoff; 80 elements sits at the accuracy optimum (~1e-9
    relative on the unit-width annulus).
    """
    grid = np.linspace(R1, R2, n_elems + 1)
    ndof = 2 * (n_elems + 1)
    K = np.zeros((ndof, ndof))
    M = np.zeros((ndof, ndof))
    gpts, gwts = np.polynomial.legendre.leggauss(8)
    t = 0.5 * (gpts + 1.0)
    for e in range(n_elems):
        r0, r1 = grid[e], grid[e + 1]
        h = r1 - r0
        N, dN, d2N = _hermite_shape(t, h)
        r = r0 + t * h
        w = 0.5 * h * gwts
        lap = d2N + dN / r[:, None] - (k * k) * N / (r * r)[:, None]
        Ke = np.einsum("q,qa,qb->ab", w * r, lap, lap)
        Me = np.einsum("q,qa,qb->ab", w * r, N, N)
        sl = slice(2 * e, 2 * e + 4)
        K[sl, sl] += Ke
        M[sl, sl] += Me
    keep = np.arange(2, ndof - 2)
    vals = dla.eigh(
        K[np.ix_(keep, keep)], M[np.ix_(keep, keep)], subset_by_index=[0, 0]
    )[0]
    return float(vals[0])


def plate_bending_eigenvalue(
    profile: MeridianProfile, material: MaterialParams, k: int, n_elems: int = 80
) -> float:
    """First clamped eigenvalue of the scalar bending operator
    E/(3 (1 - nu^2) rho) * Lap^2 on the annulus at angular mode k."""
    if profile.kind != RING_PLATE:
        raise UnsupportedClass("the scalar bending law applies to ring plates")
    R1, R2 = profile.interval
    mu = _radial_bilaplacian_eigenvalue(R1, R2, k, n_elems)
    return material.E / (3.0 * (1.0 - material.nu**2) * material.rho) * mu


def plate_bending_minimum(
    profile: MeridianProfile,
    material: MaterialParams,
    k_max: int = 8,
    n_elems: int = 80,
) -> tuple[float, int]:
    """Minimum over modes 0..k_max of the plate bending eigenvalue."""
    vals = [
        plate_bending_eigenvalue(profile, material, k, n_elems)
        for k in range(k_max + 1)
    ]
    k_best = int(np.argmin(vals))
    return vals[k_best], k_best


# -- dispatch -------------------------------------------------------------------


def predict(profile: MeridianProfile, material: MaterialParams) -> AsymptoticPrediction:
    """Route to the class-specific thin-limit predictor."""
    cls = classify(profile)
    if cls.tag == CYLINDER_CLASS:
        mid = 0.5 * (profile.interval[0] + profile.interval[1])
        R = profile_eval(profile, mid).f
        return cylinder_prediction(R, profile.span, material)
    if cls.tag == PLATE:
        lam_b, k_b = plate_bending_minimum(profile, material)
        return AsymptoticPrediction(
            shell_class=cls,
            material=material,
            a0=0.0,
            a1=lam_b,
            lambda_exponent=2.0,
            extras={"bending_mode": k_b},
        )
    if cls.tag == ELLIPTIC_AIRY:
        return airy_barrel_prediction(profile, material)
    if cls.tag == ELLIPTIC_GAUSSIAN:
        # only the membrane floor is predicted; the correction coefficients
        # live outside this package's scope
        return AsymptoticPrediction(
            shell_class=cls,
            material=material,
            a0=cls.h0_min * material.E / material.rho,
            a1=None,
            lambda_exponent=None,
            coefficients_unavailable=True,
        )
    raise UnsupportedClass(f"no asymptotic law for shell class {cls.tag!r}")

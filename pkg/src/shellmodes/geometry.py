"""Meridian profiles of axisymmetric shells.

A shell of revolution is generated by a meridian curve in the (r, z) half
plane.  Three profile kinds are supported:

* ``cylinder``      -- constant radius R over an axial interval of length L;
* ``ring_plate``    -- flat annulus R1 < r < R2 (the meridian parameter is
  the radius, the midsurface normal is axial);
* ``parametrized``  -- radius r = f(z) given by a polynomial in the axial
  coordinate z, positive on the closed interval.

Profiles are polynomials on purpose: classification (sign of f'', location
of the minimum of the squared-curvature functional) is then decided by
exact root isolation instead of numerical differencing.

In the tuple returned by :func:`profile_eval`, ``f`` is the distance to the
axis at the given meridian parameter, ``df``/``d2f`` are the slope and
curvature numerator of the generating curve *in its own chart* (graph over
z for cylinders and barrels, graph of the height over r for ring plates,
where both vanish identically), and ``s = sqrt(1 + df^2)`` is the
arclength density of the parametrization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from numpy.polynomial import Polynomial

from .errors import (
    InvalidGeometry,
    InvalidProfile,
    InvalidThickness,
    NonSmooth,
    OutOfInterval,
)

CYLINDER = "cylinder"
RING_PLATE = "ring_plate"
PARAMETRIZED = "parametrized"

# ShellClass tags
PLATE = "plate"
CYLINDER_CLASS = "cylinder"
CONE = "cone"
ELLIPTIC_AIRY = "elliptic_airy"
ELLIPTIC_GAUSSIAN = "elliptic_gaussian"
ELLIPTIC_OTHER = "elliptic_other"
HYPERBOLIC = "hyperbolic"
DEGENERATE = "degenerate"

_REL_TOL = 1e-9


class ProfileValues(NamedTuple):
    f: float
    df: float
    d2f: float
    s: float


@dataclass(frozen=True)
class MeridianProfile:
    """Generating curve of the midsurface.

    ``interval`` is the meridian parameter range: the axial interval for
    cylinders and parametrized barrels, the radial interval for ring plates.
    ``coeffs`` holds the radius polynomial in ascending powers (a single
    constant for cylinders; unused for ring plates).
    """

    kind: str
    interval: tuple[float, float]
    coeffs: tuple[float, ...] = ()

    @staticmethod
    def cylinder(R: float, L: float) -> "MeridianProfile":
        if not (R > 0 and L > 0):
            raise InvalidGeometry(f"cylinder needs R > 0 and L > 0, got R={R}, L={L}")
        return MeridianProfile(CYLINDER, (-L / 2.0, L / 2.0), (float(R),))

    @staticmethod
    def ring_plate(R1: float, R2: float) -> "MeridianProfile":
        if not (0 < R1 < R2):
            raise InvalidGeometry(f"ring plate needs 0 < R1 < R2, got {R1}, {R2}")
        return MeridianProfile(RING_PLATE, (float(R1), float(R2)))

    @staticmethod
    def parametrized(coeffs, interval) -> "MeridianProfile":
        coeffs = tuple(float(c) for c in coeffs)
        if not coeffs or not all(math.isfinite(c) for c in coeffs):
            raise NonSmooth(f"polynomial coefficients must be finite, got {coeffs}")
        z_min, z_max = (float(interval[0]), float(interval[1]))
        if not (math.isfinite(z_min) and math.isfinite(z_max) and z_min < z_max):
            raise InvalidProfile(f"invalid interval {interval}")
        prof = MeridianProfile(PARAMETRIZED, (z_min, z_max), coeffs)
        fmin = _poly_min_on_interval(prof._poly(), z_min, z_max)
        if fmin <= 0.0:
            raise InvalidProfile(
                f"profile must stay positive on the closed interval (min f = {fmin:g})"
            )
        return prof

    # -- helpers -----------------------------------------------------------

    def _poly(self) -> Polynomial:
        if self.kind == PARAMETRIZED:
            return Polynomial(self.coeffs)
        if self.kind == CYLINDER:
            return Polynomial(self.coeffs)  # constant R
        raise NotImplementedError("ring plates have no radius polynomial")

    @property
    def span(self) -> float:
        return self.interval[1] - self.interval[0]

    def contains(self, z: float) -> bool:
        tol = _REL_TOL * self.span
        return self.interval[0] - tol <= z <= self.interval[1] + tol

    def _require_inside(self, z: float) -> None:
        if not self.contains(z):
            raise OutOfInterval(
                f"parameter {z} outside closed interval {self.interval}"
            )


def _real_roots_in(poly: Polynomial, lo: float, hi: float, tol: float) -> list[float]:
    """Real roots of ``poly`` inside [lo - tol, hi + tol], deduplicated."""
    coef = np.trim_zeros(poly.coef, "b")
    if coef.size <= 1:
        return []
    roots = Polynomial(coef).roots()
    out: list[float] = []
    for rt in roots:
        if abs(rt.imag) > 1e-9 * max(1.0, abs(rt.real)):
            continue
        x = float(np.clip(rt.real, lo, hi)) if lo - tol <= rt.real <= hi + tol else None
        if x is None:
            continue
        if all(abs(x - y) > tol for y in out):
            out.append(x)
    return sorted(out)


def _poly_min_on_interval(poly: Polynomial, lo: float, hi: float) -> float:
    cands = [lo, hi] + _real_roots_in(poly.deriv(), lo, hi, 1e-12 * (hi - lo))
    return min(float(poly(c)) for c in cands)


def profile_eval(profile: MeridianProfile, z: float) -> ProfileValues:
    """Radius, slope, curvature numerator and arclength density at ``z``."""
    profile._require_inside(z)
    if profile.kind == CYLINDER:
        return ProfileValues(profile.coeffs[0], 0.0, 0.0, 1.0)
    if profile.kind == RING_PLATE:
        # flat midsurface: the parameter is the radius, the height is zero
        return ProfileValues(float(z), 0.0, 0.0, 1.0)
    poly = profile._poly()
    f = float(poly(z))
    df = float(poly.deriv()(z))
    d2f = float(poly.deriv(2)(z))
    return ProfileValues(f, df, d2f, math.sqrt(1.0 + df * df))


def injectivity_bound(profile: MeridianProfile) -> float:
    """Largest safe half-thickness for the normal offset map, with margin 0.9.

    The bound is 0.9 over the maximal principal curvature of the midsurface
    (meridian |f''|/s^3 and azimuthal 1/(f s)).  Flat ring plates have both
    curvatures zero, so the offset map is injective for every thickness.
    """
    if profile.kind == RING_PLATE:
        return math.inf
    if profile.kind == CYLINDER:
        return 0.9 * profile.coeffs[0]
    lo, hi = profile.interval
    tol = 1e-12 * (hi - lo)
    poly = profile._poly()
    d1, d2 = poly.deriv(), poly.deriv(2)
    s_sq = Polynomial([1.0]) + d1 * d1

    # meridian curvature^2 = d2f^2 / s^6: critical points of the ratio
    num = d2 * d2
    den = s_sq**3
    crit = _real_roots_in(num.deriv() * den - num * den.deriv(), lo, hi, tol)
    kappa_m = max(
        abs(float(d2(z))) / float(s_sq(z)) ** 1.5 for z in [lo, hi] + crit
    )

    # azimuthal curvature = 1/(f s): maximize by minimizing f^2 (1 + f'^2)
    fs_sq = poly * poly * s_sq
    crit = _real_roots_in(fs_sq.deriv(), lo, hi, tol)
    kappa_a = 1.0 / math.sqrt(min(float(fs_sq(z)) for z in [lo, hi] + crit))

    return 0.9 / max(kappa_m, kappa_a)


def embed(profile: MeridianProfile, z: float, phi: float, x3: float) -> np.ndarray:
    """Cartesian position of the point at normal offset x3 from the midsurface."""
    if abs(x3) > injectivity_bound(profile):
        raise InvalidThickness(
            f"offset {x3} beyond the injectivity bound {injectivity_bound(profile):g}"
        )
    f, df, _, s = profile_eval(profile, z)
    if profile.kind == RING_PLATE:
        return np.array([f * math.cos(phi), f * math.sin(phi), x3])
    radius = f + x3 / s
    return np.array(
        [radius * math.cos(phi), radius * math.sin(phi), z - x3 * df / s]
    )


def meridian_domain_map(profile: MeridianProfile, u, v):
    """Vectorized (meridian parameter u, normal offset v) -> (r, tau).

    This is the phi = 0 section of :func:`embed` without the thickness
    check; meshing and assembly build the meridian domain through it.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if profile.kind == CYLINDER:
        R = profile.coeffs[0]
        return R + v, u + 0.0 * v
    if profile.kind == RING_PLATE:
        return u + 0.0 * v, v + 0.0 * u
    poly = profile._poly()
    f = poly(u)
    df = poly.deriv()(u)
    s = np.sqrt(1.0 + df * df)
    return f + v / s, u - v * df / s


# -- curvature functionals ---------------------------------------------------


def _scale(material) -> float:
    return 1.0 if material is None else material.E / material.rho


def meridian_curvature_sq(profile: MeridianProfile, z: float, material=None) -> float:
    """Squared meridian curvature functional, scaled by E/rho.

    With ``material=None`` the value is returned in units of E/rho.
    Identically zero for flat and developable profiles.
    """
    _, df, d2f, _ = profile_eval(profile, z)
    return _scale(material) * d2f * d2f / (1.0 + df * df) ** 3


def meridian_curvature_sq_grad(
    profile: MeridianProfile, z: float, material=None
) -> float:
    """d/dz of :func:`meridian_curvature_sq`, exact via polynomial calculus."""
    profile._require_inside(z)
    if profile.kind in (CYLINDER, RING_PLATE):
        return 0.0
    poly = profile._poly()
    d1, d2, d3 = poly.deriv(), poly.deriv(2), poly.deriv(3)
    s_sq = float(1.0 + d1(z) ** 2)
    # (u/v)' with u = f''^2, v = s^6
    u, du = float(d2(z)) ** 2, 2.0 * float(d2(z)) * float(d3(z))
    dv_over_v = 6.0 * float(d1(z)) * float(d2(z)) / s_sq
    return _scale(material) * (du - u * dv_over_v) / s_sq**3


def barrel_coefficients(profile: MeridianProfile, z: float, material) -> tuple[float, float]:
    """Coupling coefficient g and azimuthal bending coefficient B0 at ``z``.

    g  = -2 E/rho (f f''/s^6 + f^2 f''^2 / s^8)
    B0 =  E/rho / (3 (1 - nu^2) f^4)
    """
    f, df, d2f, _ = profile_eval(profile, z)
    c = material.E / material.rho
    s_sq = 1.0 + df * df
    g = -2.0 * c * (f * d2f / s_sq**3 + f * f * d2f * d2f / s_sq**4)
    b0 = c / (3.0 * (1.0 - material.nu**2) * f**4)
    return g, b0


# -- classification ----------------------------------------------------------


@dataclass(frozen=True)
class ShellClass:
    """Geometric class of a shell plus the minimizer data of the squared
    meridian curvature functional.

    ``h0_min`` is stored in units of E/rho (multiply by E/rho for (rad/s)^2);
    ``z0`` lists every global minimizer (both ends for a symmetric barrel).
    """

    tag: str
    z0: tuple[float, ...] = ()
    h0_min: Optional[float] = None

    @property
    def is_elliptic(self) -> bool:
        return self.tag in (ELLIPTIC_AIRY, ELLIPTIC_GAUSSIAN, ELLIPTIC_OTHER)


def classify(profile: MeridianProfile) -> ShellClass:
    """Classify the shell from the sign of f'' and the minimum location of
    the squared meridian curvature functional.

    Any zero of f'' inside the closed interval of a curved profile yields
    ``degenerate``: the elliptic machinery needs strict curvature of one
    sign, and we refuse to guess.
    """
    if profile.kind == RING_PLATE:
        return ShellClass(PLATE, (), 0.0)
    if profile.kind == CYLINDER:
        return ShellClass(CYLINDER_CLASS, (), 0.0)

    lo, hi = profile.interval
    tol = 1e-12 * (hi - lo)
    poly = profile._poly()
    d1, d2 = poly.deriv(), poly.deriv(2)

    d2_coef = np.trim_zeros(d2.coef, "b")
    if d2_coef.size == 0 or np.all(d2_coef == 0.0):
        d1_coef = np.trim_zeros(d1.coef, "b")
        if d1_coef.size == 0 or np.all(d1_coef == 0.0):
            return ShellClass(CYLINDER_CLASS, (), 0.0)
        return ShellClass(CONE, (), 0.0)

    if _real_roots_in(d2, lo, hi, tol):
        return ShellClass(DEGENERATE)

    mid = 0.5 * (lo + hi)
    if float(d2(mid)) > 0.0:
        return ShellClass(HYPERBOLIC)

    # elliptic: locate all global minimizers of f''^2 / s^6 on the closed
    # interval via the critical points of the rational functional
    num = d2 * d2
    den = (Polynomial([1.0]) + d1 * d1) ** 3
    crit = _real_roots_in(num.deriv() * den - num * den.deriv(), lo, hi, tol)
    cands = sorted({lo, hi, *crit})
    vals = [float(num(z)) / float(den(z)) for z in cands]
    h_min = min(vals)
    minimizers = tuple(
        z for z, v in zip(cands, vals) if v <= h_min * (1.0 + _REL_TOL)
    )
    on_boundary = [abs(z - lo) <= tol or abs(z - hi) <= tol for z in minimizers]
    if all(on_boundary):
        tag = ELLIPTIC_AIRY
    elif not any(on_boundary):
        tag = ELLIPTIC_GAUSSIAN
    else:
        tag = ELLIPTIC_OTHER
    return ShellClass(tag, minimizers, h_min)

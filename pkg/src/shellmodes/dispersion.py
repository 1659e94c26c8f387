"""Dispersion curves over the angular index k and thickness sweeps.

The first eigenvalue of the mode-k problem is computed for k = 0, 1, 2, ...
until a rise window of W consecutive values above the running minimum is
seen (dispersion curves of barrels are double-welled, so the window is
checked against the global running minimum, never a local one) or a hard
cap aborts the sweep.  A thickness sweep repeats this per half-thickness
and records the first mode (k*, lambda*).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .assembly import assemble_family
from .errors import IncompleteCurve, InsufficientSpan, KmaxExceeded
from .geometry import MeridianProfile
from .eigen import smallest_eigenpairs
from .mesh import build_uniform, refine_boundary_layers
from .operators import LAME, MaterialParams

RISE_DETECTED = "rise_detected"
KMAX_HIT = "kmax_hit"


@dataclass(frozen=True)
class KPolicy:
    """Stopping policy of the k sweep: rise window and hard cap."""

    window: int = 5
    cap: int = 200


@dataclass(frozen=True)
class MeshSpec:
    """Mesh recipe used by sweeps: counts, geometric degree, grading flag."""

    n_thick: int = 2
    n_merid: int = 8
    geo_degree: int = 3
    graded: bool = False

    def build(self, profile: MeridianProfile, eps: float):
        mesh = build_uniform(profile, eps, self.n_thick, self.n_merid, self.geo_degree)
        if self.graded:
            mesh = refine_boundary_layers(mesh)
        return mesh


@dataclass
class DispersionCurve:
    """First eigenvalue per angular index at one half-thickness."""

    eps: float
    operator: str
    ks: np.ndarray
    lams: np.ndarray
    residuals: np.ndarray
    stop_reason: str

    @property
    def argmin_k(self) -> int:
        return int(self.ks[int(np.argmin(self.lams))])

    @property
    def lam_min(self) -> float:
        return float(np.min(self.lams))


@dataclass
class SweepRow:
    eps: float
    k_star: int
    lam_star: float
    curve: DispersionCurve


@dataclass
class ThicknessSweep:
    operator: str
    profile: MeridianProfile
    material: Optional[MaterialParams]
    rows: list[SweepRow] = field(default_factory=list)

    @property
    def eps_values(self) -> np.ndarray:
        return np.array([row.eps for row in self.rows])


def sweep_k(
    profile: MeridianProfile,
    material: Optional[MaterialParams],
    operator: str,
    eps: float,
    mesh_spec: MeshSpec = MeshSpec(),
    p: int = 6,
    k_policy: KPolicy = KPolicy(),
    m: int = 1,
    tol: float = 1e-9,
) -> DispersionCurve:
    """Compute the dispersion curve at one half-thickness.

    One matrix family is assembled; only the k-dependent combination is
    rebuilt per mode.  Raises :class:`KmaxExceeded` (carrying the partial
    curve) if the cap is reached before the rise window closes.
    """
    mesh = mesh_spec.build(profile, eps)
    family = assemble_family(operator, mesh, p, material if operator == LAME else None)

    ks: list[int] = []
    lams: list[float] = []
    residuals: list[float] = []
    k = 0
    while True:
        result = smallest_eigenpairs(family.system(k), m=m, tol=tol)
        ks.append(k)
        lams.append(float(result.eigenvalues[0]))
        residuals.append(float(result.residuals[0]))

        lam_min = min(lams)
        w = k_policy.window
        if len(lams) > w and all(v > lam_min for v in lams[-w:]):
            return DispersionCurve(
                eps, operator, np.array(ks), np.array(lams), np.array(residuals),
                RISE_DETECTED,
            )
        if k >= k_policy.cap:
            partial = DispersionCurve(
                eps, operator, np.array(ks), np.array(lams), np.array(residuals),
                KMAX_HIT,
            )
            raise KmaxExceeded(
                f"no rise detected up to k = {k_policy.cap}", curve=partial
            )
        k += 1


def first_mode(curve: DispersionCurve) -> tuple[int, float]:
    """Argmin of the dispersion curve; ties resolve to the smaller k."""
    if curve.stop_reason != RISE_DETECTED:
        raise IncompleteCurve(
            f"curve stopped with {curve.stop_reason!r}, not a detected rise"
        )
    i = int(np.argmin(curve.lams))
    return int(curve.ks[i]), float(curve.lams[i])


def run_sweep(
    profile: MeridianProfile,
    material: Optional[MaterialParams],
    operator: str,
    eps_values,
    mesh_spec: MeshSpec = MeshSpec(),
    p: int = 6,
    k_policy: KPolicy = KPolicy(),
    m: int = 1,
    tol: float = 1e-9,
) -> ThicknessSweep:
    """Dispersion sweeps over a strictly decreasing list of half-thicknesses."""
    eps_values = [float(e) for e in eps_values]
    if any(b >= a for a, b in zip(eps_values, eps_values[1:])):
        raise ValueError("half-thicknesses must be strictly decreasing")
    sweep = ThicknessSweep(operator, profile, material)
    for eps in eps_values:
        curve = sweep_k(profile, material, operator, eps, mesh_spec, p, k_policy, m, tol)
        k_star, lam_star = first_mode(curve)
        sweep.rows.append(SweepRow(eps, k_star, lam_star, curve))
    return sweep


def estimate_order(
    samples,
    offset: float = 0.0,
    n_use: Optional[int] = 3,
    min_decades: float = 1.0,
) -> float:
    """Least-squares slope of log(lambda - offset) against log(eps).

    By default only the 3 smallest thicknesses enter the fit (the larger
    ones are preasymptotic); they must span at least ``min_decades``.
    """
    pts = sorted(((float(e), float(v)) for e, v in samples), key=lambda t: t[0])
    if n_use is not None:
        pts = pts[:n_use]
    if len(pts) < 3:
        raise InsufficientSpan(f"need at least 3 samples, got {len(pts)}")
    eps = np.array([e for e, _ in pts])
    span = eps.max() / eps.min()
    if span < 10.0**min_decades * (1.0 - 1e-9):
        raise InsufficientSpan(
            f"thickness ratio {span:g} spans less than {min_decades:g} decade(s)"
        )
    vals = np.array([v for _, v in pts]) - offset
    if np.any(vals <= 0.0):
        raise ValueError("all samples must exceed the offset")
    slope = np.polyfit(np.log(eps), np.log(vals), 1)[0]
    return float(slope)

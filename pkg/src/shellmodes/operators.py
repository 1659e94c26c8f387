"""Material law and per-Fourier-mode bilinear forms on the meridian domain.

After separating the angle with a single real harmonic (radial and axial
components proportional to cos k*phi, azimuthal to sin k*phi), both the
acoustic Laplacian and the linear elasticity system reduce to symmetric
2D forms in (r, tau) with the radial weight r in the measure.  The common
angular normalization constant cancels between stiffness and mass, so it is
dropped and one real solve covers the +-k pair.

The reduced strains in the orthonormal frame, with u_hat the meridian
amplitudes, are

    e_rr   = dr u_r
    e_pp   = (u_r + k u_phi) / r
    e_tt   = dt u_tau
    g_rt   = dt u_r + dr u_tau
    g_rp   = dr u_phi - u_phi / r - (k / r) u_r
    g_pt   = dt u_phi - (k / r) u_tau

(g = 2e for the shears).  Every k enters linearly in the strains, so the
stiffness splits exactly as K0 + k K1 + k^2 K2; sweeps over k reuse the
three k-independent blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NotApplicable, PoissonLocking, UnsupportedClass
from .geometry import (
    CONE,
    CYLINDER_CLASS,
    HYPERBOLIC,
    PLATE,
    ShellClass,
)

LAPLACE = "laplace"
LAME = "lame"


@dataclass(frozen=True)
class MaterialParams:
    """Isotropic material: Young modulus E (Pa), Poisson ratio nu, density rho."""

    E: float
    nu: float
    rho: float

    def __post_init__(self):
        if self.nu >= 0.5:
            raise PoissonLocking(f"Poisson ratio {self.nu} >= 1/2")
        if not (self.E > 0 and self.rho > 0 and 0.0 <= self.nu):
            raise ValueError(f"need E > 0, rho > 0, 0 <= nu < 1/2, got {self}")


def lame_constants(material: MaterialParams) -> tuple[float, float]:
    """First and second Lame coefficients (lambda, mu) of the material."""
    E, nu = material.E, material.nu
    if nu >= 0.5:
        raise PoissonLocking(f"Poisson ratio {nu} >= 1/2")
    lam = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu))
    mu = E / (2.0 * (1.0 + nu))
    return lam, mu


def elasticity_tensor(material: MaterialParams) -> np.ndarray:
    """Rank-4 isotropic stiffness A[i,j,l,m] built from the Lame constants."""
    lam, mu = lame_constants(material)
    d = np.eye(3)
    return (
        lam * np.einsum("ij,lm->ijlm", d, d)
        + mu * (np.einsum("il,jm->ijlm", d, d) + np.einsum("im,jl->ijlm", d, d))
    )


def _stress_strain_matrix(material: MaterialParams) -> np.ndarray:
    """6x6 matrix acting on (e_rr, e_pp, e_tt, g_rt, g_rp, g_pt)."""
    lam, mu = lame_constants(material)
    D = np.zeros((6, 6))
    D[:3, :3] = lam
    D[np.diag_indices(3)] += 2.0 * mu
    D[3:, 3:] = mu * np.eye(3)
    return D


@dataclass(frozen=True)
class ModeForm:
    """Bilinear stiffness/mass forms of one operator at angular index k."""

    operator: str
    k: int
    material: Optional[MaterialParams] = None

    def __post_init__(self):
        if self.operator not in (LAPLACE, LAME):
            raise ValueError(f"unknown operator {self.operator!r}")
        if self.k < 0 or int(self.k) != self.k:
            raise ValueError(f"mode index must be a nonnegative integer, got {self.k}")
        if self.operator == LAME and self.material is None:
            raise ValueError("the elasticity form needs MaterialParams")

    @property
    def nfields(self) -> int:
        return 1 if self.operator == LAPLACE else 3

    def local_matrix_blocks(self, r, wdet, N, dNr, dNt):
        """Element stiffness split (K0, K1, K2) and mass M.

        ``r``/``wdet`` are the radii and quadrature weights (including the
        Jacobian) at the element quadrature points, ``N``/``dNr``/``dNt``
        the scalar shape values and physical derivatives, shape (nq, nloc).
        K(k) = K0 + k K1 + k^2 K2.
        """
        if self.operator == LAPLACE:
            wr = wdet * r
            K0 = np.einsum("q,qa,qb->ab", wr, dNr, dNr) + np.einsum(
                "q,qa,qb->ab", wr, dNt, dNt
            )
            K2 = np.einsum("q,qa,qb->ab", wdet / r, N, N)
            M = np.einsum("q,qa,qb->ab", wr, N, N)
            return K0, np.zeros_like(K0), K2, M

        nq, nloc = N.shape
        ncol = 3 * nloc
        B0 = np.zeros((nq, 6, ncol))
        B1 = np.zeros((nq, 6, ncol))
        N_over_r = N / r[:, None]
        # columns 3a: u_r, 3a+1: u_phi, 3a+2: u_tau
        B0[:, 0, 0::3] = dNr
        B0[:, 1, 0::3] = N_over_r
        B0[:, 2, 2::3] = dNt
        B0[:, 3, 0::3] = dNt
        B0[:, 3, 2::3] = dNr
        B0[:, 4, 1::3] = dNr - N_over_r
        B0[:, 5, 1::3] = dNt
        B1[:, 1, 1::3] = N_over_r
        B1[:, 4, 0::3] = -N_over_r
        B1[:, 5, 2::3] = -N_over_r

        D = _stress_strain_matrix(self.material)
        w = wdet * r

        def contract(Ba, Bb):
            DBb = np.einsum("ij,qjb->qib", D, Bb)
            return np.einsum("q,qia,qib->ab", w, Ba, DBb)

        K0 = contract(B0, B0)
        K2 = contract(B1, B1)
        K01 = contract(B0, B1)
        K1 = K01 + K01.T

        m_scalar = np.einsum("q,qa,qb->ab", self.material.rho * w, N, N)
        M = np.zeros((ncol, ncol))
        for fld in range(3):
            M[fld::3, fld::3] = m_scalar
        return K0, K1, K2, M


def laplace_form(k: int) -> ModeForm:
    """Weak form of the mode-k Laplacian: stiffness r(grad u . grad v) +
    (k^2/r) u v, mass r u v."""
    return ModeForm(LAPLACE, int(k))


def lame_form(k: int, material: MaterialParams) -> ModeForm:
    """Mode-k linear elasticity form in the three meridian amplitudes."""
    return ModeForm(LAME, int(k), material)


def membrane_limit(shell_class: ShellClass) -> float:
    """High-frequency limit of the membrane dispersion curve, in E/rho units.

    Zero for developable and hyperbolic shells, the minimum of the squared
    meridian curvature functional for elliptic ones; undefined for plates.
    """
    if shell_class.tag == PLATE:
        raise NotApplicable("plates have no membrane limit")
    if shell_class.tag in (CYLINDER_CLASS, CONE, HYPERBOLIC):
        return 0.0
    if shell_class.is_elliptic:
        return float(shell_class.h0_min)
    raise UnsupportedClass(f"no membrane limit for class {shell_class.tag!r}")

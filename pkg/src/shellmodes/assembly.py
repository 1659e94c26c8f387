"""Assembly of stiffness and mass matrices for a mode form on a meridian mesh.

Fields are interpolated by continuous tensor-product Gauss-Lobatto nodal
bases of degree p per element (nodal, so lateral Dirichlet conditions are
plain row/column elimination).  Element integrals use Gauss quadrature with
p+2 points per direction (order 2p+3 >= 2p+2), enough to push the radial
weight and curved-Jacobian consistency errors below eigenvalue tolerances.

Because every k enters the reduced strains linearly, assembly produces the
k-independent split K0, K1, K2 once; a dispersion sweep then materializes
K(k) = K0 + k K1 + k^2 K2 per mode without touching the element loop.
Element order is fixed, so assembled matrices are identical run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.sparse as sp

from ._lagrange import gauss_lobatto, gauss_rule, tensor_basis
from .errors import DegenerateJacobian, QuadratureUnderflow
from .mesh import MeridianMesh
from .operators import MaterialParams, ModeForm


@dataclass
class AssembledSystem:
    """Generalized eigenproblem K x = lambda M x on the free dofs.

    ``K``/``M`` carry the lateral Dirichlet elimination; ``K_raw``/``M_raw``
    are the unconstrained matrices (handy for null-energy checks on rigid
    motions).  Dof layout: node-major, field-minor -- see :meth:`dof_index`.
    """

    K: sp.csr_matrix = field(repr=False)
    M: sp.csr_matrix = field(repr=False)
    K_raw: sp.csr_matrix = field(repr=False)
    M_raw: sp.csr_matrix = field(repr=False)
    free: np.ndarray = field(repr=False)
    constrained_dofs: np.ndarray = field(repr=False)
    nfields: int
    p: int
    k: int
    operator: str
    material: Optional[MaterialParams]
    grid_shape: tuple[int, int]  # FEM nodes: (meridian, thickness)
    node_coords: np.ndarray = field(repr=False, default=None)  # (n_nodes, 2): (r, tau)

    @property
    def ndof_total(self) -> int:
        return self.K_raw.shape[0]

    @property
    def ndof_free(self) -> int:
        return self.K.shape[0]

    def node_id(self, i: int, j: int) -> int:
        return i * self.grid_shape[1] + j

    def dof_index(self, fld: int, node: int) -> int:
        return node * self.nfields + fld


class ModeFamily:
    """k-independent assembly of one operator on one mesh.

    ``system(k)`` combines the stored blocks into the mode-k problem.
    """

    def __init__(self, operator, mesh: MeridianMesh, p: int, material=None):
        self.operator = operator
        self.mesh = mesh
        self.p = int(p)
        self.material = material
        self.nfields = ModeForm(operator, 0, material).nfields
        self._assemble()

    def _assemble(self) -> None:
        mesh, p = self.mesh, self.p
        if p < 1:
            raise ValueError(f"interpolation degree must be >= 1, got {p}")
        nq1 = p + 2
        pts, wts = gauss_rule(nq1)
        W2 = np.outer(wts, wts).ravel()

        fem_nodes = gauss_lobatto(p)
        N, Dxi, Deta = tensor_basis(fem_nodes, pts)
        geo_nodes = gauss_lobatto(mesh.q)
        G, Gxi, Geta = tensor_basis(geo_nodes, pts)
        # geometry interpolated at the FEM nodal points (for field construction)
        G_at_fem, _, _ = tensor_basis(geo_nodes, fem_nodes)

        n_m, n_t = mesh.n_merid, mesh.n_thick
        nmi, nti = n_m * p + 1, n_t * p + 1  # FEM node grid
        n_nodes = nmi * nti
        nfld = self.nfields
        ndof = n_nodes * nfld
        nloc = (p + 1) ** 2

        # global FEM node ids per element, local (a, b) -> a*(p+1)+b
        def element_nodes(em, et):
            a = em * p + np.arange(p + 1)
            b = et * p + np.arange(p + 1)
            return (a[:, None] * nti + b[None, :]).ravel()

        form0 = ModeForm(self.operator, 0, self.material)
        node_coords = np.zeros((n_nodes, 2))
        rows, cols = [], []
        data = {key: [] for key in ("K0", "K1", "K2", "M")}
        for e in range(len(mesh.elements)):
            X = mesh.nodes[mesh.elements[e]]
            xq = G @ X
            d_xi = Gxi @ X
            d_eta = Geta @ X
            det = d_xi[:, 0] * d_eta[:, 1] - d_eta[:, 0] * d_xi[:, 1]
            if np.any(det == 0.0) or not np.all(np.sign(det) == np.sign(det[0])):
                raise DegenerateJacobian(f"element {e} has a degenerate Jacobian")
            r = xq[:, 0]
            if np.any(r <= 0.0):
                raise QuadratureUnderflow(
                    f"nonpositive radius at a quadrature point of element {e}"
                )
            inv_det = 1.0 / det
            dNr = (d_eta[:, 1, None] * Dxi - d_xi[:, 1, None] * Deta) * inv_det[:, None]
            dNt = (-d_eta[:, 0, None] * Dxi + d_xi[:, 0, None] * Deta) * inv_det[:, None]
            wdet = W2 * np.abs(det)

            K0e, K1e, K2e, Me = form0.local_matrix_blocks(r, wdet, N, dNr, dNt)

            em, et = divmod(e, n_t)
            gnodes = element_nodes(em, et)
            node_coords[gnodes] = G_at_fem @ X
            gdofs = (gnodes[:, None] * nfld + np.arange(nfld)[None, :]).ravel()
            rr = np.repeat(gdofs, gdofs.size)
            cc = np.tile(gdofs, gdofs.size)
            rows.append(rr)
            cols.append(cc)
            data["K0"].append(K0e.ravel())
            data["K1"].append(K1e.ravel())
            data["K2"].append(K2e.ravel())
            data["M"].append(Me.ravel())

        rows = np.concatenate(rows)
        cols = np.concatenate(cols)

        def collect(key):
            A = sp.coo_matrix(
                (np.concatenate(data[key]), (rows, cols)), shape=(ndof, ndof)
            ).tocsr()
            A = (A + A.T) * 0.5  # enforce exact symmetry
            A.eliminate_zeros()
            return A

        self.K0 = collect("K0")
        self.K1 = collect("K1")
        self.K2 = collect("K2")
        self.M = collect("M")

        lateral_nodes = np.concatenate(
            [np.arange(nti), (nmi - 1) * nti + np.arange(nti)]
        )
        constrained = (
            lateral_nodes[:, None] * nfld + np.arange(nfld)[None, :]
        ).ravel()
        self.constrained = np.sort(constrained)
        self.free = np.setdiff1d(np.arange(ndof), self.constrained)
        self.grid_shape = (nmi, nti)
        self.node_coords = node_coords

        ix = np.ix_(self.free, self.free)
        self._K0f = self.K0[ix].tocsr()
        self._K1f = self.K1[ix].tocsr()
        self._K2f = self.K2[ix].tocsr()
        self._Mf = self.M[ix].tocsr()

    def stiffness_raw(self, k: int) -> sp.csr_matrix:
        return (self.K0 + k * self.K1 + k * k * self.K2).tocsr()

    def system(self, k: int) -> AssembledSystem:
        if k < 0 or int(k) != k:
            raise ValueError(f"mode index must be a nonnegative integer, got {k}")
        k = int(k)
        Kf = (self._K0f + k * self._K1f + k * k * self._K2f).tocsr()
        return AssembledSystem(
            K=Kf,
            M=self._Mf,
            K_raw=self.stiffness_raw(k),
            M_raw=self.M,
            free=self.free,
            constrained_dofs=self.constrained,
            nfields=self.nfields,
            p=self.p,
            k=k,
            operator=self.operator,
            material=self.material,
            grid_shape=self.grid_shape,
            node_coords=self.node_coords,
        )


def assemble_family(operator, mesh: MeridianMesh, p: int, material=None) -> ModeFamily:
    """Assemble the k-independent stiffness blocks and the mass matrix."""
    return ModeFamily(operator, mesh, p, material)


def assemble(form: ModeForm, mesh: MeridianMesh, p: int) -> AssembledSystem:
    """Assemble the mode-k system for a single form (one-off convenience)."""
    return assemble_family(form.operator, mesh, p, form.material).system(form.k)

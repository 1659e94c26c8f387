"""Structured curved quadrilateral meshes of the meridian domain.

The meridian domain is the image of (meridian parameter u) x (normal offset
v in (-eps, eps)) under the offset map of the profile.  Meshes are tensor
products of breakpoints in u and v; element edges are curved by
interpolating the offset map at Gauss-Lobatto points of the chosen
geometric degree.  Grading for boundary layers inserts meridian grid lines
at distances eps, eps^(3/4), eps^(1/2), eps^(1/4) from each lateral end
(constant 1 for each scale, which reproduces the published 2 x 16 layout
from the uniform 2 x 8 one).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._lagrange import gauss_lobatto, gauss_rule, lagrange_eval
from .errors import (
    DegenerateJacobian,
    InvalidGeometry,
    InvalidThickness,
    LayerCollision,
)
from .geometry import MeridianProfile, injectivity_bound, meridian_domain_map

TAG_INTERIOR = 0
TAG_LATERAL = 1  # the two meridian ends: Dirichlet
TAG_NATURAL = 2  # inner/outer faces: Neumann


@dataclass
class MeridianMesh:
    """Tensor-product mesh with curved elements of geometric degree q.

    ``nodes`` are the geometry nodes (r, tau); ``elements`` index them with
    (q+1)^2 entries per quadrilateral, local node (a, b) at a*(q+1)+b with
    ``a`` along the meridian direction.
    """

    profile: MeridianProfile
    eps: float
    q: int
    merid_breaks: np.ndarray
    thick_breaks: np.ndarray
    nodes: np.ndarray = field(repr=False)
    elements: np.ndarray = field(repr=False)
    node_tags: np.ndarray = field(repr=False)
    graded: bool = False

    @property
    def n_merid(self) -> int:
        return len(self.merid_breaks) - 1

    @property
    def n_thick(self) -> int:
        return len(self.thick_breaks) - 1

    @property
    def counts(self) -> tuple[int, int]:
        return (self.n_thick, self.n_merid)

    @property
    def r_min(self) -> float:
        return float(np.min(self.nodes[:, 0]))

    def element_rect(self, e: int) -> tuple[float, float, float, float]:
        """Parametric rectangle (u0, u1, v0, v1) of element e."""
        em, et = divmod(e, self.n_thick)
        return (
            self.merid_breaks[em],
            self.merid_breaks[em + 1],
            self.thick_breaks[et],
            self.thick_breaks[et + 1],
        )

    def dump(self, stream) -> None:
        """Plain-text node/element listing for debugging."""
        stream.write("# nodes: id r tau tag\n")
        for i, ((r, t), tag) in enumerate(zip(self.nodes, self.node_tags)):
            stream.write(f"{i} {r:.12g} {t:.12g} {int(tag)}\n")
        stream.write("# elements: id node_ids...\n")
        for e, conn in enumerate(self.elements):
            stream.write(f"{e} " + " ".join(str(int(c)) for c in conn) + "\n")


def _grid_params(breaks: np.ndarray, q: int) -> np.ndarray:
    """Gauss-Lobatto subdivision of every cell; shared cell endpoints."""
    ref = gauss_lobatto(q)
    out = [breaks[0]]
    for a, b in zip(breaks[:-1], breaks[1:]):
        pts = a + (ref + 1.0) * 0.5 * (b - a)
        out.extend(pts[1:])
    return np.array(out)


def _build_from_breaks(
    profile: MeridianProfile,
    eps: float,
    merid_breaks: np.ndarray,
    thick_breaks: np.ndarray,
    q: int,
    graded: bool,
) -> MeridianMesh:
    up = _grid_params(merid_breaks, q)
    vp = _grid_params(thick_breaks, q)
    nu, nv = len(up), len(vp)
    U, V = np.meshgrid(up, vp, indexing="ij")
    r, tau = meridian_domain_map(profile, U.ravel(), V.ravel())
    nodes = np.column_stack([r, tau])
    if np.min(nodes[:, 0]) <= 0.0:
        raise InvalidGeometry("mesh node with nonpositive radius")

    tags = np.full(nu * nv, TAG_INTERIOR, dtype=np.int8)
    idx = np.arange(nu * nv).reshape(nu, nv)
    tags[idx[:, 0]] = TAG_NATURAL
    tags[idx[:, -1]] = TAG_NATURAL
    tags[idx[0, :]] = TAG_LATERAL
    tags[idx[-1, :]] = TAG_LATERAL

    n_m, n_t = len(merid_breaks) - 1, len(thick_breaks) - 1
    elements = np.empty((n_m * n_t, (q + 1) ** 2), dtype=np.int64)
    for em in range(n_m):
        for et in range(n_t):
            loc = []
            for a in range(q + 1):
                for b in range(q + 1):
                    loc.append(idx[em * q + a, et * q + b])
            elements[em * n_t + et] = loc

    mesh = MeridianMesh(
        profile=profile,
        eps=eps,
        q=q,
        merid_breaks=np.asarray(merid_breaks, dtype=float),
        thick_breaks=np.asarray(thick_breaks, dtype=float),
        nodes=nodes,
        elements=elements,
        node_tags=tags,
        graded=graded,
    )
    _check_jacobians(mesh)
    return mesh


def _check_jacobians(mesh: MeridianMesh, n_probe: int = 5) -> None:
    """Require a single-signed, nonvanishing Jacobian at probe points."""
    pts, _ = gauss_rule(n_probe)
    nodes1d = gauss_lobatto(mesh.q)
    V, D = lagrange_eval(nodes1d, pts)
    G_xi = np.einsum("ia,jb->ijab", D, V).reshape(n_probe**2, -1)
    G_eta = np.einsum("ia,jb->ijab", V, D).reshape(n_probe**2, -1)
    sign = 0.0
    for e in range(len(mesh.elements)):
        X = mesh.nodes[mesh.elements[e]]
        d_xi = G_xi @ X
        d_eta = G_eta @ X
        det = d_xi[:, 0] * d_eta[:, 1] - d_eta[:, 0] * d_xi[:, 1]
        if np.any(det == 0.0):
            raise DegenerateJacobian(f"vanishing Jacobian in element {e}")
        s = np.sign(det)
        if not np.all(s == s[0]):
            raise DegenerateJacobian(f"Jacobian changes sign in element {e}")
        if sign == 0.0:
            sign = s[0]
        elif s[0] != sign:
            raise DegenerateJacobian("element orientation flips across the mesh")


def build_uniform(
    profile: MeridianProfile,
    eps: float,
    n_thick: int = 2,
    n_merid: int = 8,
    q: int = 3,
) -> MeridianMesh:
    """Uniform n_thick x n_merid mesh of the meridian domain."""
    if eps <= 0:
        raise InvalidThickness(f"half-thickness must be positive, got {eps}")
    if eps >= injectivity_bound(profile):
        raise InvalidThickness(
            f"eps={eps} at or beyond the injectivity bound "
            f"{injectivity_bound(profile):g}"
        )
    if n_thick < 1 or n_merid < 1:
        raise InvalidGeometry("need at least one element per direction")
    if q not in (1, 2, 3):
        raise InvalidGeometry(f"geometric degree must be 1, 2 or 3, got {q}")
    lo, hi = profile.interval
    merid = np.linspace(lo, hi, n_merid + 1)
    thick = np.linspace(-eps, eps, n_thick + 1)
    return _build_from_breaks(profile, eps, merid, thick, q, graded=False)


def refine_boundary_layers(mesh: MeridianMesh, eps: float | None = None) -> MeridianMesh:
    """Insert boundary-layer grid lines near both lateral ends.

    Four lines per end, at parametric distances eps, eps^(3/4), eps^(1/2),
    eps^(1/4); existing breakpoints (in particular the lateral ends) are
    kept.  ``eps`` defaults to the mesh half-thickness.
    """
    if mesh.graded:
        raise InvalidGeometry("mesh is already graded")
    if eps is None:
        eps = mesh.eps
    if eps <= 0:
        raise InvalidThickness(f"half-thickness must be positive, got {eps}")
    lo, hi = mesh.merid_breaks[0], mesh.merid_breaks[-1]
    span = hi - lo
    dists = [eps, eps**0.75, eps**0.5, eps**0.25]
    if 2.0 * max(dists) >= span:
        raise LayerCollision(
            f"layer distance {max(dists):g} reaches past the midpoint of the "
            f"meridian interval (length {span:g})"
        )
    new = sorted(
        set(mesh.merid_breaks)
        | {lo + d for d in dists}
        | {hi - d for d in dists}
    )
    tol = 1e-12 * span
    merged = [new[0]]
    for x in new[1:]:
        if x - merged[-1] > tol:
            merged.append(x)
    return _build_from_breaks(
        mesh.profile, mesh.eps, np.array(merged), mesh.thick_breaks, mesh.q, graded=True
    )

"""1D nodal machinery: Gauss-Lobatto nodes, Gauss rules, Lagrange evaluation."""

import numpy as np
from numpy.polynomial import legendre


def gauss_lobatto(p):
    """The p+1 Gauss-Lobatto-Legendre points on [-1, 1] for degree p >= 1."""
    if p < 1:
        raise ValueError("degree must be >= 1")
    if p == 1:
        return np.array([-1.0, 1.0])
    coeffs = np.zeros(p + 1)
    coeffs[p] = 1.0
    interior = legendre.legroots(legendre.legder(coeffs))
    return np.concatenate(([-1.0], np.sort(interior), [1.0]))


def gauss_rule(n):
    """n-point Gauss-Legendre rule on [-1, 1], exact to degree 2n-1."""
    return legendre.leggauss(n)


def barycentric_weights(nodes):
    nodes = np.asarray(nodes, dtype=float)
    w = np.ones_like(nodes)
    for i in range(nodes.size):
        d = nodes[i] - np.delete(nodes, i)
        w[i] = 1.0 / np.prod(d)
    return w


def lagrange_eval(nodes, x):
    """Values and first derivatives of the Lagrange basis on ``nodes`` at ``x``.

    Returns (V, D) with V[q, i] = L_i(x_q) and D[q, i] = L_i'(x_q).
    Points coinciding with a node are handled exactly (interpolation plus the
    analytic differentiation-matrix row), so quadrature grids may share
    endpoints with the nodal grid.
    """
    nodes = np.asarray(nodes, dtype=float)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    n = nodes.size
    w = barycentric_weights(nodes)
    V = np.zeros((x.size, n))
    D = np.zeros((x.size, n))
    for q, xq in enumerate(x):
        diff = xq - nodes
        hit = np.nonzero(np.abs(diff) < 1e-14)[0]
        if hit.size:
            i = int(hit[0])
            V[q, i] = 1.0
            others = np.arange(n) != i
            D[q, others] = (w[others] / w[i]) / (nodes[i] - nodes[others])
            D[q, i] = -np.sum(D[q, others])
        else:
            g = w / diff
            V[q] = g / np.sum(g)
            # d/dx log L_i = sum_{j != i} 1/(x - xi_j)
            total = np.sum(1.0 / diff)
            D[q] = V[q] * (total - 1.0 / diff)
    return V, D


def tensor_basis(nodes_1d, pts_1d):
    """Tensor-product basis values/derivatives at a tensor grid of points.

    Local numbering: node (a, b) -> a*(n1) + b; point (i, j) -> i*(nq) + j,
    where index a/i runs along the first reference axis.
    Returns (N, Dxi, Deta) of shape (nq*nq, n1*n1).
    """
    V, D = lagrange_eval(nodes_1d, pts_1d)
    N = np.einsum("ia,jb->ijab", V, V)
    Dxi = np.einsum("ia,jb->ijab", D, V)
    Deta = np.einsum("ia,jb->ijab", V, D)
    m = V.shape[0] * V.shape[0]
    n = V.shape[1] * V.shape[1]
    return (N.reshape(m, n), Dxi.reshape(m, n), Deta.reshape(m, n))

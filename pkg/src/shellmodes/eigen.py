"""Smallest eigenpairs of the assembled generalized symmetric problem.

Shift-invert Lanczos at shift 0 (the stiffness is positive definite once
the lateral Dirichlet conditions are eliminated), with a small block buffer
over the requested count to resolve near-degenerate pairs at dispersion
minima.  Small systems fall back to a dense solver.  Both paths are
deterministic: the Lanczos start vector is fixed, so repeated solves of the
same system reproduce eigenvalues to the last bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as dla
import scipy.sparse.linalg as spla

from .assembly import AssembledSystem
from .errors import FactorizationFailure, NoConvergence

_DENSE_CUTOFF = 220
_BLOCK_BUFFER = 2
_MAXITER = 500


@dataclass
class EigenResult:
    """Ascending eigenvalues, M-orthonormal eigenvectors (columns), relative
    residuals, and the number of operator applications (0 on the dense path).

    Residuals are normwise backward errors
    ||K x - lambda M x|| / ((||K|| + |lambda| ||M||) ||x||): the computed
    pair solves a problem perturbed by that relative amount.  (The
    lambda-scaled quotient ||K x - lambda M x|| / (|lambda| ||M x||) has a
    floating-point floor of roughly eps_machine * lambda_max / lambda_min,
    which thin graded meshes push far above any useful tolerance.)
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residuals: np.ndarray
    iterations: int


class _CountingOperator(spla.LinearOperator):
    def __init__(self, A):
        super().__init__(dtype=A.dtype, shape=A.shape)
        self._A = A
        self.count = 0

    def _matvec(self, x):
        self.count += 1
        return self._A @ x


def _fix_signs(vecs: np.ndarray) -> np.ndarray:
    for j in range(vecs.shape[1]):
        i = int(np.argmax(np.abs(vecs[:, j])))
        if vecs[i, j] < 0:
            vecs[:, j] = -vecs[:, j]
    return vecs


def _inf_norm(A) -> float:
    return float(abs(A).sum(axis=1).max())


def _residuals(K, M, vals, vecs, norm_K=None, norm_M=None) -> np.ndarray:
    norm_K = _inf_norm(K) if norm_K is None else norm_K
    norm_M = _inf_norm(M) if norm_M is None else norm_M
    res = np.empty(vals.size)
    for j, lam in enumerate(vals):
        x = vecs[:, j]
        r = K @ x - lam * (M @ x)
        res[j] = np.linalg.norm(r) / (
            (norm_K + abs(lam) * norm_M) * np.linalg.norm(x)
        )
    return res


def _refine_block(lu, K, M, vals, vecs, tol, norms, max_steps=4):
    """Block inverse iteration with Rayleigh-Ritz polish.

    A subspace-iteration step with the existing factorization costs little
    and pushes the Lanczos residuals to the rounding floor.
    """
    for _ in range(max_steps):
        if np.all(_residuals(K, M, vals, vecs, *norms) <= tol):
            break
        X = lu.solve(np.asarray(M @ vecs))
        G = X.T @ (M @ X)
        X = X @ np.linalg.inv(np.linalg.cholesky(G).T)
        A = X.T @ (K @ X)
        A = 0.5 * (A + A.T)
        w, S = np.linalg.eigh(A)
        vals, vecs = w, X @ S
    return vals, vecs


def smallest_eigenpairs(system: AssembledSystem, m: int = 1, tol: float = 1e-9) -> EigenResult:
    """Return the m algebraically smallest eigenpairs of K x = lambda M x."""
    K, M = system.K, system.M
    n = K.shape[0]
    if m < 1:
        raise ValueError("need m >= 1")
    if m > n:
        raise ValueError(f"requested {m} pairs from an {n}-dof system")

    norms = (_inf_norm(K), _inf_norm(M))
    iterations = 0
    if n <= max(_DENSE_CUTOFF, 3 * m + 10):
        vals, vecs = dla.eigh(K.toarray(), M.toarray())
        vals, vecs = vals[:m], vecs[:, :m]
    else:
        k_solve = min(m + _BLOCK_BUFFER, n - 1)
        Mop = _CountingOperator(M)
        try:
            lu = spla.splu(K.tocsc())
        except RuntimeError as exc:
            raise FactorizationFailure(f"shifted factorization failed: {exc}") from exc
        op_inv = spla.LinearOperator(K.shape, matvec=lu.solve, dtype=K.dtype)
        v0 = np.sin(0.5 + np.arange(n))  # fixed start vector: deterministic runs
        try:
            vals, vecs = spla.eigsh(
                K,
                k=k_solve,
                M=Mop,
                sigma=0.0,
                which="LM",
                v0=v0,
                maxiter=_MAXITER,
                tol=0.0,
                OPinv=op_inv,
            )
        except spla.ArpackNoConvergence as exc:
            raise NoConvergence(f"no convergence within {_MAXITER} iterations") from exc
        order = np.argsort(vals)
        vals, vecs = vals[order], vecs[:, order]
        vals, vecs = _refine_block(lu, K, M, vals, vecs, tol, norms)
        vals, vecs = vals[:m], vecs[:, :m]
        iterations = Mop.count

    # M-normalize and fix the sign convention (largest entry positive)
    for j in range(vals.size):
        x = vecs[:, j]
        vecs[:, j] = x / np.sqrt(x @ (M @ x))
    vecs = _fix_signs(vecs)

    res = _residuals(K, M, vals, vecs, *norms)
    if np.any(res > tol):
        raise NoConvergence(
            f"residuals {res} exceed the requested tolerance {tol:g}"
        )
    return EigenResult(vals, vecs, res, iterations)

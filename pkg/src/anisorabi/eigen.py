"""Dense real-symmetric eigensolver.

Householder reduction to tridiagonal form followed by the implicit QL
iteration with Wilkinson-type shifts.  The reduction is vectorized with
numpy; the QL sweep is a scalar recurrence and is compiled with numba.
"""

from dataclasses import dataclass
import math

import numba
import numpy as np

__all__ = ["EigenDecomposition", "NoConvergence", "eigensolve", "eigenvalues", "tridiagonalize"]

MAX_DIM = 1024
#: QL iterations allowed per eigenvalue before giving up
MAX_ITER = 60


class NoConvergence(ArithmeticError):
    """QL iteration exceeded its budget.

    ``offdiag_norm`` holds the norm of the remaining subdiagonal.
    """

    def __init__(self, message, offdiag_norm):
        super().__init__(message)
        self.offdiag_norm = offdiag_norm


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues, orthonormal eigenvectors (columns) and the
    largest residual norm ||A v_k - lambda_k v_k||."""

    values: np.ndarray
    vectors: np.ndarray
    max_residual: float


def tridiagonalize(A, want_q=True):
    """Householder reduction A = Q T Q^T.

    Returns
    -------
    d : ndarray
        diagonal of T
    e : ndarray
        subdiagonal of T, length n-1
    Q : ndarray or None
        orthogonal transformation (only when `want_q`)
    """
    a = np.array(A, dtype=float, copy=True)
    n = a.shape[0]
    Q = np.eye(n) if want_q else None
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        if not x[1:].any():
            continue  # column already tridiagonal
        alpha = np.linalg.norm(x)
        beta = math.copysign(alpha, x[0])
        v = x
        v[0] += beta
        v /= np.linalg.norm(v)
        # H A H with H = I - 2 v v^T restricted to the trailing block
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = p - (v @ p) * v
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = a[k, k + 1] = -beta
        if want_q:
            Qs = Q[:, k + 1:]
            Qs -= 2.0 * np.outer(Qs @ v, v)
    d = np.diag(a).copy()
    e = np.diag(a, -1).copy()
    return d, e, Q


@numba.njit(cache=True)
def _tql(d, e, z, want_vectors, max_iter):
    # implicit QL on the tridiagonal (d, e); e[i] couples i and i+1.
    # returns -1 on success, otherwise the index that failed to converge
    n = d.shape[0]
    eps = np.finfo(np.float64).eps
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                return l
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if want_vectors:
                    for k in range(n):
                        f = z[k, i + 1]
                        z[k, i + 1] = s * z[k, i] + c * f
                        z[k, i] = c * z[k, i] - s * f
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return -1


def _check_square(A):
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if A.shape[0] > MAX_DIM:
        raise ValueError(f"dense solver limited to dim <= {MAX_DIM}")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not exactly symmetric")
    return A


def _run_ql(d, e, z, want_vectors):
    n = d.shape[0]
    ework = np.zeros(n)
    ework[: n - 1] = e
    failed = _tql(d, ework, z, want_vectors, MAX_ITER)
    if failed >= 0:
        raise NoConvergence(
            f"QL iteration did not converge for eigenvalue {failed}",
            float(np.linalg.norm(ework)),
        )


def eigenvalues(A):
    """Ascending eigenvalues of a real symmetric matrix (no eigenvectors)."""
    A = _check_square(A)
    if A.shape[0] == 0:
        return np.zeros(0)
    d, e, _ = tridiagonalize(A, want_q=False)
    _run_ql(d, e, np.zeros((1, 1)), False)
    return np.sort(d)


def eigensolve(A):
    """Full eigendecomposition of a real symmetric matrix.

    Raises
    ------
    NoConvergence
        if the QL sweep budget is exhausted
    """
    A = _check_square(A)
    n = A.shape[0]
    if n == 0:
        return EigenDecomposition(np.zeros(0), np.zeros((0, 0)), 0.0)
    d, e, Q = tridiagonalize(A, want_q=True)
    z = np.ascontiguousarray(Q)
    _run_ql(d, e, z, True)
    order = np.argsort(d, kind="stable")
    values = d[order]
    vectors = z[:, order]
    resid = np.linalg.norm(A @ vectors - vectors * values, axis=0)
    return EigenDecomposition(values, vectors, float(resid.max()))

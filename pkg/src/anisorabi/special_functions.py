"""Laguerre polynomials and Fock-basis matrix elements of the displacement operator.

All routines work in double precision and accept numpy arrays for the
real argument where that is natural.
"""

import numpy as np

__all__ = [
    "laguerre",
    "laguerre_table",
    "displaced_fock_element",
    "displacement_matrix",
]


def _check_index(name, value):
    if int(value) != value or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    return int(value)


def laguerre(n, k, x):
    """Generalized Laguerre polynomial L_n^k(x).

    Uses the upward three-term recurrence

        (m+1) L_{m+1}^k = (2m + k + 1 - x) L_m^k - (m + k) L_{m-1}^k

    which, unlike the explicit alternating sum, does not suffer from
    cancellation for moderate n.

    Parameters
    ----------
    n : int
        degree, n >= 0
    k : int
        order, k >= 0. k = 0 gives the ordinary Laguerre polynomial.
    x : float or numpy.ndarray
        argument

    Returns
    -------
    float or numpy.ndarray
        L_n^k(x), same shape as `x`

    """
    n = _check_index("n", n)
    k = _check_index("k", k)
    x = np.asarray(x, dtype=float)

    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = (k + 1.0) - x
    for m in range(1, n):
        prev, cur = cur, ((2 * m + k + 1 - x) * cur - (m + k) * prev) / (m + 1)
    return cur if cur.ndim else float(cur)


def laguerre_table(n_max, k, x):
    """All of L_0^k(x), ..., L_{n_max}^k(x) as a length n_max+1 array (scalar x)."""
    n_max = _check_index("n_max", n_max)
    k = _check_index("k", k)
    x = float(x)
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = k + 1.0 - x
    for m in range(1, n_max):
        out[m + 1] = ((2 * m + k + 1 - x) * out[m] - (m + k) * out[m - 1]) / (m + 1)
    return out


def displaced_fock_element(N, M, lam):
    """Matrix element <N| exp[lam (a^+ - a)] |M> for real `lam`.

    For M <= N this is exp(-lam^2/2) lam^(N-M) sqrt(M!/N!) L_M^(N-M)(lam^2).
    The M > N case follows from the adjoint relation, which amounts to a
    factor (-1)^(M-N) on the swapped element.
    """
    N = _check_index("N", N)
    M = _check_index("M", M)
    lam = float(lam)
    if not np.isfinite(lam):
        raise ValueError("lam must be finite")

    sign = 1.0
    if M > N:
        N, M = M, N
        if (N - M) % 2:
            sign = -1.0

    # lam^(N-M) sqrt(M!/N!) accumulated factor by factor, no factorials
    pref = 1.0
    for j in range(M + 1, N + 1):
        pref *= lam / np.sqrt(j)
    return sign * np.exp(-0.5 * lam * lam) * pref * laguerre(M, N - M, lam * lam)


def displacement_matrix(lam, dim):
    """Truncated matrix D[N, M] = <N| exp[lam (a^+ - a)] |M>, N, M < dim.

    Entries are the exact infinite-space matrix elements (not the exponential
    of a truncated generator), so only the rows/columns near the edge lose
    unitarity.
    """
    dim = _check_index("dim", dim)
    lam = float(lam)
    x = lam * lam
    D = np.zeros((dim, dim))
    for d in range(dim):
        # d-th subdiagonal: N = M + d, entries lam^d sqrt(M!/N!) L_M^d(x)
        lag = laguerre_table(dim - 1 - d, d, x)
        pref = np.empty(dim - d)
        pref[0] = 1.0
        for j in range(1, d + 1):
            pref[0] *= lam / np.sqrt(j)
        for M in range(1, dim - d):
            pref[M] = pref[M - 1] * np.sqrt(M / (M + d))
        idx = np.arange(dim - d)
        D[idx + d, idx] = pref * lag
    D *= np.exp(-0.5 * x)
    # upper triangle from the adjoint relation
    iu = np.triu_indices(dim, 1)
    parity = np.where((iu[1] - iu[0]) % 2, -1.0, 1.0)
    D[iu] = parity * D[iu[1], iu[0]]
    return D

"""Exact diagonalization of the anisotropic Rabi Hamiltonian in a truncated Fock space.

Basis ordering: index ``2n`` is |+z, n> and ``2n + 1`` is |-z, n>, for
n = 0 .. n_max.  In this ordering every operator used here is a real
symmetric matrix.
"""

from dataclasses import dataclass
import math

import numpy as np

from .eigen import EigenDecomposition, NoConvergence, eigensolve, eigenvalues
from .model import coeff_G, coeff_R

__all__ = [
    "TruncatedSpace",
    "UnnormalizedState",
    "hamiltonian_matrix",
    "build_hamiltonian",
    "build_effective_hamiltonian",
    "parity_matrix",
    "parity_indices",
    "eigensolve",
    "eigenvalues",
    "EigenDecomposition",
    "NoConvergence",
    "ParityBlockSolution",
    "solve_parity_blocks",
    "labeled_spectrum",
    "labeled_states",
    "expectation",
    "DEFAULT_N_MAX",
]

DEFAULT_N_MAX = 120


class UnnormalizedState(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSpace:
    """Spin (x) Fock space keeping photon numbers 0 .. n_max."""

    n_max: int = DEFAULT_N_MAX

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 0:
            raise ValueError("n_max must be a nonnegative integer")

    @property
    def dim(self):
        return 2 * (self.n_max + 1)

    def index(self, spin, n):
        """Basis index of |spin z, n>, spin = +1 or -1."""
        if not 0 <= n <= self.n_max:
            raise IndexError(f"photon number {n} outside 0..{self.n_max}")
        return 2 * n + (0 if spin > 0 else 1)

    def photon_numbers(self):
        return np.repeat(np.arange(self.n_max + 1), 2)

    def spins(self):
        return np.tile([1.0, -1.0], self.n_max + 1)


def hamiltonian_matrix(omega, Omega, g, gprime, n_max):
    """Raw Hamiltonian matrix; couplings may take either sign here."""
    space = TruncatedSpace(n_max)
    n = space.photon_numbers()
    H = np.diag(omega * n + Omega * space.spins())
    k = np.arange(1, n_max + 1)
    sq = np.sqrt(k)
    # rotating: <+z, k-1| H |-z, k> = g sqrt(k)
    H[2 * (k - 1), 2 * k + 1] = g * sq
    H[2 * k + 1, 2 * (k - 1)] = g * sq
    # counter-rotating: <-z, k-1| H |+z, k> = g' sqrt(k)
    H[2 * (k - 1) + 1, 2 * k] = gprime * sq
    H[2 * k, 2 * (k - 1) + 1] = gprime * sq
    return H


def build_hamiltonian(params, space):
    """Dense matrix of the anisotropic Rabi Hamiltonian."""
    return hamiltonian_matrix(params.omega, params.Omega, params.g, params.gprime, space.n_max)


def build_effective_hamiltonian(params, lam, space):
    """Transformed Hamiltonian with the multi-photon terms dropped, at fixed `lam`.

    With lam equal to the root for doublet n, the counter-rotating coupling
    between |-z, n-1> and |+z, n> vanishes.
    """
    n_max = space.n_max
    shift = params.omega * lam * lam - 2.0 * params.g1 * lam
    G = np.array([coeff_G(params, lam, n) for n in range(n_max + 1)])
    n = np.arange(n_max + 1)
    diag = np.empty(space.dim)
    diag[0::2] = params.omega * n + G + shift
    diag[1::2] = params.omega * n - G + shift
    H = np.diag(diag)
    for k in range(1, n_max + 1):
        base = (params.g1 - lam * params.omega) * math.sqrt(k)
        R = coeff_R(params, lam, k)
        rot = base + R
        counter = base - R
        H[2 * (k - 1), 2 * k + 1] = H[2 * k + 1, 2 * (k - 1)] = rot
        H[2 * (k - 1) + 1, 2 * k] = H[2 * k, 2 * (k - 1) + 1] = counter
    return H


def parity_matrix(space):
    """Diagonal matrix of P = sigma_z exp(i pi a^+ a)."""
    return np.diag(parity_diagonal(space))


def parity_diagonal(space):
    n = space.photon_numbers()
    return space.spins() * np.where(n % 2, -1.0, 1.0)


def parity_indices(space):
    """Basis indices of the P = +1 and P = -1 subspaces, ascending."""
    p = parity_diagonal(space)
    return {1: np.flatnonzero(p > 0), -1: np.flatnonzero(p < 0)}


@dataclass(frozen=True)
class ParityBlockSolution:
    """Eigen-solution of one parity block, vectors embedded in the full basis."""

    parity: int
    values: np.ndarray
    vectors: np.ndarray | None
    max_residual: float


def solve_parity_blocks(H, space, vectors=False):
    """Diagonalize H separately in the two parity subspaces.

    Returns a dict ``{+1: ParityBlockSolution, -1: ParityBlockSolution}``.
    The state with parity p and within-block index k carries label (p, k).
    """
    out = {}
    for parity, idx in parity_indices(space).items():
        block = H[np.ix_(idx, idx)]
        if vectors:
            dec = eigensolve(block)
            full = np.zeros((space.dim, len(idx)))
            full[idx, :] = dec.vectors
            out[parity] = ParityBlockSolution(parity, dec.values, full, dec.max_residual)
        else:
            out[parity] = ParityBlockSolution(parity, eigenvalues(block), None, float("nan"))
    return out


def _merge_lowest(blocks, n_levels):
    items = [
        ((parity, k), float(e))
        for parity, sol in blocks.items()
        for k, e in enumerate(sol.values)
    ]
    items.sort(key=lambda item: (item[1], item[0]))
    return items[:n_levels]


def labeled_spectrum(params, space, n_levels):
    """The `n_levels` lowest eigenvalues with their (parity, index) labels.

    Returns a list of ``((n0, n1), energy)`` in ascending energy.
    """
    if n_levels < 1:
        raise ValueError("n_levels must be >= 1")
    if n_levels > space.dim // 4:
        raise ValueError("n_levels too close to the truncation edge (need n_levels <= dim/4)")
    blocks = solve_parity_blocks(build_hamiltonian(params, space), space)
    return _merge_lowest(blocks, n_levels)


def labeled_states(params, space):
    """Map label -> (energy, eigenvector in the full basis) for all states."""
    blocks = solve_parity_blocks(build_hamiltonian(params, space), space, vectors=True)
    return {
        (parity, k): (float(sol.values[k]), sol.vectors[:, k])
        for parity, sol in blocks.items()
        for k in range(len(sol.values))
    }


_OBSERVABLES = ("photon-number", "sigma-z", "polariton-number", "polariton-number-squared")


def observable_diagonal(which, n_max):
    """Diagonal of a number-type operator in the truncated basis."""
    space = TruncatedSpace(n_max)
    n = space.photon_numbers().astype(float)
    sz = space.spins()
    if which == "photon-number":
        return n
    if which == "sigma-z":
        return sz
    N = n + 0.5 * sz + 0.5
    if which == "polariton-number":
        return N
    if which == "polariton-number-squared":
        return N * N
    raise ValueError(f"unknown observable {which!r}; expected one of {_OBSERVABLES}")


def expectation(vector, which):
    """<v|O|v> for a diagonal observable O.

    `which` is one of ``photon-number``, ``sigma-z``, ``polariton-number``,
    ``polariton-number-squared``.
    """
    v = np.asarray(vector, dtype=float)
    if v.ndim != 1 or v.size % 2:
        raise ValueError("state vector must be 1-d with even length")
    norm = v @ v
    if abs(norm - 1.0) > 1e-10:
        raise UnnormalizedState(f"state norm^2 = {norm!r}")
    diag = observable_diagonal(which, v.size // 2 - 1)
    return float(v @ (diag * v))

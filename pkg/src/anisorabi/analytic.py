"""Analytic spectrum, mixing angles and wavefunctions of the anisotropic Rabi model.

After the counter-rotating coupling in doublet n is removed by the choice
lambda = lambda_n, the transformed Hamiltonian splits into the invariant
ground state |-z, 0> and 2x2 blocks on {|+z, n-1>, |-z, n>}.  Eigenstates
of the original model follow by undoing the transformation
exp[lambda sigma_x (a^+ - a)].
"""

from dataclasses import dataclass, replace
import math
import warnings

import numpy as np

from .model import coeff_G, coeff_R, solve_lambda
from .special_functions import displacement_matrix

__all__ = [
    "AnalyticLevel",
    "WavefunctionExpansion",
    "CutoffTooSmall",
    "DegenerateDoublet",
    "label_for",
    "level_for_label",
    "ground_energy",
    "doublet_matrix",
    "doublet_energies",
    "rotation_angle",
    "mixing_angle",
    "gap_mixing_angle",
    "wavefunction",
    "spectrum",
    "rank_labels",
]

GROUND = "ground"
MINUS = "doublet-minus"
PLUS = "doublet-plus"


class CutoffTooSmall(ValueError):
    pass


class DegenerateDoublet(RuntimeWarning):
    """Both diagonal entries and the coupling of a doublet coincide; the
    mixing angle is arbitrary and pi/4 is used."""


@dataclass(frozen=True)
class AnalyticLevel:
    kind: str
    n: int
    energy: float
    theta: float
    lam: float
    label: tuple

    @property
    def parity(self):
        return self.label[0]


def label_for(n, kind):
    """(parity, index) label of an analytic level.

    The ground state is (-1, 0); doublet n has parity (-1)^(n-1) and its
    two members take consecutive indices inside that parity sector.
    """
    if kind == GROUND:
        return (-1, 0)
    if kind not in (MINUS, PLUS):
        raise ValueError(f"unknown level kind {kind!r}")
    if n < 1:
        raise ValueError("doublet index must be >= 1")
    upper = 1 if kind == PLUS else 0
    if n % 2:  # n = 2m - 1
        return (1, n - 1 + upper)
    return (-1, n - 1 + upper)  # n = 2m


def level_for_label(label):
    """Inverse of :func:`label_for`: returns (n, kind)."""
    parity, k = label
    if k < 0 or parity not in (1, -1):
        raise ValueError(f"invalid label {label!r}")
    if parity == -1:
        if k == 0:
            return 0, GROUND
        n = k + 1 if k % 2 else k
        return n, (MINUS if k % 2 else PLUS)
    n = k + 1 if k % 2 == 0 else k
    return n, (MINUS if k % 2 == 0 else PLUS)


def ground_energy(params, lam=None):
    """Ground level: E_G = omega l^2 - 2 g1 l - Omega e^{-2l^2} - 2 g2 l e^{-2l^2}, l = lambda_1."""
    if lam is None:
        lam = solve_lambda(params, 1).lam
    e = math.exp(-2.0 * lam * lam)
    energy = (
        params.omega * lam * lam
        - 2.0 * params.g1 * lam
        - params.Omega * e
        - 2.0 * params.g2 * lam * e
    )
    return AnalyticLevel(GROUND, 0, energy, 0.0, lam, label_for(0, GROUND))


def doublet_matrix(params, n, lam=None):
    """2x2 block on {|+z, n-1>, |-z, n>} with lambda = lambda_n.

    The off-diagonal element is (g1 - lam omega) sqrt(n) + R_n, which equals
    2 R_n at the root.
    """
    if n < 1:
        raise ValueError("doublet index must be >= 1")
    if lam is None:
        lam = solve_lambda(params, n).lam
    base = params.omega * lam * lam - 2.0 * params.g1 * lam
    R = coeff_R(params, lam, n)
    off = (params.g1 - lam * params.omega) * math.sqrt(n) + R
    return np.array([
        [(n - 1) * params.omega + base + coeff_G(params, lam, n - 1), off],
        [off, n * params.omega + base - coeff_G(params, lam, n)],
    ])


def rotation_angle(H):
    """Angle theta in (-pi/2, pi/2] with (cos theta, sin theta) the eigenvector
    of the lower eigenvalue of the real symmetric 2x2 matrix `H`.

    Returns ``(theta, degenerate)``.
    """
    a, b, d = H[0, 0], H[0, 1], H[1, 1]
    scale = max(abs(a), abs(b), abs(d), 1.0)
    if abs(a - d) <= 1e-14 * scale and abs(b) <= 1e-14 * scale:
        return math.pi / 4, True
    theta = 0.5 * math.atan2(-2.0 * b, d - a)
    if theta <= -math.pi / 2:
        theta += math.pi
    return theta, False


def mixing_angle(params, n, lam=None):
    """Mixing angle theta_n of doublet n.

    |E_{n-}> = cos(theta)|+z, n-1> + sin(theta)|-z, n> is the lower eigenvector
    of the doublet block.  A fully degenerate block emits
    :class:`DegenerateDoublet` and returns pi/4.
    """
    theta, degenerate = rotation_angle(doublet_matrix(params, n, lam))
    if degenerate:
        warnings.warn(f"degenerate doublet n={n}; mixing angle set to pi/4", DegenerateDoublet)
    return theta


def gap_mixing_angle(params, n, lam=None):
    """Angle from tan(2 theta) = 2 R_n / (E_{n-} - E_{n+}) taken literally.

    Kept for comparison with :func:`mixing_angle`; it uses the eigenvalue gap
    instead of the diagonal difference and so differs in general.
    """
    if lam is None:
        lam = solve_lambda(params, n).lam
    minus, plus = doublet_energies(params, n, lam)
    return 0.5 * math.atan(2.0 * coeff_R(params, lam, n) / (minus.energy - plus.energy))


def doublet_energies(params, n, lam=None):
    """The two levels (E_{n,-}, E_{n,+}) of doublet n."""
    if lam is None:
        lam = solve_lambda(params, n).lam
    G_lo = coeff_G(params, lam, n - 1)
    G_hi = coeff_G(params, lam, n)
    R = coeff_R(params, lam, n)
    w = params.omega
    centre = (n - 0.5) * w + w * lam * lam - 2.0 * params.g1 * lam + 0.5 * (G_lo - G_hi)
    half_gap = math.sqrt((0.5 * (-w + G_lo + G_hi)) ** 2 + 4.0 * R * R)
    H = doublet_matrix(params, n, lam)
    theta, degenerate = rotation_angle(H)
    if degenerate:
        warnings.warn(f"degenerate doublet n={n}; mixing angle set to pi/4", DegenerateDoublet)
    minus = AnalyticLevel(MINUS, n, centre - half_gap, theta, lam, label_for(n, MINUS))
    plus = AnalyticLevel(PLUS, n, centre + half_gap, theta, lam, label_for(n, PLUS))
    return minus, plus


def spectrum(params, n_doublets):
    """Ground level followed by doublets 1..n_doublets, each as (minus, plus)."""
    if n_doublets < 1:
        raise ValueError("n_doublets must be >= 1")
    levels = [ground_energy(params)]
    for n in range(1, n_doublets + 1):
        levels.extend(doublet_energies(params, n))
    return levels


def rank_labels(levels):
    """Relabel levels as (parity, energy rank within that parity).

    This is the labelling of the exact solver.  It coincides with the
    doublet-order labels of :func:`label_for` until doublets with different n
    overlap in energy (e.g. JC at g = 0.45 from n = 4 on).  Ranks are only
    meaningful for levels lying below every doublet left out of `levels`.
    """
    out = []
    for parity in (1, -1):
        members = sorted((lv for lv in levels if lv.parity == parity), key=lambda lv: lv.energy)
        out.extend(replace(lv, label=(parity, k)) for k, lv in enumerate(members))
    return sorted(out, key=lambda lv: lv.energy)


@dataclass(frozen=True)
class WavefunctionExpansion:
    """Amplitudes of a state in the bare basis, stored as a vector in the
    oracle ordering (index 2k is |+z, k>, 2k+1 is |-z, k>)."""

    vector: np.ndarray
    cutoff: int

    def amplitude(self, spin, fock):
        return float(self.vector[2 * fock + (0 if spin > 0 else 1)])

    @property
    def coefficients(self):
        return {
            (s, k): self.amplitude(s, k)
            for k in range(self.cutoff + 1)
            for s in (1, -1)
        }

    @property
    def norm_squared(self):
        return float(self.vector @ self.vector)


def transformed_state_vector(plus_z, minus_z, lam):
    """Apply exp[-lam sigma_x (a^+ - a)] to a state given by its +z and -z
    Fock amplitude arrays; returns the (plus, minus) arrays of the result.

    On sigma_x = +1 (-1) the exponential is a displacement by -lam (+lam).
    """
    dim = len(plus_z)
    ax_plus = (plus_z + minus_z) / math.sqrt(2.0)
    ax_minus = (plus_z - minus_z) / math.sqrt(2.0)
    ax_plus = displacement_matrix(-lam, dim) @ ax_plus
    ax_minus = displacement_matrix(lam, dim) @ ax_minus
    return (ax_plus + ax_minus) / math.sqrt(2.0), (ax_plus - ax_minus) / math.sqrt(2.0)


def wavefunction(params, level, cutoff=None):
    """Bare-basis expansion of an analytic eigenstate.

    Parameters
    ----------
    params : ModelParams
    level : AnalyticLevel
        as returned by :func:`ground_energy` or :func:`doublet_energies`
    cutoff : int, optional
        highest photon number kept, default ``level.n + 40``

    Raises
    ------
    CutoffTooSmall
        if the truncated expansion misses more than 1e-8 of the norm
    """
    n = level.n
    if cutoff is None:
        cutoff = n + 40
    if cutoff < n + 20:
        raise ValueError(f"cutoff must be >= n + 20 = {n + 20}")
    dim = cutoff + 1
    plus = np.zeros(dim)
    minus = np.zeros(dim)
    if level.kind == GROUND:
        minus[0] = 1.0
    else:
        c, s = math.cos(level.theta), math.sin(level.theta)
        if level.kind == MINUS:
            plus[n - 1], minus[n] = c, s
        else:
            plus[n - 1], minus[n] = -s, c
    plus, minus = transformed_state_vector(plus, minus, level.lam)
    vec = np.empty(2 * dim)
    vec[0::2] = plus
    vec[1::2] = minus
    deficit = 1.0 - vec @ vec
    if deficit > 1e-8:
        raise CutoffTooSmall(f"norm deficit {deficit:.3e} at cutoff {cutoff}")
    return WavefunctionExpansion(vec, cutoff)

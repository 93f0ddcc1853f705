"""Bloch-Siegert shift, photon number, inversion and polariton statistics.

Closed forms follow from the analytic eigenstates; :func:`numeric_observables`
evaluates the same quantities directly on a wavefunction expansion so the
two routes can be compared.
"""

from dataclasses import dataclass
import math

from .analytic import MINUS, PLUS, doublet_energies, wavefunction
from .model import solve_lambda
from .oracle import expectation
from .special_functions import laguerre

__all__ = [
    "ObservableSet",
    "bloch_siegert_shift",
    "jc_transition",
    "ground_observables",
    "excited_observables",
    "numeric_observables",
]


@dataclass(frozen=True)
class ObservableSet:
    """Expectation values for one state.

    The polariton fields are only filled for the ground state, except when
    produced by :func:`numeric_observables`.
    """

    mean_photons: float
    sigma_z: float
    polariton_mean: float | None = None
    polariton_var: float | None = None


def jc_transition(params):
    """E_{1-} - E_G of the Jaynes-Cummings model with the same omega, Omega, g."""
    w, W = params.omega, params.Omega
    return 0.5 * w + W - math.hypot(W - 0.5 * w, params.g)


def bloch_siegert_shift(params, lam=None):
    """Shift of the E_{1-} -> E_G transition away from its JC value.

    Evaluated in closed form with lambda = lambda_1.
    """
    if lam is None:
        lam = solve_lambda(params, 1).lam
    w, W, g1, g2 = params.omega, params.Omega, params.g1, params.g2
    e = math.exp(-2.0 * lam * lam)
    l2 = lam * lam
    inner = -0.5 * w + W * e * (1.0 - 2.0 * l2) + 4.0 * g2 * lam * e * (1.0 - l2)
    return (
        W * e * (1.0 + 2.0 * l2)
        - W
        + 4.0 * g2 * l2 * lam * e
        + math.hypot(W - 0.5 * w, params.g)
        - math.sqrt(inner * inner + 4.0 * (g1 - w * lam) ** 2)
    )


def ground_observables(params, lam=None):
    if lam is None:
        lam = solve_lambda(params, 1).lam
    l2 = lam * lam
    e2 = math.exp(-2.0 * l2)
    return ObservableSet(
        mean_photons=l2,
        sigma_z=-e2,
        polariton_mean=l2 - 0.5 * e2 + 0.5,
        polariton_var=1.5 * l2 * e2 + 0.5 * l2 - 0.25 * e2 * e2 + 0.25,
    )


def _branch_sign(branch):
    if branch in ("+", PLUS, 1):
        return 1
    if branch in ("-", MINUS, -1):
        return -1
    raise ValueError(f"branch must be '+' or '-', got {branch!r}")


def excited_observables(params, n, branch, lam=None, theta=None):
    """<a^+ a> and <sigma_z> in the analytic excited state |phi_{n, branch}>."""
    if n < 1:
        raise ValueError("excited states need n >= 1")
    sign = _branch_sign(branch)
    if lam is None or theta is None:
        minus, _ = doublet_energies(params, n, lam)
        lam, theta = minus.lam, minus.theta
    c, s = math.cos(theta), math.sin(theta)
    rn = math.sqrt(n)
    y = 4.0 * lam * lam
    e = math.exp(-2.0 * lam * lam)
    photons = n - 0.5 + lam * lam + sign * (0.5 * math.cos(2.0 * theta) + 2.0 * lam * rn * s * c)
    cross = c * s * (4.0 / rn) * lam * e * laguerre(n - 1, 1, y)
    lo = e * laguerre(n - 1, 0, y)
    hi = e * laguerre(n, 0, y)
    if sign < 0:
        sz = c * c * lo - s * s * hi + cross
    else:
        sz = s * s * lo - c * c * hi - cross
    return ObservableSet(mean_photons=photons, sigma_z=sz)


def numeric_observables(params, level, cutoff=60):
    """All four observables evaluated on the wavefunction expansion of `level`."""
    vec = wavefunction(params, level, cutoff).vector
    vec = vec / math.sqrt(vec @ vec)
    mean_n = expectation(vec, "polariton-number")
    return ObservableSet(
        mean_photons=expectation(vec, "photon-number"),
        sigma_z=expectation(vec, "sigma-z"),
        polariton_mean=mean_n,
        polariton_var=expectation(vec, "polariton-number-squared") - mean_n * mean_n,
    )

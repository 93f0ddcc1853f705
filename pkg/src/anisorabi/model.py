"""Model parameters, effective-Hamiltonian coefficients and the lambda root solve.

Conventions: hbar = 1, the field mode has frequency ``omega``, the two-level
system has splitting ``2 * Omega``, ``g`` multiplies the rotating terms and
``gprime`` the counter-rotating terms.
"""

from dataclasses import dataclass
import math

import numpy as np

from .special_functions import laguerre

__all__ = [
    "ModelParams",
    "LambdaSolution",
    "NoRootInUnitInterval",
    "coeff_R",
    "coeff_G",
    "lambda_condition",
    "solve_lambda",
]

#: grid spacing used to bracket roots of the lambda condition on [0, 1)
SCAN_STEP = 1.0 / 256


class NoRootInUnitInterval(ArithmeticError):
    """The lambda condition has no sign change on [0, 1).

    Signals that the parameters lie outside the regime where the
    counter-rotating elimination is meaningful.
    """


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the anisotropic Rabi Hamiltonian.

    Parameters
    ----------
    omega : float
        field-mode frequency, > 0
    Omega : float
        half the two-level transition frequency, >= 0
    g : float
        rotating-term coupling, >= 0
    gprime : float
        counter-rotating-term coupling, >= 0
    """

    omega: float
    Omega: float
    g: float
    gprime: float

    def __post_init__(self):
        for name in ("omega", "Omega", "g", "gprime"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if self.Omega < 0 or self.g < 0 or self.gprime < 0:
            raise ValueError("Omega, g and gprime must be nonnegative")

    @property
    def g1(self):
        """Symmetric coupling (g + g')/2."""
        return 0.5 * (self.g + self.gprime)

    @property
    def g2(self):
        """Antisymmetric coupling (g' - g)/2."""
        return 0.5 * (self.gprime - self.g)


@dataclass(frozen=True)
class LambdaSolution:
    n: int
    lam: float
    residual: float


def _check_level(n, minimum):
    if int(n) != n or n < minimum:
        raise ValueError(f"level index must be an integer >= {minimum}, got {n!r}")
    return int(n)


def coeff_R(params, lam, n):
    """Off-diagonal coefficient R_n of the transformed Hamiltonian.

    Works elementwise when `lam` is an array.
    """
    n = _check_level(n, 1)
    lam = np.asarray(lam, dtype=float)
    y = 4.0 * lam * lam
    e = np.exp(-2.0 * lam * lam)
    rn = math.sqrt(n)
    out = (
        (2.0 * params.Omega / rn) * lam * e * laguerre(n - 1, 1, y)
        - params.g2 * rn * e * laguerre(n - 1, 0, y)
        + (4.0 * params.g2 / rn) * e * lam * lam * laguerre(n - 1, 2, y)
    )
    return out if out.ndim else float(out)


def coeff_G(params, lam, n):
    """Diagonal (sigma_z) coefficient G_n of the transformed Hamiltonian."""
    n = _check_level(n, 0)
    lam = np.asarray(lam, dtype=float)
    e = np.exp(-2.0 * lam * lam)
    if n == 0:
        out = params.Omega * e + 2.0 * params.g2 * lam * e
    else:
        y = 4.0 * lam * lam
        out = params.Omega * e * laguerre(n, 0, y) + 2.0 * params.g2 * lam * e * (
            laguerre(n - 1, 1, y) + laguerre(n, 1, y)
        )
    return out if out.ndim else float(out)


def lambda_condition(params, lam, n):
    """f(lam) = (g1 - lam*omega) sqrt(n) - R_n(lam); its root removes the
    counter-rotating coupling inside doublet n."""
    lam = np.asarray(lam, dtype=float)
    out = (params.g1 - lam * params.omega) * math.sqrt(n) - coeff_R(params, lam, n)
    return out if np.ndim(out) else float(out)


def _bisect(f, a, b, fa):
    # bisection until the bracket cannot be split further in double precision
    fb = f(b)
    while True:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        fm = f(m)
        if fm == 0.0:
            return m, fm
        if (fa < 0) == (fm < 0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return (a, fa) if abs(fa) <= abs(fb) else (b, fb)


def solve_lambda(params, n):
    """Root lambda_n of the elimination condition on [0, 1).

    The interval is scanned on a 1/256 grid; every sign change is refined by
    bisection and the root nearest the weak-coupling seed g'/(omega + 2 Omega)
    is returned.

    Raises
    ------
    NoRootInUnitInterval
        if the condition does not change sign on [0, 1)
    """
    n = _check_level(n, 1)
    seed = params.gprime / (params.omega + 2.0 * params.Omega)

    def f(x):
        return lambda_condition(params, x, n)

    grid = np.arange(0, 257) * SCAN_STEP
    vals = f(grid)

    roots = []
    for i in range(256):
        a, b = grid[i], grid[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            roots.append((a, 0.0))
        elif fb == 0.0:
            continue  # picked up as the left end of the next interval
        elif (fa < 0) != (fb < 0):
            roots.append(_bisect(f, a, b, fa))
    if not roots:
        raise NoRootInUnitInterval(
            f"no root of the lambda condition on [0, 1) for n={n}, {params}"
        )
    lam, res = min(roots, key=lambda r: (abs(r[0] - seed), r[0]))
    return LambdaSolution(n=n, lam=float(lam), residual=float(res))

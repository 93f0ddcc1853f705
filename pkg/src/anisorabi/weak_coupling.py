"""Weak counter-rotating limit: closed-form lambda and the modified JC model.

For small g' the transformed Hamiltonian reduces to a Jaynes-Cummings model
with shifted parameters plus a sigma_z a^+ a term,

    (omega + d_omega sigma_z) a^+ a + (Omega + d_Omega) sigma_z
        + (g + d_g)(sigma_+ a + sigma_- a^+) + d_E.
"""

from dataclasses import dataclass
import math

import numpy as np

from .analytic import GROUND, MINUS, PLUS, AnalyticLevel, label_for, rotation_angle

__all__ = ["ModifiedJCParams", "lambda_weak", "modified_jc", "modified_jc_spectrum"]


@dataclass(frozen=True)
class ModifiedJCParams:
    delta_omega: float
    delta_Omega: float
    delta_g: float
    delta_E: float
    lam_weak: float


def lambda_weak(params):
    """Leading-order lambda = g' / (omega + 2 Omega)."""
    return params.gprime / (params.omega + 2.0 * params.Omega)


def modified_jc(params):
    lam = lambda_weak(params)
    w, W = params.omega, params.Omega
    return ModifiedJCParams(
        delta_omega=4.0 * params.g2 * lam,
        delta_Omega=2.0 * params.g2 * lam,
        delta_g=params.gprime * (2.0 * W - w) / (w + 2.0 * W),
        delta_E=-2.0 * params.g1 * lam,
        lam_weak=lam,
    )


def modified_jc_spectrum(params, n_doublets):
    """Exact spectrum of the modified JC model, ground level then doublets.

    Each doublet is the 2x2 block on {|+z, n-1>, |-z, n>}; the sigma_z a^+ a
    term is kept exactly since it is diagonal in that block.
    """
    if n_doublets < 1:
        raise ValueError("n_doublets must be >= 1")
    m = modified_jc(params)
    w = params.omega
    W = params.Omega + m.delta_Omega
    coupling = params.g + m.delta_g
    levels = [AnalyticLevel(GROUND, 0, -W + m.delta_E, 0.0, m.lam_weak, label_for(0, GROUND))]
    for n in range(1, n_doublets + 1):
        a = (w + m.delta_omega) * (n - 1) + W + m.delta_E
        d = (w - m.delta_omega) * n - W + m.delta_E
        b = coupling * math.sqrt(n)
        centre = 0.5 * (a + d)
        half_gap = math.hypot(0.5 * (a - d), b)
        theta, _ = rotation_angle(np.array([[a, b], [b, d]]))
        levels.append(AnalyticLevel(MINUS, n, centre - half_gap, theta, m.lam_weak, label_for(n, MINUS)))
        levels.append(AnalyticLevel(PLUS, n, centre + half_gap, theta, m.lam_weak, label_for(n, PLUS)))
    return levels

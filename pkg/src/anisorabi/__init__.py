"""Analytic and exact spectra of the anisotropic Rabi model.

The analytic route removes the counter-rotating coupling doublet by doublet
with a spin-dependent displacement; the numerical route diagonalizes the
full Hamiltonian in a truncated Fock space and serves as ground truth.
"""

__version__ = "0.1.0"

from .model import (
    LambdaSolution,
    ModelParams,
    NoRootInUnitInterval,
    coeff_G,
    coeff_R,
    solve_lambda,
)
from .analytic import (
    AnalyticLevel,
    WavefunctionExpansion,
    doublet_energies,
    ground_energy,
    mixing_angle,
    spectrum,
    wavefunction,
)
from .weak_coupling import lambda_weak, modified_jc, modified_jc_spectrum
from .observables import (
    ObservableSet,
    bloch_siegert_shift,
    excited_observables,
    ground_observables,
)
from .oracle import TruncatedSpace, build_hamiltonian, labeled_spectrum

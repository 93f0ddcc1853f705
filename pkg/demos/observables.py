"""
Photon number, inversion and polariton statistics
=================================================

In the JC model the polariton number N = a^+ a + sigma_z/2 + 1/2 is conserved
and the ground state has (Delta N)^2 = 0.  Counter-rotating terms break that
symmetry.  Closed forms are set against the same expectation values taken on
the analytic wavefunction.
"""

from anisorabi import ModelParams, ground_energy, ground_observables
from anisorabi.observables import numeric_observables

for gp in (0.0, 0.1, 0.2, 0.4):
    p = ModelParams(1.0, 0.3, 0.1, gp)
    closed = ground_observables(p)
    direct = numeric_observables(p, ground_energy(p))
    print(
        f"g' = {gp:.1f}: <n> {closed.mean_photons:.6f}/{direct.mean_photons:.6f}"
        f"  <sz> {closed.sigma_z:.6f}/{direct.sigma_z:.6f}"
        f"  <N> {closed.polariton_mean:.6f}/{direct.polariton_mean:.6f}"
        f"  (dN)^2 {closed.polariton_var:.6f}/{direct.polariton_var:.6f}"
    )

# For small lambda the mean polariton number grows like 2 lambda^2 - lambda^4.
# The closed-form variance behaves as 3 lambda^2, while the variance measured
# on the state itself grows as 4 lambda^2; the last column shows the gap.
for lam in (0.01, 0.05, 0.1):
    obs = ground_observables(None, lam=lam)
    print(f"lambda {lam}: <N>/(2 lam^2) = {obs.polariton_mean / (2 * lam**2):.4f}, "
          f"(dN)^2/(3 lam^2) = {obs.polariton_var / (3 * lam**2):.4f}")

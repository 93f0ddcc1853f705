"""
Analytic eigenstates against exact ones
=======================================

Undoing the transformation on the ground state and the doublet states gives
explicit expansions in the bare basis; their overlaps with exact eigenvectors
measure how good the states are, not just the energies.
"""

from anisorabi import ModelParams, spectrum, wavefunction
from anisorabi.oracle import TruncatedSpace, labeled_states

cutoff = 60
for g, gp in ((0.1, 0.05), (0.1, 0.2), (0.3, 0.3)):
    p = ModelParams(1.0, 0.3, g, gp)
    exact = labeled_states(p, TruncatedSpace(cutoff))
    overlaps = []
    for level in spectrum(p, 3):
        vec = wavefunction(p, level, cutoff).vector
        overlaps.append(f"{str(level.label)} {abs(vec @ exact[level.label][1]):.5f}")
    print(f"g = {g}, g' = {gp}: " + ", ".join(overlaps))

# a few amplitudes of the ground state
p = ModelParams(1.0, 0.3, 0.1, 0.2)
wf = wavefunction(p, spectrum(p, 1)[0])
for (spin, n), c in list(wf.coefficients.items())[:6]:
    print(f"<{'+' if spin > 0 else '-'}z, {n}|phi_G> = {c:+.6f}")

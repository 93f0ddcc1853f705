"""
Bloch-Siegert shift
===================

The counter-rotating terms shift the transition from the ground state to the
lower member of the first doublet away from its Jaynes-Cummings value.  The
closed form is compared with exact diagonalization.
"""

from anisorabi import ModelParams, TruncatedSpace, bloch_siegert_shift, solve_lambda
from anisorabi.sweep import numeric_bloch_siegert

space = TruncatedSpace(120)
print(f"{'g':>5} {'gp':>5} {'lambda_1':>9} {'delta analytic':>15} {'delta exact':>12}")
for g in (0.1, 0.3, 0.5):
    for gp in (0.0, 0.25, 0.5):
        p = ModelParams(1.0, 0.3, g, gp)
        lam = solve_lambda(p, 1).lam
        print(f"{g:5.2f} {gp:5.2f} {lam:9.4f} {bloch_siegert_shift(p, lam):15.6f} {numeric_bloch_siegert(p, space):12.6f}")

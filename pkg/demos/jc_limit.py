"""
Switching off the counter-rotating coupling
===========================================

With g' = 0 the displacement parameter is zero and the analytic ladder is the
Jaynes-Cummings spectrum.  Here it is compared with the closed form and with
exact diagonalization.
"""

import math

from anisorabi import ModelParams, TruncatedSpace, labeled_spectrum, solve_lambda, spectrum

p = ModelParams(omega=1.0, Omega=0.3, g=0.3, gprime=0.0)
print("lambda_1 =", solve_lambda(p, 1).lam)

# the exact solver labels states by (parity, rank inside the parity sector)
exact = dict(labeled_spectrum(p, TruncatedSpace(120), 16))

print(f"{'label':>9} {'analytic':>12} {'JC closed form':>15} {'exact':>12}")
for level in spectrum(p, 4):
    if level.n == 0:
        jc = -p.Omega
    else:
        half = math.hypot(p.Omega - 0.5 * p.omega, p.g * math.sqrt(level.n))
        jc = (level.n - 0.5) * p.omega + (half if level.kind.endswith("plus") else -half)
    print(f"{str(level.label):>9} {level.energy:12.8f} {jc:15.8f} {exact[level.label]:12.8f}")

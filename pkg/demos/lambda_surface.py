"""
The displacement parameter over the coupling plane
==================================================

lambda_1 solves a transcendental condition on [0, 1).  It vanishes on the
g' = 0 axis and, for weak g', is close to g' / (omega + 2 Omega).
"""

import numpy as np

from anisorabi import ModelParams, lambda_weak, solve_lambda

axis = np.linspace(0.0, 0.5, 6)
print("rows g, columns g'")
print("      " + " ".join(f"{gp:7.2f}" for gp in axis))
for g in axis:
    lams = [solve_lambda(ModelParams(1.0, 0.3, g, gp), 1).lam for gp in axis]
    print(f"{g:5.2f} " + " ".join(f"{x:7.4f}" for x in lams))

p = ModelParams(1.0, 0.3, 0.1, 0.1)
sol = solve_lambda(p, 1)
print(f"\nlambda_1(0.1, 0.1) = {sol.lam:.6f}, residual {sol.residual:.1e}, weak limit {lambda_weak(p):.6f}")

"""
Weak counter-rotating coupling as a modified JC model
=====================================================

For small g' the counter-rotating terms act as shifts of omega, Omega, g and
the energy origin.  Halving g' cuts the error of this picture by about four,
the signature of a second-order correction.
"""

from anisorabi import ModelParams, TruncatedSpace, labeled_spectrum, modified_jc, modified_jc_spectrum

p = ModelParams(1.0, 0.3, 0.1, 0.05)
m = modified_jc(p)
print(f"d_omega = {m.delta_omega}, d_Omega = {m.delta_Omega}, d_g = {m.delta_g}, d_E = {m.delta_E}")

space = TruncatedSpace(120)
previous = None
for gp in (0.08, 0.04, 0.02, 0.01):
    p = ModelParams(1.0, 0.3, 0.1, gp)
    exact = dict(labeled_spectrum(p, space, 5))
    err = max(abs(lv.energy - exact[lv.label]) for lv in modified_jc_spectrum(p, 2))
    ratio = "" if previous is None else f"  ratio {previous / err:.2f}"
    print(f"g' = {gp:.2f}: max error over 5 levels {err:.3e}{ratio}")
    previous = err

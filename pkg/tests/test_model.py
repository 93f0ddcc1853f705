import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from anisorabi.model import (
    ModelParams,
    NoRootInUnitInterval,
    coeff_G,
    coeff_R,
    lambda_condition,
    solve_lambda,
)
from anisorabi.special_functions import displacement_matrix

from conftest import expm_displacement, ladder_generator

# lambda_1 and E_G from an independent 30-digit bisection on the n = 1
# condition (all Laguerre factors equal 1 there)
LAMBDA1_G01_GP01 = 0.062684003503862122
LAMBDA1_G01_GP02 = 0.12360220797148035


def brute_force_coeffs(params, lam, n, dim=90, use_expm=True):
    """G_n and R_n from the operator definitions with truncated matrices."""
    X = ladder_generator(dim)
    if use_expm:
        Dp, Dm = expm_displacement(2 * lam, dim), expm_displacement(-2 * lam, dim)
    else:
        Dp, Dm = displacement_matrix(2 * lam, dim), displacement_matrix(-2 * lam, dim)
    C = 0.5 * (Dp + Dm)
    S = 0.5 * (Dp - Dm)
    G = params.Omega * C[n, n] - params.g2 * (X @ S)[n, n]
    R = None
    if n >= 1:
        R = params.Omega * S[n, n - 1] - params.g2 * (X @ C)[n, n - 1]
    return G, R


def test_params_derived_couplings():
    p = ModelParams(1.0, 0.3, 0.1, 0.2)
    assert p.g1 == pytest.approx(0.15)
    assert p.g2 == pytest.approx(0.05)


@settings(max_examples=100)
@given(g=st.floats(0, 10), gp=st.floats(0, 10))
def test_params_coupling_identities(g, gp):
    p = ModelParams(1.0, 0.3, g, gp)
    # exact in real arithmetic; one rounding per operation in floating point
    assert abs((p.g1 - p.g2) - g) <= 4 * np.spacing(max(g, gp, 1e-300))
    assert abs((p.g1 + p.g2) - gp) <= 4 * np.spacing(max(g, gp, 1e-300))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(omega=0.0, Omega=0.3, g=0.1, gprime=0.1),
        dict(omega=1.0, Omega=-0.1, g=0.1, gprime=0.1),
        dict(omega=1.0, Omega=0.3, g=-0.1, gprime=0.1),
        dict(omega=1.0, Omega=0.3, g=0.1, gprime=float("nan")),
    ],
)
def test_params_validation(kwargs):
    with pytest.raises(ValueError):
        ModelParams(**kwargs)


def test_coeff_R_trivial(plane_params):
    p = plane_params(0.1, 0.1)
    assert coeff_R(p, 0.1, 1) == pytest.approx(0.6 * 0.1 * math.exp(-0.02), rel=1e-14)
    assert coeff_R(p, 0.1, 1) == pytest.approx(0.058812, abs=1e-6)
    q = plane_params(0.37, 0.0)
    assert coeff_R(q, 0.0, 4) == pytest.approx(0.37, rel=1e-15)


def test_coeff_R_derived(plane_params):
    p = plane_params(0.1, 0.2)
    _, ref = brute_force_coeffs(p, 0.1236, 1)
    assert ref == pytest.approx(0.0263964300493175, abs=1e-13)
    assert coeff_R(p, 0.1236, 1) == pytest.approx(0.0263964300493175, abs=1e-13)


def test_coeff_G_trivial(plane_params):
    p = plane_params(0.2, 0.45)
    assert coeff_G(p, 0.0, 7) == pytest.approx(0.3, rel=1e-15)
    q = plane_params(0.1, 0.1)
    assert coeff_G(q, 0.2, 1) == pytest.approx(0.3 * math.exp(-0.08) * 0.84, rel=1e-14)
    assert coeff_G(q, 0.2, 1) == pytest.approx(0.232625, abs=1e-6)


def test_coeff_G_n0_derived(plane_params):
    # the closed n = 0 branch agrees with the operator definition
    p = plane_params(0.1, 0.2)
    ref, _ = brute_force_coeffs(p, 0.1236, 0)
    assert ref == pytest.approx(0.30296050448969525, abs=1e-13)
    assert coeff_G(p, 0.1236, 0) == pytest.approx(ref, abs=1e-13)


@pytest.mark.parametrize("n", range(0, 11))
@pytest.mark.parametrize("lam", [0.0, 0.05, 0.3, 0.8])
@pytest.mark.parametrize("use_expm", [True, False])
def test_coeffs_match_operator_definitions(plane_params, n, lam, use_expm):
    p = plane_params(0.17, 0.43)
    G_ref, R_ref = brute_force_coeffs(p, lam, n, use_expm=use_expm)
    assert coeff_G(p, lam, n) == pytest.approx(G_ref, abs=1e-10)
    if n >= 1:
        assert coeff_R(p, lam, n) == pytest.approx(R_ref, abs=1e-10)


def test_coeff_R_rejects_n0(plane_params):
    with pytest.raises(ValueError):
        coeff_R(plane_params(0.1, 0.1), 0.1, 0)


def test_solve_lambda_jc_limit(plane_params):
    for g in (0.0, 0.1, 0.3, 0.5):
        for n in range(1, 9):
            sol = solve_lambda(plane_params(g, 0.0), n)
            assert sol.lam == 0.0
            assert sol.residual == 0.0


@pytest.mark.parametrize(
    "g, gp, expected",
    [(0.1, 0.1, LAMBDA1_G01_GP01), (0.1, 0.2, LAMBDA1_G01_GP02)],
)
def test_solve_lambda_derived(plane_params, g, gp, expected):
    sol = solve_lambda(plane_params(g, gp), 1)
    assert sol.lam == pytest.approx(expected, abs=1e-13)
    assert abs(sol.residual) <= 1e-12 * max(1.0, plane_params(g, gp).g1)
    assert sol.n == 1


def test_solve_lambda_explicit_condition(plane_params):
    # n = 1 condition written out by hand
    lam = solve_lambda(plane_params(0.1, 0.1), 1).lam
    assert 0.1 - lam - 0.6 * lam * math.exp(-2 * lam * lam) == pytest.approx(0.0, abs=1e-14)
    lam = solve_lambda(plane_params(0.1, 0.2), 1).lam
    e = math.exp(-2 * lam * lam)
    assert 0.15 - lam - e * (0.6 * lam - 0.05 + 0.2 * lam * lam) == pytest.approx(0.0, abs=1e-14)


def test_solve_lambda_no_root():
    with pytest.raises(NoRootInUnitInterval):
        solve_lambda(ModelParams(1.0, 0.3, 1.0, 4.0), 1)


def test_solve_lambda_residual_and_sign_on_grid(plane_params):
    for g in np.linspace(0, 0.5, 6):
        for gp in np.linspace(0, 0.5, 6):
            p = plane_params(g, gp)
            for n in (1, 2, 5):
                sol = solve_lambda(p, n)
                assert sol.lam >= 0.0
                assert abs(sol.residual) <= 1e-12 * max(1.0, abs(p.g1))
                assert lambda_condition(p, sol.lam, n) == sol.residual


def test_lambda_continuous_in_gprime(plane_params):
    for n in (1, 3):
        for gp in np.linspace(0, 0.5, 26):
            a = solve_lambda(plane_params(0.2, gp), n).lam
            b = solve_lambda(plane_params(0.2, gp + 1e-6), n).lam
            assert abs(a - b) <= 1e-4


def _lambda_spread(params, n_top=7):
    lams = [solve_lambda(params, n).lam for n in range(1, n_top + 1)]
    worst = 0.0
    for n in range(n_top - 1):
        if 0 < lams[n] <= 0.5 and lams[n + 1] <= 0.5:
            worst = max(worst, abs(lams[n + 1] - lams[n]) / lams[n])
    return worst


@pytest.mark.parametrize("ratio", [2.0, 0.5])
def test_lambda_spread_small_weak_coupling(plane_params, ratio):
    # neighbouring doublets share nearly the same lambda at moderate coupling
    worst = max(_lambda_spread(plane_params(g, ratio * g)) for g in np.linspace(0.005, 0.2, 40))
    print(f"max |lambda_(n+1) - lambda_n| / lambda_n, g <= 0.2, g'={ratio}g: {worst:.4f}")
    assert worst <= 0.2


@pytest.mark.xfail(strict=True, reason="spread reaches ~0.43 (g'=2g) and ~0.81 (g'=g/2) near g=0.5")
@pytest.mark.parametrize("ratio", [2.0, 0.5])
def test_lambda_spread_full_plane_cut(plane_params, ratio):
    worst = max(
        _lambda_spread(plane_params(g, ratio * g)) for g in np.linspace(0.005, 0.5, 100)
    )
    print(f"max lambda spread on the full grid, g'={ratio}g: {worst:.4f}")
    assert worst <= 0.2

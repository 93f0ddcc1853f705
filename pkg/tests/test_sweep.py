import csv
import io
import math

import numpy as np
import pytest

from anisorabi.sweep import (
    ConfigError,
    SweepConfig,
    format_value,
    run_bloch_siegert_surface,
    run_compare,
    run_lambda_surface,
    run_observables,
    run_spectrum_sweep,
)


def parse(result):
    text = result.to_csv()
    header = [line for line in text.splitlines() if line.startswith("#")]
    body = [line for line in text.splitlines() if not line.startswith("#")]
    rows = list(csv.DictReader(io.StringIO("\n".join(body))))
    return header, rows


def small(**kw):
    base = dict(g_min=0.0, g_max=0.2, g_steps=5, n_max=60)
    base.update(kw)
    return SweepConfig(**base)


def test_format_value():
    assert format_value(None) == ""
    assert format_value(True) == "true"
    assert format_value(np.int64(3)) == "3"
    assert format_value(0.1) == "0.10000000000000001"
    assert float(format_value(math.pi)) == math.pi
    assert format_value("ok") == "ok"


@pytest.mark.parametrize(
    "kw",
    [
        dict(),  # no g' rule
        dict(gprime_ratio=1.0, gprime=0.1),
        dict(gprime_ratio=-1.0),
        dict(gprime=0.1, g_steps=1),
        dict(gprime=0.1, g_min=0.3, g_max=0.2),
        dict(gprime=0.1, method="exact"),
        dict(gprime=0.1, n_levels=0),
        dict(gprime=0.1, n_levels=40, n_max=60),
        dict(gprime=0.1, omega=0.0),
        dict(gprime_min=0.0, gprime_max=0.5),
    ],
)
def test_config_validation(kw):
    with pytest.raises(ConfigError):
        small(**kw).validate()


def test_config_unknown_key():
    with pytest.raises(ConfigError):
        SweepConfig.from_mapping({"gamma": 1.0})


def test_grid_shapes():
    assert len(small(gprime_ratio=2.0).grid()) == 5
    cfg = small(gprime_min=0.0, gprime_max=0.1, gprime_steps=3)
    pts = cfg.grid()
    assert len(pts) == 15
    assert pts[:3] == [(0.0, 0.0), (0.0, 0.05), (0.0, 0.1)]


def test_spectrum_sweep_deterministic():
    a = run_spectrum_sweep(small(gprime_ratio=2.0)).to_csv()
    b = run_spectrum_sweep(small(gprime_ratio=2.0)).to_csv()
    assert a == b
    assert "# gprime_ratio = 2.0" in a
    assert "# anisorabi " in a.splitlines()[0]


def test_spectrum_sweep_rows_ordered():
    _, rows = parse(run_spectrum_sweep(small(gprime_ratio=0.5)))
    keys = [(float(r["g"]), float(r["gprime"]), int(r["label_n0"]), int(r["label_n1"])) for r in rows]
    assert keys == sorted(keys)
    assert len(rows) == 5 * 7


def test_spectrum_sweep_jc_exact():
    _, rows = parse(run_spectrum_sweep(small(gprime=0.0, g_max=0.5, n_max=80)))
    assert max(float(r["abs_error"]) for r in rows) <= 1e-8


def test_spectrum_sweep_analytic_only():
    res = run_spectrum_sweep(small(gprime_ratio=2.0, method="analytic", n_levels=5))
    _, rows = parse(res)
    assert {r["E_numeric"] for r in rows} == {""}
    assert {(r["label_n0"], r["label_n1"]) for r in rows} == {
        ("-1", "0"), ("1", "0"), ("1", "1"), ("-1", "1"), ("-1", "2")
    }


def test_spectrum_sweep_no_root_rows():
    res = run_spectrum_sweep(SweepConfig(g_min=2.0, g_max=3.0, g_steps=2, gprime_ratio=1.0, method="analytic", n_levels=3))
    _, rows = parse(res)
    assert {r["status"] for r in rows} == {"no_root"}
    assert {r["E_analytic"] for r in rows} == {""}
    assert res.all_points_failed


def test_spectrum_sweep_rejects_axis():
    with pytest.raises(ConfigError):
        run_spectrum_sweep(small(gprime_min=0.0, gprime_max=0.1, gprime_steps=2))


def test_lambda_surface_values():
    cfg = SweepConfig(g_min=0.0, g_max=0.1, g_steps=3, gprime_min=0.0, gprime_max=0.2, gprime_steps=3)
    header, rows = parse(run_lambda_surface(cfg))
    assert any("no numeric range is given" in line for line in header)
    lam = {(float(r["g"]), float(r["gprime"])): float(r["lambda1"]) for r in rows}
    assert lam[(0.1, 0.1)] == pytest.approx(0.0627, abs=1e-4)
    for g in (0.0, 0.05, 0.1):
        assert lam[(g, 0.0)] == 0.0
        assert lam[(g, 0.0)] <= lam[(g, 0.1)] <= lam[(g, 0.2)]
    assert all(abs(float(r["residual"])) <= 1e-12 for r in rows)
    assert {r["in_regime"] for r in rows} == {"true"}


def test_lambda_surface_needs_axis():
    with pytest.raises(ConfigError):
        run_lambda_surface(small(gprime_ratio=1.0))


def test_bloch_siegert_surface():
    cfg = SweepConfig(g_min=0.0, g_max=0.2, g_steps=3, gprime_min=0.0, gprime_max=0.2, gprime_steps=3, n_max=60)
    _, rows = parse(run_bloch_siegert_surface(cfg))
    for r in rows:
        if float(r["gprime"]) == 0.0:
            assert float(r["abs_delta_analytic"]) <= 1e-15
            assert float(r["abs_delta_numeric"]) <= 1e-10
        assert float(r["abs_error"]) <= 2e-2


def test_observables_sweep():
    _, rows = parse(run_observables(small(gprime_ratio=1.0)))
    for r in rows:
        lam = float(r["lambda1"])
        assert float(r["mean_photons_G"]) == pytest.approx(lam * lam, abs=1e-15)
        assert float(r["sigma_z_G"]) == pytest.approx(-math.exp(-2 * lam * lam), abs=1e-15)
        # analytic ground state close to the exact one at these couplings
        assert float(r["mean_photons_G_numeric"]) == pytest.approx(lam * lam, abs=2e-3)


def test_compare_summary():
    _, rows = parse(run_compare(small(gprime_ratio=2.0)))
    assert len(rows) == 5
    assert float(rows[0]["max_abs_error"]) <= 1e-12
    assert all(float(r["max_abs_error"]) <= 2e-2 for r in rows)
    assert all(r["status"] == "ok" for r in rows)


def test_compare_requires_both():
    with pytest.raises(ConfigError):
        run_compare(small(gprime_ratio=2.0, method="analytic"))

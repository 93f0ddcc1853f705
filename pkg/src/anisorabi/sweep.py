"""Parameter sweeps written as CSV datasets.

Each grid point is evaluated independently; a point where the lambda
condition has no root yields rows with the analytic columns empty and
``status = no_root`` instead of aborting the sweep.
"""

from dataclasses import dataclass, field, fields, asdict
import csv
import io

import numpy as np

from . import __version__
from .analytic import MINUS, PLUS, ground_energy, label_for, rank_labels, spectrum
from .model import ModelParams, NoRootInUnitInterval, solve_lambda
from .observables import bloch_siegert_shift, ground_observables, jc_transition, numeric_observables
from .oracle import TruncatedSpace, labeled_spectrum, labeled_states, expectation

__all__ = [
    "ConfigError",
    "SweepConfig",
    "SweepResult",
    "run_spectrum_sweep",
    "run_lambda_surface",
    "run_bloch_siegert_surface",
    "run_observables",
    "run_compare",
    "format_value",
]

METHODS = ("analytic", "numeric", "both")
#: lambda_1 above which the elimination is no longer trusted (surface flag)
LAMBDA_REGIME = 0.5
#: lambda_1 bound used for the Bloch-Siegert comparison flag
LAMBDA_REGIME_BS = 0.6


class ConfigError(ValueError):
    pass


@dataclass
class SweepConfig:
    """Sweep geometry and solver settings.

    Exactly one g' rule may be set: ``gprime_ratio`` (g' = r g), ``gprime``
    (fixed value) or the independent axis ``gprime_min/gprime_max/gprime_steps``.
    """

    omega: float = 1.0
    Omega: float = 0.3
    g_min: float = 0.0
    g_max: float = 0.5
    g_steps: int = 101
    gprime_ratio: float | None = None
    gprime: float | None = None
    gprime_min: float | None = None
    gprime_max: float | None = None
    gprime_steps: int | None = None
    n_levels: int = 7
    n_max: int = 120
    method: str = "both"
    out: str | None = None

    @classmethod
    def from_mapping(cls, mapping):
        known = {f.name for f in fields(cls)}
        unknown = set(mapping) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**mapping)

    @property
    def gprime_rule(self):
        rules = []
        if self.gprime_ratio is not None:
            rules.append("ratio")
        if self.gprime is not None:
            rules.append("fixed")
        axis = (self.gprime_min, self.gprime_max, self.gprime_steps)
        if any(v is not None for v in axis):
            rules.append("axis")
        if len(rules) != 1:
            raise ConfigError(
                "exactly one g' rule required (ratio, fixed value or axis), got "
                + (", ".join(rules) or "none")
            )
        return rules[0]

    def validate(self):
        try:
            ModelParams(self.omega, self.Omega, 0.0, 0.0)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        _check_axis("g", self.g_min, self.g_max, self.g_steps)
        rule = self.gprime_rule
        if rule == "axis":
            if None in (self.gprime_min, self.gprime_max, self.gprime_steps):
                raise ConfigError("g' axis needs gprime_min, gprime_max and gprime_steps")
            _check_axis("gprime", self.gprime_min, self.gprime_max, self.gprime_steps)
        elif rule == "ratio" and self.gprime_ratio < 0:
            raise ConfigError("gprime_ratio must be >= 0")
        elif rule == "fixed" and self.gprime < 0:
            raise ConfigError("gprime must be >= 0")
        if int(self.n_levels) != self.n_levels or self.n_levels < 1:
            raise ConfigError("n_levels must be a positive integer")
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ConfigError("n_max must be a positive integer")
        if self.n_levels > (2 * (self.n_max + 1)) // 4:
            raise ConfigError("n_levels must not exceed (n_max + 1) / 2")
        if self.method not in METHODS:
            raise ConfigError(f"method must be one of {METHODS}")
        return self

    def g_axis(self):
        return np.linspace(self.g_min, self.g_max, int(self.g_steps))

    def grid(self):
        """Grid points (g, g') in row order."""
        rule = self.gprime_rule
        gs = self.g_axis()
        if rule == "ratio":
            return [(g, self.gprime_ratio * g) for g in gs]
        if rule == "fixed":
            return [(g, self.gprime) for g in gs]
        gps = np.linspace(self.gprime_min, self.gprime_max, int(self.gprime_steps))
        return [(g, gp) for g in gs for gp in gps]

    def params(self, g, gprime):
        return ModelParams(self.omega, self.Omega, g, gprime)

    @property
    def wants_analytic(self):
        return self.method in ("analytic", "both")

    @property
    def wants_numeric(self):
        return self.method in ("numeric", "both")


def _check_axis(name, lo, hi, steps):
    if int(steps) != steps or steps < 2:
        raise ConfigError(f"{name} axis needs at least 2 steps")
    if not hi > lo:
        raise ConfigError(f"{name} axis range is degenerate ({lo}, {hi})")
    if lo < 0:
        raise ConfigError(f"{name} axis must be nonnegative")


def format_value(value):
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


@dataclass
class SweepResult:
    kind: str
    config: SweepConfig
    columns: list
    rows: list = field(default_factory=list)
    n_points: int = 0
    n_regime_failures: int = 0
    notes: list = field(default_factory=list)

    @property
    def all_points_failed(self):
        return self.n_points > 0 and self.n_regime_failures == self.n_points

    def header_lines(self):
        lines = [f"# anisorabi {__version__} {self.kind}"]
        for key, value in asdict(self.config).items():
            if key == "out":
                continue
            lines.append(f"# {key} = {'' if value is None else value}")
        lines.extend(f"# note: {note}" for note in self.notes)
        return lines

    def write(self, stream):
        for line in self.header_lines():
            stream.write(line + "\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_value(v) for v in row])

    def to_csv(self):
        buf = io.StringIO()
        self.write(buf)
        return buf.getvalue()


_AXIS_NOTE = "g and gprime ranges default to [0, 0.5] (assumed; no numeric range is given for the surfaces)"


#: doublets solved beyond n_levels so that energy ranks of the requested
#: levels are not disturbed by higher doublets dipping below them
EXTRA_DOUBLETS = 4


def _analytic_ranked(params, n_levels):
    """Analytic energies keyed by (parity, energy rank within parity)."""
    levels = rank_labels(spectrum(params, n_levels + EXTRA_DOUBLETS))
    return {lv.label: lv.energy for lv in levels}


def _analytic_ladder(n_levels):
    labels = [(-1, 0)]
    n = 1
    while len(labels) < n_levels:
        labels.extend([label_for(n, MINUS), label_for(n, PLUS)])
        n += 1
    return labels[:n_levels]


def run_spectrum_sweep(config):
    """Lowest levels along g with g' = r g (or fixed g').

    Levels are the `n_levels` lowest oracle states when the numeric method is
    requested, otherwise the `n_levels` lowest analytic levels.  Both sides
    are labelled by (parity, energy rank within parity) and paired by label.
    """
    config.validate()
    if config.gprime_rule == "axis":
        raise ConfigError("spectrum sweep needs a g' ratio or fixed value")
    space = TruncatedSpace(config.n_max)
    result = SweepResult(
        "spectrum",
        config,
        ["g", "gprime", "label_n0", "label_n1", "E_analytic", "E_numeric", "abs_error", "status"],
    )
    for g, gp in config.grid():
        params = config.params(g, gp)
        result.n_points += 1
        analytic = {}
        status = "ok"
        if config.wants_analytic:
            try:
                analytic = _analytic_ranked(params, config.n_levels)
            except NoRootInUnitInterval:
                status = "no_root"
                result.n_regime_failures += 1
        if config.wants_numeric:
            numeric = dict(labeled_spectrum(params, space, config.n_levels))
            labels = sorted(numeric)
        else:
            numeric = {}
            # dicts from _analytic_ranked are in ascending energy
            lowest = list(analytic)[: config.n_levels] or _analytic_ladder(config.n_levels)
            labels = sorted(lowest)
        for label in labels:
            e_a = analytic.get(label)
            e_n = numeric.get(label)
            err = abs(e_a - e_n) if e_a is not None and e_n is not None else None
            result.rows.append((g, gp, label[0], label[1], e_a, e_n, err, status))
    return result


def _require_axis(config, what):
    config.validate()
    if config.gprime_rule != "axis":
        raise ConfigError(f"{what} needs an independent g' axis")


def run_lambda_surface(config):
    """lambda_1 over the (g, g') plane."""
    _require_axis(config, "lambda surface")
    result = SweepResult(
        "lambda-surface",
        config,
        ["g", "gprime", "lambda1", "residual", "in_regime", "status"],
        notes=[_AXIS_NOTE, f"in_regime means lambda1 <= {LAMBDA_REGIME}"],
    )
    for g, gp in config.grid():
        result.n_points += 1
        try:
            sol = solve_lambda(config.params(g, gp), 1)
        except NoRootInUnitInterval:
            result.n_regime_failures += 1
            result.rows.append((g, gp, None, None, False, "no_root"))
            continue
        result.rows.append((g, gp, sol.lam, sol.residual, sol.lam <= LAMBDA_REGIME, "ok"))
    return result


def numeric_bloch_siegert(params, space):
    """Oracle E_{1-} - E_G, labels (+1, 0) and (-1, 0), minus its JC value."""
    levels = dict(labeled_spectrum(params, space, 4))
    return (levels[(1, 0)] - levels[(-1, 0)]) - jc_transition(params)


def run_bloch_siegert_surface(config):
    """|delta| for the E_{1-} -> E_G transition over the (g, g') plane."""
    _require_axis(config, "Bloch-Siegert surface")
    space = TruncatedSpace(config.n_max)
    result = SweepResult(
        "bloch-siegert",
        config,
        ["g", "gprime", "lambda1", "abs_delta_analytic", "abs_delta_numeric", "abs_error", "in_regime", "status"],
        notes=[_AXIS_NOTE, f"in_regime means lambda1 <= {LAMBDA_REGIME_BS}"],
    )
    for g, gp in config.grid():
        params = config.params(g, gp)
        result.n_points += 1
        lam = d_a = None
        status = "ok"
        if config.wants_analytic:
            try:
                lam = solve_lambda(params, 1).lam
                d_a = abs(bloch_siegert_shift(params, lam))
            except NoRootInUnitInterval:
                status = "no_root"
                result.n_regime_failures += 1
        d_n = abs(numeric_bloch_siegert(params, space)) if config.wants_numeric else None
        err = abs(d_a - d_n) if d_a is not None and d_n is not None else None
        in_regime = lam is not None and lam <= LAMBDA_REGIME_BS
        result.rows.append((g, gp, lam, d_a, d_n, err, in_regime, status))
    return result


_OBS_COLUMNS = ["mean_photons_G", "sigma_z_G", "polariton_mean_G", "polariton_var_G"]


def run_observables(config):
    """Ground-state observables: closed forms, the same quantities on the
    analytic wavefunction, and the oracle ground state."""
    config.validate()
    space = TruncatedSpace(config.n_max)
    columns = ["g", "gprime", "lambda1"] + _OBS_COLUMNS + ["polariton_var_G_expansion"]
    columns += [c + "_numeric" for c in _OBS_COLUMNS] + ["status"]
    result = SweepResult("observables", config, columns)
    for g, gp in config.grid():
        params = config.params(g, gp)
        result.n_points += 1
        analytic = [None] * 6
        status = "ok"
        if config.wants_analytic:
            try:
                lam = solve_lambda(params, 1).lam
                obs = ground_observables(params, lam)
                expanded = numeric_observables(params, ground_energy(params, lam))
                analytic = [lam, obs.mean_photons, obs.sigma_z, obs.polariton_mean,
                            obs.polariton_var, expanded.polariton_var]
            except NoRootInUnitInterval:
                status = "no_root"
                result.n_regime_failures += 1
        numeric = [None] * 4
        if config.wants_numeric:
            _, vec = labeled_states_ground(params, space)
            mean_n = expectation(vec, "polariton-number")
            numeric = [
                expectation(vec, "photon-number"),
                expectation(vec, "sigma-z"),
                mean_n,
                expectation(vec, "polariton-number-squared") - mean_n * mean_n,
            ]
        result.rows.append((g, gp, *analytic, *numeric, status))
    return result


def labeled_states_ground(params, space):
    """Oracle ground state (label (-1, 0)): energy and normalized vector."""
    energy, vec = labeled_states(params, space)[(-1, 0)]
    return energy, vec / np.sqrt(vec @ vec)


def run_compare(config):
    """Per-point summary of analytic vs oracle agreement."""
    config.validate()
    if config.method != "both":
        raise ConfigError("compare needs method 'both'")
    space = TruncatedSpace(config.n_max)
    result = SweepResult(
        "compare",
        config,
        ["g", "gprime", "lambda1", "max_abs_error", "worst_n0", "worst_n1",
         "delta_analytic", "delta_numeric", "delta_abs_error", "status"],
    )
    for g, gp in config.grid():
        params = config.params(g, gp)
        result.n_points += 1
        numeric = dict(labeled_spectrum(params, space, config.n_levels))
        if (1, 0) in numeric:
            delta_n = (numeric[(1, 0)] - numeric[(-1, 0)]) - jc_transition(params)
        else:
            delta_n = numeric_bloch_siegert(params, space)
        worst = (None, (None, None))
        status = "ok"
        lam = delta_a = None
        try:
            analytic = _analytic_ranked(params, config.n_levels)
            for label in sorted(numeric):
                err = abs(analytic[label] - numeric[label])
                if worst[0] is None or err > worst[0]:
                    worst = (err, label)
            lam = solve_lambda(params, 1).lam
            delta_a = bloch_siegert_shift(params, lam)
        except NoRootInUnitInterval:
            status = "no_root"
            result.n_regime_failures += 1
            worst = (None, (None, None))
        d_err = abs(delta_a - delta_n) if delta_a is not None else None
        result.rows.append((g, gp, lam, worst[0], worst[1][0], worst[1][1], delta_a, delta_n, d_err, status))
    return result


RUNNERS = {
    "spectrum": run_spectrum_sweep,
    "lambda-surface": run_lambda_surface,
    "bloch-siegert": run_bloch_siegert_surface,
    "observables": run_observables,
    "compare": run_compare,
}

"""Command line front end for the sweeps.

Exit codes: 0 success, 2 invalid configuration, 3 no grid point inside the
analytic regime, 4 I/O error.
"""

import argparse
import json
import logging
import sys

from . import __version__
from .sweep import RUNNERS, ConfigError, SweepConfig

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_REGIME = 3
EXIT_IO = 4

log = logging.getLogger("anisorabi")

# flag dest -> SweepConfig field
_FLAG_FIELDS = {
    "omega": "omega",
    "big_omega": "Omega",
    "g_min": "g_min",
    "g_max": "g_max",
    "g_steps": "g_steps",
    "gprime_ratio": "gprime_ratio",
    "gprime": "gprime",
    "gprime_min": "gprime_min",
    "gprime_max": "gprime_max",
    "gprime_steps": "gprime_steps",
    "levels": "n_levels",
    "n_max": "n_max",
    "method": "method",
    "out": "out",
}
_GPRIME_FIELDS = ("gprime_ratio", "gprime", "gprime_min", "gprime_max", "gprime_steps")

# g' rule used when neither the config file nor the flags set one
_DEFAULT_GPRIME = {
    "spectrum": {"gprime_ratio": 2.0},
    "observables": {"gprime_ratio": 2.0},
    "compare": {"gprime_ratio": 2.0},
    "lambda-surface": {"gprime_min": 0.0, "gprime_max": 0.5, "gprime_steps": 101},
    "bloch-siegert": {"gprime_min": 0.0, "gprime_max": 0.5, "gprime_steps": 101},
}
_ALLOWED_RULES = {
    "spectrum": ("ratio", "fixed"),
    "lambda-surface": ("axis",),
    "bloch-siegert": ("axis",),
}


def _add_common(p):
    p.add_argument("--config", help="JSON file with config values; flags take precedence")
    p.add_argument("--omega", type=float, help="field frequency (default 1)")
    p.add_argument("--big-omega", type=float, help="half the atomic splitting (default 0.3)")
    p.add_argument("--g-min", type=float)
    p.add_argument("--g-max", type=float)
    p.add_argument("--g-steps", type=int)
    p.add_argument("--gprime-ratio", type=float, help="g' = ratio * g")
    p.add_argument("--gprime", type=float, help="fixed g'")
    p.add_argument("--gprime-min", type=float)
    p.add_argument("--gprime-max", type=float)
    p.add_argument("--gprime-steps", type=int)
    p.add_argument("--levels", type=int, help="number of levels (default 7)")
    p.add_argument("--n-max", type=int, help="Fock cutoff of the oracle (default 120)")
    p.add_argument("--method", choices=("analytic", "numeric", "both"))
    p.add_argument("--out", help="output CSV path (default stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="anisorabi",
        description="Anisotropic Rabi model sweeps: analytic approximation vs exact diagonalization.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "spectrum": "lowest levels along g (g' = r g or fixed)",
        "lambda-surface": "lambda_1 over the (g, g') plane",
        "bloch-siegert": "Bloch-Siegert shift over the (g, g') plane",
        "observables": "ground-state observables",
        "compare": "per-point analytic vs oracle error summary",
    }
    for name, text in helps.items():
        _add_common(sub.add_parser(name, help=text, description=text))
    return parser


def resolve_config(args):
    """Merge defaults, the JSON file and explicit flags into a SweepConfig."""
    values = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"cannot parse {args.config}: {exc}") from None
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        # accept flag spellings as well as field names
        for key, value in loaded.items():
            key = key.replace("-", "_")
            values[_FLAG_FIELDS.get(key, key)] = value
    flags = {
        _FLAG_FIELDS[dest]: getattr(args, dest)
        for dest in _FLAG_FIELDS
        if getattr(args, dest) is not None
    }
    if any(k in flags for k in _GPRIME_FIELDS):
        for k in _GPRIME_FIELDS:
            values.pop(k, None)
    values.update(flags)
    defaults = _DEFAULT_GPRIME[args.command]
    if not any(values.get(k) is not None for k in _GPRIME_FIELDS):
        values.update(defaults)
    elif "gprime_steps" in defaults and values.get("gprime_ratio") is None and values.get("gprime") is None:
        # partial axis: fill the missing ends from the default axis
        for k, v in defaults.items():
            if values.get(k) is None:
                values[k] = v
    try:
        config = SweepConfig.from_mapping(values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None
    config.validate()
    allowed = _ALLOWED_RULES.get(args.command)
    if allowed and config.gprime_rule not in allowed:
        raise ConfigError(f"{args.command} needs a g' rule among {allowed}, got {config.gprime_rule}")
    return config


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = resolve_config(args)
    except ConfigError as exc:
        log.error("invalid configuration: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        log.error("cannot read config: %s", exc)
        return EXIT_IO

    try:
        stream = open(config.out, "w", encoding="utf-8", newline="") if config.out else sys.stdout
    except OSError as exc:
        log.error("cannot open output: %s", exc)
        return EXIT_IO
    try:
        result = RUNNERS[args.command](config)
        result.write(stream)
    except ConfigError as exc:
        log.error("invalid configuration: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        log.error("cannot write output: %s", exc)
        return EXIT_IO
    finally:
        if stream is not sys.stdout:
            stream.close()

    log.info("%d grid points, %d outside the analytic regime", result.n_points, result.n_regime_failures)
    if result.all_points_failed:
        log.error("no grid point admits a root of the lambda condition")
        return EXIT_REGIME
    return EXIT_OK

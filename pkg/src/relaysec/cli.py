"""Command line front end: analytic, simulate, and sweep subcommands.

Values resolve in three layers: built-in defaults, then a --config file of
"key = value" lines mirroring SweepSpec field names, then explicit flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .model import FigureParams
from .selection import Scheme
from .sweep import ALL_SCHEMES, SWEEP_VARIABLES, SweepSpec, emit, run_point, run_sweep

_EPILOG = """examples:
  relaysec analytic --mer-db 5 --relays 2
  relaysec simulate --mer-db 5 --relays 4 --trials 200000 --seed 7 --scheme proposed
  relaysec sweep --var mer_db --from 0 --to 20 --step 1 --relays 2 --format json
  relaysec sweep --var relay_count --from 1 --to 8 --step 1 --mer-db 5 --out fig.csv
"""


def _parse_scheme_list(text: str) -> tuple[Scheme, ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            out.append(Scheme(part))
        except ValueError:
            allowed = ", ".join(s.value for s in Scheme)
            raise ValueError(f"unknown scheme {part!r}; choose from {allowed}") from None
    if not out:
        raise ValueError("scheme list is empty")
    return tuple(out)


def _parse_variable(text: str) -> str:
    if text not in SWEEP_VARIABLES:
        raise ValueError(f"variable must be one of {SWEEP_VARIABLES}, got {text!r}")
    return text


# Config keys mirror SweepSpec field names; values parse per this table.
_CONFIG_TYPES = {
    "variable": _parse_variable,
    "start": float,
    "stop": float,
    "step": float,
    "mer_db": float,
    "alpha_si": float,
    "alpha_id": float,
    "alpha_ie": float,
    "relay_count": int,
    "power": float,
    "noise_var": float,
    "schemes": _parse_scheme_list,
    "trials": int,
    "seed": int,
    "confidence_level": float,
}


def parse_config(path: str | Path) -> dict:
    """Read a plain key = value config file keyed by SweepSpec field names."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        if key not in _CONFIG_TYPES:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = _CONFIG_TYPES[key](value)
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return out


def _add_common_args(p: argparse.ArgumentParser, with_trials: bool) -> None:
    p.add_argument("--mer-db", dest="mer_db", type=float, help="main-to-eavesdropper ratio in dB")
    p.add_argument("--alpha-si", dest="alpha_si", type=float, help="relay main-link gain vs sigma2_sd")
    p.add_argument("--alpha-id", dest="alpha_id", type=float)
    p.add_argument("--alpha-ie", dest="alpha_ie", type=float, help="relay eavesdropper gain vs sigma2_se")
    p.add_argument("--relays", dest="relay_count", type=int, help="number of relays M")
    p.add_argument("--power", dest="power", type=float)
    p.add_argument("--noise-var", dest="noise_var", type=float)
    p.add_argument(
        "--scheme",
        dest="schemes",
        action="append",
        metavar="NAME[,NAME...]",
        help="restrict to direct, maxmin, proposed (repeatable; default all)",
    )
    if with_trials:
        p.add_argument("--trials", dest="trials", type=int)
        p.add_argument("--confidence", dest="confidence_level", type=float)
        p.add_argument("--workers", dest="workers", type=int, default=1)
    p.add_argument("--seed", dest="seed", type=int)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--out", dest="out", default=None, help="output path (default stdout)")
    p.add_argument("--config", dest="config", default=None, help="key = value file, flags override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relaysec",
        description="Intercept probabilities for relay selection over Rayleigh fading",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analytic = sub.add_parser("analytic", help="closed-form values at one parameter point")
    _add_common_args(p_analytic, with_trials=False)
    p_analytic.set_defaults(handler=_cmd_analytic)

    p_simulate = sub.add_parser("simulate", help="closed form plus Monte Carlo at one point")
    _add_common_args(p_simulate, with_trials=True)
    p_simulate.set_defaults(handler=_cmd_simulate)

    p_sweep = sub.add_parser("sweep", help="grid sweep over mer_db or relay_count")
    p_sweep.add_argument("--var", dest="variable", choices=SWEEP_VARIABLES, help="swept variable")
    p_sweep.add_argument("--from", dest="start", type=float, help="first grid value")
    p_sweep.add_argument("--to", dest="stop", type=float, help="last grid value, inclusive")
    p_sweep.add_argument("--step", dest="step", type=float, help="grid increment")
    _add_common_args(p_sweep, with_trials=True)
    p_sweep.set_defaults(handler=_cmd_sweep)

    return parser


def _resolve(args: argparse.Namespace, config: dict, key: str, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        return config[key]
    return default


def _resolve_schemes(args: argparse.Namespace, config: dict) -> tuple[Scheme, ...]:
    raw = getattr(args, "schemes", None)
    if raw is not None:
        out: tuple[Scheme, ...] = ()
        for item in raw:
            out += _parse_scheme_list(item)
        return out
    return config.get("schemes", ALL_SCHEMES)


def _resolve_figure(args: argparse.Namespace, config: dict, command: str) -> FigureParams:
    mer_db = _resolve(args, config, "mer_db")
    relay_count = _resolve(args, config, "relay_count")
    if mer_db is None:
        raise ValueError(f"{command} needs --mer-db (or mer_db in --config)")
    if relay_count is None:
        raise ValueError(f"{command} needs --relays (or relay_count in --config)")
    return FigureParams(
        mer_db=float(mer_db),
        alpha_si=_resolve(args, config, "alpha_si", 1.0),
        alpha_id=_resolve(args, config, "alpha_id", 1.0),
        alpha_ie=_resolve(args, config, "alpha_ie", 1.0),
        relay_count=int(relay_count),
        power=_resolve(args, config, "power", 1.0),
        noise_var=_resolve(args, config, "noise_var", 1.0),
    )


def _cmd_analytic(args: argparse.Namespace, config: dict) -> list:
    figure = _resolve_figure(args, config, "analytic")
    return run_point(
        figure,
        _resolve_schemes(args, config),
        trials=0,
        seed=_resolve(args, config, "seed", 1),
    )


def _cmd_simulate(args: argparse.Namespace, config: dict) -> list:
    figure = _resolve_figure(args, config, "simulate")
    trials = int(_resolve(args, config, "trials", 100_000))
    if trials < 1:
        raise ValueError(f"simulate needs at least one trial, got {trials}")
    return run_point(
        figure,
        _resolve_schemes(args, config),
        trials=trials,
        seed=_resolve(args, config, "seed", 1),
        confidence_level=_resolve(args, config, "confidence_level", 0.99),
        workers=args.workers,
    )


def _cmd_sweep(args: argparse.Namespace, config: dict) -> list:
    variable = _resolve(args, config, "variable")
    if variable is None:
        raise ValueError("sweep needs --var mer_db|relay_count")
    missing = [
        flag
        for flag, key in (("--from", "start"), ("--to", "stop"), ("--step", "step"))
        if _resolve(args, config, key) is None
    ]
    if missing:
        raise ValueError(f"sweep needs {', '.join(missing)}")
    mer_db = _resolve(args, config, "mer_db")
    relay_count = _resolve(args, config, "relay_count")
    if variable == "mer_db" and relay_count is None:
        raise ValueError("sweeping mer_db needs a fixed --relays")
    if variable == "relay_count" and mer_db is None:
        raise ValueError("sweeping relay_count needs a fixed --mer-db")
    spec = SweepSpec(
        variable=variable,
        start=float(_resolve(args, config, "start")),
        stop=float(_resolve(args, config, "stop")),
        step=float(_resolve(args, config, "step")),
        mer_db=0.0 if mer_db is None else float(mer_db),
        alpha_si=_resolve(args, config, "alpha_si", 1.0),
        alpha_id=_resolve(args, config, "alpha_id", 1.0),
        alpha_ie=_resolve(args, config, "alpha_ie", 1.0),
        relay_count=1 if relay_count is None else int(relay_count),
        power=_resolve(args, config, "power", 1.0),
        noise_var=_resolve(args, config, "noise_var", 1.0),
        schemes=_resolve_schemes(args, config),
        trials=int(_resolve(args, config, "trials", 0)),
        seed=_resolve(args, config, "seed", 1),
        confidence_level=_resolve(args, config, "confidence_level", 0.99),
    )
    return run_sweep(spec, workers=args.workers)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = parse_config(args.config) if args.config else {}
        rows = args.handler(args, config)
        emit(rows, fmt=args.fmt, dest=args.out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

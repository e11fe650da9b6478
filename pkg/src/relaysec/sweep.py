"""Parameter sweeps over figure-style grids, with CSV and JSON emission."""

from __future__ import annotations

import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

from .analytic import intercept_probability
from .model import FigureParams, scenario_from_figure
from .montecarlo import estimate_many
from .selection import Scheme

SWEEP_VARIABLES = ("mer_db", "relay_count")

CSV_HEADER = (
    "scheme,relay_count,mer_db,alpha_si,alpha_id,alpha_ie,"
    "analytic,mc_p_hat,mc_ci_low,mc_ci_high,trials,seed"
)

ALL_SCHEMES = tuple(Scheme)


@dataclass(frozen=True)
class SweepSpec:
    """Everything a sweep needs; run_sweep output is a pure function of this.

    One of mer_db / relay_count is the swept variable; its fixed field here is
    ignored at the swept points. The grid runs start, start+step, ... up to and
    including stop.
    """

    variable: str                           # "mer_db" or "relay_count"
    start: float                            # first grid value, inclusive
    stop: float                             # last grid value, inclusive
    step: float                             # positive increment
    mer_db: float = 0.0                     # fixed MER (dB) when sweeping relay_count
    alpha_si: float = 1.0
    alpha_id: float = 1.0
    alpha_ie: float = 1.0
    relay_count: int = 1                    # fixed M when sweeping mer_db
    power: float = 1.0
    noise_var: float = 1.0
    schemes: tuple[Scheme, ...] = ALL_SCHEMES
    trials: int = 0                         # 0 means analytic columns only
    seed: int = 1                           # reused at every grid point
    confidence_level: float = 0.99

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"variable must be one of {SWEEP_VARIABLES}, got {self.variable!r}")
        if not self.start <= self.stop:
            raise ValueError(f"start must not exceed stop, got {self.start} > {self.stop}")
        if not self.step > 0:
            raise ValueError(f"step must be positive, got {self.step}")
        ordered = tuple(s for s in Scheme if s in set(self.schemes))
        if not ordered:
            raise ValueError("schemes must name at least one scheme")
        object.__setattr__(self, "schemes", ordered)
        if self.trials < 0:
            raise ValueError(f"trials must be nonnegative, got {self.trials}")
        if not 0.0 < self.confidence_level < 1.0:
            raise ValueError(f"confidence_level must lie in (0, 1), got {self.confidence_level}")
        if self.variable == "relay_count":
            for name in ("start", "stop", "step"):
                v = getattr(self, name)
                if float(v) != int(v):
                    raise ValueError(f"{name} must be an integer when sweeping relay_count, got {v}")
            if self.start < 0:
                raise ValueError(f"relay_count grid cannot go negative, got start {self.start}")
        # Fixed-parameter sanity is delegated to FigureParams at build time.
        self._figure_at(self.grid()[0])

    def grid(self) -> list:
        """Grid values in ascending order; relay counts come back as ints."""
        if self.variable == "relay_count":
            return list(range(int(self.start), int(self.stop) + 1, int(self.step)))
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + k * self.step for k in range(count)]

    def _figure_at(self, value) -> FigureParams:
        fixed = dict(
            mer_db=self.mer_db,
            alpha_si=self.alpha_si,
            alpha_id=self.alpha_id,
            alpha_ie=self.alpha_ie,
            relay_count=self.relay_count,
            power=self.power,
            noise_var=self.noise_var,
        )
        fixed[self.variable] = int(value) if self.variable == "relay_count" else float(value)
        return FigureParams(**fixed)


@dataclass(frozen=True)
class SweepRow:
    """One (grid point, scheme) result; mc_* fields are None when trials == 0."""

    scheme: Scheme
    relay_count: int
    mer_db: float
    alpha_si: float
    alpha_id: float
    alpha_ie: float
    analytic: float
    mc_p_hat: float | None
    mc_ci_low: float | None
    mc_ci_high: float | None
    trials: int
    seed: int


def run_point(
    figure: FigureParams,
    schemes: Iterable[Scheme],
    trials: int,
    seed: int,
    confidence_level: float = 0.99,
    workers: int = 1,
) -> list[SweepRow]:
    """Rows for one parameter point, in canonical scheme order.

    Monte Carlo draws are shared across the requested schemes, so per-draw
    orderings survive into the counts. trials == 0 skips simulation.
    """
    ordered = tuple(s for s in Scheme if s in set(schemes))
    if not ordered:
        raise ValueError("schemes must name at least one scheme")
    scenario = scenario_from_figure(figure)
    estimates = (
        estimate_many(ordered, scenario, trials, seed, confidence_level, workers)
        if trials > 0
        else {}
    )
    rows = []
    for s in ordered:
        est = estimates.get(s)
        rows.append(
            SweepRow(
                scheme=s,
                relay_count=figure.relay_count,
                mer_db=figure.mer_db,
                alpha_si=figure.alpha_si,
                alpha_id=figure.alpha_id,
                alpha_ie=figure.alpha_ie,
                analytic=intercept_probability(s, scenario),
                mc_p_hat=None if est is None else est.p_hat,
                mc_ci_low=None if est is None else est.ci_low,
                mc_ci_high=None if est is None else est.ci_high,
                trials=trials,
                seed=seed,
            )
        )
    return rows


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[SweepRow]:
    """All grid points in ascending order, schemes in canonical order within each."""
    rows = []
    for value in spec.grid():
        rows.extend(
            run_point(
                spec._figure_at(value),
                spec.schemes,
                spec.trials,
                spec.seed,
                spec.confidence_level,
                workers,
            )
        )
    return rows


# ==== emission =============================================================


def _fmt(x: float) -> str:
    """Ten significant digits, plain decimal or exponent as %g picks."""
    return format(x, ".10g")


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    """Fixed-header CSV; probability fields carry ten significant digits."""
    _require_rows(rows)
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                (
                    r.scheme.value,
                    str(r.relay_count),
                    _fmt(r.mer_db),
                    _fmt(r.alpha_si),
                    _fmt(r.alpha_id),
                    _fmt(r.alpha_ie),
                    _fmt(r.analytic),
                    "" if r.mc_p_hat is None else _fmt(r.mc_p_hat),
                    "" if r.mc_ci_low is None else _fmt(r.mc_ci_low),
                    "" if r.mc_ci_high is None else _fmt(r.mc_ci_high),
                    str(r.trials),
                    str(r.seed),
                )
            )
        )
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Sequence[SweepRow]) -> str:
    """JSON array of row objects at full float precision (round-trips exactly)."""
    _require_rows(rows)
    payload = []
    for r in rows:
        d = dataclasses.asdict(r)
        d["scheme"] = r.scheme.value
        payload.append(d)
    return json.dumps(payload, indent=2) + "\n"


def rows_from_json(text: str) -> list[SweepRow]:
    """Inverse of rows_to_json."""
    rows = []
    for d in json.loads(text):
        d = dict(d)
        d["scheme"] = Scheme(d["scheme"])
        rows.append(SweepRow(**d))
    return rows


def _require_rows(rows: Sequence[SweepRow]) -> None:
    if not rows:
        raise ValueError("no rows to emit")


def emit(rows: Sequence[SweepRow], fmt: str = "csv", dest: str | Path | IO[str] | None = None) -> str:
    """Serialize rows and write them to dest (path, open file, or stdout).

    dest None or "-" writes to stdout. Returns the serialized text either way.
    """
    if fmt == "csv":
        text = rows_to_csv(rows)
    elif fmt == "json":
        text = rows_to_json(rows)
    else:
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    if dest is None or dest == "-":
        sys.stdout.write(text)
    elif hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")
    return text

"""Average-power channel model and the MER/alpha parameterization used in plots.

All squared channel magnitudes are exponentially distributed (Rayleigh fading),
so a link is fully described by its mean squared magnitude sigma2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def db_to_linear(x_db: float) -> float:
    """Convert a decibel quantity to a linear power ratio, 10**(x/10)."""
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    """Convert a positive linear power ratio to decibels, 10*log10(x)."""
    if x <= 0.0:
        raise ValueError(f"ratio must be positive to convert to dB, got {x!r}")
    return 10.0 * math.log10(x)


def _as_positive_tuple(name: str, values, expected_len: int) -> tuple[float, ...]:
    out = tuple(float(v) for v in values)
    if len(out) != expected_len:
        raise ValueError(
            f"{name} must have one entry per relay ({expected_len}), got {len(out)}"
        )
    if any(not (v > 0.0) for v in out):  # also rejects NaN
        raise ValueError(f"every entry of {name} must be positive, got {out}")
    return out


@dataclass(frozen=True)
class Scenario:
    """One network setup: link variances plus transmit power and noise level.

    Per-relay sequences accept any iterable of floats and are stored as
    tuples so instances stay immutable and hashable.
    """

    relay_count: int                # number of decode-and-forward relays; 0 means direct only
    sigma2_sd: float                # source -> destination mean squared magnitude
    sigma2_se: float                # source -> eavesdropper
    sigma2_si: tuple[float, ...]    # source -> relay i, one entry per relay
    sigma2_id: tuple[float, ...]    # relay i -> destination
    sigma2_ie: tuple[float, ...]    # relay i -> eavesdropper
    power: float = 1.0              # total transmit power P
    noise_var: float = 1.0          # receiver noise variance sigma_n^2

    def __post_init__(self) -> None:
        if not isinstance(self.relay_count, int) or self.relay_count < 0:
            raise ValueError(f"relay_count must be a nonnegative integer, got {self.relay_count!r}")
        for name in ("sigma2_sd", "sigma2_se", "power", "noise_var"):
            v = float(getattr(self, name))
            if not (v > 0.0):
                raise ValueError(f"{name} must be positive, got {v!r}")
            object.__setattr__(self, name, v)
        for name in ("sigma2_si", "sigma2_id", "sigma2_ie"):
            object.__setattr__(
                self, name, _as_positive_tuple(name, getattr(self, name), self.relay_count)
            )

    def is_homogeneous(self) -> bool:
        """True when every relay shares the same (si, id, ie) variance triple."""
        return (
            len(set(self.sigma2_si)) <= 1
            and len(set(self.sigma2_id)) <= 1
            and len(set(self.sigma2_ie)) <= 1
        )


def mer_of(scenario: Scenario) -> float:
    """Main-to-eavesdropper ratio sigma2_sd / sigma2_se (linear, not dB)."""
    return scenario.sigma2_sd / scenario.sigma2_se


@dataclass(frozen=True)
class FigureParams:
    """Plot-style parameterization: MER in dB plus relative relay gains.

    The destination link is normalized to sigma2_sd = 1. Relay main links
    scale off sigma2_sd (alpha_si, alpha_id) and relay eavesdropper links
    scale off sigma2_se (alpha_ie), so alpha = 1 reproduces the homogeneous
    curves shown in the usual intercept-probability figures.
    """

    mer_db: float                   # main-to-eavesdropper ratio in dB, 10*log10(sigma2_sd/sigma2_se)
    alpha_si: float = 1.0           # sigma2_si / sigma2_sd for every relay
    alpha_id: float = 1.0           # sigma2_id / sigma2_sd
    alpha_ie: float = 1.0           # sigma2_ie / sigma2_se
    relay_count: int = 1            # number of relays M; 0 is allowed for direct-only runs
    power: float = 1.0
    noise_var: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.relay_count, int) or self.relay_count < 0:
            raise ValueError(f"relay_count must be a nonnegative integer, got {self.relay_count!r}")
        for name in ("alpha_si", "alpha_id", "alpha_ie", "power", "noise_var"):
            v = float(getattr(self, name))
            if not (v > 0.0):
                raise ValueError(f"{name} must be positive, got {v!r}")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "mer_db", float(self.mer_db))


def scenario_from_figure(params: FigureParams) -> Scenario:
    """Build the homogeneous Scenario a FigureParams describes.

    sigma2_sd = 1, sigma2_se = 10**(-mer_db/10), and every relay gets
    sigma2_si = alpha_si, sigma2_id = alpha_id, sigma2_ie = alpha_ie * sigma2_se.
    """
    sigma2_sd = 1.0
    sigma2_se = db_to_linear(-params.mer_db)
    m = params.relay_count
    return Scenario(
        relay_count=m,
        sigma2_sd=sigma2_sd,
        sigma2_se=sigma2_se,
        sigma2_si=(params.alpha_si * sigma2_sd,) * m,
        sigma2_id=(params.alpha_id * sigma2_sd,) * m,
        sigma2_ie=(params.alpha_ie * sigma2_se,) * m,
        power=params.power,
        noise_var=params.noise_var,
    )

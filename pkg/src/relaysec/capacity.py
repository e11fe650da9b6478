"""Instantaneous capacities and secrecy rates for a single fading realization."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Scenario


def _as_gain_tuple(name: str, values) -> tuple[float, ...]:
    out = tuple(float(v) for v in values)
    if any(not (v >= 0.0) for v in out):  # also rejects NaN
        raise ValueError(f"every entry of {name} must be nonnegative, got {out}")
    return out


@dataclass(frozen=True)
class ChannelDraw:
    """One realization of every squared channel magnitude in the network."""

    g_sd: float                 # |h_sd|^2
    g_se: float                 # |h_se|^2
    g_si: tuple[float, ...]     # |h_si|^2 per relay
    g_id: tuple[float, ...]     # |h_id|^2 per relay
    g_ie: tuple[float, ...]     # |h_ie|^2 per relay

    def __post_init__(self) -> None:
        for name in ("g_sd", "g_se"):
            v = float(getattr(self, name))
            if not (v >= 0.0):
                raise ValueError(f"{name} must be nonnegative, got {v!r}")
            object.__setattr__(self, name, v)
        for name in ("g_si", "g_id", "g_ie"):
            object.__setattr__(self, name, _as_gain_tuple(name, getattr(self, name)))
        if not (len(self.g_si) == len(self.g_id) == len(self.g_ie)):
            raise ValueError(
                "per-relay gain tuples must share one length, got "
                f"{len(self.g_si)}, {len(self.g_id)}, {len(self.g_ie)}"
            )

    @property
    def relay_count(self) -> int:
        return len(self.g_si)


def _check_pair(draw: ChannelDraw, scenario: Scenario) -> None:
    if draw.relay_count != scenario.relay_count:
        raise ValueError(
            f"draw has {draw.relay_count} relays but scenario has {scenario.relay_count}"
        )


def _check_relay_index(i: int, draw: ChannelDraw) -> None:
    if not 0 <= i < draw.relay_count:
        raise IndexError(f"relay index {i} out of range for {draw.relay_count} relays")


def direct_capacity(gain: float, power: float, noise_var: float) -> float:
    """Shannon rate log2(1 + g*P/sigma_n^2) of a one-hop link at full power."""
    if not (gain >= 0.0):
        raise ValueError(f"gain must be nonnegative, got {gain!r}")
    if power <= 0.0 or noise_var <= 0.0:
        raise ValueError("power and noise_var must be positive")
    return math.log2(1.0 + gain * power / noise_var)


def direct_secrecy(draw: ChannelDraw, scenario: Scenario) -> float:
    """Secrecy rate of direct transmission: destination rate minus eavesdropper rate."""
    return direct_capacity(draw.g_sd, scenario.power, scenario.noise_var) - direct_capacity(
        draw.g_se, scenario.power, scenario.noise_var
    )


def df_capacity(i: int, draw: ChannelDraw, scenario: Scenario) -> float:
    """Two-hop decode-and-forward rate through relay i.

    Each hop transmits at P/2, and the end-to-end rate is limited by the
    weaker hop: log2(1 + min(g_si, g_id) * P / (2 * sigma_n^2)).
    """
    _check_pair(draw, scenario)
    _check_relay_index(i, draw)
    g = min(draw.g_si[i], draw.g_id[i])
    return math.log2(1.0 + g * scenario.power / (2.0 * scenario.noise_var))


def df_secrecy(i: int, draw: ChannelDraw, scenario: Scenario) -> float:
    """Secrecy rate through relay i, with the eavesdropper overhearing the relay at P/2."""
    _check_pair(draw, scenario)
    _check_relay_index(i, draw)
    eave = math.log2(1.0 + draw.g_ie[i] * scenario.power / (2.0 * scenario.noise_var))
    return df_capacity(i, draw, scenario) - eave

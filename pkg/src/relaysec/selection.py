"""Relay selection rules and the per-draw intercept event for each scheme."""

from __future__ import annotations

import enum

from .capacity import ChannelDraw, _check_pair
from .model import Scenario


class Scheme(enum.Enum):
    """Transmission schemes, in canonical output order."""

    DIRECT = "direct"
    MAX_MIN = "maxmin"
    PROPOSED = "proposed"


def _require_relays(draw: ChannelDraw) -> None:
    if draw.relay_count == 0:
        raise ValueError("relay selection needs at least one relay")


def select_max_min(draw: ChannelDraw) -> int:
    """Pick the relay with the largest min(g_si, g_id).

    Ties go to the lowest index, so the result is deterministic for any draw.
    """
    _require_relays(draw)
    best = 0
    best_val = min(draw.g_si[0], draw.g_id[0])
    for i in range(1, draw.relay_count):
        v = min(draw.g_si[i], draw.g_id[i])
        if v > best_val:
            best, best_val = i, v
    return best


def select_proposed(draw: ChannelDraw, scenario: Scenario) -> int:
    """Pick the relay with the largest (min(g_si, g_id)*P + 2*sigma_n^2) / (g_ie*P + 2*sigma_n^2).

    The ratio trades the legitimate two-hop gain against the eavesdropper's,
    so a relay with a strong main link but an exposed eavesdropper link can
    lose to a quieter one. Ties go to the lowest index.
    """
    _check_pair(draw, scenario)
    _require_relays(draw)
    p = scenario.power
    two_n = 2.0 * scenario.noise_var
    best = 0
    best_ratio = (min(draw.g_si[0], draw.g_id[0]) * p + two_n) / (draw.g_ie[0] * p + two_n)
    for i in range(1, draw.relay_count):
        ratio = (min(draw.g_si[i], draw.g_id[i]) * p + two_n) / (draw.g_ie[i] * p + two_n)
        if ratio > best_ratio:
            best, best_ratio = i, ratio
    return best


def intercept_event(scheme: Scheme, draw: ChannelDraw, scenario: Scenario) -> bool:
    """True when the scheme's secrecy capacity is strictly negative on this draw.

    Zero secrecy capacity (exact gain ties) counts as no intercept. The sign
    of each secrecy rate reduces to a comparison of squared magnitudes, so the
    event does not depend on transmit power or noise level:

    - direct: g_sd < g_se
    - maxmin: min(g_sb, g_bd) < g_be for the max-min relay b
    - proposed: min(g_sb, g_bd) < g_be for the ratio-selected relay b, which
      happens exactly when every relay is intercepted (the best ratio is < 1
      iff all ratios are < 1)
    """
    if scheme is Scheme.DIRECT:
        return draw.g_sd < draw.g_se
    if scheme is Scheme.MAX_MIN:
        _check_pair(draw, scenario)
        b = select_max_min(draw)
    elif scheme is Scheme.PROPOSED:
        b = select_proposed(draw, scenario)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    return min(draw.g_si[b], draw.g_id[b]) < draw.g_ie[b]

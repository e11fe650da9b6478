"""Seeded Monte Carlo estimation of intercept probabilities.

Reproducibility contract
------------------------
Sampling uses numpy's Philox counter-based bit generator. Trials are grouped
into fixed chunks of CHUNK_TRIALS; chunk c draws from a generator keyed by
SeedSequence(entropy=seed, spawn_key=(c,)), and trial t occupies row
t % CHUNK_TRIALS of chunk t // CHUNK_TRIALS, consuming exactly 2 + 3*M
uniforms in a fixed column order (g_sd, g_se, g_si[...], g_id[...], g_ie[...]).
A trial's random bytes therefore depend only on (seed, t), never on execution
order, and per-chunk event counts are integers summed commutatively, so
results are bit-identical for any worker count.

Each squared magnitude is drawn by inverse CDF as -sigma2 * ln(U) with U
uniform on (0, 1], taken as 1.0 minus a generator double from [0, 1).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from statistics import NormalDist
from typing import Iterable, Sequence

import numpy as np

from .capacity import ChannelDraw
from .model import Scenario
from .selection import Scheme

# Trials per substream. Fixed: changing it changes which uniforms a given
# trial index sees, which breaks stored-output reproducibility.
CHUNK_TRIALS = 1 << 16

_SEED_LIMIT = 1 << 64


def _check_seed(seed: int) -> None:
    if not isinstance(seed, int) or not 0 <= seed < _SEED_LIMIT:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")


def chunk_generator(seed: int, chunk_index: int) -> np.random.Generator:
    """Philox generator for one chunk of trials, keyed by (seed, chunk_index)."""
    _check_seed(seed)
    if chunk_index < 0:
        raise ValueError(f"chunk_index must be nonnegative, got {chunk_index}")
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,))
    return np.random.Generator(np.random.Philox(ss))


def exponential_from_uniform(u, sigma2):
    """Inverse-CDF map of U in (0, 1] to an exponential gain, -sigma2 * ln(U).

    Broadcasts over arrays; u = exp(-1) with sigma2 = 1 maps to exactly 1.0.
    """
    return -np.asarray(sigma2, dtype=np.float64) * np.log(u)


def _sigma_row(scenario: Scenario) -> np.ndarray:
    return np.array(
        [
            scenario.sigma2_sd,
            scenario.sigma2_se,
            *scenario.sigma2_si,
            *scenario.sigma2_id,
            *scenario.sigma2_ie,
        ],
        dtype=np.float64,
    )


def sample_draw(scenario: Scenario, rng: np.random.Generator) -> ChannelDraw:
    """Draw every squared magnitude for one trial.

    Consumes exactly 2 + 3*M doubles from rng in one call, in the documented
    column order, so looping sample_draw over chunk_generator(seed, c)
    reproduces the vectorized engine's draws for chunk c row by row.
    """
    sig = _sigma_row(scenario)
    u = 1.0 - rng.random(sig.size)
    g = exponential_from_uniform(u, sig)
    m = scenario.relay_count
    return ChannelDraw(
        g_sd=float(g[0]),
        g_se=float(g[1]),
        g_si=tuple(g[2 : 2 + m]),
        g_id=tuple(g[2 + m : 2 + 2 * m]),
        g_ie=tuple(g[2 + 2 * m : 2 + 3 * m]),
    )


# ==== vectorized engine ====================================================


def _canonical_schemes(schemes: Iterable[Scheme]) -> tuple[Scheme, ...]:
    wanted = set(schemes)
    unknown = wanted - set(Scheme)
    if unknown:
        raise ValueError(f"unknown schemes: {unknown}")
    ordered = tuple(s for s in Scheme if s in wanted)
    if not ordered:
        raise ValueError("at least one scheme is required")
    return ordered


def _chunk_layout(trials: int) -> list[tuple[int, int]]:
    full, rem = divmod(trials, CHUNK_TRIALS)
    layout = [(c, CHUNK_TRIALS) for c in range(full)]
    if rem:
        layout.append((full, rem))
    return layout


def _event_block(
    schemes: Sequence[Scheme], scenario: Scenario, seed: int, chunk_index: int, n: int
) -> dict[Scheme, np.ndarray]:
    """Boolean intercept events for trials [chunk*CHUNK_TRIALS, +n), per scheme."""
    rng = chunk_generator(seed, chunk_index)
    sig = _sigma_row(scenario)
    u = 1.0 - rng.random((n, sig.size))
    g = exponential_from_uniform(u, sig)
    m = scenario.relay_count
    out: dict[Scheme, np.ndarray] = {}
    if Scheme.DIRECT in schemes:
        out[Scheme.DIRECT] = g[:, 0] < g[:, 1]
    if Scheme.MAX_MIN in schemes or Scheme.PROPOSED in schemes:
        g_si = g[:, 2 : 2 + m]
        g_id = g[:, 2 + m : 2 + 2 * m]
        g_ie = g[:, 2 + 2 * m : 2 + 3 * m]
        mins = np.minimum(g_si, g_id)
        if Scheme.MAX_MIN in schemes:
            b = np.argmax(mins, axis=1)  # first max wins ties, matching select_max_min
            rows = np.arange(n)
            out[Scheme.MAX_MIN] = mins[rows, b] < g_ie[rows, b]
        if Scheme.PROPOSED in schemes:
            # The ratio-selected relay is intercepted iff every relay is.
            out[Scheme.PROPOSED] = np.all(mins < g_ie, axis=1)
    return out


def _validate_run(schemes: Sequence[Scheme], scenario: Scenario, trials: int, seed: int) -> None:
    _check_seed(seed)
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    relay_schemes = {Scheme.MAX_MIN, Scheme.PROPOSED}
    if scenario.relay_count == 0 and relay_schemes & set(schemes):
        raise ValueError("relay schemes need a scenario with at least one relay")


def event_matrix(
    schemes: Iterable[Scheme], scenario: Scenario, trials: int, seed: int
) -> dict[Scheme, np.ndarray]:
    """Per-trial intercept events on shared draws, one bool array per scheme.

    Intended for moderate trial counts (arrays are materialized in full);
    estimate_intercept only accumulates counts and scales further.
    """
    ordered = _canonical_schemes(schemes)
    _validate_run(ordered, scenario, trials, seed)
    blocks = [_event_block(ordered, scenario, seed, c, n) for c, n in _chunk_layout(trials)]
    return {s: np.concatenate([b[s] for b in blocks]) for s in ordered}


@dataclass(frozen=True)
class InterceptEstimate:
    """Monte Carlo estimate of one scheme's intercept probability."""

    scheme: Scheme
    trials: int
    intercepts: int             # count of trials with negative secrecy capacity
    p_hat: float                # intercepts / trials
    ci_low: float               # Wilson score interval bounds at confidence_level
    ci_high: float
    confidence_level: float
    seed: int


def wilson_interval(
    successes: int, trials: int, confidence_level: float = 0.99
) -> tuple[float, float]:
    """Wilson score confidence interval for a binomial proportion.

    Well behaved at 0 and trials successes, always contains the point
    estimate, and stays inside [0, 1].
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if not 0 <= successes <= trials:
        raise ValueError(f"successes must lie in [0, {trials}], got {successes}")
    if not 0.0 < confidence_level < 1.0:
        raise ValueError(f"confidence_level must lie in (0, 1), got {confidence_level}")
    z = NormalDist().inv_cdf(0.5 + confidence_level / 2.0)
    n = float(trials)
    p_hat = successes / n
    denom = 1.0 + z * z / n
    center = (p_hat + z * z / (2.0 * n)) / denom
    half = z * math.sqrt(p_hat * (1.0 - p_hat) / n + z * z / (4.0 * n * n)) / denom
    low = min(max(center - half, 0.0), p_hat)
    high = max(min(center + half, 1.0), p_hat)
    return low, high


def estimate_many(
    schemes: Iterable[Scheme],
    scenario: Scenario,
    trials: int,
    seed: int,
    confidence_level: float = 0.99,
    workers: int = 1,
) -> dict[Scheme, InterceptEstimate]:
    """Estimate several schemes on shared draws.

    Every scheme sees the same channel realizations, so per-draw orderings
    (the ratio rule never intercepted when max-min is not) carry over to the
    counts exactly. workers > 1 shards whole chunks across threads without
    changing any result bit.
    """
    ordered = _canonical_schemes(schemes)
    _validate_run(ordered, scenario, trials, seed)
    if not 0.0 < confidence_level < 1.0:
        raise ValueError(f"confidence_level must lie in (0, 1), got {confidence_level}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    layout = _chunk_layout(trials)

    def count_chunk(item: tuple[int, int]) -> np.ndarray:
        c, n = item
        events = _event_block(ordered, scenario, seed, c, n)
        return np.array([int(events[s].sum()) for s in ordered], dtype=np.int64)

    if workers == 1 or len(layout) == 1:
        totals = sum(count_chunk(item) for item in layout)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            totals = sum(pool.map(count_chunk, layout))

    out = {}
    for s, count in zip(ordered, (int(t) for t in totals)):
        low, high = wilson_interval(count, trials, confidence_level)
        out[s] = InterceptEstimate(
            scheme=s,
            trials=trials,
            intercepts=count,
            p_hat=count / trials,
            ci_low=low,
            ci_high=high,
            confidence_level=confidence_level,
            seed=seed,
        )
    return out


def estimate_intercept(
    scheme: Scheme,
    scenario: Scenario,
    trials: int,
    seed: int,
    confidence_level: float = 0.99,
    workers: int = 1,
) -> InterceptEstimate:
    """Estimate one scheme's intercept probability from seeded draws."""
    return estimate_many((scheme,), scenario, trials, seed, confidence_level, workers)[scheme]

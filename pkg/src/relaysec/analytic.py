"""Closed-form intercept probabilities for the three transmission schemes.

An intercept happens when the eavesdropper's channel outruns the legitimate
one and the secrecy capacity drops below zero. With exponentially distributed
squared magnitudes all three probabilities have closed forms; the max-min one
needs an inclusion-exclusion sum over relay subsets.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .model import Scenario
from .selection import Scheme

# Subset enumeration walks all 2^M - 1 non-empty relay subsets. Past 20 relays
# that is over a million terms per eavesdropper average, so refuse rather than
# hang; figure-style sweeps use M <= 8.
MAX_ENUM_RELAYS = 20


class ApproximateFormulaWarning(UserWarning):
    """A closed form was evaluated outside the regime where it is exact."""


@dataclass(frozen=True)
class SubsetTerm:
    """One inclusion-exclusion term over a non-empty relay subset."""

    subset_mask: int    # bit i set when relay i belongs to the subset
    sign: int           # (-1) ** popcount(subset_mask)
    rate_sum: float     # sum over members of 1/sigma2_si + 1/sigma2_id


def iter_subset_terms(
    sigma2_si: Sequence[float], sigma2_id: Sequence[float]
) -> Iterator[SubsetTerm]:
    """Yield the 2^M - 1 inclusion-exclusion terms in increasing subset size.

    Within one size, subsets come out in lexicographic index order, so the
    iteration order is fully deterministic.
    """
    if len(sigma2_si) != len(sigma2_id):
        raise ValueError("sigma2_si and sigma2_id must have equal length")
    rates = [1.0 / a + 1.0 / b for a, b in zip(sigma2_si, sigma2_id)]
    m = len(rates)
    for k in range(1, m + 1):
        sign = -1 if k % 2 else 1
        for combo in combinations(range(m), k):
            mask = 0
            for i in combo:
                mask |= 1 << i
            yield SubsetTerm(mask, sign, math.fsum(rates[i] for i in combo))


def direct_intercept(scenario: Scenario) -> float:
    """P(intercept) for direct transmission: sigma2_se / (sigma2_se + sigma2_sd).

    Exact for any scenario; relays, power, and noise level play no part.
    """
    return scenario.sigma2_se / (scenario.sigma2_se + scenario.sigma2_sd)


def _check_relay_formula_args(scenario: Scenario) -> None:
    if scenario.relay_count < 1:
        raise ValueError("relay-scheme intercept probability needs at least one relay")


def maxmin_intercept(scenario: Scenario) -> float:
    """P(intercept) under max-min relay selection.

    Averages, over which relay m is selected, the chance that the best
    two-hop gain max_i min(g_si, g_id) stays below the eavesdropper gain of
    the selected relay. Expanding the CDF product of independent exponential
    minima by inclusion-exclusion gives, for each m,

        1 + sum over non-empty subsets A of (-1)^|A| / (1 + sigma2_ie[m] * rate_sum(A))

    and the result is the uniform average over m. Each term lies in (0, 1],
    so the sum is overflow-free; terms are accumulated with exact summation
    (math.fsum) in increasing subset size to keep cancellation harmless.

    The uniform 1/M weighting stands in for the joint law of (selected relay,
    best gain). That substitution is exact whenever the relay main links are
    identically distributed (selection is then uniform and independent of the
    best gain) or the eavesdropper variances are all equal (the overheard
    link is then independent of which relay won). Only when BOTH sides vary
    across relays does the value turn into an approximation, and it can be
    badly off; that case is flagged with ApproximateFormulaWarning.
    """
    _check_relay_formula_args(scenario)
    m = scenario.relay_count
    if m > MAX_ENUM_RELAYS:
        raise ValueError(
            f"too many relays for subset enumeration: {m} exceeds the cap of {MAX_ENUM_RELAYS}"
        )
    main_hetero = len(set(scenario.sigma2_si)) > 1 or len(set(scenario.sigma2_id)) > 1
    if main_hetero and len(set(scenario.sigma2_ie)) > 1:
        warnings.warn(
            "max-min closed form weighs the selected relay uniformly; with relay "
            "main links and eavesdropper links both heterogeneous the result is "
            "only an approximation",
            ApproximateFormulaWarning,
            stacklevel=2,
        )
    terms = list(iter_subset_terms(scenario.sigma2_si, scenario.sigma2_id))
    per_selected = []
    for sigma2_me in scenario.sigma2_ie:
        inner = 1.0 + math.fsum(t.sign / (1.0 + sigma2_me * t.rate_sum) for t in terms)
        per_selected.append(inner)
    value = math.fsum(per_selected) / m
    # when the true probability sits below float epsilon the alternating sum
    # can leave a ~1e-16 residue of either sign; pin to the valid range
    return min(1.0, max(0.0, value))


def proposed_intercept(scenario: Scenario) -> float:
    """P(intercept) under ratio-based selection: product of per-relay intercepts.

    The scheme is intercepted exactly when every relay individually is, and
    relays fade independently, so

        P = prod_i  r_i / (r_i + 1/sigma2_ie[i]),   r_i = 1/sigma2_si[i] + 1/sigma2_id[i]

    which is the rate-parameter form of
    (sigma2_id*sigma2_ie + sigma2_si*sigma2_ie) / (sigma2_id*sigma2_ie +
    sigma2_si*sigma2_ie + sigma2_si*sigma2_id) per relay. Exact for any
    variances, homogeneous or not.
    """
    _check_relay_formula_args(scenario)
    prob = 1.0
    for s_si, s_id, s_ie in zip(scenario.sigma2_si, scenario.sigma2_id, scenario.sigma2_ie):
        r = 1.0 / s_si + 1.0 / s_id
        prob *= r / (r + 1.0 / s_ie)
    return prob


def intercept_probability(scheme: Scheme, scenario: Scenario) -> float:
    """Dispatch to the closed form for the given scheme."""
    if scheme is Scheme.DIRECT:
        return direct_intercept(scenario)
    if scheme is Scheme.MAX_MIN:
        return maxmin_intercept(scenario)
    if scheme is Scheme.PROPOSED:
        return proposed_intercept(scenario)
    raise ValueError(f"unknown scheme {scheme!r}")

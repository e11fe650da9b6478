"""Intercept probabilities for relay-assisted transmission over Rayleigh fading.

A source talks to a destination while an eavesdropper listens. The library
compares direct transmission against two decode-and-forward relay selection
rules (classic max-min, and a ratio rule that also watches the eavesdropper
links), with exact closed forms and a reproducible Monte Carlo engine for
cross-checking them.
"""

from .analytic import (
    MAX_ENUM_RELAYS,
    ApproximateFormulaWarning,
    SubsetTerm,
    direct_intercept,
    intercept_probability,
    iter_subset_terms,
    maxmin_intercept,
    proposed_intercept,
)
from .capacity import ChannelDraw, df_capacity, df_secrecy, direct_capacity, direct_secrecy
from .model import (
    FigureParams,
    Scenario,
    db_to_linear,
    linear_to_db,
    mer_of,
    scenario_from_figure,
)
from .montecarlo import (
    CHUNK_TRIALS,
    InterceptEstimate,
    chunk_generator,
    estimate_intercept,
    estimate_many,
    event_matrix,
    exponential_from_uniform,
    sample_draw,
    wilson_interval,
)
from .selection import Scheme, intercept_event, select_max_min, select_proposed
from .sweep import (
    ALL_SCHEMES,
    CSV_HEADER,
    SweepRow,
    SweepSpec,
    emit,
    rows_from_json,
    rows_to_csv,
    rows_to_json,
    run_point,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximateFormulaWarning",
    "ALL_SCHEMES",
    "CHUNK_TRIALS",
    "CSV_HEADER",
    "ChannelDraw",
    "FigureParams",
    "InterceptEstimate",
    "MAX_ENUM_RELAYS",
    "Scenario",
    "Scheme",
    "SubsetTerm",
    "SweepRow",
    "SweepSpec",
    "chunk_generator",
    "db_to_linear",
    "df_capacity",
    "df_secrecy",
    "direct_capacity",
    "direct_intercept",
    "direct_secrecy",
    "emit",
    "estimate_intercept",
    "estimate_many",
    "event_matrix",
    "exponential_from_uniform",
    "intercept_event",
    "intercept_probability",
    "iter_subset_terms",
    "linear_to_db",
    "maxmin_intercept",
    "mer_of",
    "proposed_intercept",
    "rows_from_json",
    "rows_to_csv",
    "rows_to_json",
    "run_point",
    "run_sweep",
    "sample_draw",
    "scenario_from_figure",
    "select_max_min",
    "select_proposed",
    "wilson_interval",
]

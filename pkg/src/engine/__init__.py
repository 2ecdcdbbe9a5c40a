"""Doomsyear methods and the full Doomsday rule."""

from .doomsday import (
    DEFAULT_METHOD,
    MONTH_ANCHORS,
    MonthAnchor,
    batch_residues,
    day_of_week,
    doomscentury,
    doomsmonth,
    explain,
    month_anchor,
    month_residues,
    year_doomsday,
)
from .doomsyear import (
    STRATEGIES,
    Decomposition,
    LeapCount,
    ZeroAnchor,
    carrollian_doomsyear,
    conway_doomsyear,
    decade_anchor,
    decade_anchor_raw,
    decompose,
    derive_zero_anchors,
    doomsyear,
    doomsyear_trace,
    doomsyear_values,
    leaps_by_counting,
    leaps_formula,
    leaps_table,
    proposed_doomsyear,
    proposed_doomsyear_lookup,
    proposed_sum,
    select_zero_anchor,
    true_doomsyear,
)

__all__ = [
    "DEFAULT_METHOD",
    "MONTH_ANCHORS",
    "STRATEGIES",
    "Decomposition",
    "LeapCount",
    "MonthAnchor",
    "ZeroAnchor",
    "batch_residues",
    "carrollian_doomsyear",
    "conway_doomsyear",
    "day_of_week",
    "decade_anchor",
    "decade_anchor_raw",
    "decompose",
    "derive_zero_anchors",
    "doomscentury",
    "doomsmonth",
    "doomsyear",
    "doomsyear_trace",
    "doomsyear_values",
    "explain",
    "leaps_by_counting",
    "leaps_formula",
    "leaps_table",
    "month_anchor",
    "month_residues",
    "proposed_doomsyear",
    "proposed_doomsyear_lookup",
    "proposed_sum",
    "select_zero_anchor",
    "true_doomsyear",
    "year_doomsday",
]

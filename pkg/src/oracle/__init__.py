"""Independent day-count oracle."""

from .rata_die import (
    DAYS_PER_400_YEARS,
    EPOCH_WEEKDAY,
    MAX_DAY_NUMBER,
    DayNumber,
    from_day_number,
    iter_dates,
    next_day,
    oracle_residues,
    oracle_weekday,
    rata_die,
    rata_die_batch,
    year_dates,
)

__all__ = [
    "DAYS_PER_400_YEARS",
    "EPOCH_WEEKDAY",
    "MAX_DAY_NUMBER",
    "DayNumber",
    "from_day_number",
    "iter_dates",
    "next_day",
    "oracle_residues",
    "oracle_weekday",
    "rata_die",
    "rata_die_batch",
    "year_dates",
]

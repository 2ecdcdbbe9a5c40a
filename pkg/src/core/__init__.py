"""Foundational domain types: dates, digit splits, residues, weekdays, traces."""

from .dates import CalendarDate, days_in_month, is_leap_year
from .trace import Trace, TraceStep
from .types import (
    CenturySplit,
    MethodId,
    Mod7,
    SplitYear,
    Weekday,
    check_two_digit_year,
    reduce_mod7,
    split_century,
    split_year,
)

__all__ = [
    "CalendarDate",
    "CenturySplit",
    "MethodId",
    "Mod7",
    "SplitYear",
    "Trace",
    "TraceStep",
    "Weekday",
    "check_two_digit_year",
    "days_in_month",
    "is_leap_year",
    "reduce_mod7",
    "split_century",
    "split_year",
]

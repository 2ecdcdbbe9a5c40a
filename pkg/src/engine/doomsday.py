"""Full Doomsday rule: day of week = (doomscentury + doomsyear + doomsmonth) mod 7.

The century and month terms are the standard Gregorian formulations; the
year term is delegated to whichever doomsyear method is selected.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..core import (
    CalendarDate,
    MethodId,
    Mod7,
    Trace,
    TraceStep,
    Weekday,
    is_leap_year,
    split_century,
)
from ..core.dates import DAYS_IN_MONTH
from .doomsyear import doomsyear, doomsyear_trace

logger = logging.getLogger(__name__)

DEFAULT_METHOD = MethodId.DECADE_ANCHOR

__all__ = [
    "DEFAULT_METHOD",
    "MONTH_ANCHORS",
    "MonthAnchor",
    "batch_residues",
    "day_of_week",
    "doomscentury",
    "doomsmonth",
    "explain",
    "is_leap_year",
    "month_anchor",
    "month_residues",
    "year_doomsday",
]


@dataclass(frozen=True)
class MonthAnchor:
    """The day of `month` that always falls on the year's doomsday."""

    month: int
    common_year_day: int
    leap_year_day: int

    def day(self, leap: bool) -> int:
        return self.leap_year_day if leap else self.common_year_day


# 4/4, 6/6, 8/8, 10/10, 12/12; 5/9, 9/5, 7/11, 11/7; 3/7 ("March 0" = last of Feb)
MONTH_ANCHORS: Tuple[MonthAnchor, ...] = (
    MonthAnchor(1, 3, 4),
    MonthAnchor(2, 28, 29),
    MonthAnchor(3, 7, 7),
    MonthAnchor(4, 4, 4),
    MonthAnchor(5, 9, 9),
    MonthAnchor(6, 6, 6),
    MonthAnchor(7, 11, 11),
    MonthAnchor(8, 8, 8),
    MonthAnchor(9, 5, 5),
    MonthAnchor(10, 10, 10),
    MonthAnchor(11, 7, 7),
    MonthAnchor(12, 12, 12),
)


def doomscentury(cc: int) -> Mod7:
    """Century anchor (5(cc mod 4) + 2) mod 7; repeats every four centuries.

    Absorbs the 100/400 leap exceptions, so doomsyear only ever sees x mod 4.
    """
    if cc < 0:
        raise ValueError(f"Century must be non-negative, got {cc}")
    return Mod7(5 * (cc % 4) + 2)


def month_anchor(month: int, leap: bool) -> int:
    """Doomsday reference day of `month`; January and February shift in leap years."""
    if not 1 <= month <= 12:
        raise ValueError(f"Month must be in 1..12, got {month}")
    return MONTH_ANCHORS[month - 1].day(leap)


def doomsmonth(month: int, day: int, leap: bool) -> Mod7:
    """Offset of `day` from its month's doomsday reference date, mod 7."""
    anchor = month_anchor(month, leap)
    last_day = 29 if month == 2 and leap else DAYS_IN_MONTH[month - 1]
    if not 1 <= day <= last_day:
        raise ValueError(f"Day must be in 1..{last_day} for month {month}, got {day}")
    return Mod7(day - anchor)


def year_doomsday(year: int, method: MethodId = DEFAULT_METHOD) -> Weekday:
    """The weekday shared by every month-anchor date of `year`."""
    split = split_century(year)
    return Weekday.from_residue(doomscentury(split.cc) + doomsyear(split.yy, method))


def day_of_week(date: CalendarDate, method: MethodId = DEFAULT_METHOD) -> Weekday:
    """Weekday of `date`; every method yields the same answer."""
    split = split_century(date.year)
    residue = (
        doomscentury(split.cc)
        + doomsyear(split.yy, method)
        + doomsmonth(date.month, date.day, is_leap_year(date.year))
    )
    return Weekday.from_residue(residue)


def explain(date: CalendarDate, method: MethodId = DEFAULT_METHOD) -> Trace:
    """Every intermediate value of `day_of_week`, doomsyear working included.

    Doomsyear sub-steps are prefixed "doomsyear." so the full-date trace
    keeps unique labels.
    """
    split = split_century(date.year)
    leap = is_leap_year(date.year)

    century = doomscentury(split.cc)
    year_trace = doomsyear_trace(split.yy, method)
    anchor = month_anchor(date.month, leap)
    month = doomsmonth(date.month, date.day, leap)

    steps: List[TraceStep] = [
        TraceStep("cc", split.cc),
        TraceStep("yy", split.yy),
        TraceStep("doomscentury", century),
    ]
    steps.extend(
        TraceStep(f"doomsyear.{step.label}", step.value, step.display)
        for step in year_trace.steps
    )
    steps.extend(
        [
            TraceStep("doomsyear", year_trace.result),
            TraceStep("month_anchor", anchor),
            TraceStep("doomsmonth", month),
            TraceStep("sum", int(century) + int(year_trace.result) + int(month)),
        ]
    )

    trace = Trace(method=method, steps=tuple(steps), result=day_of_week(date, method))
    weekday = Weekday.from_residue(trace.result)
    logger.debug(f"Explained {date} with {method.value}: {weekday.label}")
    return trace


def month_residues(year: int, months: np.ndarray, days: np.ndarray) -> np.ndarray:
    """`doomsmonth` of every (month, day) pair of `year`, as an int64 array."""
    leap = is_leap_year(year)
    return np.fromiter(
        (doomsmonth(int(m), int(d), leap) for m, d in zip(months, days)),
        dtype=np.int64,
        count=len(months),
    )


def batch_residues(
    year: int,
    months: np.ndarray,
    days: np.ndarray,
    method: MethodId = DEFAULT_METHOD,
    month_terms: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Vectorised `day_of_week` residues for many dates of one year.

    Args:
        year: Full year shared by every date
        months: Month numbers (1..12)
        days: Day-of-month numbers, same length as `months`
        method: Doomsyear method
        month_terms: Precomputed `month_residues(year, months, days)`, shared
            when the same dates are checked under several methods

    Returns:
        Array of residues 0..6, element-wise equal to `day_of_week`
    """
    if month_terms is None:
        month_terms = month_residues(year, months, days)
    split = split_century(year)
    base = int(doomscentury(split.cc)) + int(doomsyear(split.yy, method))
    return (base + np.asarray(month_terms, dtype=np.int64)) % 7

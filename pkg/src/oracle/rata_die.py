"""Rata Die day numbering: an independent weekday oracle.

Counts days from proleptic Gregorian 0001-01-01 (day 1) using only its own
month-length table and leap rule. It never calls the Doomsday engine, so
agreement between the two is real evidence rather than a tautology.
"""

from __future__ import annotations

import logging
from itertools import accumulate
from typing import Iterator, NewType, Tuple

import numpy as np

from ..core import CalendarDate, Weekday

logger = logging.getLogger(__name__)

DayNumber = NewType("DayNumber", int)

_MONTH_LENGTHS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
_DAYS_BEFORE_MONTH = (0,) + tuple(accumulate(_MONTH_LENGTHS[:-1]))

DAYS_PER_400_YEARS = 146097
_DAYS_PER_100_YEARS = 36524
_DAYS_PER_4_YEARS = 1461

# Day 1 (0001-01-01, proleptic Gregorian) was a Monday
EPOCH_WEEKDAY = Weekday.MONDAY


def _is_leap(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def _days_before_year(year: int) -> int:
    y = year - 1
    return 365 * y + y // 4 - y // 100 + y // 400


def _days_before_month(year: int, month: int) -> int:
    return _DAYS_BEFORE_MONTH[month - 1] + (1 if month > 2 and _is_leap(year) else 0)


MAX_DAY_NUMBER = DayNumber(_days_before_year(10000))


def rata_die(date: CalendarDate) -> DayNumber:
    """Day number of `date`, with 0001-01-01 as day 1."""
    return DayNumber(
        _days_before_year(date.year) + _days_before_month(date.year, date.month) + date.day
    )


def from_day_number(n: int) -> CalendarDate:
    """Inverse of `rata_die`.

    Raises:
        ValueError: If `n` is outside 1..rata_die(9999-12-31)
    """
    if not 1 <= n <= MAX_DAY_NUMBER:
        raise ValueError(f"Day number must be in 1..{MAX_DAY_NUMBER}, got {n}")

    # Peel off whole 400-, 100-, 4- and 1-year cycles
    n400, rest = divmod(n - 1, DAYS_PER_400_YEARS)
    n100, rest = divmod(rest, _DAYS_PER_100_YEARS)
    n4, rest = divmod(rest, _DAYS_PER_4_YEARS)
    n1, rest = divmod(rest, 365)

    year = n400 * 400 + n100 * 100 + n4 * 4 + n1 + 1
    if n1 == 4 or n100 == 4:
        # Last day of a leap cycle
        return CalendarDate(year - 1, 12, 31)

    leap = n1 == 3 and (n4 != 24 or n100 == 3)
    month = (rest + 50) >> 5
    preceding = _DAYS_BEFORE_MONTH[month - 1] + (1 if month > 2 and leap else 0)
    if preceding > rest:
        month -= 1
        preceding -= _MONTH_LENGTHS[month - 1] + (1 if month == 2 and leap else 0)

    return CalendarDate(year, month, rest - preceding + 1)


def oracle_weekday(date: CalendarDate) -> Weekday:
    """Weekday of `date` from its day number alone."""
    return Weekday.from_residue(rata_die(date) - 1 + EPOCH_WEEKDAY)


def next_day(date: CalendarDate) -> CalendarDate:
    """The following day.

    Raises:
        ValueError: On 9999-12-31, the last supported date
    """
    n = rata_die(date)
    if n >= MAX_DAY_NUMBER:
        raise ValueError(f"No supported date after {date}")
    return from_day_number(n + 1)


def iter_dates(start: CalendarDate, end: CalendarDate) -> Iterator[CalendarDate]:
    """Every date from `start` through `end`, ascending."""
    current = start
    while current <= end:
        yield current
        if current == end:
            break
        current = next_day(current)


def year_dates(year: int) -> Tuple[np.ndarray, np.ndarray]:
    """Month and day arrays covering every date of `year`, ascending."""
    lengths = list(_MONTH_LENGTHS)
    if _is_leap(year):
        lengths[1] = 29

    months = np.repeat(np.arange(1, 13, dtype=np.int64), lengths)
    days = np.concatenate([np.arange(1, length + 1, dtype=np.int64) for length in lengths])
    return months, days


def rata_die_batch(year: int, months: np.ndarray, days: np.ndarray) -> np.ndarray:
    """Vectorised `rata_die` for many dates of one year."""
    months = np.asarray(months, dtype=np.int64)
    before_month = np.asarray(_DAYS_BEFORE_MONTH, dtype=np.int64)[months - 1]
    if _is_leap(year):
        before_month = before_month + (months > 2)
    return _days_before_year(year) + before_month + np.asarray(days, dtype=np.int64)


def oracle_residues(year: int, months: np.ndarray, days: np.ndarray) -> np.ndarray:
    """Vectorised `oracle_weekday` residues (Sunday = 0)."""
    return (rata_die_batch(year, months, days) - 1 + int(EPOCH_WEEKDAY)) % 7

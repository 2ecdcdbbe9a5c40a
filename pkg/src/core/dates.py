"""Proleptic Gregorian calendar dates."""

from __future__ import annotations

from dataclasses import dataclass

MIN_YEAR = 1
MAX_YEAR = 9999

# Common-year month lengths, January first
DAYS_IN_MONTH = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


def is_leap_year(year: int) -> bool:
    """Gregorian leap rule: every 4th year, except centuries not divisible by 400."""
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def days_in_month(year: int, month: int) -> int:
    """Number of days in `month` of `year`.

    Raises:
        ValueError: If month is outside 1..12
    """
    if not 1 <= month <= 12:
        raise ValueError(f"Month must be in 1..12, got {month}")
    if month == 2 and is_leap_year(year):
        return 29
    return DAYS_IN_MONTH[month - 1]


@dataclass(frozen=True, order=True)
class CalendarDate:
    """A validated proleptic Gregorian date.

    Construction of an impossible date (02/30, 02/29 in a common year,
    month 13, ...) raises ValueError, so every instance is a real day.
    """

    year: int
    month: int
    day: int

    def __post_init__(self) -> None:
        for name in ("year", "month", "day"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{name} must be an integer, got {value!r}")

        if not MIN_YEAR <= self.year <= MAX_YEAR:
            raise ValueError(f"Year must be in {MIN_YEAR}..{MAX_YEAR}, got {self.year}")

        last_day = days_in_month(self.year, self.month)
        if not 1 <= self.day <= last_day:
            raise ValueError(
                f"Day must be in 1..{last_day} for {self.year:04d}-{self.month:02d}, got {self.day}"
            )

    @property
    def is_leap(self) -> bool:
        return is_leap_year(self.year)

    def isoformat(self) -> str:
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"

    def __str__(self) -> str:
        return self.isoformat()

"""Tests for the Rata Die day-count oracle."""

import datetime

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core import CalendarDate, Weekday
from src.oracle import (
    DAYS_PER_400_YEARS,
    MAX_DAY_NUMBER,
    from_day_number,
    iter_dates,
    next_day,
    oracle_residues,
    oracle_weekday,
    rata_die,
    rata_die_batch,
    year_dates,
)


def _as_calendar_date(d: datetime.date) -> CalendarDate:
    return CalendarDate(d.year, d.month, d.day)


class TestRataDie:
    """Test day numbering."""

    @pytest.mark.parametrize(
        "date, expected",
        [
            (CalendarDate(1, 1, 1), 1),
            (CalendarDate(1, 12, 31), 365),
            (CalendarDate(2, 1, 1), 366),
            (CalendarDate(1970, 1, 1), 719163),
        ],
    )
    def test_known_day_numbers(self, date, expected):
        assert rata_die(date) == expected

    def test_1970_by_summing_year_lengths(self):
        """Test the epoch offset against a brute-force sum of year lengths."""
        total = sum(
            366 if y % 4 == 0 and (y % 100 != 0 or y % 400 == 0) else 365 for y in range(1, 1970)
        )
        assert rata_die(CalendarDate(1970, 1, 1)) == total + 1

    @given(st.dates())
    @settings(max_examples=500)
    def test_matches_stdlib_ordinal(self, d):
        assert rata_die(_as_calendar_date(d)) == d.toordinal()

    def test_four_hundred_year_cycle(self):
        span = rata_die(CalendarDate(2001, 1, 1)) - rata_die(CalendarDate(1601, 1, 1))
        assert span == DAYS_PER_400_YEARS
        assert DAYS_PER_400_YEARS % 7 == 0

    def test_last_supported_day(self):
        assert rata_die(CalendarDate(9999, 12, 31)) == MAX_DAY_NUMBER


class TestFromDayNumber:
    """Test the inverse mapping."""

    @given(st.dates())
    @settings(max_examples=10000)
    def test_round_trip(self, d):
        date = _as_calendar_date(d)
        assert from_day_number(rata_die(date)) == date

    @pytest.mark.parametrize("year", [1600, 1900, 2000, 2100])
    def test_month_boundaries(self, year):
        """Test the last and first day of every month in century years."""
        for month in range(1, 13):
            first = CalendarDate(year, month, 1)
            assert from_day_number(rata_die(first)) == first
            if month > 1:
                last = from_day_number(rata_die(first) - 1)
                assert last.month == month - 1
                assert last.year == year

    @pytest.mark.parametrize("year", [4, 100, 400, 1996, 2000])
    def test_year_end(self, year):
        last = CalendarDate(year, 12, 31)
        assert from_day_number(rata_die(last)) == last

    @pytest.mark.parametrize("n", [0, -5, MAX_DAY_NUMBER + 1])
    def test_out_of_range(self, n):
        with pytest.raises(ValueError):
            from_day_number(n)


class TestOracleWeekday:
    """Test weekdays from day numbers."""

    @pytest.mark.parametrize(
        "date, expected",
        [
            (CalendarDate(1, 1, 1), Weekday.MONDAY),
            (CalendarDate(1, 1, 8), Weekday.MONDAY),
            (CalendarDate(2000, 4, 4), Weekday.TUESDAY),
            (CalendarDate(2010, 4, 4), Weekday.SUNDAY),
            (CalendarDate(1970, 1, 1), Weekday.THURSDAY),
        ],
    )
    def test_known_weekdays(self, date, expected):
        assert oracle_weekday(date) is expected

    @given(st.dates())
    @settings(max_examples=500)
    def test_matches_stdlib_weekday(self, d):
        # isoweekday: Monday = 1 .. Sunday = 7
        assert oracle_weekday(_as_calendar_date(d)).residue == d.isoweekday() % 7


class TestNextDay:
    """Test stepping forward one day."""

    @pytest.mark.parametrize(
        "date, expected",
        [
            (CalendarDate(1999, 12, 31), CalendarDate(2000, 1, 1)),
            (CalendarDate(1996, 2, 28), CalendarDate(1996, 2, 29)),
            (CalendarDate(1996, 2, 29), CalendarDate(1996, 3, 1)),
            (CalendarDate(1900, 2, 28), CalendarDate(1900, 3, 1)),
            (CalendarDate(2000, 2, 28), CalendarDate(2000, 2, 29)),
        ],
    )
    def test_next_day(self, date, expected):
        assert next_day(date) == expected

    def test_last_supported_date(self):
        with pytest.raises(ValueError):
            next_day(CalendarDate(9999, 12, 31))

    def test_iter_dates_is_consecutive(self):
        dates = list(iter_dates(CalendarDate(1899, 12, 1), CalendarDate(1900, 3, 31)))
        assert dates[0] == CalendarDate(1899, 12, 1)
        assert dates[-1] == CalendarDate(1900, 3, 31)
        numbers = [rata_die(d) for d in dates]
        assert all(b - a == 1 for a, b in zip(numbers, numbers[1:]))
        assert len(dates) == 31 + 31 + 28 + 31

    def test_iter_dates_single_and_empty(self):
        day = CalendarDate(2024, 2, 29)
        assert list(iter_dates(day, day)) == [day]
        assert list(iter_dates(day, CalendarDate(2024, 2, 28))) == []

    def test_iter_dates_stops_at_last_supported_date(self):
        dates = list(iter_dates(CalendarDate(9999, 12, 30), CalendarDate(9999, 12, 31)))
        assert len(dates) == 2


class TestBatch:
    """Test the vectorised helpers against the scalar functions."""

    @pytest.mark.parametrize("year, length", [(1900, 365), (2000, 366), (2023, 365), (2024, 366)])
    def test_year_dates_length(self, year, length):
        months, days = year_dates(year)
        assert len(months) == len(days) == length
        assert (months[0], days[0]) == (1, 1)
        assert (months[-1], days[-1]) == (12, 31)

    @pytest.mark.parametrize("year", [1, 1600, 1900, 2000, 9999])
    def test_batch_matches_scalar(self, year):
        months, days = year_dates(year)
        numbers = rata_die_batch(year, months, days)
        residues = oracle_residues(year, months, days)
        assert np.all(np.diff(numbers) == 1)
        for i in (0, 58, 59, len(months) - 1):
            date = CalendarDate(year, int(months[i]), int(days[i]))
            assert int(numbers[i]) == rata_die(date)
            assert int(residues[i]) == oracle_weekday(date).residue

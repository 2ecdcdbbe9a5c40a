"""Differential verification of every doomsyear method against the day-count oracle.

Checks whole years at a time: the oracle's residues for all dates of a
year are compared with the engine's residues under each method. Years are
split into contiguous chunks that can be checked on a thread pool; the
reported mismatch is always the globally earliest (date, method) pair, so
output does not depend on the worker count.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core import CalendarDate, MethodId, Weekday
from ..core.dates import MAX_YEAR, MIN_YEAR
from ..engine.doomsday import batch_residues, month_residues
from ..oracle.rata_die import oracle_residues, year_dates

logger = logging.getLogger(__name__)

ALL_METHODS: Tuple[MethodId, ...] = tuple(MethodId)


@dataclass(frozen=True)
class Mismatch:
    """A date on which one method disagreed with the oracle."""

    date: CalendarDate
    method: MethodId
    got: Weekday
    expected: Weekday

    def describe(self) -> str:
        return (
            f"MISMATCH {self.date} method={self.method.value} "
            f"got={self.got.label} ({int(self.got)}) "
            f"expected={self.expected.label} ({int(self.expected)})"
        )


@dataclass(frozen=True)
class VerificationReport:
    from_year: int
    to_year: int
    dates_checked: int
    mismatch: Optional[Mismatch] = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def summary(self) -> str:
        if self.mismatch is not None:
            return self.mismatch.describe()
        return f"OK {self.dates_checked} dates checked"


def _method_rank(method: MethodId) -> int:
    return ALL_METHODS.index(method)


def _earliest(mismatches: Sequence[Mismatch]) -> Optional[Mismatch]:
    if not mismatches:
        return None
    return min(mismatches, key=lambda m: (m.date, _method_rank(m.method)))


def check_year(
    year: int, methods: Sequence[MethodId] = ALL_METHODS
) -> Tuple[int, Optional[Mismatch]]:
    """Compare every date of `year` under every method with the oracle.

    Returns:
        Tuple of (dates checked, earliest mismatch or None)
    """
    months, days = year_dates(year)
    expected = oracle_residues(year, months, days)
    month_terms = month_residues(year, months, days)

    first: Optional[Tuple[int, int, MethodId, int]] = None
    for method in methods:
        got = batch_residues(year, months, days, method, month_terms)
        bad = np.flatnonzero(got != expected)
        if bad.size == 0:
            continue
        index = int(bad[0])
        key = (index, _method_rank(method))
        if first is None or key < first[:2]:
            first = (index, _method_rank(method), method, int(got[index]))

    if first is None:
        return len(months), None

    index, _, method, got_residue = first
    date = CalendarDate(year, int(months[index]), int(days[index]))
    mismatch = Mismatch(
        date=date,
        method=method,
        got=Weekday.from_residue(got_residue),
        expected=Weekday.from_residue(int(expected[index])),
    )
    return len(months), mismatch


def _check_chunk(
    years: Sequence[int], methods: Sequence[MethodId]
) -> Tuple[int, Optional[Mismatch]]:
    checked = 0
    first: Optional[Mismatch] = None
    for year in years:
        count, mismatch = check_year(year, methods)
        checked += count
        if mismatch is not None and first is None:
            first = mismatch
    return checked, first


def _partition(years: Sequence[int], parts: int) -> List[Sequence[int]]:
    """Split `years` into at most `parts` contiguous, non-empty chunks."""
    parts = max(1, min(parts, len(years)))
    size, extra = divmod(len(years), parts)
    chunks = []
    start = 0
    for i in range(parts):
        end = start + size + (1 if i < extra else 0)
        chunks.append(years[start:end])
        start = end
    return chunks


def verify_range(
    from_year: int,
    to_year: int,
    methods: Optional[Sequence[MethodId]] = None,
    workers: int = 1,
) -> VerificationReport:
    """Check every date of `from_year`..`to_year` (inclusive) under every method.

    Args:
        from_year: First year checked
        to_year: Last year checked
        methods: Methods to check, in reporting order (default: all)
        workers: Thread count; results are identical for any value

    Returns:
        VerificationReport with the number of dates checked and the earliest mismatch

    Raises:
        ValueError: If the range is empty or outside the supported years
    """
    if not MIN_YEAR <= from_year <= MAX_YEAR or not MIN_YEAR <= to_year <= MAX_YEAR:
        raise ValueError(f"Years must be in {MIN_YEAR}..{MAX_YEAR}, got {from_year}..{to_year}")
    if from_year > to_year:
        raise ValueError(f"Empty year range: {from_year} > {to_year}")
    if workers < 1:
        raise ValueError(f"Worker count must be at least 1, got {workers}")

    methods = tuple(methods) if methods else ALL_METHODS
    years = list(range(from_year, to_year + 1))
    chunks = _partition(years, workers)

    start_time = time.perf_counter()
    if len(chunks) == 1:
        results = [_check_chunk(chunks[0], methods)]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(lambda chunk: _check_chunk(chunk, methods), chunks))
    duration = time.perf_counter() - start_time

    checked = sum(count for count, _ in results)
    mismatch = _earliest([m for _, m in results if m is not None])
    report = VerificationReport(from_year, to_year, checked, mismatch)

    if report.ok:
        logger.info(
            f"Verified {checked} dates ({from_year}..{to_year}) across {len(methods)} methods "
            f"in {duration:.2f}s with {len(chunks)} worker(s)"
        )
    else:
        logger.error(f"Verification failed after {duration:.2f}s: {mismatch.describe()}")
    return report

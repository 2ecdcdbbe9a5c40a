"""Doomsyear: the year-within-century term of the Doomsday rule.

Five interchangeable methods compute the same residue for a two-digit
year x:

- true:                 x + floor(x/4)
- carrollian:           floor(x/12) + x mod 12 + floor((x mod 12)/4)
- decade-anchor:        2y + 10(y mod 2) + z + leaps, with y, z the digits of x
- decade-anchor-lookup: memorised decade anchor + z + memorised leaps
- conway:               anchor adjustment + z0 + leap0 from the nearest zero anchor

Every method has the same three-term shape (anchor, offset from the
anchor, leap-year correction); `decompose` exposes it and
`doomsyear_trace` shows the working the way it is done by hand.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from ..core import (
    MethodId,
    Mod7,
    SplitYear,
    Trace,
    TraceStep,
    check_two_digit_year,
    split_year,
)

logger = logging.getLogger(__name__)


# Decade anchors as memorised for the lookup method, indexed by tens digit
DECADE_ANCHOR_TABLE: Tuple[int, ...] = (0, 5, 4, 2, 1, 6, 5, 3, 2, 0)

# Leap counts by ones digit: (even decade, odd decade)
LEAPS_TABLE: Dict[int, Tuple[int, int]] = {
    0: (0, 0),
    1: (0, 0),
    2: (0, 1),
    3: (0, 1),
    4: (1, 1),
    5: (1, 1),
    6: (1, 2),
    7: (1, 2),
    8: (2, 2),
    9: (2, 2),
}


class LeapCount(int):
    """Leap years after the start of an anchor, up to and including the year: 0, 1 or 2."""

    def __new__(cls, count: int) -> "LeapCount":
        if not 0 <= count <= 2:
            raise ValueError(f"Leap count must be 0, 1 or 2, got {count}")
        return super().__new__(cls, count)


@dataclass(frozen=True, order=True)
class ZeroAnchor:
    """A year of the century whose doomsyear is zero.

    Half anchors (11.5, 39.5, 67.5, 95.5) mark where a leap year made the
    value jump from 6 straight to 1. They are stored as their integer part
    with `is_half` set; no fractional arithmetic is ever needed.
    """

    base_year: int
    is_half: bool = False

    def __post_init__(self) -> None:
        upper = 98 if self.is_half else 99
        if not 0 <= self.base_year <= upper:
            raise ValueError(f"Zero anchor must be in 0..{upper}, got {self.base_year}")

    @property
    def label(self) -> str:
        return f"{self.base_year}.5" if self.is_half else str(self.base_year)

    @property
    def adjustment(self) -> int:
        return -1 if self.is_half else 0


@dataclass(frozen=True)
class Decomposition:
    """The anchor + offset + leap correction shape shared by every method."""

    method: MethodId
    anchor_label: str
    anchor: int
    offset: int
    leap_correction: int
    adjustment: int = 0

    @property
    def total(self) -> int:
        return self.anchor + self.offset + self.leap_correction + self.adjustment

    @property
    def result(self) -> Mod7:
        return Mod7(self.total)


# --- Leap corrections -------------------------------------------------------


def _count_leaps(after: int, through: int) -> int:
    """Years w with after < w <= through and w divisible by 4."""
    return sum(1 for w in range(after + 1, through + 1) if w % 4 == 0)


def leaps_formula(s: SplitYear) -> LeapCount:
    """floor((2(y mod 2) + z) / 4)."""
    return LeapCount((2 * (s.y % 2) + s.z) // 4)


def leaps_by_counting(s: SplitYear) -> LeapCount:
    """Count leap years after the decade start (excluded) up to the year itself (included)."""
    return LeapCount(_count_leaps(10 * s.y, s.x))


def leaps_table(z: int, y_is_odd: bool) -> LeapCount:
    """Memorised leaps value for ones digit `z` in an even or odd decade."""
    if not 0 <= z <= 9:
        raise ValueError(f"Ones digit must be in 0..9, got {z}")
    even, odd = LEAPS_TABLE[z]
    return LeapCount(odd if y_is_odd else even)


# --- Decade anchors ---------------------------------------------------------


def decade_anchor_raw(y: int) -> int:
    """2y + 10(y mod 2), before reduction."""
    if not 0 <= y <= 9:
        raise ValueError(f"Tens digit must be in 0..9, got {y}")
    return 2 * y + 10 * (y % 2)


def decade_anchor(y: int) -> Mod7:
    """(2y + 10(y mod 2)) mod 7."""
    return Mod7(decade_anchor_raw(y))


# --- The methods ------------------------------------------------------------


def true_doomsyear(x: int) -> Mod7:
    """(x + floor(x/4)) mod 7: one step per common year, two per leap year."""
    check_two_digit_year(x)
    return Mod7(x + x // 4)


def carrollian_doomsyear(x: int) -> Mod7:
    check_two_digit_year(x)
    return Mod7(x // 12 + x % 12 + (x % 12) // 4)


def proposed_sum(s: SplitYear) -> int:
    """Unreduced 2y + 10(y mod 2) + z + leaps; always in 0..39."""
    return decade_anchor_raw(s.y) + s.z + leaps_formula(s)


def proposed_doomsyear(s: SplitYear) -> Mod7:
    return Mod7(proposed_sum(s))


def proposed_doomsyear_lookup(s: SplitYear) -> Mod7:
    """decade_anchor(y) + z + leaps, with both anchor and leaps read from memorised tables."""
    return Mod7(DECADE_ANCHOR_TABLE[s.y] + s.z + leaps_table(s.z, s.y_is_odd))


@lru_cache(maxsize=None)
def _zero_anchors() -> Tuple[ZeroAnchor, ...]:
    anchors = []
    for x in range(100):
        value = true_doomsyear(x)
        if value == 0:
            anchors.append(ZeroAnchor(x))
        elif value == 6 and x < 99 and true_doomsyear(x + 1) == 1:
            # A leap year jumped 6 -> 1 and skipped zero
            anchors.append(ZeroAnchor(x, is_half=True))

    logger.debug(f"Derived {len(anchors)} zero anchors: {' '.join(a.label for a in anchors)}")
    return tuple(anchors)


def derive_zero_anchors() -> List[ZeroAnchor]:
    """All zero anchors of a century, ascending.

    Integer anchors are the years with doomsyear 0; half anchors are the
    years with doomsyear 6 followed by a year with doomsyear 1.
    """
    return list(_zero_anchors())


def select_zero_anchor(x: int) -> ZeroAnchor:
    """Nearest zero anchor below `x`, or `x` itself when it is a whole anchor."""
    check_two_digit_year(x)
    chosen: Optional[ZeroAnchor] = None
    for anchor in _zero_anchors():
        if anchor.base_year < x or (anchor.base_year == x and not anchor.is_half):
            chosen = anchor
        else:
            break

    # Year 0 is always an anchor, so every x finds one
    assert chosen is not None
    return chosen


def conway_doomsyear(x: int) -> Mod7:
    """anchor_adjustment + z0 + leap0, measured from the nearest zero anchor below x."""
    anchor = select_zero_anchor(x)
    z0 = x - anchor.base_year
    leap0 = _count_leaps(anchor.base_year, x)
    return Mod7(anchor.adjustment + z0 + leap0)


def _proposed_from_x(x: int) -> Mod7:
    return proposed_doomsyear(split_year(x))


def _proposed_lookup_from_x(x: int) -> Mod7:
    return proposed_doomsyear_lookup(split_year(x))


# Dispatch table; tests may swap an entry to simulate a broken method
STRATEGIES: Dict[MethodId, Callable[[int], Mod7]] = {
    MethodId.TRUE: true_doomsyear,
    MethodId.CARROLLIAN: carrollian_doomsyear,
    MethodId.DECADE_ANCHOR: _proposed_from_x,
    MethodId.DECADE_ANCHOR_LOOKUP: _proposed_lookup_from_x,
    MethodId.CONWAY_ZERO_ANCHOR: conway_doomsyear,
}


def doomsyear(x: int, method: MethodId) -> Mod7:
    """Doomsyear of two-digit year `x` computed with `method`."""
    check_two_digit_year(x)
    strategy = STRATEGIES.get(method)
    if strategy is None:
        raise ValueError(f"Unknown doomsyear method: {method!r}")
    return Mod7(strategy(x))


def doomsyear_values(method: MethodId) -> Tuple[Mod7, ...]:
    """Doomsyear of 0..99 under `method`, index = two-digit year."""
    return tuple(doomsyear(x, method) for x in range(100))


# --- Three-term decomposition -----------------------------------------------


def _decompose_true(x: int) -> Decomposition:
    return Decomposition(MethodId.TRUE, "0", 0, x, x // 4)


def _decompose_carrollian(x: int) -> Decomposition:
    return Decomposition(
        MethodId.CARROLLIAN, str(12 * (x // 12)), x // 12, x % 12, (x % 12) // 4
    )


def _decompose_decade(x: int) -> Decomposition:
    s = split_year(x)
    return Decomposition(
        MethodId.DECADE_ANCHOR, str(10 * s.y), decade_anchor_raw(s.y), s.z, leaps_formula(s)
    )


def _decompose_decade_lookup(x: int) -> Decomposition:
    s = split_year(x)
    return Decomposition(
        MethodId.DECADE_ANCHOR_LOOKUP,
        str(10 * s.y),
        DECADE_ANCHOR_TABLE[s.y],
        s.z,
        leaps_table(s.z, s.y_is_odd),
    )


def _decompose_conway(x: int) -> Decomposition:
    anchor = select_zero_anchor(x)
    return Decomposition(
        MethodId.CONWAY_ZERO_ANCHOR,
        anchor.label,
        0,
        x - anchor.base_year,
        _count_leaps(anchor.base_year, x),
        anchor.adjustment,
    )


_DECOMPOSERS: Dict[MethodId, Callable[[int], Decomposition]] = {
    MethodId.TRUE: _decompose_true,
    MethodId.CARROLLIAN: _decompose_carrollian,
    MethodId.DECADE_ANCHOR: _decompose_decade,
    MethodId.DECADE_ANCHOR_LOOKUP: _decompose_decade_lookup,
    MethodId.CONWAY_ZERO_ANCHOR: _decompose_conway,
}


def decompose(x: int, method: MethodId) -> Decomposition:
    """Split the doomsyear of `x` into anchor, offset and leap correction."""
    check_two_digit_year(x)
    if method not in _DECOMPOSERS:
        raise ValueError(f"Unknown doomsyear method: {method!r}")
    return _DECOMPOSERS[method](x)


# --- Traces -----------------------------------------------------------------


def _trace_true(x: int) -> List[TraceStep]:
    return [
        TraceStep("x", x),
        TraceStep("floor(x/4)", x // 4),
        TraceStep("sum", x + x // 4),
    ]


def _trace_carrollian(x: int) -> List[TraceStep]:
    d = _decompose_carrollian(x)
    return [
        TraceStep("anchor12", d.anchor),
        TraceStep("z12", d.offset),
        TraceStep("leap12", d.leap_correction),
        TraceStep("sum", d.total),
    ]


def _trace_decade(x: int) -> List[TraceStep]:
    s = split_year(x)
    return [
        TraceStep("2y", 2 * s.y),
        TraceStep("10(y mod 2)", 10 * (s.y % 2)),
        TraceStep("z", s.z),
        TraceStep("leaps", leaps_formula(s)),
        TraceStep("sum", proposed_sum(s)),
    ]


def _trace_decade_lookup(x: int) -> List[TraceStep]:
    d = _decompose_decade_lookup(x)
    return [
        TraceStep("decade_anchor", d.anchor),
        TraceStep("z", d.offset),
        TraceStep("leaps", d.leap_correction),
        TraceStep("sum", d.total),
    ]


def _trace_conway(x: int) -> List[TraceStep]:
    anchor = select_zero_anchor(x)
    d = _decompose_conway(x)
    return [
        TraceStep("anchor", anchor.base_year, display=anchor.label),
        TraceStep("z0", d.offset),
        TraceStep("leap0", d.leap_correction),
        TraceStep("adjustment", d.adjustment),
        TraceStep("sum", d.total),
    ]


_TRACERS: Dict[MethodId, Callable[[int], List[TraceStep]]] = {
    MethodId.TRUE: _trace_true,
    MethodId.CARROLLIAN: _trace_carrollian,
    MethodId.DECADE_ANCHOR: _trace_decade,
    MethodId.DECADE_ANCHOR_LOOKUP: _trace_decade_lookup,
    MethodId.CONWAY_ZERO_ANCHOR: _trace_conway,
}


def doomsyear_trace(x: int, method: MethodId) -> Trace:
    """Worked steps for the doomsyear of `x`; the final step is the unreduced sum."""
    check_two_digit_year(x)
    tracer = _TRACERS.get(method)
    if tracer is None:
        raise ValueError(f"Unknown doomsyear method: {method!r}")
    return Trace(method=method, steps=tuple(tracer(x)), result=doomsyear(x, method))

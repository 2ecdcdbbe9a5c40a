"""Value types shared by every doomsyear method.

All of them are immutable; mod-7 arithmetic is closed over `Mod7` so sums
of residues never escape 0..6.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum


class Mod7(int):
    """A residue modulo 7, always fully reduced to 0..6.

    Subclasses int so residues compare and format like plain numbers, while
    addition, subtraction and negation stay inside the residue ring.
    """

    def __new__(cls, value: int) -> "Mod7":
        return super().__new__(cls, int(value) % 7)

    @property
    def value(self) -> int:
        return int(self)

    def __add__(self, other: int) -> "Mod7":
        return Mod7(int(self) + int(other))

    __radd__ = __add__

    def __sub__(self, other: int) -> "Mod7":
        return Mod7(int(self) - int(other))

    def __rsub__(self, other: int) -> "Mod7":
        return Mod7(int(other) - int(self))

    def __neg__(self) -> "Mod7":
        return Mod7(-int(self))


def reduce_mod7(n: int) -> Mod7:
    """Reduce any integer, negative included, into 0..6."""
    return Mod7(n)


class Weekday(IntEnum):
    """Weekday names keyed by residue, Sunday = 0."""

    SUNDAY = 0
    MONDAY = 1
    TUESDAY = 2
    WEDNESDAY = 3
    THURSDAY = 4
    FRIDAY = 5
    SATURDAY = 6

    @property
    def residue(self) -> Mod7:
        return Mod7(self.value)

    @property
    def label(self) -> str:
        """Canonical display name, e.g. "Sunday"."""
        return self.name.title()

    @classmethod
    def from_residue(cls, residue: int) -> "Weekday":
        return cls(int(Mod7(residue)))

    @classmethod
    def from_name(cls, name: str) -> "Weekday":
        """Look up a weekday by its name, ignoring case and surrounding space."""
        key = name.strip().upper()
        if key not in cls.__members__:
            raise ValueError(f"Unknown weekday name: {name!r}")
        return cls[key]


class MethodId(str, Enum):
    """Doomsyear calculation methods, in their fixed reporting order."""

    TRUE = "true"
    CARROLLIAN = "carrollian"
    DECADE_ANCHOR = "decade-anchor"
    DECADE_ANCHOR_LOOKUP = "decade-anchor-lookup"
    CONWAY_ZERO_ANCHOR = "conway"

    @classmethod
    def parse(cls, text: str) -> "MethodId":
        """Accept either the value ("decade-anchor") or member name ("DECADE_ANCHOR")."""
        cleaned = text.strip()
        for method in cls:
            if cleaned.lower() == method.value or cleaned.upper() == method.name:
                return method
        choices = ", ".join(m.value for m in cls)
        raise ValueError(f"Unknown method {text!r}; expected one of: {choices}")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CenturySplit:
    """A year broken into its century `cc` and year-within-century `yy`."""

    cc: int
    yy: int

    def __post_init__(self) -> None:
        if self.cc < 0:
            raise ValueError(f"Century must be non-negative, got {self.cc}")
        if not 0 <= self.yy <= 99:
            raise ValueError(f"Year within century must be in 0..99, got {self.yy}")

    @property
    def year(self) -> int:
        return self.cc * 100 + self.yy


@dataclass(frozen=True)
class SplitYear:
    """A two-digit year as its tens digit `y` and ones digit `z`."""

    y: int
    z: int

    def __post_init__(self) -> None:
        if not 0 <= self.y <= 9:
            raise ValueError(f"Tens digit must be in 0..9, got {self.y}")
        if not 0 <= self.z <= 9:
            raise ValueError(f"Ones digit must be in 0..9, got {self.z}")

    @property
    def x(self) -> int:
        return 10 * self.y + self.z

    @property
    def y_is_odd(self) -> bool:
        return self.y % 2 == 1


def check_two_digit_year(x: int) -> int:
    """Return `x` unchanged, or raise ValueError if it is not in 0..99."""
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"Two-digit year must be an integer, got {x!r}")
    if not 0 <= x <= 99:
        raise ValueError(f"Two-digit year must be in 0..99, got {x}")
    return x


def split_year(x: int) -> SplitYear:
    """Split a two-digit year into tens and ones digits (74 -> y=7, z=4)."""
    check_two_digit_year(x)
    return SplitYear(y=x // 10, z=x % 10)


def split_century(year: int) -> CenturySplit:
    """Split a full year into century and year-within-century (1974 -> 19, 74)."""
    if year < 1:
        raise ValueError(f"Year must be >= 1, got {year}")
    return CenturySplit(cc=year // 100, yy=year % 100)

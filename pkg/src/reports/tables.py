"""Regenerate the decade-anchor, leaps, doomsyear and zero-anchor tables.

Every cell is computed from the engine; nothing here is copied in by hand,
so a table that disagrees with its published counterpart points at an
engine bug.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple, Union

import pandas as pd

from ..core import MethodId, SplitYear
from ..engine.doomsyear import (
    decade_anchor,
    decade_anchor_raw,
    decompose,
    derive_zero_anchors,
    doomsyear,
    leaps_formula,
)

logger = logging.getLogger(__name__)

Cell = Union[int, str]

FORMATS = ("tsv", "markdown")


@dataclass(frozen=True)
class TableDocument:
    """A titled table whose rows all match the header's arity."""

    title: str
    header: Tuple[str, ...]
    rows: Tuple[Tuple[Cell, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "header", tuple(self.header))
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        width = len(self.header)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(
                    f"Row {i} of {self.title!r} has {len(row)} cells, header has {width}"
                )

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([list(row) for row in self.rows], columns=list(self.header))

    def column(self, name: str) -> List[Cell]:
        index = self.header.index(name)
        return [row[index] for row in self.rows]

    def row_for(self, key: Cell) -> Tuple[Cell, ...]:
        """First row whose leading cell equals `key`."""
        for row in self.rows:
            if row[0] == key:
                return row
        raise KeyError(f"No row keyed {key!r} in {self.title!r}")


def table1() -> TableDocument:
    """Decade anchor lookup: y, decade, 2y + 10(y mod 2), anchor."""
    rows = [
        (y, f"{10 * y:02d}'s", decade_anchor_raw(y), int(decade_anchor(y))) for y in range(10)
    ]
    return TableDocument("Decade anchor lookup", ("y", "decade", "raw", "anchor"), rows)


def table2() -> TableDocument:
    """Possible leaps values per ones digit, split by decade parity."""
    rows = []
    for z in range(10):
        even = int(leaps_formula(SplitYear(0, z)))
        odd = int(leaps_formula(SplitYear(1, z)))
        combined = str(even) if even == odd else f"{even} or {odd}"
        rows.append((z, combined, even, odd))
    return TableDocument("Possible values for leaps", ("z", "leaps", "even", "odd"), rows)


def table3() -> TableDocument:
    """Doomsyear of 00..99 by the Carrollian method and the decade-anchor method."""
    rows = [
        (
            x,
            int(doomsyear(x, MethodId.CARROLLIAN)),
            int(doomsyear(x, MethodId.DECADE_ANCHOR)),
        )
        for x in range(100)
    ]
    return TableDocument(
        "Doomsyear values from 00 to 99", ("year", "carrollian", "proposed"), rows
    )


def anchor_table() -> TableDocument:
    rows = [
        (anchor.label, anchor.base_year, "yes" if anchor.is_half else "no")
        for anchor in derive_zero_anchors()
    ]
    return TableDocument("Zero-anchor years", ("anchor", "base_year", "half"), rows)


def comparison_table() -> TableDocument:
    """Decade, zero-anchor and dozen-year decompositions of every two-digit year."""
    rows = []
    for x in range(100):
        decade = decompose(x, MethodId.DECADE_ANCHOR)
        conway = decompose(x, MethodId.CONWAY_ZERO_ANCHOR)
        dozen = decompose(x, MethodId.CARROLLIAN)
        rows.append(
            (
                x,
                int(decade.result),
                int(decade.anchor),
                decade.offset,
                int(decade.leap_correction),
                conway.anchor_label,
                conway.offset,
                conway.leap_correction,
                conway.adjustment,
                dozen.anchor,
                dozen.offset,
                dozen.leap_correction,
            )
        )
    header = (
        "x",
        "doomsyear",
        "decade_anchor",
        "z",
        "leaps",
        "zero_anchor",
        "z0",
        "leap0",
        "adjustment",
        "anchor12",
        "z12",
        "leap12",
    )
    return TableDocument("Three-term decompositions", header, rows)


TABLES: Dict[str, Callable[[], TableDocument]] = {
    "1": table1,
    "2": table2,
    "3": table3,
    "anchors": anchor_table,
    "compare": comparison_table,
}


def _markdown_row(cells: Sequence[Cell]) -> str:
    return "| " + " | ".join(str(cell) for cell in cells) + " |"


def render(doc: TableDocument, fmt: str = "tsv") -> str:
    """Render `doc` as TSV or a Markdown pipe table.

    TSV is the header line plus one line per row, tab separated, each line
    newline terminated. Output is byte-for-byte deterministic.
    """
    if fmt == "tsv":
        return doc.to_frame().to_csv(sep="\t", index=False, lineterminator="\n")

    if fmt == "markdown":
        lines = [
            f"### {doc.title}",
            "",
            _markdown_row(doc.header),
            _markdown_row(["---"] * len(doc.header)),
        ]
        lines.extend(_markdown_row(row) for row in doc.rows)
        return "\n".join(lines) + "\n"

    raise ValueError(f"Unknown table format {fmt!r}; expected one of: {', '.join(FORMATS)}")

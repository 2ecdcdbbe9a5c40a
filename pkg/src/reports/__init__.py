"""Table regeneration and rendering."""

from .tables import (
    FORMATS,
    TABLES,
    TableDocument,
    anchor_table,
    comparison_table,
    render,
    table1,
    table2,
    table3,
)

__all__ = [
    "FORMATS",
    "TABLES",
    "TableDocument",
    "anchor_table",
    "comparison_table",
    "render",
    "table1",
    "table2",
    "table3",
]

#!/usr/bin/env python3
"""Regenerate every table as TSV and Markdown.

Writes one .tsv and one .md file per registered table into
DOOMSDAY_TABLES_DIR (default docs/tables), then re-checks that the two
doomsyear columns of table 3 agree on every row.

Usage:
    python scripts/regenerate_tables.py                 # All tables
    python scripts/regenerate_tables.py --tables 1 3    # Just tables 1 and 3
    python scripts/regenerate_tables.py --out /tmp/t    # Alternate directory
"""

from __future__ import annotations

import argparse
import logging
import sys
from datetime import datetime
from pathlib import Path

# Make `src` importable when run as a script
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.reports.tables import TABLES, render, table3
from src.utils.config import Config

logger = logging.getLogger(__name__)


def write_table(name: str, out_dir: Path) -> int:
    """Write table `name` in both formats; returns its row count."""
    doc = TABLES[name]()
    for fmt, suffix in (("tsv", "tsv"), ("markdown", "md")):
        path = out_dir / f"table_{name}.{suffix}"
        path.write_text(render(doc, fmt), encoding="utf-8")
        logger.info(f"Wrote {path} ({len(doc.rows)} rows)")
    return len(doc.rows)


def check_table3() -> bool:
    """True when the Carrollian and decade-anchor columns agree everywhere."""
    disagreements = [row for row in table3().rows if row[1] != row[2]]
    for year, carrollian, proposed in disagreements:
        logger.error(f"Table 3 row {year}: carrollian={carrollian} proposed={proposed}")
    return not disagreements


def main() -> int:
    config = Config.from_env()

    parser = argparse.ArgumentParser(description="Regenerate doomsyear tables")
    parser.add_argument("--tables", nargs="+", choices=list(TABLES), help="Tables to write")
    parser.add_argument("--out", type=Path, default=config.tables_dir, help="Output directory")
    args = parser.parse_args()

    logging.basicConfig(
        level=getattr(logging, config.log_level, logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )

    start_time = datetime.now()
    args.out.mkdir(parents=True, exist_ok=True)

    names = args.tables or list(TABLES)
    rows = {name: write_table(name, args.out) for name in names}

    logger.info("=" * 60)
    logger.info("TABLE REGENERATION SUMMARY")
    logger.info("=" * 60)
    for name, count in rows.items():
        logger.info(f"Table {name:<8} {count:>4} rows")
    logger.info(f"Output: {args.out}")
    logger.info(f"Duration: {(datetime.now() - start_time).total_seconds():.2f} seconds")

    if not check_table3():
        logger.error("Table 3 columns disagree")
        return 1
    logger.info("Table 3: Carrollian and decade-anchor columns agree on all 100 rows")
    return 0


if __name__ == "__main__":
    sys.exit(main())

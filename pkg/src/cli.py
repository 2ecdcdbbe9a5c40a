#!/usr/bin/env python3
"""Command line interface for the Doomsday engine.

Usage:
    python -m src.cli dow 2010-04-04                  # Sunday
    python -m src.cli dow 04/04/1974 --numeric        # 4
    python -m src.cli explain 1998-12-25 --method conway
    python -m src.cli doomsyear 74 --trace
    python -m src.cli tables 3 --format tsv
    python -m src.cli anchors
    python -m src.cli verify --from 1990 --to 1999

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, TextIO

from .core import CalendarDate, MethodId, Weekday
from .engine import (
    day_of_week,
    derive_zero_anchors,
    doomsyear,
    doomsyear_trace,
    explain,
)
from .reports import FORMATS, TABLES, render
from .utils.config import Config
from .utils.verify import verify_range

logger = logging.getLogger(__name__)

# Earliest date computed without a proleptic-calendar warning
CIVIL_GREGORIAN_START = CalendarDate(1583, 10, 15)

_ISO_DATE = re.compile(r"^([0-9]{4})-([0-9]{1,2})-([0-9]{1,2})$")
_US_DATE = re.compile(r"^([0-9]{1,2})/([0-9]{1,2})/([0-9]{4})$")


@dataclass
class CliConfig:
    """A fully parsed command line."""

    command: str
    method: MethodId = MethodId.DECADE_ANCHOR
    date: Optional[CalendarDate] = None
    year: Optional[int] = None
    from_year: Optional[int] = None
    to_year: Optional[int] = None
    workers: int = 1
    table: Optional[str] = None
    fmt: str = "tsv"
    numeric: bool = False
    trace: bool = False
    verbose: bool = False


def parse_date_arg(text: str) -> CalendarDate:
    """Parse `YYYY-MM-DD` or `MM/DD/YYYY` into a CalendarDate.

    Raises:
        argparse.ArgumentTypeError: If the text is malformed or names an impossible date
    """
    cleaned = text.strip()
    iso = _ISO_DATE.match(cleaned)
    us = _US_DATE.match(cleaned)
    if iso:
        year, month, day = (int(part) for part in iso.groups())
    elif us:
        month, day, year = (int(part) for part in us.groups())
    else:
        raise argparse.ArgumentTypeError(
            f"invalid date {text!r}: expected YYYY-MM-DD or MM/DD/YYYY"
        )

    try:
        return CalendarDate(year, month, day)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid date {text!r}: {e}") from None


def _method_arg(text: str) -> MethodId:
    try:
        return MethodId.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _two_digit_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid two-digit year {text!r}") from None
    if not 0 <= value <= 99:
        raise argparse.ArgumentTypeError(f"two-digit year must be in 0..99, got {value}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser(defaults: Optional[Config] = None) -> argparse.ArgumentParser:
    defaults = defaults or Config()

    parser = argparse.ArgumentParser(
        prog="doomsday",
        description="Day-of-week calculation with interchangeable doomsyear methods",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")

    method_parent = argparse.ArgumentParser(add_help=False)
    method_parent.add_argument(
        "--method",
        type=_method_arg,
        default=defaults.default_method,
        help=f"Doomsyear method: {', '.join(m.value for m in MethodId)} "
        f"(default: {defaults.default_method.value})",
    )

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    dow = sub.add_parser("dow", parents=[method_parent], help="Print the weekday of a date")
    dow.add_argument("date", type=parse_date_arg, help="YYYY-MM-DD or MM/DD/YYYY")
    dow.add_argument("--numeric", action="store_true", help="Print the residue (Sunday = 0)")

    expl = sub.add_parser("explain", parents=[method_parent], help="Show the worked calculation")
    expl.add_argument("date", type=parse_date_arg, help="YYYY-MM-DD or MM/DD/YYYY")

    year = sub.add_parser(
        "doomsyear", parents=[method_parent], help="Print the doomsyear of a two-digit year"
    )
    year.add_argument("year", type=_two_digit_arg, help="Two-digit year, 0..99")
    year.add_argument("--trace", action="store_true", help="Show the worked steps")

    tables = sub.add_parser("tables", help="Regenerate a table")
    tables.add_argument("table", choices=list(TABLES), help="Which table")
    tables.add_argument("--format", dest="fmt", choices=FORMATS, default="tsv")

    sub.add_parser("anchors", help="List the zero-anchor years")

    verify = sub.add_parser("verify", help="Check every method against the day-count oracle")
    verify.add_argument("--from", dest="from_year", type=int, default=defaults.verify_from_year)
    verify.add_argument("--to", dest="to_year", type=int, default=defaults.verify_to_year)
    verify.add_argument(
        "--workers", type=_positive_int, default=defaults.verify_workers, help="Thread count"
    )

    return parser


def parse_cli(argv: Optional[Sequence[str]] = None) -> CliConfig:
    """Parse and validate a command line; usage errors exit with status 2."""
    parser = build_parser()
    args = parser.parse_args(argv)

    config = CliConfig(command=args.command, verbose=args.verbose)
    config.method = getattr(args, "method", config.method)
    config.date = getattr(args, "date", None)
    config.year = getattr(args, "year", None)
    config.numeric = getattr(args, "numeric", False)
    config.trace = getattr(args, "trace", False)
    config.table = getattr(args, "table", None)
    config.fmt = getattr(args, "fmt", "tsv")

    if args.command == "verify":
        if not 1 <= args.from_year <= 9999 or not 1 <= args.to_year <= 9999:
            parser.error(f"years must be in 1..9999, got {args.from_year}..{args.to_year}")
        if args.from_year > args.to_year:
            parser.error(f"--from {args.from_year} is after --to {args.to_year}")
        config.from_year = args.from_year
        config.to_year = args.to_year
        config.workers = args.workers

    return config


def _warn_if_before_civil_use(date: CalendarDate) -> None:
    if date < CIVIL_GREGORIAN_START:
        logger.warning(
            f"{date} is before {CIVIL_GREGORIAN_START}; using proleptic Gregorian rules"
        )


def _run_dow(config: CliConfig, out: TextIO) -> int:
    _warn_if_before_civil_use(config.date)
    weekday = day_of_week(config.date, config.method)
    print(int(weekday) if config.numeric else weekday.label, file=out)
    return 0


def _run_explain(config: CliConfig, out: TextIO) -> int:
    _warn_if_before_civil_use(config.date)
    trace = explain(config.date, config.method)
    for line in trace.lines():
        print(line, file=out)
    weekday = Weekday.from_residue(trace.result)
    print(f"result: {weekday.label} ({int(weekday)})", file=out)
    return 0


def _run_doomsyear(config: CliConfig, out: TextIO) -> int:
    if not config.trace:
        print(int(doomsyear(config.year, config.method)), file=out)
        return 0

    trace = doomsyear_trace(config.year, config.method)
    for line in trace.lines():
        print(line, file=out)
    print(f"result: {int(trace.result)}", file=out)
    return 0


def _run_tables(config: CliConfig, out: TextIO) -> int:
    out.write(render(TABLES[config.table](), config.fmt))
    return 0


def _run_anchors(config: CliConfig, out: TextIO) -> int:
    print(" ".join(anchor.label for anchor in derive_zero_anchors()), file=out)
    return 0


def _run_verify(config: CliConfig, out: TextIO) -> int:
    report = verify_range(config.from_year, config.to_year, workers=config.workers)
    print(report.summary(), file=out)
    return 0 if report.ok else 1


_HANDLERS: Dict[str, Callable[[CliConfig, TextIO], int]] = {
    "dow": _run_dow,
    "explain": _run_explain,
    "doomsyear": _run_doomsyear,
    "tables": _run_tables,
    "anchors": _run_anchors,
    "verify": _run_verify,
}


def run(config: CliConfig, out: Optional[TextIO] = None) -> int:
    """Execute a parsed command, writing normal output to `out` (default stdout).

    Returns:
        Process exit code
    """
    handler = _HANDLERS.get(config.command)
    if handler is None:
        raise ValueError(f"Unknown command: {config.command}")
    return handler(config, out or sys.stdout)


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = parse_cli(argv)
    logging.basicConfig(
        level=logging.INFO if config.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

"""Tests for the command line interface."""

import argparse
import io
import logging

import pytest

from src.cli import CliConfig, main, parse_cli, parse_date_arg, run
from src.core import CalendarDate, MethodId
from src.engine import STRATEGIES, conway_doomsyear, doomsmonth


def _run(argv):
    """Parse and run a command line, returning (exit code, stdout)."""
    out = io.StringIO()
    code = run(parse_cli(argv), out)
    return code, out.getvalue()


class TestParseDate:
    """Test date argument parsing."""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("2010-04-04", CalendarDate(2010, 4, 4)),
            ("04/04/1974", CalendarDate(1974, 4, 4)),
            ("1/2/2003", CalendarDate(2003, 1, 2)),
            (" 2000-02-29 ", CalendarDate(2000, 2, 29)),
            ("0001-01-01", CalendarDate(1, 1, 1)),
        ],
    )
    def test_valid_dates(self, text, expected):
        assert parse_date_arg(text) == expected

    @pytest.mark.parametrize(
        "text",
        [
            "02/29/1900",
            "2023-13-01",
            "2023-04-31",
            "0000-01-01",
            "tomorrow",
            "2023/04/04",
            "\uff12\uff10\uff11\uff10-04-04",
            "04/04/\u0661\u0669\u0667\u0664",
        ],
    )
    def test_invalid_dates(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_date_arg(text)


class TestParseCli:
    """Test argument parsing and usage errors."""

    def test_defaults(self):
        config = parse_cli(["dow", "2010-04-04"])
        assert config == CliConfig(
            command="dow", method=MethodId.DECADE_ANCHOR, date=CalendarDate(2010, 4, 4)
        )

    def test_method_by_value_or_name(self):
        assert parse_cli(["dow", "2010-04-04", "--method", "conway"]).method is (
            MethodId.CONWAY_ZERO_ANCHOR
        )
        assert parse_cli(["doomsyear", "74", "--method", "CARROLLIAN"]).method is (
            MethodId.CARROLLIAN
        )

    def test_verify_defaults(self):
        config = parse_cli(["verify"])
        assert (config.from_year, config.to_year, config.workers) == (1583, 3000, 1)

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["weekday", "2010-04-04"],
            ["dow"],
            ["dow", "2010-04-04", "--bogus"],
            ["dow", "02/29/1900"],
            ["dow", "2010-04-04", "--method", "zeller"],
            ["doomsyear", "100"],
            ["tables", "4"],
            ["tables", "1", "--format", "csv"],
            ["verify", "--from", "2000", "--to", "1999"],
            ["verify", "--from", "0"],
            ["verify", "--workers", "0"],
        ],
    )
    def test_usage_errors_exit_2(self, argv, capsys):
        with pytest.raises(SystemExit) as exc_info:
            parse_cli(argv)
        assert exc_info.value.code == 2
        assert capsys.readouterr().err


class TestCommands:
    """Test each command's output."""

    def test_dow(self):
        assert _run(["dow", "2010-04-04"]) == (0, "Sunday\n")

    def test_dow_numeric(self):
        assert _run(["dow", "04/04/1974", "--numeric"]) == (0, "4\n")

    @pytest.mark.parametrize("method", [m.value for m in MethodId])
    def test_dow_every_method(self, method):
        assert _run(["dow", "1998-12-25", "--method", method]) == (0, "Friday\n")

    def test_explain(self):
        code, output = _run(["explain", "1998-12-25", "--method", "conway"])
        lines = output.splitlines()
        assert code == 0
        assert lines[0] == "cc: 19"
        assert lines[1] == "yy: 98"
        assert "doomsyear.anchor: 95.5" in lines
        assert lines[-1] == "result: Friday (5)"

    def test_doomsyear(self):
        assert _run(["doomsyear", "74"]) == (0, "1\n")
        assert _run(["doomsyear", "99", "--method", "carrollian"]) == (0, "4\n")

    def test_doomsyear_trace(self):
        code, output = _run(["doomsyear", "74", "--trace"])
        assert code == 0
        assert output.splitlines() == [
            "2y: 14",
            "10(y mod 2): 10",
            "z: 4",
            "leaps: 1",
            "sum: 29",
            "result: 1",
        ]

    def test_tables_tsv(self):
        code, output = _run(["tables", "3", "--format", "tsv"])
        lines = output.splitlines()
        assert code == 0
        assert len(lines) == 101
        assert lines[0] == "year\tcarrollian\tproposed"
        assert "74\t1\t1" in lines

    def test_tables_markdown(self):
        code, output = _run(["tables", "1", "--format", "markdown"])
        assert code == 0
        assert output.startswith("### Decade anchor lookup\n")
        assert "| 3 | 30's | 16 | 2 |" in output

    def test_anchors(self):
        code, output = _run(["anchors"])
        assert code == 0
        assert output == "0 6 11.5 17 23 28 34 39.5 45 51 56 62 67.5 73 79 84 90 95.5\n"

    def test_verify_ok(self):
        assert _run(["verify", "--from", "1990", "--to", "1999"]) == (
            0,
            "OK 3652 dates checked\n",
        )

    def test_verify_with_workers(self):
        code, output = _run(["verify", "--from", "1990", "--to", "1999", "--workers", "4"])
        assert (code, output) == (0, "OK 3652 dates checked\n")

    def test_verify_mismatch_exits_1(self, monkeypatch):
        def broken(x):
            return conway_doomsyear(x) + (1 if x == 95 else 0)

        monkeypatch.setitem(STRATEGIES, MethodId.CONWAY_ZERO_ANCHOR, broken)
        code, output = _run(["verify", "--from", "1990", "--to", "1999"])
        assert code == 1
        assert output.startswith("MISMATCH 1995-01-01 method=conway")

    def test_unknown_command_in_run(self):
        with pytest.raises(ValueError):
            run(CliConfig(command="nope"), io.StringIO())


@pytest.fixture
def restore_root_logging():
    """Undo the root-logger setup `main` performs."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.mark.usefixtures("restore_root_logging")
class TestMain:
    """Test the entry point end to end."""

    def test_main_prints_to_stdout(self, capsys):
        assert main(["dow", "2010-04-04"]) == 0
        assert capsys.readouterr().out == "Sunday\n"

    def test_warning_before_civil_gregorian(self, capsys):
        assert main(["dow", "1582-10-04"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "Monday\n"
        assert captured.err.startswith("WARNING: 1582-10-04 is before 1583-10-15")
        assert "proleptic Gregorian" in captured.err

    def test_no_warning_from_civil_gregorian_start(self, capsys):
        main(["dow", "1583-10-15"])
        assert capsys.readouterr().err == ""

    def test_doomsyear_does_not_warn(self, capsys):
        main(["doomsyear", "5"])
        captured = capsys.readouterr()
        assert captured.out == "6\n"
        assert captured.err == ""

    def test_logging_reconfigured_on_every_call(self, capsys):
        """Test a second call replaces the handlers installed by the first."""
        main(["dow", "1500-01-01"])
        main(["dow", "1500-01-01"])
        err = capsys.readouterr().err
        assert err.count("WARNING:") == 2
        assert len(logging.getLogger().handlers) == 1

    def test_verbose_logs_progress(self, capsys):
        assert main(["-v", "verify", "--from", "2001", "--to", "2002"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "OK 730 dates checked\n"
        assert "INFO: Verified 730 dates" in captured.err

    def test_verify_month_term_mismatch_exits_1(self, monkeypatch, capsys):
        original = doomsmonth

        def shifted(month, day, leap):
            return original(month, day, leap) + (1 if (month, day) == (12, 25) else 0)

        monkeypatch.setattr("src.engine.doomsday.doomsmonth", shifted)
        assert main(["verify", "--from", "1998", "--to", "1998"]) == 1
        captured = capsys.readouterr()
        assert captured.out.startswith("MISMATCH 1998-12-25 method=true got=Saturday")
        assert "ERROR: Verification failed" in captured.err

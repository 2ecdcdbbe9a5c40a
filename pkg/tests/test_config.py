"""Tests for configuration loading."""

import os
from pathlib import Path
from unittest.mock import patch

import pytest

from src.core import MethodId
from src.utils.config import PROJECT_ROOT, Config


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """Run from an empty directory with no doomsday variables set."""
    for name in (
        "DOOMSDAY_DEFAULT_METHOD",
        "DOOMSDAY_VERIFY_WORKERS",
        "DOOMSDAY_TABLES_DIR",
        "LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


class TestConfig:
    """Test defaults and environment overrides."""

    def test_defaults(self):
        config = Config()
        assert config.default_method is MethodId.DECADE_ANCHOR
        assert (config.verify_from_year, config.verify_to_year) == (1583, 3000)
        assert config.verify_workers == 1
        assert config.tables_dir == PROJECT_ROOT / "docs" / "tables"

    def test_from_env_without_overrides(self, clean_env):
        empty = clean_env / "empty.env"
        empty.write_text("")
        assert Config.from_env(empty) == Config()

    def test_from_env_overrides(self, clean_env, monkeypatch):
        monkeypatch.setenv("DOOMSDAY_TABLES_DIR", str(clean_env / "out"))
        monkeypatch.setenv("LOG_LEVEL", "debug")

        config = Config.from_env(clean_env / "missing.env")
        assert config.tables_dir == Path(clean_env / "out")
        assert config.log_level == "DEBUG"

    def test_from_env_file(self, clean_env):
        env_file = clean_env / ".env"
        env_file.write_text(f"DOOMSDAY_TABLES_DIR={clean_env / 'from_file'}\nLOG_LEVEL=warning\n")
        # load_dotenv writes straight into os.environ
        with patch.dict(os.environ):
            config = Config.from_env(env_file)
        assert config.tables_dir == clean_env / "from_file"
        assert config.log_level == "WARNING"

    def test_engine_settings_not_read_from_env(self, clean_env, monkeypatch):
        monkeypatch.setenv("DOOMSDAY_DEFAULT_METHOD", "zeller")
        monkeypatch.setenv("DOOMSDAY_VERIFY_WORKERS", "many")

        config = Config.from_env(clean_env / "missing.env")
        assert config.default_method is MethodId.DECADE_ANCHOR
        assert config.verify_workers == 1

"""Configuration management."""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from dotenv import load_dotenv

from ..core import MethodId

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent


@dataclass
class Config:
    """Application configuration.

    The CLI only ever uses the dataclass defaults; `from_env` exists for the
    batch scripts under scripts/.
    """

    # Engine
    default_method: MethodId = MethodId.DECADE_ANCHOR

    # Verification
    verify_from_year: int = 1583
    verify_to_year: int = 3000
    verify_workers: int = 1

    # Table output
    tables_dir: Path = PROJECT_ROOT / "docs" / "tables"

    # Logging
    log_level: str = "INFO"

    @classmethod
    def from_env(cls, env_file: Optional[Union[str, Path]] = None) -> "Config":
        """Load the script settings (`DOOMSDAY_TABLES_DIR`, `LOG_LEVEL`) from the environment.

        Engine and verification settings keep their defaults.

        Args:
            env_file: Path to .env file (optional)

        Returns:
            Config instance
        """
        if env_file:
            load_dotenv(env_file)
        else:
            load_dotenv()

        defaults = cls()
        return cls(
            tables_dir=Path(os.getenv("DOOMSDAY_TABLES_DIR", str(defaults.tables_dir))),
            log_level=os.getenv("LOG_LEVEL", defaults.log_level).upper(),
        )

"""Utility modules."""

from .config import Config
from .verify import Mismatch, VerificationReport, verify_range

__all__ = ["Config", "Mismatch", "VerificationReport", "verify_range"]

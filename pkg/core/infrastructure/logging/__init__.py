"""Structured run logging."""

from .run_logger import RunEventType, RunLogEntry, RunLogger, run_logger

__all__ = ["RunEventType", "RunLogEntry", "RunLogger", "run_logger"]

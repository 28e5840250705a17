"""Repository implementations."""

from .csv_result_repository import CsvResultRepository

__all__ = ["CsvResultRepository"]

"""Result repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional

from ..value_objects.result_row import ResultRow


class ResultRepository(ABC):
    """
    Abstract repository for sweep results.

    Implementations must write rows in ResultRow.sort_key order so that equal
    inputs produce identical output apart from the optional header comment.
    """

    @abstractmethod
    def save(self, rows: List[ResultRow], path: str, comment: Optional[str] = None) -> Path:
        """
        Save rows to `path`.

        Args:
            rows: Rows in any order
            path: Destination file
            comment: Optional first line, written as a comment

        Returns:
            The path written

        Raises:
            OSError: If the destination cannot be written
        """
        pass

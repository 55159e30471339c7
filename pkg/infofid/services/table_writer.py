"""
Table writer service - formats result rows as CSV or JSON and saves them.
"""
import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Sequence

import pandas as pd

from infofid.utils.error_handler import InvalidArgumentError, OutputError

# Create logger
logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json')


def format_number(value: Any, digits: int = 12) -> str:
    """
    Shortest text for a number, capped at `digits` significant digits.

    Integers print without a decimal point; strings pass through unchanged.
    """
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    return format(float(value), f'.{digits}g')


def _json_value(value: Any, digits: int) -> Any:
    if isinstance(value, (str, bool, int)):
        return value
    value = float(value)
    if not math.isfinite(value):
        return format_number(value, digits)
    return float(format(value, f'.{digits}g'))


class TableWriter:
    """Handles formatting and saving of tabular results."""

    def __init__(self, digits: int = 12):
        """
        Initialize the writer.

        Args:
            digits: Significant digits kept for floating-point values
        """
        self.digits = digits

    def to_csv(self, rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
        """
        Render rows as CSV: header line, fixed column order, LF line ends.

        Args:
            rows: Row dictionaries keyed by column name
            columns: Column order

        Returns:
            CSV text
        """
        cells = [[format_number(row[c], self.digits) for c in columns] for row in rows]
        frame = pd.DataFrame(cells, columns=list(columns), dtype=object)
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue()

    def to_json(self, rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
        """
        Render rows as a JSON array of objects keyed by the CSV headers.

        Returns:
            JSON text ending in a newline
        """
        records = [{c: _json_value(row[c], self.digits) for c in columns} for row in rows]
        return json.dumps(records, indent=2, ensure_ascii=False) + '\n'

    def render(self, rows: List[Dict[str, Any]], columns: Sequence[str], fmt: str) -> str:
        """Render in the named format ("csv" or "json")."""
        if fmt == 'csv':
            return self.to_csv(rows, columns)
        if fmt == 'json':
            return self.to_json(rows, columns)
        raise InvalidArgumentError(f"Unknown format: {fmt!r}")

    def save(self, text: str, path: Path) -> Path:
        """
        Write text to a file, creating parent directories.

        Args:
            text: Content
            path: Target file

        Returns:
            The path written

        Raises:
            OutputError: If the file cannot be written
        """
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        except OSError as e:
            logger.error(f"Error saving {path}: {e}")
            raise OutputError(f"Cannot write output file {path}: {e.strerror or e}",
                              payload={'path': str(path)})
        logger.info(f"Saved {path}")
        return path

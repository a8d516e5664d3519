"""
CSV artifact writer.

Numbers are written in shortest round-trip form and rows keep the column
order they were declared with, so identical inputs give identical bytes.
"""

import csv
import io
import logging
import os
from typing import Any, Dict, List, Optional, Sequence

from verify import format_float

logger = logging.getLogger(__name__)


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return format_float(value)
    if value is None:
        return ""
    return str(value)


class Table:
    """Ordered columns plus rows of values keyed by column name"""

    def __init__(self, name: str, columns: Sequence[str]):
        self.name = name
        self.columns = list(columns)
        self.rows: List[Dict[str, Any]] = []

    def add_row(self, row: Dict[str, Any]) -> None:
        missing = [c for c in self.columns if c not in row]
        if missing:
            raise KeyError(f"row for table {self.name} misses columns {missing}")
        self.rows.append(row)

    def column(self, name: str) -> List[Any]:
        return [row[name] for row in self.rows]

    def to_csv(self, header: str = "") -> str:
        buffer = io.StringIO()
        buffer.write(header)
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(row[c]) for c in self.columns])
        return buffer.getvalue()


class ArtifactWriter:
    """Writes artifacts into one output folder"""

    def __init__(self, output_dir: str):
        self.output_dir = output_dir
        self.written: List[str] = []

    def write_text(self, filename: str, content: str) -> Optional[str]:
        """Write content as UTF-8 with LF line endings; returns the path"""
        file_path = os.path.join(self.output_dir, filename)
        parent_dir = os.path.dirname(file_path)
        if parent_dir:
            os.makedirs(parent_dir, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(content)
        self.written.append(file_path)
        logger.info(f"💾 Wrote {filename}")
        return file_path

    def write_table(self, table: Table, header: str = "") -> Optional[str]:
        return self.write_text(f"{table.name}.csv", table.to_csv(header))


def read_csv_table(path: str) -> Dict[str, List[str]]:
    """Column name -> string cells; header comment lines are skipped"""
    with open(path, 'r', encoding='utf-8') as f:
        lines = [line for line in f if not line.startswith('#')]
    reader = csv.reader(lines)
    columns = next(reader)
    out: Dict[str, List[str]] = {c: [] for c in columns}
    for row in reader:
        for c, cell in zip(columns, row):
            out[c].append(cell)
    return out

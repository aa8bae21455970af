"""Deterministic CSV output.

Floats are serialized with 17 significant digits so the written value
round-trips to the exact double; row order is fixed by the producers, so a
given configuration always yields byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


@dataclass
class CsvTable:
    """Header (column names with units) plus homogeneous rows."""

    header: list[str]
    rows: list[tuple] = field(default_factory=list)

    def append(self, row: Sequence) -> None:
        if len(row) != len(self.header):
            raise ValueError(
                f"row has {len(row)} cells, header has {len(self.header)}"
            )
        self.rows.append(tuple(row))

    def write(self, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [",".join(self.header)]
        lines.extend(",".join(format_cell(c) for c in row) for row in self.rows)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

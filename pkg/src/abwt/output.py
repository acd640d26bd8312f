from __future__ import annotations

from dataclasses import dataclass

from .orders import render


@dataclass(frozen=True)
class TransformOutput:
    """Last column ``L`` of the sorted rotation matrix and the row ``I`` of the input."""

    last_column: bytes
    row_index: int

    def __iter__(self):
        # allows ``L, I = out``
        return iter((self.last_column, self.row_index))

    def __str__(self):
        return f"({render(self.last_column)}, {self.row_index})"

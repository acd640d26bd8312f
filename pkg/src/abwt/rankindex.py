"""Occurrence counting over the last column.

``rank(c, i)`` is inclusive: the number of ``c`` in ``text[0..i]``, with
``rank(c, -1) == 0``.  Counts are sampled every ``block`` positions and the
remainder of a block is scanned with ``bytes.count``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .orders import as_word, render


@dataclass(frozen=True, eq=False)
class RankIndex:
    text: bytes
    block: int
    parikh: np.ndarray = field(repr=False)  # (256,) symbol counts
    cum_lt_table: np.ndarray = field(repr=False)  # (257,) counts of symbols < c
    samples: np.ndarray = field(repr=False)  # (nblocks + 1, sigma) counts before each block
    column: np.ndarray = field(repr=False)  # symbol -> column of ``samples``, -1 if absent

    @classmethod
    def build(cls, text: bytes, block: int = 64) -> "RankIndex":
        if block <= 0:
            raise ValueError("block size must be positive")
        text = as_word(text)
        x = np.frombuffer(text, dtype=np.uint8)
        parikh = np.bincount(x, minlength=256).astype(np.int64)
        cum = np.zeros(257, dtype=np.int64)
        np.cumsum(parikh, out=cum[1:])
        present = np.flatnonzero(parikh)
        column = np.full(256, -1, dtype=np.int64)
        column[present] = np.arange(len(present))
        bounds = np.arange(0, len(text) + 1, block)
        samples = np.zeros((len(bounds), len(present)), dtype=np.int64)
        by_symbol = np.argsort(x, kind="stable")
        for col, c in enumerate(present):
            where = by_symbol[cum[c] : cum[c + 1]]
            samples[:, col] = np.searchsorted(where, bounds)
        return cls(text, block, parikh, cum, samples, column)

    def __len__(self):
        return len(self.text)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return tuple(int(c) for c in np.flatnonzero(self.parikh))

    def __contains__(self, c: int) -> bool:
        return 0 <= c < 256 and self.parikh[c] > 0

    def rank(self, c: int, i: int) -> int:
        n = len(self.text)
        if not -1 <= i < n:
            raise IndexError(f"rank position {i} outside [-1, {n})")
        col = self.column[c]
        if col < 0:
            return 0
        end = i + 1
        b = end // self.block
        return int(self.samples[b, col]) + self.text.count(c, b * self.block, end)

    def _known(self, c: int) -> None:
        if c not in self:
            raise KeyError(f"symbol {render(bytes([c]))!r} does not occur in the indexed text")

    def cum_lt(self, c: int) -> int:
        self._known(c)
        return int(self.cum_lt_table[c])

    def cum_le(self, c: int) -> int:
        self._known(c)
        return int(self.cum_lt_table[c + 1])


def rank_naive(text: bytes, c: int, i: int) -> int:
    return as_word(text)[: i + 1].count(c)

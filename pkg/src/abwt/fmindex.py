"""Backward search over the alternating transform.

Rows of the alternating matrix that start with a fixed symbol form a
contiguous block, and LF reverses the order of equal symbols.  Extending a
range ``[b, e]`` of rows prefixed by ``p`` with a symbol ``x`` therefore gives

    b' = C(x) - rank(x, e)
    e' = C(x) - rank(x, b - 1) - 1

where ``C(x)`` counts the symbols ``<= x`` and ``rank`` is inclusive.  Matching
is circular: ``count`` reports rotations of ``w`` that start with ``p``.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dcsort import abwt_from_suffixes, alt_suffix_array_dc
from .galois import abwt_sentinel_free_rows
from .lfmap import invert_fast
from .orders import SENTINEL, as_word, check_sentinel_terminated
from .output import TransformOutput
from .rankindex import RankIndex

MAGIC = b"ABWTIDX1"

Range = tuple[int, int]


@dataclass(frozen=True, eq=False)
class AbwtIndex:
    rank_index: RankIndex
    row_index: int
    positions: np.ndarray | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.rank_index)

    @property
    def last(self) -> bytes:
        return self.rank_index.text

    @classmethod
    def build(cls, w: bytes, locate: bool = False, block: int = 64) -> "AbwtIndex":
        """Index ``w``; a trailing sentinel gives linear rather than circular matching."""
        w = as_word(w)
        if not w:
            raise ValueError("empty word")
        if w[-1] == SENTINEL:
            check_sentinel_terminated(w)
            starts = alt_suffix_array_dc(w)
            last, row = abwt_from_suffixes(w, starts)
        else:
            last, row, starts = abwt_sentinel_free_rows(w)
        positions = starts.astype(np.uint32) if locate else None
        return cls(RankIndex.build(last, block), row, positions)

    @classmethod
    def from_transform(cls, out: TransformOutput, check: bool = True, block: int = 64) -> "AbwtIndex":
        last, row = out
        if check:
            invert_fast(TransformOutput(as_word(last), row), "abwt")
        return cls(RankIndex.build(last, block), row)

    def count(self, p) -> int:
        return count(self, p)

    def locate(self, p) -> list[int]:
        return locate(self, p)

    def to_bytes(self) -> bytes:
        head = MAGIC + struct.pack("<QQ", self.n, self.row_index) + self.last
        if self.positions is None:
            return head + b"\x00"
        return head + b"\x01" + self.positions.astype("<u4").tobytes()

    @classmethod
    def from_bytes(cls, data: bytes, block: int = 64) -> "AbwtIndex":
        if data[: len(MAGIC)] != MAGIC:
            raise ValueError("not an index file (bad magic)")
        off = len(MAGIC)
        if len(data) < off + 17:
            raise ValueError("truncated index file")
        n, row = struct.unpack_from("<QQ", data, off)
        off += 16
        last = data[off : off + n]
        off += n
        if len(last) != n or off >= len(data):
            raise ValueError("truncated index file")
        marker = data[off]
        off += 1
        positions = None
        if marker == 1:
            positions = np.frombuffer(data, dtype="<u4", count=n, offset=off).astype(np.uint32)
            off += 4 * n
        elif marker != 0:
            raise ValueError(f"unknown position marker {marker}")
        if off != len(data):
            raise ValueError("trailing bytes in index file")
        if not 0 <= row < n:
            raise ValueError("row index out of range")
        return cls(RankIndex.build(last, block), row, positions)

    def save(self, path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path) -> "AbwtIndex":
        return cls.from_bytes(Path(path).read_bytes())


def init_range(idx: AbwtIndex, c: int) -> Range | None:
    r = idx.rank_index
    if c not in r:
        return None
    return r.cum_lt(c), r.cum_le(c) - 1


def backward_extend(idx: AbwtIndex, rng: Range | None, x: int) -> Range | None:
    if rng is None or rng[0] > rng[1]:
        raise ValueError("cannot extend an empty range")
    b, e = rng
    r = idx.rank_index
    if x not in r:
        return None
    hi, lo = r.rank(x, e), r.rank(x, b - 1)
    if hi == lo:
        return None
    c = r.cum_le(x)
    return c - hi, c - lo - 1


def pattern_range(idx: AbwtIndex, p) -> Range | None:
    p = as_word(p)
    if not p:
        raise ValueError("empty pattern")
    if len(p) > idx.n:
        return None
    rng = init_range(idx, p[-1])
    for x in reversed(p[:-1]):
        if rng is None:
            break
        rng = backward_extend(idx, rng, x)
    return rng


def count(idx: AbwtIndex, p) -> int:
    rng = pattern_range(idx, p)
    return 0 if rng is None else rng[1] - rng[0] + 1


def locate(idx: AbwtIndex, p) -> list[int]:
    if idx.positions is None:
        raise ValueError("index was built without locate support")
    rng = pattern_range(idx, p)
    if rng is None:
        return []
    return sorted(int(s) for s in idx.positions[rng[0] : rng[1] + 1])

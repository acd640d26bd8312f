"""LF-mapping and linear-time inversion for the BWT and the alternating BWT.

For the BWT, equal symbols keep their relative order between ``L`` and
``F``; for the alternating transform the order is reversed.  Hence

    BWT:  LF(i) = #(symbols < L[i]) + rank(L[i], i - 1)
    ABWT: LF(i) = #(symbols <= L[i]) - rank(L[i], i - 1) - 1
"""

from __future__ import annotations

import numpy as np

from .orders import as_word
from .output import TransformOutput
from .rankindex import RankIndex

MODES = ("bwt", "abwt")


def _check_row(idx: RankIndex, i: int) -> int:
    c = idx.text[i] if 0 <= i < len(idx) else None
    if c is None:
        raise IndexError(f"row {i} outside [0, {len(idx)})")
    return c


def lf_bwt(idx: RankIndex, i: int) -> int:
    c = _check_row(idx, i)
    return idx.cum_lt(c) + idx.rank(c, i - 1)


def lf_abwt(idx: RankIndex, i: int) -> int:
    c = _check_row(idx, i)
    return idx.cum_le(c) - idx.rank(c, i - 1) - 1


def lf_array(last: bytes, mode: str) -> np.ndarray:
    """The whole LF permutation at once.

    Row ``j`` of ``F`` holds the ``(j - start)``-th copy of its symbol, so the
    stable sort of ``L`` lists the rows each copy maps to: in order for the
    BWT, reversed within each symbol block for the alternating transform.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    x = np.frombuffer(as_word(last), dtype=np.uint8)
    n = len(x)
    order = np.argsort(x, kind="stable")
    lf = np.empty(n, dtype=np.int64)
    if mode == "bwt":
        lf[order] = np.arange(n)
    else:
        counts = np.bincount(x, minlength=256)
        ends = np.cumsum(counts)
        starts = ends - counts
        sym = x[order]
        lf[order] = starts[sym] + ends[sym] - 1 - np.arange(n)
    return lf


def invert_fast(out: TransformOutput, mode: str) -> bytes:
    """Recover ``w`` by walking LF from row ``I``: ``w[n-1-j] = L[LF^j(I)]``."""
    last, row = out
    last = as_word(last)
    n = len(last)
    if n == 0:
        raise ValueError("empty transform")
    if not 0 <= row < n:
        raise ValueError(f"row index {row} out of range for length {n}")
    lf = lf_array(last, mode).tolist()
    w = bytearray(n)
    i = row
    for j in range(n - 1, -1, -1):
        w[j] = last[i]
        i = lf[i]
        if i == row and j:
            raise ValueError(f"corrupt transform: LF orbit of row {row} has length {n - j} < {n}")
    return bytes(w)

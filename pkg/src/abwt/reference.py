"""Brute-force transforms used as oracles.

Everything here materialises the full rotation matrix (``n * n`` bytes), so
it is meant for words of a few thousand symbols at most.  The generic
inverse rebuilds the matrix column by column and is cubic in ``n``; keep it
to ``n <= 2000``.
"""

from __future__ import annotations

import functools
import numpy as np

from .galois import is_primitive
from .output import TransformOutput
from .orders import OrderSpec, as_word, check_sentinel_terminated, cmp_alt_suffixes, render


def rank_tables(spec: OrderSpec) -> np.ndarray:
    """``(k, 256)`` array; row ``t`` holds the symbol ranks used at positions ``t mod k``."""
    return np.array([p.table for p in spec.perms], dtype=np.int16)


def _keyed(tables: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Replace each symbol of the row-matrix ``m`` by its rank at that column."""
    cols = np.arange(m.shape[1]) % tables.shape[0]
    return tables[cols[None, :], m].astype(np.uint8)


def _argsort_rows(keyed: np.ndarray) -> list[int]:
    rows = [r.tobytes() for r in keyed]
    return sorted(range(len(rows)), key=rows.__getitem__)


def _require_primitive(w: bytes) -> None:
    if not w:
        raise ValueError("empty word")
    if not is_primitive(w):
        raise ValueError(f"word {render(w)[:40]!r} is not primitive; its rotations are not distinct")


def sorted_rotation_starts(w: bytes, spec: OrderSpec) -> list[int]:
    """Start positions of the rotations of ``w`` in ``spec`` order."""
    w = as_word(w)
    _require_primitive(w)
    spec.check_alphabet(set(w))
    n = len(w)
    idx = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    m = np.frombuffer(w, dtype=np.uint8)[idx]
    return _argsort_rows(_keyed(rank_tables(spec), m))


def rotation_matrix(w: bytes, spec: OrderSpec) -> list[bytes]:
    w = as_word(w)
    return [w[s:] + w[:s] for s in sorted_rotation_starts(w, spec)]


def bwt_k_naive(w: bytes, spec: OrderSpec) -> TransformOutput:
    w = as_word(w)
    n = len(w)
    starts = sorted_rotation_starts(w, spec)
    last = bytes(w[(s - 1) % n] for s in starts)
    return TransformOutput(last, starts.index(0))


def lf_from_matrix(w: bytes, spec: OrderSpec) -> list[int]:
    """LF read directly off the sorted matrix: row of each row rotated right by one."""
    w = as_word(w)
    n = len(w)
    starts = sorted_rotation_starts(w, spec)
    row_of = {s: r for r, s in enumerate(starts)}
    return [row_of[(s - 1) % n] for s in starts]


def invert_generic(out: TransformOutput, spec: OrderSpec) -> bytes:
    """Rebuild the sorted matrix from ``L`` by repeated prepend-and-sort.

    After step ``j`` the list holds the sorted circular factors of length
    ``j + 1``; the answer is row ``I`` of the final list.
    """
    if not isinstance(out, TransformOutput):
        out = TransformOutput(as_word(out[0]), int(out[1]))
    last, row = out
    n = len(last)
    if n == 0:
        raise ValueError("empty transform")
    if not 0 <= row < n:
        raise ValueError(f"row index {row} out of range for length {n}")
    spec.check_alphabet(set(last))
    tables = rank_tables(spec)
    col = np.frombuffer(last, dtype=np.uint8)
    m = np.sort(col)[:, None]
    for j in range(1, n):
        m = np.hstack([col[:, None], m])
        m = m[_argsort_rows(_keyed(tables, m))]
    w = m[row].tobytes()
    try:
        ok = bwt_k_naive(w, spec) == out
    except ValueError:
        ok = False
    if not ok:
        raise ValueError("inconsistent transform: the rebuilt matrix is not closed under rotation")
    return w


def alt_suffix_sort_naive(w: bytes) -> list[int]:
    """Suffix array of ``w`` (sentinel-terminated) under the alternating order."""
    w = as_word(w)
    check_sentinel_terminated(w)
    cmp = functools.cmp_to_key(lambda i, j: int(cmp_alt_suffixes(w, i, j)))
    return sorted(range(len(w)), key=cmp)

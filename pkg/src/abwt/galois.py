"""Galois words: the rotations that are minimal under the alternating order.

:func:`find_galois_rotation` is a Booth-style scan over a border array with
the comparison direction chosen by the parity of the current border length.
It uses at most ``4n - 3`` symbol comparisons.
"""

from __future__ import annotations

import functools
from typing import NamedTuple

import numpy as np

from .dcsort import alt_suffix_array_dc
from .output import TransformOutput
from .orders import SENTINEL, Ordering, as_word, cmp_alt, render


def failure_function(w: bytes) -> list[int]:
    """``f[j]`` = length of the longest proper border of ``w[:j]``; ``f[0] = -1``."""
    n = len(w)
    f = [-1] * (n + 1)
    k = -1
    for j in range(n):
        while k >= 0 and w[k] != w[j]:
            k = f[k]
        k += 1
        f[j + 1] = k
    return f


def is_primitive(w: bytes) -> bool:
    w = as_word(w)
    n = len(w)
    if n == 0:
        raise ValueError("empty word")
    p = n - failure_function(w)[n]
    return not (p < n and n % p == 0)


def borders(w: bytes) -> list[int]:
    """Lengths of all nonempty proper borders of ``w``, longest first."""
    f = failure_function(w)
    out = []
    b = f[len(w)]
    while b > 0:
        out.append(b)
        b = f[b]
    return out


def _require_primitive(w: bytes) -> None:
    if not is_primitive(w):
        raise ValueError(f"word {render(w)[:40]!r} is not primitive")


def is_galois(w: bytes) -> bool:
    """``w`` precedes (or equals) every one of its rotations in the alternating order."""
    w = as_word(w)
    _require_primitive(w)
    return all(cmp_alt(w, w[i:] + w[:i]) <= Ordering.EQUAL for i in range(1, len(w)))


def is_galois_by_suffixes(w: bytes) -> bool:
    """Equivalent test: ``w`` is smaller than each of its proper suffixes."""
    w = as_word(w)
    _require_primitive(w)
    return all(cmp_alt(w, w[i:]) == Ordering.LESS for i in range(1, len(w)))


class GaloisScan(NamedTuple):
    start: int
    comparisons: int
    border: list[int]


def galois_scan(w: bytes) -> GaloisScan:
    """Run the rotation scan, also returning the comparison count and border array."""
    w = as_word(w)
    _require_primitive(w)
    n = len(w)
    ww = w + w  # k + j < 2n and i <= j, so no index wraps past ww
    border = [0] * (n + 1)
    border[0] = -1
    i, j, k = 0, 1, 0
    comparisons = 0
    while k + j < 2 * n:
        if j <= n:
            border[j] = i
        while i >= 0:
            a = ww[k + j]
            b = ww[k + i]
            comparisons += 1
            if a == b:
                break
            if i % 2 == 0:
                if a < b:
                    k = k + j - i
                    j = i
            elif a > b:
                k = k + j - i
                j = i
            i = border[i]
        i += 1
        j += 1
    return GaloisScan(k, comparisons, border)


def find_galois_rotation(w: bytes) -> int:
    """Start of the unique rotation of ``w`` that is a Galois word."""
    return galois_scan(w).start


def galois_rotation(w: bytes) -> bytes:
    w = as_word(w)
    k = find_galois_rotation(w)
    return w[k:] + w[:k]


def galois_rotation_naive(w: bytes) -> int:
    """Argmin over all rotations under the alternating order (quadratic)."""
    w = as_word(w)
    _require_primitive(w)
    key = functools.cmp_to_key(lambda i, j: int(cmp_alt(w[i:] + w[:i], w[j:] + w[:j])))
    return min(range(len(w)), key=key)


def abwt_sentinel_free_rows(w: bytes):
    """Alternating transform of a sentinel-free primitive word via its Galois conjugate.

    Returns ``(L, I, starts)`` where ``starts[r]`` is the start in ``w`` of
    the rotation in row ``r``.
    """
    w = as_word(w)
    if SENTINEL in w:
        raise ValueError("input already contains the sentinel byte")
    n = len(w)
    k = find_galois_rotation(w)
    g = w[k:] + w[:k]
    sa = alt_suffix_array_dc(g + bytes([SENTINEL]))
    # suffix "$" (position n) stands for rotation 0; suffix 0 is dropped
    # along with the '$' it contributes to L.
    rot = sa[sa != 0]
    rot[rot == n] = 0
    garr = np.frombuffer(g, dtype=np.uint8)
    last = garr[(rot - 1) % n].tobytes()
    starts = (rot + k) % n
    row = int(np.flatnonzero(starts == 0)[0])
    return last, row, starts


def abwt_sentinel_free(w: bytes) -> TransformOutput:
    last, row, _ = abwt_sentinel_free_rows(w)
    return TransformOutput(last, row)

"""Runs, empirical entropy, and two checks on generalized transforms.

``hk`` follows the linear definition: ``x_w`` collects the symbols that
precede occurrences of ``x`` in ``w``, and an occurrence at position 0
contributes nothing.  ``hk_circular`` treats ``w`` as a necklace.  The
block factorization of ``bwt_K(w^R)`` reproduces the circular value exactly,
since matrix rows are rotations.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import NamedTuple

from .galois import abwt_sentinel_free_rows
from .orders import OrderSpec, as_word
from .reference import sorted_rotation_starts
from .transform import bwt_k, lf_mode

EPSILON = 1e-9
NAIVE_LIMIT = 2000


@dataclass(frozen=True)
class RunLength:
    runs: tuple[tuple[int, int], ...]

    @property
    def rho(self) -> int:
        return len(self.runs)

    @property
    def rho_per_symbol(self) -> dict[int, int]:
        return dict(Counter(c for c, _ in self.runs))

    def __len__(self):
        return sum(n for _, n in self.runs)


def rle(w) -> RunLength:
    w = as_word(w)
    runs = []
    for c in w:
        if runs and runs[-1][0] == c:
            runs[-1][1] += 1
        else:
            runs.append([c, 1])
    return RunLength(tuple((c, n) for c, n in runs))


def _entropy_of_counts(counts) -> float:
    total = sum(counts)
    if total == 0:
        return 0.0
    return -sum(c / total * math.log2(c / total) for c in counts if c)


def h0(w) -> float:
    w = as_word(w)
    return _entropy_of_counts(Counter(w).values())


def _weighted(contexts: dict, n: int) -> float:
    return sum(sum(cnt.values()) * _entropy_of_counts(cnt.values()) for cnt in contexts.values()) / n


def hk(w, k: int) -> float:
    w = as_word(w)
    n = len(w)
    if k < 0:
        raise ValueError("k must be non-negative")
    if n == 0:
        return 0.0
    if k == 0:
        return h0(w)
    contexts: dict = defaultdict(Counter)
    for j in range(1, n - k + 1):
        contexts[w[j : j + k]][w[j - 1]] += 1
    return _weighted(contexts, n)


def hk_circular(w, k: int) -> float:
    w = as_word(w)
    n = len(w)
    if k < 0:
        raise ValueError("k must be non-negative")
    if n == 0:
        return 0.0
    ww = w * (k // n + 2)
    contexts: dict = defaultdict(Counter)
    for j in range(n):
        contexts[ww[j : j + k]][w[j - 1]] += 1
    return _weighted(contexts, n)


class RunBound(NamedTuple):
    rho_out: int
    rho_in: int
    holds: bool


def check_run_bound(w, spec: OrderSpec) -> RunBound:
    w = as_word(w)
    last, _ = bwt_k(w, spec)
    out, inp = rle(last).rho, rle(w).rho
    return RunBound(out, inp, out <= 2 * inp)


class EntropyFactorization(NamedTuple):
    lhs: float
    rhs: float
    equal: bool
    blocks: int


def _rows_of_reversal(wr: bytes, spec: OrderSpec):
    if len(wr) > NAIVE_LIMIT and lf_mode(spec) == "abwt" and 0 not in wr:
        last, _, starts = abwt_sentinel_free_rows(wr)
        return last, [int(s) for s in starts]
    starts = sorted_rotation_starts(wr, spec)
    n = len(wr)
    return bytes(wr[(s - 1) % n] for s in starts), starts


def check_entropy_factorization(w, spec: OrderSpec, r: int) -> EntropyFactorization:
    """Split ``u = bwt_K(w^R)`` by the length-``r`` prefixes of the matrix rows.

    The left side is the circular ``H_r(w)``; the right side is
    ``sum |u_i| H0(u_i) / |u|`` over the blocks.
    """
    w = as_word(w)
    n = len(w)
    if not 0 <= r < n:
        raise ValueError(f"context length r={r} must lie in [0, {n})")
    wr = w[::-1]
    last, starts = _rows_of_reversal(wr, spec)
    ww = wr + wr
    total = 0.0
    blocks = 0
    i = 0
    while i < n:
        ctx = ww[starts[i] : starts[i] + r]
        j = i + 1
        while j < n and ww[starts[j] : starts[j] + r] == ctx:
            j += 1
        total += (j - i) * h0(last[i:j])
        blocks += 1
        i = j
    rhs = total / n
    lhs = hk_circular(w, r)
    return EntropyFactorization(lhs, rhs, abs(lhs - rhs) <= EPSILON, blocks)


__all__ = [
    "EPSILON",
    "RunLength",
    "rle",
    "h0",
    "hk",
    "hk_circular",
    "check_run_bound",
    "check_entropy_factorization",
]

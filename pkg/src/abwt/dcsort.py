"""Alternating-order suffix sorting with a difference cover.

Outline for a sentinel-terminated word ``w`` and cover ``(v, D)``, ``v`` even:

1. Sampled positions are those with ``i mod v`` in ``D``.  Their length-``v``
   blocks (padded with sentinels) are ranked under the alternating order and
   laid out class by class (ascending ``d``, then ascending position).
2. A *standard* lexicographic suffix sort of that rank string orders the
   sampled suffixes under the alternating order: ``v`` is even, so every
   block starts at an even offset and block comparisons keep their parity.
3. Every residue class is sorted on its own, and classes are merged with
   pairwise keys ``(first k symbols, rank of the sampled suffix at +k)``.
   The cover guarantees such a ``k < v`` for any two residues; an odd ``k``
   reverses the sampled-rank order (``c a < c b`` iff ``b < a``).

All steps are vectorised with numpy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .orders import SENTINEL, as_word, check_sentinel_terminated
from .output import TransformOutput

_MAX_PACK = 1 << 62


def verify_cover(v: int, D) -> bool:
    D = set(D)
    if v <= 0 or not D or any(not 0 <= d < v for d in D):
        return False
    return {(i - j) % v for i in D for j in D} == set(range(v))


_COVER_TABLE = {
    2: (0, 1),
    4: (0, 1, 2),
    6: (0, 1, 3),
    8: (0, 1, 2, 4),
    12: (0, 1, 3, 7),
}


@lru_cache(maxsize=None)
def _minimal_cover(v: int) -> tuple[int, ...]:
    # Depth-first over increasing subsets containing 0; size grows until a cover exists.
    for size in itertools.count(1):
        if size * (size - 1) + 1 < v:
            continue
        found = _search(v, size, [0], {0})
        if found is not None:
            return tuple(found)
    raise AssertionError("unreachable")


def _search(v, size, chosen, covered):
    if len(chosen) == size:
        return list(chosen) if len(covered) == v else None
    left = size - len(chosen)
    # an element added to a set of size m contributes at most 2m new differences
    gain = sum(2 * (len(chosen) + t) for t in range(left))
    if len(covered) + gain < v:
        return None
    for x in range(chosen[-1] + 1, v - (left - 1)):
        new = {(x - d) % v for d in chosen} | {(d - x) % v for d in chosen}
        chosen.append(x)
        res = _search(v, size, chosen, covered | new)
        chosen.pop()
        if res is not None:
            return res
    return None


def gen_cover(v: int) -> tuple[int, ...]:
    """A minimum-size difference cover modulo ``v`` (``v`` even, ``v <= 64``)."""
    if v <= 0 or v % 2:
        raise ValueError("cover modulus must be a positive even integer")
    if v in _COVER_TABLE:
        return _COVER_TABLE[v]
    if v > 64:
        raise ValueError("brute-force cover search is limited to v <= 64")
    return _minimal_cover(v)


@dataclass(frozen=True)
class DifferenceCover:
    v: int = 6
    D: tuple[int, ...] = (0, 1, 3)

    def __post_init__(self):
        if self.v <= 0 or self.v % 2:
            raise ValueError(f"cover modulus must be even, got {self.v}")
        object.__setattr__(self, "D", tuple(sorted(set(self.D))))
        if not verify_cover(self.v, self.D):
            raise ValueError(f"{self.D} is not a difference cover modulo {self.v}")

    @classmethod
    def for_modulus(cls, v: int) -> "DifferenceCover":
        return cls(v, gen_cover(v))

    def shift(self, r1: int, r2: int) -> int:
        """Smallest ``k`` with ``(r1 + k) % v`` and ``(r2 + k) % v`` both in ``D``."""
        return _shift_table(self.v, self.D)[r1 % self.v][r2 % self.v]


DEFAULT_COVER = DifferenceCover()


@lru_cache(maxsize=None)
def _shift_table(v, D):
    Dset = set(D)
    return tuple(
        tuple(next(k for k in range(v) if (r1 + k) % v in Dset and (r2 + k) % v in Dset) for r2 in range(v))
        for r1 in range(v)
    )


def dense_rank(keys: np.ndarray) -> np.ndarray:
    """Rank of each entry among the distinct values (0-based)."""
    _, inv = np.unique(keys, return_inverse=True)
    return inv.reshape(-1).astype(np.int64)


def _dense_rank_rows(cols: list[np.ndarray], base: int) -> np.ndarray:
    """Dense ranks of the tuples formed by ``cols`` (column 0 most significant)."""
    if base ** len(cols) < _MAX_PACK:
        packed = np.zeros(len(cols[0]), dtype=np.int64)
        for c in cols:
            packed = packed * base + c
        return dense_rank(packed)
    order = np.lexsort(cols[::-1])
    stacked = np.stack(cols)[:, order]
    change = np.any(stacked[:, 1:] != stacked[:, :-1], axis=0)
    ranks = np.empty(len(order), dtype=np.int64)
    ranks[order] = np.concatenate(([0], np.cumsum(change)))
    return ranks


def suffix_array_lex(s) -> np.ndarray:
    """Standard lexicographic suffix array of an integer sequence (prefix doubling).

    A suffix that is a proper prefix of another sorts first.
    """
    s = np.asarray(s, dtype=np.int64)
    n = len(s)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    rank = dense_rank(s)
    h = 1
    while rank.max() < n - 1:
        nxt = np.zeros(n, dtype=np.int64)
        nxt[: n - h] = rank[h:] + 1
        rank = dense_rank(rank * (n + 1) + nxt)
        h *= 2
    sa = np.empty(n, dtype=np.int64)
    sa[rank] = np.arange(n)
    return sa


def _codes(w: bytes) -> tuple[np.ndarray, int]:
    x = np.frombuffer(w, dtype=np.uint8)
    present = np.flatnonzero(np.bincount(x, minlength=256))
    lut = np.zeros(256, dtype=np.int64)
    lut[present] = np.arange(len(present))
    return lut[x], len(present)


class _Padded:
    """Alternating-order symbol codes with sentinel padding past the end."""

    def __init__(self, codes: np.ndarray, sigma: int, pad: int):
        self.n = len(codes)
        self.sigma = sigma
        self.buf = np.concatenate([codes, np.zeros(pad, dtype=np.int64)])

    def at(self, pos: np.ndarray, offset: int) -> np.ndarray:
        c = self.buf[pos + offset]
        return c if offset % 2 == 0 else (self.sigma - 1) - c


def _sample_layout(n: int, cover: DifferenceCover) -> np.ndarray:
    return np.concatenate([np.arange(d, n, cover.v) for d in cover.D])


def sample_tuple_ranks(w: bytes, cover: DifferenceCover = DEFAULT_COVER):
    """Sampled positions in layout order and the alternating ranks of their ``v``-blocks."""
    w = as_word(w)
    check_sentinel_terminated(w)
    codes, sigma = _codes(w)
    padded = _Padded(codes, sigma, cover.v)
    layout = _sample_layout(len(w), cover)
    cols = [padded.at(layout, t) for t in range(cover.v)]
    return layout, _dense_rank_rows(cols, sigma)


class _ClassKeys:
    """Sort keys of residue classes, cached per ``(class, shift)``.

    Keys of one class under shift ``k`` are comparable with keys of any other
    class that admits the same shift, and are increasing along each class's
    sorted order.
    """

    def __init__(self, padded: _Padded, v: int, srank: np.ndarray, nsamp: int):
        self.padded = padded
        self.v = v
        self.n = padded.n
        self.srank = srank
        self.nsamp = nsamp
        self.order: dict[int, np.ndarray] = {}
        self._natural: dict[tuple[int, int], np.ndarray] = {}
        self._sorted: dict[tuple[int, int], np.ndarray] = {}
        self._prefix: dict[int, np.ndarray] = {}

    def size(self, r: int) -> int:
        return len(range(r, self.n, self.v))

    def _strided(self, arr: np.ndarray, start: int, m: int) -> np.ndarray:
        return arr[start : start + self.v * m : self.v]

    def _global_prefix(self, k: int) -> np.ndarray:
        # wide alphabets: dense-rank every length-k prefix of the text at once
        if k not in self._prefix:
            allpos = np.arange(self.n)
            cols = [self.padded.at(allpos, t) for t in range(k)]
            self._prefix[k] = _dense_rank_rows(cols, self.padded.sigma)
        return self._prefix[k]

    def natural(self, r: int, k: int) -> np.ndarray:
        """Keys of class ``r`` in position order."""
        cached = self._natural.get((r, k))
        if cached is not None:
            return cached
        m = self.size(r)
        target = self._strided(self.srank, r + k, m)
        if k % 2:
            target = self.nsamp - target
        if k == 0:
            key = target
        elif self.padded.sigma**k * (self.nsamp + 1) < _MAX_PACK:
            key = np.zeros(m, dtype=np.int64)
            sig = self.padded.sigma
            for t in range(k):
                c = self._strided(self.padded.buf, r + t, m)
                if t % 2:
                    c = (sig - 1) - c
                key = key * sig + c
            key = key * (self.nsamp + 1) + target
        else:
            key = self._strided(self._global_prefix(k), r, m) * (self.nsamp + 1) + target
        self._natural[(r, k)] = key
        return key

    def sorted(self, r: int, k: int) -> np.ndarray:
        cached = self._sorted.get((r, k))
        if cached is None:
            cached = self._sorted[(r, k)] = self.natural(r, k)[self.order[r]]
        return cached


def alt_suffix_array_dc(w: bytes, cover: DifferenceCover = DEFAULT_COVER) -> np.ndarray:
    """Suffix array of a sentinel-terminated word under the alternating order."""
    w = as_word(w)
    check_sentinel_terminated(w)
    n = len(w)
    v = cover.v
    codes, sigma = _codes(w)
    padded = _Padded(codes, sigma, 2 * v)

    # sampled suffixes
    layout = _sample_layout(n, cover)
    tuple_rank = _dense_rank_rows([padded.at(layout, t) for t in range(v)], sigma)
    nsamp = len(layout)
    if tuple_rank.max() == nsamp - 1:
        sub_rank = tuple_rank
    else:
        sub_sa = suffix_array_lex(tuple_rank)
        sub_rank = np.empty(nsamp, dtype=np.int64)
        sub_rank[sub_sa] = np.arange(nsamp)
    srank = np.zeros(n + 2 * v, dtype=np.int64)
    srank[layout] = sub_rank

    # sort each residue class on its own
    keys = _ClassKeys(padded, v, srank, nsamp)
    live = [r for r in range(v) if keys.size(r)]
    for r in live:
        keys.order[r] = np.argsort(keys.natural(r, cover.shift(r, r)), kind="stable")

    # merge: final rank = rank within own class + smaller members of every other class
    final = np.zeros(n, dtype=np.int64)
    for r in live:
        total = np.arange(keys.size(r), dtype=np.int64)
        for r2 in live:
            if r2 != r:
                k = cover.shift(r, r2)
                total += np.searchsorted(keys.sorted(r2, k), keys.sorted(r, k))
        final[r + v * keys.order[r]] = total
    sa = np.empty(n, dtype=np.int64)
    sa[final] = np.arange(n)
    return sa


def abwt_from_suffixes(w: bytes, sa) -> TransformOutput:
    """Alternating transform of a sentinel-terminated word from its suffix order."""
    w = as_word(w)
    sa = np.asarray(sa, dtype=np.int64)
    n = len(w)
    x = np.frombuffer(w, dtype=np.uint8)
    last = x[(sa - 1) % n].tobytes()
    return TransformOutput(last, int(np.flatnonzero(sa == 0)[0]))


def abwt_dc(w: bytes, cover: DifferenceCover = DEFAULT_COVER) -> TransformOutput:
    w = as_word(w)
    return abwt_from_suffixes(w, alt_suffix_array_dc(w, cover))


def lex_suffix_array(w: bytes) -> np.ndarray:
    """Standard suffix array of a sentinel-terminated byte word."""
    w = as_word(w)
    check_sentinel_terminated(w)
    return suffix_array_lex(np.frombuffer(w, dtype=np.uint8))


def bwt_from_suffixes(w: bytes, sa) -> TransformOutput:
    return abwt_from_suffixes(w, sa)


__all__ = [
    "SENTINEL",
    "DifferenceCover",
    "DEFAULT_COVER",
    "verify_cover",
    "gen_cover",
    "sample_tuple_ranks",
    "suffix_array_lex",
    "alt_suffix_array_dc",
    "abwt_from_suffixes",
    "abwt_dc",
    "lex_suffix_array",
]

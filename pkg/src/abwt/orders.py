"""Symbol orders on byte words.

Words are ``bytes``.  The sentinel is the byte ``0x00``; it is the smallest
symbol of the base (byte-value) order and is rendered as ``$``.

Three comparator families live here:

* :func:`cmp_lex` -- standard lexicographic order,
* :func:`cmp_alt` -- alternating order (base order at even positions,
  reversed order at odd positions), including the prefix rule for words of
  unequal length,
* :func:`cmp_k` -- the positional order induced by an :class:`OrderSpec`,
  a tuple of alphabet permutations applied cyclically by position.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

SENTINEL = 0
UNDEFINED = -1


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def reverse(self) -> "Ordering":
        return Ordering(-int(self))


def _sign(a: int, b: int) -> Ordering:
    if a < b:
        return Ordering.LESS
    if a > b:
        return Ordering.GREATER
    return Ordering.EQUAL


def as_word(x) -> bytes:
    """Coerce ``str``/``bytes``/iterables of ints to ``bytes``.

    ``'$'`` in a ``str`` is read as the sentinel, so ``as_word("banana$")``
    is ``b"banana\\x00"``.
    """
    if isinstance(x, bytes):
        return x
    if isinstance(x, str):
        return x.replace("$", "\x00").encode("latin-1")
    return bytes(x)


def render(w: bytes) -> str:
    """Inverse of :func:`as_word` for display: the sentinel becomes ``$``."""
    return bytes(w).decode("latin-1").replace("\x00", "$")


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[int, ...]
    sentinel: int | None = None

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.symbols, self.symbols[1:])):
            raise ValueError("alphabet symbols must be strictly increasing")
        if self.sentinel is not None and self.symbols and self.symbols[0] != self.sentinel:
            raise ValueError("sentinel must be the minimal symbol")

    @classmethod
    def of(cls, w: bytes) -> "Alphabet":
        symbols = tuple(sorted(set(as_word(w))))
        sentinel = SENTINEL if symbols and symbols[0] == SENTINEL else None
        return cls(symbols, sentinel)

    @classmethod
    def from_string(cls, s: str) -> "Alphabet":
        return cls(tuple(sorted(set(as_word(s)))))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, c: int) -> bool:
        return c in self.symbols


@dataclass(frozen=True)
class Permutation:
    """A total order on (a subset of) byte values, stored as a rank table.

    ``table[c]`` is the rank of byte ``c``; ``-1`` marks bytes outside the
    permutation's domain.  The built-ins ``id`` and ``rev`` are defined on
    every byte; ``rev`` is the reversal of the sentinel-extended alphabet,
    so the sentinel is the *largest* symbol under it.
    """

    label: str
    table: tuple[int, ...] = field(repr=False)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls("id", tuple(range(256)))

    @classmethod
    def reverse(cls) -> "Permutation":
        return cls("rev", tuple(255 - c for c in range(256)))

    @classmethod
    def explicit(cls, order: Sequence[int] | str | bytes) -> "Permutation":
        """Order given as a symbol list, smallest first: ``"cab"`` is c<a<b.

        The sentinel is prepended as the minimum when not listed.
        """
        order = list(as_word(order))
        if len(set(order)) != len(order):
            raise ValueError(f"repeated symbol in permutation {render(bytes(order))!r}")
        if SENTINEL not in order:
            order = [SENTINEL] + order
        table = [UNDEFINED] * 256
        for r, c in enumerate(order):
            table[c] = r
        label = render(bytes(c for c in order if c != SENTINEL))
        return cls(label, tuple(table))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        if text == "id":
            return cls.identity()
        if text == "rev":
            return cls.reverse()
        if not text:
            raise ValueError("empty permutation")
        return cls.explicit(text)

    def rank(self, c: int) -> int:
        r = self.table[c]
        if r == UNDEFINED:
            raise ValueError(f"symbol {render(bytes([c]))!r} not ordered by permutation {self.label!r}")
        return r

    def covers(self, symbols: Iterable[int]) -> bool:
        return all(self.table[c] != UNDEFINED for c in symbols)

    def restricted(self, symbols: Iterable[int]) -> tuple[int, ...]:
        """The given symbols listed in this permutation's order."""
        return tuple(sorted(symbols, key=self.rank))

    def is_identity(self, alphabet: Iterable[int] | None = None) -> bool:
        syms = self._domain(alphabet)
        return self.restricted(syms) == tuple(sorted(syms))

    def is_reverse(self, alphabet: Iterable[int] | None = None) -> bool:
        syms = self._domain(alphabet)
        return self.restricted(syms) == tuple(sorted(syms, reverse=True))

    def _domain(self, alphabet):
        if alphabet is None:
            return [c for c in range(256) if self.table[c] != UNDEFINED]
        return list(alphabet)

    def __str__(self):
        return self.label


ID = Permutation.identity()
REV = Permutation.reverse()


@dataclass(frozen=True)
class OrderSpec:
    """The k-tuple of permutations; position ``i`` uses ``perms[i % k]``."""

    perms: tuple[Permutation, ...]

    def __post_init__(self):
        if not self.perms:
            raise ValueError("OrderSpec needs at least one permutation")
        if not self.perms[0].is_identity():
            raise ValueError("the first permutation of an OrderSpec must be the identity")

    @classmethod
    def parse(cls, text: str) -> "OrderSpec":
        return cls(tuple(Permutation.parse(p) for p in text.split(":")))

    @classmethod
    def of(cls, *perms) -> "OrderSpec":
        return cls(tuple(p if isinstance(p, Permutation) else Permutation.parse(p) for p in perms))

    @property
    def k(self) -> int:
        return len(self.perms)

    def perm_at(self, i: int) -> Permutation:
        return self.perms[i % len(self.perms)]

    def check_alphabet(self, symbols: Iterable[int]) -> None:
        symbols = set(symbols)
        for p in self.perms:
            if not p.covers(symbols):
                missing = sorted(c for c in symbols if p.table[c] == UNDEFINED)
                raise ValueError(f"permutation {p.label!r} does not order {render(bytes(missing))!r}")

    def key(self, w: bytes, start: int = 0, length: int | None = None) -> tuple[int, ...]:
        """Rank tuple of the circular factor of ``w`` at ``start``.

        Equal-length keys compare (as tuples) exactly like :func:`cmp_k`.
        """
        n = len(w)
        if length is None:
            length = n
        tables = [p.table for p in self.perms]
        k = len(tables)
        return tuple(tables[t % k][w[(start + t) % n]] for t in range(length))

    def is_lex(self, alphabet: Iterable[int] | None = None) -> bool:
        return all(p.is_identity(alphabet) for p in self.perms)

    def is_alt(self, alphabet: Iterable[int] | None = None) -> bool:
        """True when this spec orders words exactly like the alternating order."""
        k = self.k
        period = k if k % 2 == 0 else 2 * k
        for i in range(period):
            p = self.perms[i % k]
            ok = p.is_identity(alphabet) if i % 2 == 0 else p.is_reverse(alphabet)
            if not ok:
                return False
        return True

    def __str__(self):
        return ":".join(str(p) for p in self.perms)


LEX = OrderSpec((ID,))
ALT = OrderSpec((ID, REV))


def check_sentinel_terminated(w: bytes) -> None:
    if not w or w[-1] != SENTINEL:
        raise ValueError("word must end with the sentinel")
    if w.count(SENTINEL) != 1:
        raise ValueError("sentinel must occur exactly once")


def cmp_lex(x: bytes, y: bytes) -> Ordering:
    return _sign(x, y)


def cmp_alt(x: bytes, y: bytes) -> Ordering:
    """Alternating order, defined for words of any lengths.

    At the first mismatch ``i`` the base order decides when ``i`` is even and
    the reversed order when ``i`` is odd.  If ``x`` is a proper prefix of
    ``y``, ``x`` comes first iff ``len(x)`` is even.
    """
    m = min(len(x), len(y))
    for i in range(m):
        a, b = x[i], y[i]
        if a != b:
            return _sign(a, b) if i % 2 == 0 else _sign(b, a)
    if len(x) == len(y):
        return Ordering.EQUAL
    if len(x) < len(y):
        return Ordering.LESS if m % 2 == 0 else Ordering.GREATER
    return Ordering.GREATER if m % 2 == 0 else Ordering.LESS


def cmp_alt_suffixes(w: bytes, i: int, j: int) -> Ordering:
    """``cmp_alt(w[i:], w[j:])`` without slicing."""
    n = len(w)
    t = 0
    while i + t < n and j + t < n:
        a, b = w[i + t], w[j + t]
        if a != b:
            return _sign(a, b) if t % 2 == 0 else _sign(b, a)
        t += 1
    li, lj = n - i, n - j
    if li == lj:
        return Ordering.EQUAL
    if li < lj:
        return Ordering.LESS if t % 2 == 0 else Ordering.GREATER
    return Ordering.GREATER if t % 2 == 0 else Ordering.LESS


def cmp_k(spec: OrderSpec, x: bytes, y: bytes) -> Ordering:
    """Compare under the positional order of ``spec``.

    Words of unequal length are accepted only when they mismatch before the
    shorter one ends; otherwise the order is undefined and ``ValueError`` is
    raised.
    """
    m = min(len(x), len(y))
    for i in range(m):
        a, b = x[i], y[i]
        if a != b:
            p = spec.perm_at(i)
            return _sign(p.rank(a), p.rank(b))
    if len(x) != len(y):
        raise ValueError("cmp_k is undefined when one word is a proper prefix of the other")
    return Ordering.EQUAL

"""Refuting rank-invertibility of a generalized transform by enumeration.

A transform is rank-invertible when ``LF(i)`` is a function of the Parikh
vector of ``L``, the symbol ``L[i]`` and its inclusive rank at ``i``.  The
checker builds that function word by word and reports the first pair of words
that disagree on a key.  Finding nothing only means nothing was found up to
the bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .galois import is_primitive
from .orders import Alphabet, OrderSpec, as_word, render

CONSISTENT = "consistent"
VIOLATED = "violated"


@dataclass(frozen=True)
class Witness:
    word1: bytes
    word2: bytes
    symbol: int
    occurrence: int  # inclusive rank of the symbol at the conflicting rows
    parikh: tuple[int, ...]
    row1: int
    row2: int
    target1: int
    target2: int

    def __str__(self):
        return (
            f"{render(self.word1)} vs {render(self.word2)}: parikh={self.parikh} "
            f"symbol={render(bytes([self.symbol]))} rank={self.occurrence} "
            f"LF({self.row1})={self.target1} vs LF({self.row2})={self.target2}"
        )


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Witness | None = None
    words_checked: int = 0

    @property
    def consistent(self) -> bool:
        return self.status == CONSISTENT

    def __bool__(self):
        return self.consistent


def _symbols(alphabet) -> tuple[int, ...]:
    if isinstance(alphabet, int):
        if not 1 <= alphabet <= 26:
            raise ValueError("integer alphabets are the first 1..26 lowercase letters")
        return tuple(range(ord("a"), ord("a") + alphabet))
    if isinstance(alphabet, Alphabet):
        return tuple(alphabet.symbols)
    return tuple(sorted(set(as_word(alphabet) if isinstance(alphabet, str) else alphabet)))


def primitive_words(alphabet, max_len: int, min_len: int = 1) -> Iterator[bytes]:
    """Primitive words by increasing length, then lexicographically."""
    syms = _symbols(alphabet)
    for n in range(min_len, max_len + 1):
        for t in itertools.product(syms, repeat=n):
            w = bytes(t)
            if is_primitive(w):
                yield w


def sorted_starts(w: bytes, spec: OrderSpec) -> list[int]:
    return sorted(range(len(w)), key=lambda s: spec.key(w, s))


def lf_entries(w: bytes, spec: OrderSpec, syms: tuple[int, ...]):
    """``(key, row, LF(row))`` for every row; ``key = (parikh, L[row], rank)``."""
    n = len(w)
    starts = sorted_starts(w, spec)
    row_of = [0] * n
    for r, s in enumerate(starts):
        row_of[s] = r
    parikh = tuple(w.count(c) for c in syms)
    seen = dict.fromkeys(syms, 0)
    for r, s in enumerate(starts):
        c = w[s - 1]
        seen[c] += 1
        yield (parikh, c, seen[c]), r, row_of[s - 1]


def check_rank_invertible(
    spec: OrderSpec,
    alphabet,
    max_len: int = 8,
    words: Iterable | None = None,
) -> Verdict:
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    syms = _symbols(alphabet)
    spec.check_alphabet(syms)
    if words is None:
        words = primitive_words(syms, max_len)
    table: dict = {}
    checked = 0
    for w in words:
        w = as_word(w)
        if not set(w) <= set(syms):
            raise ValueError(f"word {render(w)!r} uses symbols outside the alphabet")
        if not is_primitive(w):
            continue
        checked += 1
        for key, row, target in lf_entries(w, spec, syms):
            prev = table.setdefault(key, (w, row, target))
            if prev[2] != target:
                parikh, c, j = key
                witness = Witness(prev[0], w, c, j, parikh, prev[1], row, prev[2], target)
                return Verdict(VIOLATED, witness, checked)
    return Verdict(CONSISTENT, None, checked)


def canonical(spec: OrderSpec, alphabet) -> tuple[str, ...]:
    """Each permutation named by its restriction to the alphabet ('id', 'rev' or the order)."""
    syms = _symbols(alphabet)
    out = []
    for p in spec.perms:
        if p.is_identity(syms):
            out.append("id")
        elif p.is_reverse(syms):
            out.append("rev")
        else:
            out.append(render(bytes(p.restricted(syms))))
    return tuple(out)


def predict_rank_invertible(spec: OrderSpec, alphabet) -> bool:
    """Only the lexicographic and the alternating orders are rank-invertible."""
    syms = _symbols(alphabet)
    if len(syms) < 2:
        raise ValueError("need at least two symbols")
    spec.check_alphabet(syms)
    return spec.is_lex(syms) or spec.is_alt(syms)


def matrix_lines(w: bytes, spec: OrderSpec) -> list[str]:
    """Rows of the sorted rotation matrix with their LF targets."""
    n = len(w)
    starts = sorted_starts(w, spec)
    row_of = {s: r for r, s in enumerate(starts)}
    return [f"{r:>3} {render(w[s:] + w[:s])} -> {row_of[(s - 1) % n]}" for r, s in enumerate(starts)]


def format_witness(verdict: Verdict, spec: OrderSpec) -> str:
    if verdict.witness is None:
        return f"status={verdict.status}\twords={verdict.words_checked}"
    wt = verdict.witness
    left = matrix_lines(wt.word1, spec)
    right = matrix_lines(wt.word2, spec)
    width = max(len(s) for s in left)
    lines = [f"status={verdict.status}\twords={verdict.words_checked}", f"witness: {wt}"]
    for a, b in itertools.zip_longest(left, right, fillvalue=""):
        lines.append(f"{a:<{width}}   {b}")
    return "\n".join(lines)

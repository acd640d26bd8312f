"""Front door: pick the fastest correct transform or inverse for an order."""

from __future__ import annotations

from .dcsort import abwt_dc, bwt_from_suffixes, lex_suffix_array
from .galois import abwt_sentinel_free
from .lfmap import invert_fast
from .orders import SENTINEL, OrderSpec, as_word, check_sentinel_terminated
from .output import TransformOutput
from .reference import bwt_k_naive, invert_generic


def lf_mode(spec: OrderSpec) -> str | None:
    """``"bwt"`` or ``"abwt"`` when the order admits LF inversion, else ``None``."""
    if spec.k == 1 and spec.perm_at(0).is_identity():
        return "bwt"
    if spec.k == 2 and spec.perm_at(0).is_identity() and spec.perm_at(1).is_reverse():
        return "abwt"
    return None


def bwt_k(w: bytes, spec: OrderSpec, naive: bool = False) -> TransformOutput:
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    mode = None if naive else lf_mode(spec)
    terminated = w[-1] == SENTINEL
    if terminated:
        check_sentinel_terminated(w)
    if mode == "abwt":
        return abwt_dc(w) if terminated else abwt_sentinel_free(w)
    if mode == "bwt" and terminated:
        return bwt_from_suffixes(w, lex_suffix_array(w))
    return bwt_k_naive(w, spec)


def invert(out: TransformOutput, spec: OrderSpec, naive: bool = False) -> bytes:
    mode = None if naive else lf_mode(spec)
    if mode is not None:
        return invert_fast(out, mode)
    return invert_generic(out, spec)

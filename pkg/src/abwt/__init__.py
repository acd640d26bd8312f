"""Alternating Burrows-Wheeler transform and its generalized order family."""

from .dcsort import DifferenceCover, abwt_dc, alt_suffix_array_dc, lex_suffix_array
from .fmindex import AbwtIndex, backward_extend, count, init_range, locate
from .galois import abwt_sentinel_free, find_galois_rotation, galois_rotation, is_galois, is_primitive
from .lfmap import invert_fast, lf_abwt, lf_array, lf_bwt
from .orders import ALT, LEX, SENTINEL, Alphabet, OrderSpec, Permutation, as_word, cmp_alt, cmp_k, render
from .output import TransformOutput
from .rankindex import RankIndex
from .rankinv import Verdict, check_rank_invertible, predict_rank_invertible
from .reference import bwt_k_naive, invert_generic, rotation_matrix
from .stats import check_entropy_factorization, check_run_bound, h0, hk, hk_circular, rle
from .transform import bwt_k, invert

__version__ = "0.1.0"

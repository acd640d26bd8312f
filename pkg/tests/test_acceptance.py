"""Acceptance criteria, one test (and one PASS/FAIL line) per criterion.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""

import itertools
import math
import time

import numpy as np
import pytest

from abwt.dcsort import DifferenceCover, alt_suffix_array_dc, sample_tuple_ranks, suffix_array_lex
from abwt.fmindex import AbwtIndex
from abwt.galois import abwt_sentinel_free, borders, galois_scan, is_primitive
from abwt.lfmap import invert_fast, lf_abwt, lf_bwt
from abwt.orders import ALT, LEX, OrderSpec, Permutation, as_word, cmp_alt, render
from abwt.output import TransformOutput
from abwt.rankindex import RankIndex
from abwt.rankinv import check_rank_invertible, predict_rank_invertible, primitive_words
from abwt.reference import bwt_k_naive, invert_generic, lf_from_matrix, rotation_matrix
from abwt.stats import check_entropy_factorization, check_run_bound
from abwt.transform import bwt_k, invert

SEED = 20240601

pytestmark = pytest.mark.slow


def random_spec(rng, alphabet: bytes, max_k: int = 4) -> OrderSpec:
    k = int(rng.integers(1, max_k + 1))
    perms = [Permutation.identity()]
    for _ in range(k - 1):
        choice = rng.integers(0, 4)
        if choice == 0:
            perms.append(Permutation.identity())
        elif choice == 1:
            perms.append(Permutation.reverse())
        else:
            perms.append(Permutation.explicit(bytes(int(c) for c in rng.permutation(list(alphabet)))))
    return OrderSpec(tuple(perms))


def random_primitive(rng, n: int, sigma: int, base: int = 97) -> bytes:
    while True:
        w = rng.integers(base, base + sigma, n, dtype=np.uint8).tobytes()
        if is_primitive(w):
            return w


def test_c01_fig1_goldens(report):
    t = time.perf_counter()
    a = bwt_k(b"acaabr", LEX)
    b = bwt_k(b"acaabr", ALT)
    dt = time.perf_counter() - t
    ok = a == TransformOutput(b"caraab", 2) and b == TransformOutput(b"racaab", 0) and dt < 1.0
    assert report(1, ok, f"id -> {a}, id:rev -> {b}, {dt * 1000:.1f} ms (limit 1 s)")


def test_c02_fig5_goldens(report):
    got = {
        "banana": abwt_sentinel_free(b"banana").last_column,
        "banana$": bwt_k(as_word("banana$"), ALT).last_column,
        "ananab$": bwt_k(as_word("ananab$"), ALT).last_column,
    }
    want = {"banana": b"bnnaaa", "banana$": as_word("abnn$aa"), "ananab$": as_word("b$nnaaa")}
    ok = got == want
    shown = ", ".join(f"{k} -> {render(v)}" for k, v in got.items())
    assert report(2, ok, f"{shown} (byte-exact)")


def test_c03_worked_example(report):
    w = as_word("abaacabaacab$")
    _, ranks = sample_tuple_ranks(w, DifferenceCover(6, (0, 1, 3)))
    sa = suffix_array_lex(ranks)
    ok = ranks.tolist() == [2, 4, 0, 4, 3, 1, 5] and sa.tolist() == [2, 5, 0, 4, 1, 3, 6]
    assert report(3, ok, f"R={ranks.tolist()} SA(R)={sa.tolist()} (exact)")


def test_c04_roundtrip(report):
    t0 = time.perf_counter()
    fails = 0
    exhaustive = 0
    for w in primitive_words("abc", 10):
        for spec in (LEX, ALT):
            fails += invert(bwt_k(w, spec), spec) != w
        exhaustive += 1
    t1 = time.perf_counter()

    rng = np.random.default_rng(SEED)
    for _ in range(1000):
        sigma = int(rng.integers(2, 9))
        w = random_primitive(rng, int(rng.integers(1, 201)), sigma)
        spec = random_spec(rng, bytes(range(97, 97 + sigma)))
        fails += invert_generic(bwt_k_naive(w, spec), spec) != w
    t2 = time.perf_counter()

    for _ in range(100):
        sigma = int(rng.integers(2, 256))
        w = random_primitive(rng, 100_000, sigma, base=1)
        fails += invert_fast(abwt_sentinel_free(w), "abwt") != w
    t3 = time.perf_counter()
    ok = fails == 0
    assert report(
        4,
        ok,
        f"failures={fails} (limit 0): {exhaustive} primitive words n<=10 x {{id, id:rev}} in {t1 - t0:.0f} s, "
        f"1000 generic n<=200 in {t2 - t1:.0f} s, 100 fast n=1e5 in {t3 - t2:.0f} s",
    )


def test_c05_lf_oracle(report):
    bad = checked = 0
    for w in primitive_words("abc", 8):
        for spec, lf in ((LEX, lf_bwt), (ALT, lf_abwt)):
            idx = RankIndex.build(bwt_k_naive(w, spec).last_column)
            bad += [lf(idx, i) for i in range(len(w))] != lf_from_matrix(w, spec)
        checked += 1
    assert report(5, bad == 0, f"mismatches={bad} over {checked} words n<=8, sigma<=3, both transforms")


def test_c06_backward_search(report):
    rng = np.random.default_rng(SEED + 6)
    bad = 0
    cache = {}
    for _ in range(10_000):
        sigma = int(rng.integers(1, 4))
        n = int(rng.integers(1, 13)) if sigma > 1 else 1
        w = random_primitive(rng, n, sigma)
        m = int(rng.integers(1, n + 1))
        if rng.random() < 0.5:
            s = int(rng.integers(0, n))
            p = (w[s:] + w[:s])[:m]
        else:
            p = rng.integers(97, 97 + sigma, m, dtype=np.uint8).tobytes()
        if w not in cache:
            cache[w] = (AbwtIndex.build(w), rotation_matrix(w, ALT))
        idx, rows = cache[w]
        bad += idx.count(p) != sum(r.startswith(p) for r in rows)
    assert report(6, bad == 0, f"mismatches={bad} over 10000 sampled (w, p), n<=12, sigma<=3")


def _argmin_rotation(w: bytes) -> int:
    n = len(w)
    best, best_rot = 0, w
    for i in range(1, n):
        rot = w[i:] + w[:i]
        if cmp_alt(rot, best_rot) < 0:
            best, best_rot = i, rot
    return best


def test_c07_galois(report):
    t0 = time.perf_counter()
    bad_argmin = words = 0
    bad_border = galois_words = 0
    for n in range(1, 13):
        for t in itertools.product(b"abc", repeat=n):
            w = bytes(t)
            if not is_primitive(w):
                continue
            words += 1
            k = galois_scan(w).start
            bad_argmin += k != _argmin_rotation(w)
            if k == 0:
                galois_words += 1
                bad_border += any(b % 2 == 0 for b in borders(w))
    for n in range(13, 15):
        for t in itertools.product(b"ab", repeat=n):
            w = bytes(t)
            if is_primitive(w) and galois_scan(w).start == 0:
                galois_words += 1
                bad_border += any(b % 2 == 0 for b in borders(w))
    t1 = time.perf_counter()

    rng = np.random.default_rng(SEED + 7)
    over = 0
    worst = 0.0
    lengths = np.concatenate(
        [np.exp(rng.uniform(math.log(2), math.log(1000), 9900)), np.exp(rng.uniform(math.log(1000), math.log(100_000), 100))]
    ).astype(int)
    for n in lengths:
        sigma = int(rng.integers(2, 5))
        w = random_primitive(rng, int(n), sigma)
        c = galois_scan(w).comparisons
        over += c > 4 * n - 3
        worst = max(worst, c / (4 * n - 3))
    t2 = time.perf_counter()
    ok = bad_argmin == 0 and bad_border == 0 and over == 0
    assert report(
        7,
        ok,
        f"argmin mismatches={bad_argmin}/{words} (n<=12, sigma<=3); even borders={bad_border}/{galois_words} "
        f"Galois words (sigma 3 to n=12, sigma 2 to n=14); counter > 4n-3 in {over}/10000 inputs, "
        f"max ratio {worst:.3f} [{t1 - t0:.0f} s + {t2 - t1:.0f} s]",
    )


def test_c08_rank_invertibility(report):
    spec = OrderSpec.parse
    results = {}

    parikh_212_words = [w for w in primitive_words("abc", 5, 5) if (w.count(97), w.count(98), w.count(99)) == (2, 1, 2)]
    v = check_rank_invertible(spec("id:cab"), "abc", words=parikh_212_words)
    direct = check_rank_invertible(spec("id:cab"), "abc", words=["aabcc", "abacc"])
    results["minimal_witness"] = (
        not v.consistent and v.witness.parikh == (2, 1, 2) and len(v.witness.word1) == 5
        and not direct.consistent and (direct.witness.word1, direct.witness.word2) == (b"aabcc", b"abacc")
    )

    def two_block(i):
        return [b"a" + b"b" * i + b"a" + b"b" * (i + 1) + b"bb", b"a" + b"b" * (i + 1) + b"a" + b"b" * (i + 1) + b"b"]

    def ternary(i):
        return [b"a" + b"c" * i + b"ba" + b"c" * i + b"ccc", b"a" + b"c" * (i + 1) + b"ba" + b"c" * (i + 1) + b"c"]

    results["id_id_rev"] = all(
        not check_rank_invertible(spec("id:id:rev"), "ab", words=two_block(i)).consistent for i in (0, 1, 2)
    )
    results["id_rev_pi"] = all(
        not check_rank_invertible(spec(f"id:rev:{p}"), "ab", words=two_block(0)).consistent for p in ("rev", "ba")
    ) and all(
        not check_rank_invertible(spec(f"id:rev:{p}"), "abc", words=ternary(0)).consistent for p in ("acb", "cab", "rev")
    ) and all(not check_rank_invertible(spec(f"id:rev:{p}"), "abc", 8).consistent for p in ("bac", "bca"))
    results["id_rev_id_pi"] = all(
        not check_rank_invertible(spec(f"id:rev:id:{p}"), "ab", words=two_block(1)).consistent for p in ("id", "ab")
    ) and all(
        not check_rank_invertible(spec(f"id:rev:id:{p}"), "abc", words=ternary(1)).consistent for p in ("id", "bac", "bca")
    ) and all(not check_rank_invertible(spec(f"id:rev:id:{p}"), "abc", 8).consistent for p in ("acb", "cab"))
    results["consistent"] = all(check_rank_invertible(spec(s), "abc", 10).consistent for s in ("id", "id:rev"))

    disagree = 0
    total = 0
    perms = {2: ["id", "rev"], 3: ["id", "rev", "acb", "bac", "bca", "cab"]}
    for sigma, ps in perms.items():
        alphabet = "abc"[:sigma]
        for k in (1, 2, 3):
            for rest in itertools.product(ps, repeat=k - 1):
                s = spec(":".join(("id",) + rest))
                total += 1
                disagree += check_rank_invertible(s, alphabet, 8).consistent != predict_rank_invertible(s, alphabet)
    results["agreement"] = disagree == 0
    ok = all(results.values())
    shown = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in results.items())
    assert report(8, ok, f"{shown}; checker vs prediction disagreements={disagree}/{total} specs (k<=3, sigma<=3)")


@pytest.mark.xfail(strict=True, reason="the bound is false for the alternating order, e.g. aaabbb -> ababab (6 > 4)")
def test_c09_run_bound(report):
    rng = np.random.default_rng(SEED + 9)
    violations = 0
    worst = 0.0
    first = None
    for _ in range(10_000):
        sigma = int(rng.integers(2, 6))
        w = random_primitive(rng, int(rng.integers(2, 501)), sigma)
        spec = random_spec(rng, bytes(range(97, 97 + sigma)))
        r = check_run_bound(w, spec)
        if not r.holds:
            violations += 1
            first = first or f" first={w.decode()} K={spec} rho {r.rho_out} > 2*{r.rho_in}"
        worst = max(worst, r.rho_out / r.rho_in)
    assert report(
        9,
        violations == 0,
        f"violations={violations}/10000 (limit 0), max rho_out/rho_in={worst:.3f} (bound 2){first or ''}",
    )


def test_c10_entropy_factorization(report):
    rng = np.random.default_rng(SEED + 10)
    worst = 0.0
    for _ in range(1000):
        sigma = int(rng.integers(2, 5))
        r = int(rng.integers(0, 4))
        w = random_primitive(rng, int(rng.integers(r + 2, 301)), sigma)
        spec = random_spec(rng, bytes(range(97, 97 + sigma)))
        e = check_entropy_factorization(w, spec, r)
        worst = max(worst, abs(e.lhs - e.rhs))
    assert report(10, worst <= 1e-9, f"max |Hr - sum|u_i|H0(u_i)/n| = {worst:.2e} over 1000 cases (tolerance 1e-9)")


def _best_time(w: bytes, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t = time.perf_counter()
        abwt_sentinel_free(w)
        best = min(best, time.perf_counter() - t)
    return best


def test_c11_scalability(report):
    rng = np.random.default_rng(SEED + 11)
    w = random_primitive(rng, 10_000_000, 255, base=1)
    t = time.perf_counter()
    out = abwt_sentinel_free(w)
    elapsed = time.perf_counter() - t
    inverts = invert_fast(out, "abwt") == w
    small = random_primitive(rng, 100_000, 255, base=1)
    large = random_primitive(rng, 1_000_000, 255, base=1)
    ratio = _best_time(large, 3) / _best_time(small, 5)
    ok = elapsed < 60 and inverts and ratio <= 15
    assert report(
        11, ok, f"10 MB transform {elapsed:.1f} s (limit 60 s), inverts={inverts}, time(1e6)/time(1e5)={ratio:.1f} (limit 15)"
    )


if __name__ == "__main__":
    import sys

    from conftest import Recorder

    rec = Recorder()
    names = sorted(n for n in globals() if n.startswith("test_c"))
    failed = 0
    for name in names:
        try:
            globals()[name](rec)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)

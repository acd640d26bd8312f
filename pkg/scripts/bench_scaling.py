"""Time the sentinel-free alternating transform and its inversion across input sizes."""

import argparse
import time

import numpy as np

from abwt.galois import abwt_sentinel_free
from abwt.lfmap import invert_fast


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=[10**4, 10**5, 10**6])
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    print("n\tforward_s\tinverse_s\tns_per_symbol")
    for n in args.sizes:
        w = (rng.integers(1, args.sigma + 1, n, dtype=np.uint8) + 96).tobytes()
        fwd, out = best_of(lambda: abwt_sentinel_free(w), args.repeats)
        inv, back = best_of(lambda: invert_fast(out, "abwt"), args.repeats)
        assert back == w
        print(f"{n}\t{fwd:.3f}\t{inv:.3f}\t{1e9 * fwd / n:.0f}")


if __name__ == "__main__":
    main()

"""Count words whose transform has more than twice the runs of the input, per order."""

import argparse

from abwt.orders import OrderSpec
from abwt.rankinv import primitive_words
from abwt.stats import check_run_bound


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alphabet", default="ab")
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--orders", nargs="+", default=["id", "id:rev", "id:id:rev"])
    args = p.parse_args()

    print("K\tn\twords\tviolations\tmax_ratio\tfirst")
    for text in args.orders:
        spec = OrderSpec.parse(text)
        for n in range(2, args.max_len + 1):
            words = bad = 0
            worst, first = 0.0, "-"
            for w in primitive_words(args.alphabet, n, n):
                r = check_run_bound(w, spec)
                words += 1
                worst = max(worst, r.rho_out / r.rho_in)
                if not r.holds:
                    bad += 1
                    if first == "-":
                        first = w.decode()
            print(f"{spec}\t{n}\t{words}\t{bad}\t{worst:.3f}\t{first}")


if __name__ == "__main__":
    main()

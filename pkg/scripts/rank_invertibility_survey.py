"""Search every order of K permutations (identity first) over a small alphabet for rank-invertibility witnesses."""

import argparse
import itertools

from abwt.orders import OrderSpec
from abwt.rankinv import canonical, check_rank_invertible, predict_rank_invertible


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alphabet", default="abc")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-len", type=int, default=7)
    args = p.parse_args()

    perms = ["".join(t) for t in itertools.permutations(args.alphabet)]
    agree = total = 0
    print("K\tcanonical\tpredicted\tobserved\twords\twitness")
    ident = "".join(sorted(args.alphabet))
    for combo in itertools.product(perms, repeat=args.k - 1):
        spec = OrderSpec.parse(":".join((ident,) + combo))
        verdict = check_rank_invertible(spec, args.alphabet, args.max_len)
        predicted = predict_rank_invertible(spec, args.alphabet)
        total += 1
        agree += predicted == verdict.consistent
        print(
            f"{spec}\t{','.join(canonical(spec, args.alphabet))}\t{int(predicted)}\t"
            f"{int(verdict.consistent)}\t{verdict.words_checked}\t{verdict.witness or '-'}"
        )
    print(f"orders={total}\tagree={agree}")


if __name__ == "__main__":
    main()

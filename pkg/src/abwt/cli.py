"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 data error.  Output is
``key=value`` lines, TSV tables, or one suffix index per line for ``sa``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dcsort import alt_suffix_array_dc, lex_suffix_array
from .fmindex import AbwtIndex
from .galois import find_galois_rotation
from .orders import SENTINEL, OrderSpec, check_sentinel_terminated, render
from .output import TransformOutput
from .rankinv import check_rank_invertible, format_witness, predict_rank_invertible
from .stats import check_entropy_factorization, check_run_bound, h0, hk, rle
from .transform import bwt_k, invert

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 2, 3


class DataError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _spec(text: str) -> OrderSpec:
    try:
        return OrderSpec.parse(text)
    except ValueError as e:
        raise DataError(f"bad order {text!r}: {e}") from e


def _emit(**kv) -> None:
    for k, v in kv.items():
        print(f"{k}={v}")


def read_meta(path) -> dict[str, str]:
    meta = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            key, sep, value = line.partition("=")
            if not sep:
                raise DataError(f"malformed metadata line {line!r}")
            meta[key.strip()] = value.strip()
    for key in ("n", "I", "K", "sentinel"):
        if key not in meta:
            raise DataError(f"metadata is missing {key!r}")
    return meta


def write_meta(path, n: int, row: int, spec: OrderSpec, sentinel: bool) -> None:
    Path(path).write_text(f"n={n}\nI={row}\nK={spec}\nsentinel={int(sentinel)}\n", encoding="utf-8")


def _prepare(w: bytes, mode: str) -> tuple[bytes, bool]:
    """Apply the sentinel policy; the flag says whether a sentinel was appended."""
    if mode == "forbid":
        if SENTINEL in w:
            raise DataError("input contains the sentinel byte 0x00")
        return w, False
    if mode == "require":
        try:
            check_sentinel_terminated(w)
        except ValueError as e:
            raise DataError(str(e)) from e
        return w, False
    if SENTINEL in w:
        raise DataError("input already contains the sentinel byte 0x00")
    return w + bytes([SENTINEL]), True


def cmd_transform(args) -> int:
    spec = _spec(args.order)
    w, appended = _prepare(_read(args.input), args.sentinel)
    last, row = bwt_k(w, spec, naive=args.naive)
    out = args.output or (args.input + ".bwt" if args.input != "-" else None)
    if out is None:
        raise DataError("reading stdin requires -o")
    _write(out, last)
    write_meta(args.meta or out + ".meta", len(last), row, spec, appended)
    _emit(n=len(last), I=row, K=spec, sentinel=int(appended), payload=out)
    return EXIT_OK


def cmd_invert(args) -> int:
    last = _read(args.payload)
    meta = read_meta(args.meta or args.payload + ".meta")
    spec = _spec(meta["K"])
    try:
        n, row = int(meta["n"]), int(meta["I"])
    except ValueError as e:
        raise DataError(f"bad metadata: {e}") from e
    if n != len(last):
        raise DataError(f"metadata says n={n} but payload has {len(last)} bytes")
    w = invert(TransformOutput(last, row), spec, naive=args.naive)
    if meta["sentinel"] == "1":
        if not w or w[-1] != SENTINEL:
            raise DataError("expected a trailing sentinel to strip")
        w = w[:-1]
    _write(args.output, w)
    return EXIT_OK


def cmd_index(args) -> int:
    w = _read(args.input)
    idx = AbwtIndex.build(w, locate=args.locate)
    idx.save(args.output)
    _emit(n=idx.n, I=idx.row_index, locate=int(args.locate), index=args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    idx = AbwtIndex.load(args.index)
    pattern = args.pattern.encode("latin-1")
    _emit(count=idx.count(pattern))
    if args.locate:
        print("positions=" + "\t".join(str(p) for p in idx.locate(pattern)))
    return EXIT_OK


def cmd_galois(args) -> int:
    w = _read(args.input)
    k = find_galois_rotation(w)
    _emit(k=k, rotation=render(w[k:] + w[:k]))
    return EXIT_OK


def cmd_stats(args) -> int:
    spec = _spec(args.order)
    w = _read(args.input)
    _emit(n=len(w), rho=rle(w).rho, H0=f"{h0(w):.12f}")
    print("k\tHk")
    for k in range(1, 5):
        print(f"{k}\t{hk(w, k):.12f}")
    bound = check_run_bound(w, spec)
    _emit(rho_out=bound.rho_out, rho_in=bound.rho_in, run_bound=int(bound.holds))
    if args.r is not None:
        e = check_entropy_factorization(w, spec, args.r)
        _emit(r=args.r, Hr=f"{e.lhs:.12f}", blocks_H0=f"{e.rhs:.12f}", blocks=e.blocks, factorization=int(e.equal))
    return EXIT_OK


def cmd_sa(args) -> int:
    w = _read(args.input)
    if not w or w[-1] != SENTINEL:
        w += bytes([SENTINEL])
    sa = alt_suffix_array_dc(w) if args.order == "alt" else lex_suffix_array(w)
    print("\n".join(str(int(s)) for s in sa))
    return EXIT_OK


def cmd_rankinv(args) -> int:
    spec = _spec(args.order)
    verdict = check_rank_invertible(spec, args.alphabet, args.max_len)
    print(format_witness(verdict, spec))
    _emit(predicted=int(predict_rank_invertible(spec, args.alphabet)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abwt", description="Alternating and generalized BWT tools")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="compute bwt_K of a file")
    t.add_argument("input")
    t.add_argument("-o", "--output")
    t.add_argument("--meta", help="sidecar path (default OUTPUT.meta)")
    t.add_argument("--order", default="id:rev", help="colon-separated permutations, e.g. id:rev")
    t.add_argument("--sentinel", choices=("auto", "require", "forbid"), default="forbid")
    t.add_argument("--naive", action="store_true", help="force the rotation-matrix oracle")
    t.set_defaults(func=cmd_transform)

    i = sub.add_parser("invert", help="invert a transform payload")
    i.add_argument("payload")
    i.add_argument("--meta")
    i.add_argument("-o", "--output")
    i.add_argument("--naive", action="store_true", help="force column-by-column inversion")
    i.set_defaults(func=cmd_invert)

    x = sub.add_parser("index", help="build a backward-search index")
    x.add_argument("input")
    x.add_argument("-o", "--output", required=True)
    x.add_argument("--locate", action="store_true", help="store positions for locate")
    x.set_defaults(func=cmd_index)

    s = sub.add_parser("search", help="count (and locate) a pattern")
    s.add_argument("index")
    s.add_argument("pattern")
    s.add_argument("--locate", action="store_true")
    s.set_defaults(func=cmd_search)

    g = sub.add_parser("galois", help="Galois rotation of a word")
    g.add_argument("input")
    g.set_defaults(func=cmd_galois)

    st = sub.add_parser("stats", help="runs, entropy and transform checks")
    st.add_argument("input")
    st.add_argument("--order", default="id:rev")
    st.add_argument("--r", type=int, help="context length for the entropy factorization")
    st.set_defaults(func=cmd_stats)

    sa = sub.add_parser("sa", help="suffix array of INPUT plus sentinel")
    sa.add_argument("input")
    sa.add_argument("--order", choices=("alt", "lex"), default="alt")
    sa.set_defaults(func=cmd_sa)

    r = sub.add_parser("rankinv", help="search for a rank-invertibility counterexample")
    r.add_argument("--order", required=True)
    r.add_argument("--alphabet", default="abc")
    r.add_argument("--max-len", type=int, default=8)
    r.set_defaults(func=cmd_rankinv)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (DataError, ValueError, KeyError, IndexError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

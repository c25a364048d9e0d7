"""Command-line front end.

Exit status: 0 when every checked property holds, 1 when one fails, 2 on bad
input, 3 when an instance exceeds its work bound. Code strings are always in
written (right-to-left) order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from pathlib import Path

from .errors import InstanceTooLarge, NotThreshold
from .graph import (
    Graph,
    LoopThresholdCode,
    ThresholdCode,
    colex_graph,
    decode_loop_threshold,
    decode_threshold,
    encode_threshold,
    lex_decompose,
    lex_graph,
    loop_threshold_codes,
)
from .hom import DEFAULT_MAX_WORK, hom_count, hom_count_threshold, ind_count, ind_profile, independence_poly_eval, MAX_DP_IMAGE
from .lex import ELL_HEADER, SWEEP_HEADER, ell, ell_value, is_non_monotone, run_ledger, sweep_record
from .verify import SUITES, run_suite


class UsageError(ValueError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"5"`` or ``"1..10"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _load_graph(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return Graph.from_json(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read graph from {path}: {exc}") from exc


def _source(args) -> tuple[Graph, ThresholdCode | None]:
    if args.source is not None:
        return _load_graph(args.source), None
    if args.source_code is not None:
        code = ThresholdCode.parse(args.source_code)
        return decode_threshold(code), code
    raise UsageError("give --source FILE or --source-code CODE")


def _explain(label: str, display: str) -> None:
    print(f"{label}: written {display!r}, construction order {display[::-1]!r}", file=sys.stderr)


def cmd_hom(args) -> int:
    g, code = _source(args)
    image_code = LoopThresholdCode.parse(args.image)
    h = decode_loop_threshold(image_code)
    if args.explain:
        if code is not None:
            _explain("source", code.display())
        _explain("image", image_code.display())
    if code is not None and h.n <= MAX_DP_IMAGE:
        print(hom_count_threshold(code, h))
    else:
        print(hom_count(g, h, max_work=args.max_work))
    return 0


def cmd_ind(args) -> int:
    g, _ = _source(args)
    if args.profile:
        print(",".join(map(str, ind_profile(g, max_work=args.max_work))))
    elif args.lam is not None:
        print(independence_poly_eval(g, Fraction(args.lam)))
    else:
        print(ind_count(g, max_work=args.max_work))
    return 0


def cmd_code(args) -> int:
    if args.decode is not None:
        if args.loop:
            code = LoopThresholdCode.parse(args.decode)
            g = decode_loop_threshold(code)
        else:
            code = ThresholdCode.parse(args.decode)
            g = decode_threshold(code)
        if args.explain:
            _explain("code", code.display())
        print(g.to_json())
        return 0
    if args.encode is not None:
        g = _load_graph(args.encode)
        try:
            code = encode_threshold(g)
        except NotThreshold as exc:
            print(f"not a threshold graph: {exc}", file=sys.stderr)
            return 1
        if args.explain:
            _explain("code", code.display())
        print(code.display())
        return 0
    raise UsageError("give --decode CODE or --encode FILE")


def cmd_lex(args) -> int:
    n, m = args.n, args.m
    if not 0 <= m <= comb(n, 2):
        raise UsageError(f"need 0 <= m <= C(n,2) = {comb(n, 2)}")
    g = colex_graph(n, m) if args.colex else lex_graph(n, m)
    out = {"n": n, "m": m, "order": "colex" if args.colex else "lex", "code": encode_threshold(g).display() if n else ""}
    if not args.colex and n:
        p = lex_decompose(n, m)
        out.update(k=p.k, w=p.w)
    out["graph"] = g.to_dict()
    print(json.dumps(out))
    return 0


def _map(fn, items, threads: int):
    if threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (threads * 8))))
    return [fn(x) for x in items]


def _ell_row(m: int) -> list[str]:
    return ell(m).csv_row()


def _full_window_ell(m: int) -> int:
    return ell_value(m, full_window=True)


def _read_ell_cache(path: Path) -> dict[int, list[str]]:
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ELL_HEADER:
            raise UsageError(f"cache {path} does not have the ell CSV header")
        return {int(row[0]): row for row in reader if row}


def _write_csv(rows, header, out: str | None) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    if out in (None, "-"):
        sys.stdout.write(buf.getvalue())
    else:
        Path(out).write_text(buf.getvalue())


def cmd_ell(args) -> int:
    lo, hi = parse_range(args.m)
    if lo < 1:
        raise UsageError("ell(m) needs m >= 1")
    wanted = list(range(lo, hi + 1))
    rows: dict[int, list[str]] = {}
    cache = Path(args.cache) if args.cache else None
    if cache is not None and cache.exists():
        cached = _read_ell_cache(cache)
        keys = sorted(cached)
        sample = random.Random(0).sample(keys, max(1, len(keys) // 100)) if keys else []
        if all(cached[m] == _ell_row(m) for m in sample):
            rows.update(cached)
        else:
            print(f"cache {cache} failed validation; recomputing", file=sys.stderr)
    missing = [m for m in wanted if m not in rows]
    for m, row in zip(missing, _map(_ell_row, missing, args.threads)):
        rows[m] = row
    if cache is not None and missing:
        _write_csv([rows[m] for m in sorted(rows)], ELL_HEADER, str(cache))
    selected = [rows[m] for m in wanted]
    _write_csv(selected, ELL_HEADER, args.out)
    status = 0
    bad = [r[0] for r in selected if r[2] != "true" or r[3] != "true"]
    if bad:
        print(f"bound violated at m = {', '.join(bad)}", file=sys.stderr)
        status = 1
    if args.full_window:
        full = _map(_full_window_ell, wanted, args.threads)
        diff = [m for m, v in zip(wanted, full) if str(v) != rows[m][1]]
        if diff:
            print(f"pruned and full-window search disagree at m = {diff}", file=sys.stderr)
            status = 1
    return status


def _sweep_row(nm: tuple[int, int]):
    return sweep_record(*nm)


def cmd_sweep(args) -> int:
    n = args.n
    lo, hi = parse_range(args.m) if args.m else (1, comb(n, 2))
    if not 1 <= lo <= hi <= comb(n, 2):
        raise UsageError(f"m range must lie in 1..{comb(n, 2)}")
    records = _map(_sweep_row, [(n, m) for m in range(lo, hi + 1)], args.threads)
    _write_csv([r.csv_row() for r in records], SWEEP_HEADER, args.out)
    if args.check_nonmonotone:
        seq = [r.q_star_max for r in records]
        if not is_non_monotone(seq):
            print("q_star_max sequence is monotone", file=sys.stderr)
            return 1
        print("q_star_max sequence is non-monotone", file=sys.stderr)
    return 0


def _parse_images(text: str | None) -> list[LoopThresholdCode]:
    if text is None or text == "all3":
        return loop_threshold_codes(3)
    if text.startswith("all") and text[3:].isdigit():
        return loop_threshold_codes(int(text[3:]))
    return [LoopThresholdCode.parse(c.strip()) for c in text.split(",") if c.strip()]


def cmd_verify(args) -> int:
    try:
        lambdas = [Fraction(x) for x in args.lambdas.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad lambda list {args.lambdas!r}") from None
    report = run_suite(args.suite, args.max_n, images=_parse_images(args.images), lambdas=lambdas, min_n=args.min_n)
    print(json.dumps(report.to_dict()))
    return 0 if report.passed else 1


LEDGER_HEADER = ["n", "k", "w", "m", "subcase", "status", "j_G", "j_G1", "j_G2", "diff_G1", "diff_G2",
                 "decomposition_as_stated", "formulas_ok", "detail"]


def cmd_ledger(args) -> int:
    rows, skipped = run_ledger(args.max_n)
    out = []
    for r in rows:
        out.append([
            r.n, r.k, r.w, r.m, r.subcase, "pass" if r.passed else "fail", r.j_g, r.j_g1,
            "" if r.j_g2 is None else r.j_g2, r.j_g1 - r.j_g, "" if r.j_g2 is None else r.j_g2 - r.j_g,
            str(r.decomposition_as_stated).lower(), str(r.formulas_ok).lower(),
            "; ".join(f"{k}: {'ok' if v else 'FAILS'}" for k, v in r.checks.items()),
        ])
    if args.include_skipped:
        for n, k, w, why in skipped:
            out.append([n, k, w, "", "", "skipped", "", "", "", "", "", "", "", why])
    out.sort(key=lambda row: (row[0], row[1], row[2]))
    _write_csv(out, LEDGER_HEADER, args.out)
    failed = sum(not r.passed for r in rows)
    print(f"{len(rows)} rows checked, {failed} failed, {len(skipped)} skipped", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loopthresh", description="Exact homomorphism counts into loop-threshold graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def source_flags(p):
        p.add_argument("--source", help="graph JSON file ('-' for stdin)")
        p.add_argument("--source-code", help="threshold code of the source graph")
        p.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK)

    p = sub.add_parser("hom", help="count homomorphisms into a loop-threshold image")
    source_flags(p)
    p.add_argument("--image", required=True, help="loop-threshold code of the image, e.g. 010")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("ind", help="independent-set count, profile, or polynomial value")
    source_flags(p)
    p.add_argument("--profile", action="store_true")
    p.add_argument("--lam", help="evaluate the independence polynomial at this rational")
    p.set_defaults(func=cmd_ind)

    p = sub.add_parser("code", help="convert between codes and graph JSON")
    p.add_argument("--decode", help="code to decode")
    p.add_argument("--loop", action="store_true", help="treat --decode as a loop-threshold code")
    p.add_argument("--encode", help="graph JSON file to encode")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("lex", help="lex or colex graph with its decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--colex", action="store_true")
    p.set_defaults(func=cmd_lex)

    p = sub.add_parser("ell", help="table of ell(m) with bound checks")
    p.add_argument("--m", required=True, help="m or LO..HI")
    p.add_argument("--out")
    p.add_argument("--cache", help="CSV cache file (same format as the output)")
    p.add_argument("--full-window", action="store_true", help="also rerun without pruning and compare")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_ell)

    p = sub.add_parser("sweep", help="extremal lex-component sizes for fixed n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", help="m or LO..HI (default 1..C(n,2))")
    p.add_argument("--out")
    p.add_argument("--check-nonmonotone", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a brute-force verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--images", help="all3 (default), allN, or comma-separated codes")
    p.add_argument("--lambdas", default="1/2,1,2,3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ledger", help="evaluate the case analysis of the ell(m) upper bound")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--include-skipped", action="store_true")
    p.set_defaults(func=cmd_ledger)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"instance too large: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

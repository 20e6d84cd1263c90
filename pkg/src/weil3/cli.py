"""Command-line front end: ``weil3 check|enumerate|census|verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .classify import CHAR, CUBE, NOT_CHAR, NOT_WEIL, REDUCIBLE, Classification, classify
from .padic import newton_polygon
from .verify import format_report, run_suites
from .weilcheck import WeilCandidate, enumerate_a1, prime_power

SCHEMA_VERSION = 1
FULL_VERIFY_CEILING = 27
DEFAULT_VERIFY_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27)

RECORD_CSV_COLUMNS = (
    "schema_version", "q", "p", "n", "a1", "a2", "a3", "verdict", "p_rank", "irreducible",
    "supersingular", "beta", "is_char", "polygon_vertices", "polygon_slopes", "factors", "reasons",
)
CENSUS_COLUMNS = (
    "q", "p", "n", "weil_total", "reducible", "cube_e3_char", "cube_e3_not_char", "char_prank0_ss",
    "char_prank0_13", "char_prank1", "char_prank2", "char_prank3", "irreducible_not_char", "wall_time_ms",
)
_CHAR_COLUMN = {
    "Supersingular": "char_prank0_ss",
    "OneThird": "char_prank0_13",
    "PRank1": "char_prank1",
    "PRank2": "char_prank2",
    "Ordinary": "char_prank3",
}


def record(w: WeilCandidate, c: Classification) -> dict:
    """The versioned JSON record for one classified triple."""
    g = newton_polygon(w.polynomial(), w.p)
    p_rank = c.p_rank if c.verdict == CHAR or (c.verdict == CUBE and c.is_char) else None
    return {
        "schema_version": SCHEMA_VERSION,
        "q": w.q,
        "p": w.p,
        "n": w.n,
        "a1": w.a1,
        "a2": w.a2,
        "a3": w.a3,
        "verdict": c.verdict,
        "p_rank": p_rank,
        "polygon": {
            "vertices": [list(v) for v in g.vertices],
            "slopes": [[str(s), length] for s, length in g.segments],
        },
        "irreducible": c.irreducible,
        "supersingular": c.supersingular,
        "beta": c.beta,
        "is_char": c.is_char,
        "factors": [list(f) for f in c.factors],
        "reasons": list(c.reasons),
    }


def _records_for_a1(args: tuple[int, int]) -> list[dict]:
    q, a1 = args
    p, n = prime_power(q)
    out = []
    for t in enumerate_a1(q, a1):
        w = WeilCandidate(q, p, n, *t)
        out.append(record(w, classify(w)))
    return out


def weil_records(q: int, threads: int = 1) -> list[dict]:
    """Records for every Weil triple of q, in lexicographic order."""
    prime_power(q)
    if threads < 1:
        raise ValueError("--threads must be at least 1")
    amax = math.isqrt(36 * q)
    jobs = [(q, a1) for a1 in range(-amax, amax + 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_records_for_a1, jobs))
    else:
        chunks = [_records_for_a1(j) for j in jobs]
    recs = [r for chunk in chunks for r in chunk]
    recs.sort(key=lambda r: (r["a1"], r["a2"], r["a3"]))
    return recs


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def format_records(recs: Iterable[dict], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in recs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_CSV_COLUMNS)
    for r in recs:
        flat = dict(r, polygon_vertices=r["polygon"]["vertices"], polygon_slopes=r["polygon"]["slopes"])
        writer.writerow([_csv_value(flat[k]) for k in RECORD_CSV_COLUMNS])
    return buf.getvalue()


def census_row(q: int, threads: int = 1, timing: bool = True) -> dict:
    start = time.perf_counter()
    p, n = prime_power(q)
    row = {k: 0 for k in CENSUS_COLUMNS}
    row.update(q=q, p=p, n=n)
    for r in weil_records(q, threads):
        row["weil_total"] += 1
        v = r["verdict"]
        if v == REDUCIBLE:
            row["reducible"] += 1
        elif v == CUBE:
            row["cube_e3_char" if r["is_char"] else "cube_e3_not_char"] += 1
        elif v == NOT_CHAR:
            row["irreducible_not_char"] += 1
        elif v == CHAR:
            row[_CHAR_COLUMN[_ptype_of(r)]] += 1
        elif v == NOT_WEIL:
            raise AssertionError("enumeration produced a non-Weil record")
    row["wall_time_ms"] = round((time.perf_counter() - start) * 1000) if timing else ""
    return row


def _ptype_of(r: dict) -> str:
    if r["supersingular"]:
        return "Supersingular"
    return {3: "Ordinary", 2: "PRank2", 1: "PRank1", 0: "OneThird"}[r["p_rank"]]


def format_census(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_COLUMNS)
    for row in rows:
        writer.writerow([row[k] for k in CENSUS_COLUMNS])
    return buf.getvalue()


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_check(args) -> int:
    w = WeilCandidate.of(args.q, args.a1, args.a2, args.a3)
    print(json.dumps(record(w, classify(w)), separators=(",", ":")))
    return 0


def cmd_enumerate(args) -> int:
    _write(format_records(weil_records(args.q, args.threads), args.format), args.out)
    return 0


def cmd_census(args) -> int:
    rows = [census_row(q, args.threads, timing=not args.no_timing) for q in args.q]
    _write(format_census(rows), args.out)
    return 0


def cmd_verify(args) -> int:
    q_list = args.q or list(DEFAULT_VERIFY_Q)
    if args.mode == "full":
        too_big = [q for q in q_list if q > FULL_VERIFY_CEILING]
        if too_big:
            raise ValueError(f"full verification is capped at q <= {FULL_VERIFY_CEILING}; use --mode sampled for {too_big}")
    results = run_suites(q_list, args.mode, args.seed, args.samples)
    _write(format_report(results) + "\n", args.out)
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weil3", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="classify one triple")
    check.add_argument("--q", type=int, required=True)
    check.add_argument("--a1", type=int, required=True)
    check.add_argument("--a2", type=int, required=True)
    check.add_argument("--a3", type=int, required=True)
    check.set_defaults(func=cmd_check)

    enum = sub.add_parser("enumerate", help="classify every Weil triple for q")
    enum.add_argument("--q", type=int, required=True)
    enum.add_argument("--out")
    enum.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    enum.add_argument("--threads", type=int, default=1)
    enum.set_defaults(func=cmd_enumerate)

    census = sub.add_parser("census", help="verdict counts per q as CSV")
    census.add_argument("--q", type=int, nargs="+", required=True)
    census.add_argument("--out")
    census.add_argument("--threads", type=int, default=1)
    census.add_argument("--no-timing", action="store_true", help="leave wall_time_ms empty for byte-stable output")
    census.set_defaults(func=cmd_census)

    verify = sub.add_parser("verify", help="oracle-equivalence suites")
    verify.add_argument("--q", type=int, nargs="+")
    verify.add_argument("--mode", choices=("full", "sampled"), default="full")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=2000)
    verify.add_argument("--out")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

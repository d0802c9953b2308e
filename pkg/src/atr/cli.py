"""``atr`` command line: search, explain, estimate, bench."""
from __future__ import annotations

import argparse
import json
import os
import string
import sys

import numpy as np

from .affixes import default_table, load_affix_file
from .compiler import MULTI_WORD, QueryConfig, compile_query, render_pattern
from .errors import ATRError
from .estimator import CharModel, composite_expected, expected_occurrences, miss_probability
from .harness import ErrorSpec, measure_recall, random_words
from .matcher import Document, fold, highlight, scan

EXIT_MATCH, EXIT_NO_MATCH, EXIT_ERROR = 0, 1, 2


def _floats(value: str) -> list[float]:
    return [float(v) for v in value.split(",") if v.strip()]


def _ints(value: str) -> list[int]:
    return [int(v) for v in value.split(",") if v.strip()]


def _count(value: str) -> int:
    # accepts 100000 as well as 1e5
    number = float(value)
    if number < 0 or number != int(number):
        raise argparse.ArgumentTypeError(f"not a non-negative whole number: {value}")
    return int(number)


def _query_args(p: argparse.ArgumentParser):
    p.add_argument("query", help="query string (quote multi-word queries)")
    p.add_argument("--percent-scan", type=int, default=50, help="portion of the query per component (default 50)")
    p.add_argument("--gap-multiplier", type=int, default=20)
    p.add_argument("--min-gap-factor", type=int, default=3)
    p.add_argument("--short-word-limit", type=int, default=4)
    p.add_argument("--affixes", metavar="PATH", help="affix table file (default: $ATR_AFFIXES or the bundled table)")
    p.add_argument("--case-sensitive", action="store_true", help="compare literals with exact case")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atr", description="Fault-tolerant text retrieval.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="scan text files for approximate occurrences")
    _query_args(p)
    p.add_argument("paths", nargs="*", help="UTF-8 text files")
    p.add_argument("--context", type=int, default=40, help="characters of context around a hit")
    p.add_argument("--output", choices=("human", "jsonl"), default="human")

    p = sub.add_parser("explain", help="show segments, components and the composite pattern")
    _query_args(p)

    p = sub.add_parser("estimate", help="expected occurrence counts and miss probabilities")
    _query_args(p)
    p.add_argument("--length", type=_count, default=1_000_000, help="text length l_T")
    p.add_argument("--alphabet", default=string.ascii_lowercase + " ", help="alphabet of the uniform model")
    p.add_argument("--model-from", metavar="PATH", help="use character frequencies of this file instead")
    p.add_argument("--epsilon", type=float, default=0.02, help="per-character error rate")

    p = sub.add_parser("bench", help="Monte-Carlo recall under injected errors (JSON lines)")
    _query_args(p)
    p.add_argument("--carrier", metavar="PATH", help="text containing the query (default: random words around it)")
    p.add_argument("--epsilon", type=_floats, default=[0.0, 0.01, 0.02, 0.05], help="comma separated error rates")
    p.add_argument("--blocks", type=_ints, default=None, help="comma separated block counts (default: from --percent-scan)")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _config(args) -> QueryConfig:
    return QueryConfig(args.percent_scan, args.gap_multiplier, args.min_gap_factor, args.short_word_limit)


def _table(args):
    path = args.affixes or os.environ.get("ATR_AFFIXES")
    return load_affix_file(path) if path else default_table()


def _read(path: str, err) -> str | None:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        print(f"atr: {path}: {exc.strerror or exc}", file=err)
        return None
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError:
        print(f"atr: {path}: invalid UTF-8 replaced", file=err)
        return raw.decode("utf-8", errors="replace")


def cmd_search(args, out, err) -> int:
    cq = compile_query(args.query, _table(args), _config(args))
    readable = 0
    total = 0
    for path in args.paths:
        text = _read(path, err)
        if text is None:
            continue
        readable += 1
        doc = Document(path, text)
        for m in scan(cq, doc, not args.case_sensitive):
            total += 1
            snippet = " ".join(highlight(m, doc, args.context).split())
            if args.output == "jsonl":
                record = {"file": path, "component": m.component_index, "spans": [list(s) for s in m.spans], "snippet": snippet}
                print(json.dumps(record, ensure_ascii=False), file=out)
            else:
                print(f"{path}: {snippet}", file=out)
    if not readable:
        print("atr: no readable input files", file=err)
        return EXIT_ERROR
    return EXIT_MATCH if total else EXIT_NO_MATCH


def cmd_explain(args, out, err) -> int:
    cq = compile_query(args.query, _table(args), _config(args))
    print(f"kind: {cq.kind}", file=out)
    if cq.kind == MULTI_WORD:
        seq = cq.sequence
        print("segments:", file=out)
        for w, word in enumerate(seq.query_layout.split(" ")):
            parts = [s.text for s in seq.segments if s.word_index == w]
            print(f"  {word}: {' '.join(parts) if parts else '(not split)'}", file=out)
        print(f"m={seq.m} n={seq.n} b={cq.b}", file=out)
    print("components:", file=out)
    for c in cq.components:
        print(c.render(), file=out)
    print("composite:", file=out)
    print(render_pattern(cq), file=out)
    return EXIT_MATCH


def cmd_estimate(args, out, err) -> int:
    query = args.query if args.case_sensitive else fold(args.query)
    cq = compile_query(query, _table(args), _config(args))
    if args.model_from:
        text = _read(args.model_from, err)
        if text is None:
            return EXIT_ERROR
        model = CharModel.from_text(text if args.case_sensitive else fold(text))
    else:
        model = CharModel.uniform(args.alphabet)
    miss = miss_probability(cq, args.epsilon)
    print(f"length={args.length} alphabet={len(model.alphabet)} epsilon={args.epsilon}", file=out)
    for k, (c, p) in enumerate(zip(cq.components, miss.per_component), 1):
        e = expected_occurrences(c, args.length, model)
        print(f"component {k}: {c.render()}  expected={e:.6g}  miss={p:.6g}", file=out)
    print(f"composite: expected={composite_expected(cq, args.length, model):.6g}  miss={miss.composite:.6g}", file=out)
    print(f"unsplit query miss={miss.query_miss:.6g}  (divided by b: {miss.query_miss / cq.b:.6g})", file=out)
    return EXIT_MATCH


def _carrier(query: str, seed: int) -> str:
    rng = np.random.default_rng(seed)
    before = " ".join(random_words(rng, 30, 2, 9))
    after = " ".join(random_words(rng, 30, 2, 9))
    return f"{before} {' '.join(query.split())} {after}"


def cmd_bench(args, out, err) -> int:
    if args.carrier:
        carrier = _read(args.carrier, err)
        if carrier is None:
            return EXIT_ERROR
    else:
        carrier = _carrier(args.query, args.seed)
    specs = [ErrorSpec(rate, seed=args.seed) for rate in args.epsilon]
    for blocks in args.blocks or [None]:
        for report in measure_recall(args.query, carrier, specs, _config(args), args.trials, _table(args), blocks, not args.case_sensitive):
            print(report.to_json(), file=out)
    return EXIT_MATCH


COMMANDS = {"search": cmd_search, "explain": cmd_explain, "estimate": cmd_estimate, "bench": cmd_bench}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_MATCH
    try:
        return COMMANDS[args.command](args, out, err)
    except (ATRError, ValueError, OSError) as exc:
        print(f"atr: error: {exc}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

    parttopo profile --n 16
    parttopo table cliques --from 1 --to 25
    parttopo verify --from 1 --to 25 --layers all
    parttopo figure clique-log --out clique_log.csv

Exit status: 0 success / verification pass, 1 data mismatch, 2 usage or
resource-guard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, replace
from pathlib import Path

from .census import Guards, obtain_record, parse_layers
from .cliques import CountOverflowError, GuardError, clique_profile, maximal_cliques
from .export import (
    FIGURE_RANGES,
    FIGURES,
    TABLE_LAYERS,
    TABLES,
    clique_log_series,
    crossover_series,
    profile_rows,
    render,
    table_rows,
)
from .graph import build_graph, write_edge_list
from .nerve import build_cover_incidence, nerve_euler
from .partitions import DEFAULT_MAX_N, PartitionRangeError
from .reference import REFERENCE, ReferenceTables
from .startop import maximal_census, maximal_simplices
from .store import CacheMiss, RecordCache, default_cache_path
from .verify import verify_range

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("parttopo")


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json", "tsv"), default="csv")
    p.add_argument("--out", type=Path, help="write output here instead of stdout")
    p.add_argument("--cache", type=Path, help="record cache (default: $PARTTOPO_CACHE)")
    p.add_argument("--threads", type=int, default=0, help="worker threads, 0 = auto")
    p.add_argument("--guard-nerve", type=int, default=10, metavar="N")
    p.add_argument("--guard-max", type=int, default=16, metavar="N",
                   help="largest n for maximal-clique listing")  # fmt: skip
    p.add_argument("--max-n", type=int, default=None, metavar="N",
                   help="largest n for any computation (default 60, star/top layers 25)")  # fmt: skip
    p.add_argument("--grading", choices=("c", "f"), default="c",
                   help="clique-size headers c1.. or dimension headers f0..")  # fmt: skip


def _range(p: argparse.ArgumentParser, lo: int | None = None, hi: int | None = None) -> None:
    p.add_argument("--from", dest="lo", type=int, default=lo)
    p.add_argument("--to", dest="hi", type=int, default=hi)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parttopo", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="full clique profile of G_n")
    _common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rmax", type=int, help="count cliques only up to this size")
    p.add_argument("--graph-out", type=Path, help="also dump the edge list of G_n")

    p = sub.add_parser("table", help="export one of the census tables")
    _common(p)
    p.add_argument("which", choices=TABLES)
    _range(p, 1, 25)

    p = sub.add_parser("verify", help="recompute and compare against the reference tables")
    _common(p)
    _range(p, 1, 25)
    p.add_argument("--layers", default="all", help="comma list of layers or 'all'")
    p.add_argument("--reference", type=Path, help="reference tables JSON (default: embedded)")
    p.add_argument("--dump-reference", type=Path, help="write the embedded tables as JSON and exit")

    p = sub.add_parser("figure", help="emit figure data series")
    _common(p)
    p.add_argument("which", choices=FIGURES)
    _range(p)

    p = sub.add_parser("nerve", help="Euler characteristic of the nerve of the canonical cover")
    _common(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("maximal", help="maximal cliques: direct listing vs star/top/edge classification")
    _common(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("cache", help="inspect or clear the record cache")
    _common(p)
    p.add_argument("action", choices=("show", "clear", "path"))
    return parser


def _guards(args) -> Guards:
    for name in ("guard_nerve", "guard_max", "threads"):
        if getattr(args, name) < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    if args.max_n is not None and not 1 <= args.max_n <= DEFAULT_MAX_N:
        raise UsageError(f"--max-n must lie in 1..{DEFAULT_MAX_N}")
    return Guards.with_max_n(args.max_n, nerve_n=args.guard_nerve, maximal_n=args.guard_max)


def _cache(args) -> RecordCache | None:
    path = args.cache or default_cache_path()
    return RecordCache(path) if path else None


def _check_n(n: int, limit: int, what: str) -> None:
    if not 1 <= n <= limit:
        raise UsageError(f"{what}: n={n} outside 1..{limit}")


def _emit(args, text: str) -> None:
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _records(args, lo, hi, layers, guards, r_cap=None):
    cache = _cache(args)
    out = []
    for n in range(lo, hi + 1):
        rec, refused = obtain_record(n, layers, guards, args.threads, cache, r_cap)
        if refused:
            raise GuardError("; ".join(refused.values()))
        out.append(rec)
    return out


def _cmd_profile(args) -> int:
    guards = _guards(args)
    _check_n(args.n, guards.clique_n, "profile")
    if args.rmax is not None and args.rmax < 1:
        raise UsageError("--rmax must be positive")
    (rec,) = _records(args, args.n, args.n, ("cliques",), guards, args.rmax)
    if args.rmax is not None:
        rec = _capped_view(rec, args.rmax)
    if args.graph_out:
        write_edge_list(build_graph(args.n), args.graph_out)
    _emit(args, render(*profile_rows([rec], args.grading), args.format))
    return EXIT_OK


def _capped_view(rec, r_cap):
    if rec.omega is not None and rec.omega <= r_cap:
        return rec
    c = (tuple(rec.c) + (0,) * r_cap)[:r_cap]
    return replace(rec, c=c, omega=None, chi=None, b=None)


def _cmd_table(args) -> int:
    guards = _guards(args)
    if args.lo > args.hi:
        raise UsageError("--from must not exceed --to")
    layers = TABLE_LAYERS[args.which]
    limit = guards.star_top_n if args.which in ("cover", "based") else guards.clique_n
    _check_n(args.lo, limit, f"table {args.which}")
    _check_n(args.hi, limit, f"table {args.which}")
    records = _records(args, args.lo, args.hi, layers, guards)
    _emit(args, render(*table_rows(args.which, records, args.grading), args.format))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.dump_reference:
        REFERENCE.dump(args.dump_reference)
        return EXIT_OK
    guards = _guards(args)
    try:
        layers = parse_layers(args.layers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 1 <= args.lo <= args.hi <= 60:
        raise UsageError("verify range must satisfy 1 <= from <= to <= 60")
    reference = ReferenceTables.load(args.reference) if args.reference else REFERENCE
    report = verify_range(
        args.lo, args.hi, layers, reference, guards, args.threads, _cache(args),
        progress=log.info,
    )  # fmt: skip
    if args.format == "json":
        rows = [asdict(o) | {"expected": repr(o.expected), "got": repr(o.got)} for o in report.outcomes]
        text = json.dumps({"passed": report.passed, "summary": report.summary(), "outcomes": rows}, indent=1)
        text += "\n"
    else:
        header = ["n", "layer", "field", "status", "expected", "got", "note"]
        rows = [
            [o.n, o.layer, o.field, o.status,
             "" if o.expected is None else o.expected, "" if o.got is None else o.got, o.note]
            for o in report.outcomes
        ]  # fmt: skip
        text = render(header, rows, args.format)
    _emit(args, text)
    print(report.summary(), file=sys.stderr)
    for o in report.mismatches:
        print("MISMATCH " + o.line(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _cmd_figure(args) -> int:
    guards = _guards(args)
    lo, hi = FIGURE_RANGES[args.which]
    lo = args.lo if args.lo is not None else lo
    hi = args.hi if args.hi is not None else hi
    if lo > hi:
        raise UsageError("--from must not exceed --to")
    _check_n(lo, guards.clique_n, "figure")
    _check_n(hi, guards.clique_n, "figure")
    records = {r.n: r for r in _records(args, lo, hi, ("cliques",), guards, r_cap=5)}

    def counts(n):
        return records[n].c

    series = clique_log_series if args.which == "clique-log" else crossover_series
    _emit(args, render(*series(counts, lo, hi), args.format))
    return EXIT_OK


def _cmd_nerve(args) -> int:
    guards = _guards(args)
    _check_n(args.n, guards.star_top_n, "nerve")
    stats = nerve_euler(args.n, guard=guards.nerve_n)
    inc = build_cover_incidence(args.n)
    prof = clique_profile(build_graph(args.n), workers=args.threads)
    width = len(stats.simplex_counts)
    header = ["n", "nu_c", "chi_nerve", "chi"] + [f"s{k}" for k in range(1, width + 1)]
    row = [args.n, len(inc.elements), stats.chi_nerve, prof.chi, *stats.simplex_counts]
    _emit(args, render(header, [row], args.format))
    return EXIT_OK if stats.chi_nerve == prof.chi else EXIT_MISMATCH


def _cmd_maximal(args) -> int:
    guards = _guards(args)
    _check_n(args.n, guards.star_top_n, "maximal")
    listed = maximal_cliques(build_graph(args.n), guard=guards.maximal_n)
    classified = maximal_simplices(args.n)
    mc = maximal_census(args.n)
    agree = listed.simplices == classified
    header = ["n", "listed", "m_star", "m_top", "m_e", "m_max", "agree"]
    row = [args.n, listed.total, mc.m_star, mc.m_top, mc.m_e, mc.m_max, int(agree)]
    _emit(args, render(header, [row], args.format))
    return EXIT_OK if agree else EXIT_MISMATCH


def _cmd_cache(args) -> int:
    cache = _cache(args)
    if cache is None:
        raise UsageError("no cache configured; pass --cache or set PARTTOPO_CACHE")
    if args.action == "path":
        _emit(args, f"{cache.path}\n")
    elif args.action == "clear":
        cache.clear()
    else:
        header = ["n", "omega", "chi", "nu_c", "m_max", "chi_nerve", "engine", "seconds"]
        rows = [[getattr(r, h) for h in header] for r in cache.records()]
        _emit(args, render(header, rows, args.format))
        for lineno, why in cache.corrupt_lines:
            print(f"corrupted line {lineno}: {why}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "profile": _cmd_profile,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "figure": _cmd_figure,
    "nerve": _cmd_nerve,
    "maximal": _cmd_maximal,
    "cache": _cmd_cache,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GuardError, PartitionRangeError, CacheMiss) as exc:
        print(f"parttopo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CountOverflowError as exc:
        print(f"parttopo: overflow: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

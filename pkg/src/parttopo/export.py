"""Tabular exports (csv / tsv / json) and figure data series."""

from __future__ import annotations

import csv
import io
import json
from typing import Callable, Sequence

from .cliques import CliqueProfile, leader_profile
from .store import CensusRecord

TABLES = ("chi", "cliques", "lowdim", "cover", "based")
TABLE_LAYERS = {
    "chi": ("chi",),
    "cliques": ("cliques",),
    "lowdim": ("lowdim",),
    "cover": ("cover", "maximal"),
    "based": ("based",),
}
FIGURES = ("clique-log", "crossover")
FIGURE_RANGES = {"clique-log": (1, 60), "crossover": (45, 60)}


def format_leaders(leaders) -> str:
    return "{" + ",".join(str(r) for r in sorted(leaders)) + "}"


def _sizes_header(width: int, grading: str) -> list[str]:
    if grading == "f":
        return [f"f{p}" for p in range(width)]
    return [f"c{r}" for r in range(1, width + 1)]


def _counts(rec: CensusRecord, width: int) -> list[int]:
    return list(rec.c[:width]) + [0] * (width - len(rec.c))


def table_rows(which: str, records: Sequence[CensusRecord], grading: str = "c") -> tuple[list[str], list[list]]:
    """Header and rows for one of :data:`TABLES`."""
    if which == "chi":
        return ["n", "chi", "b"], [[r.n, r.chi, r.b] for r in records]
    if which == "cliques":
        width = max((len(r.c) for r in records), default=1)
        header = ["n"] + _sizes_header(width, grading) + ["omega", "chi"]
        return header, [[r.n] + _counts(r, width) + [r.omega, r.chi] for r in records]
    if which == "lowdim":
        header = ["n"] + _sizes_header(5, grading) + ["omega", "leaders"]
        rows = []
        for r in records:
            lead = leader_profile(CliqueProfile(r.n, r.c, r.omega is not None))
            rows.append([r.n] + _counts(r, 5) + [r.omega, format_leaders(lead)])
        return header, rows
    if which == "cover":
        names = ["nu_star", "nu_top", "nu_c", "m_star", "m_top", "m_e", "m_max"]
        return ["n"] + names, [[r.n] + [getattr(r, f) for f in names] for r in records]
    if which == "based":
        names = ["mb_star", "mb_top", "mb_e"]
        return ["n"] + names, [[r.n] + [getattr(r, f) for f in names] for r in records]
    raise ValueError(f"unknown table {which!r}")


def profile_rows(records: Sequence[CensusRecord], grading: str = "c") -> tuple[list[str], list[list]]:
    """Like the cliques table, plus b; capped profiles leave omega/chi/b empty."""
    width = max((len(r.c) for r in records), default=1)
    header = ["n"] + _sizes_header(width, grading) + ["omega", "chi", "b"]
    return header, [[r.n] + _counts(r, width) + [r.omega, r.chi, r.b] for r in records]


def render(header: list[str], rows: list[list], fmt: str) -> str:
    """Serialize deterministically; ``None`` becomes an empty cell (null in json)."""
    if fmt == "json":
        objs = [dict(zip(header, row)) for row in rows]
        return json.dumps(objs, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def clique_log_series(
    counts: Callable[[int], Sequence[int]], lo: int = 1, hi: int = 60
) -> tuple[list[str], list[list]]:
    """c_1..c_5 per n; each series starts at its first positive n, which is flagged."""
    table = {n: (list(counts(n)) + [0] * 5)[:5] for n in range(lo, hi + 1)}
    rows = []
    for r in range(1, 6):
        started = False
        for n in range(lo, hi + 1):
            value = table[n][r - 1]
            if not started and value <= 0:
                continue
            rows.append([f"c{r}", n, value, 0 if started else 1])
            started = True
    return ["series", "n", "value", "first_positive"], rows


def crossover_series(
    counts: Callable[[int], Sequence[int]], lo: int = 45, hi: int = 60
) -> tuple[list[str], list[list]]:
    rows = []
    for n in range(lo, hi + 1):
        c = list(counts(n)) + [0, 0, 0, 0]
        rows.append([n, c[2], c[3]])
    return ["n", "c3", "c4"], rows

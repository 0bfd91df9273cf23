"""Compare computed census records against the embedded reference tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .census import LAYERS, Guards, obtain_record
from .cliques import CliqueProfile, clique_profile, leader_profile
from .graph import build_graph
from .reference import REFERENCE, ReferenceTables
from .store import CensusRecord, RecordCache

MATCH = "match"
MISMATCH = "mismatch"
NOT_COMPUTED = "not-computed"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Outcome:
    n: int
    layer: str
    field: str
    status: str
    expected: object = None
    got: object = None
    note: str = ""

    def line(self) -> str:
        text = f"n={self.n} {self.layer}.{self.field}: {self.status}"
        if self.status == MISMATCH:
            text += f" (expected {self.expected!r}, got {self.got!r})"
        elif self.note:
            text += f" ({self.note})"
        return text


@dataclass
class VerificationReport:
    outcomes: list[Outcome] = field(default_factory=list)
    records: dict[int, CensusRecord] = field(default_factory=dict)

    @property
    def mismatches(self) -> list[Outcome]:
        return [o for o in self.outcomes if o.status == MISMATCH]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def count(self, status: str) -> int:
        return sum(o.status == status for o in self.outcomes)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict}: {self.count(MATCH)} match, {self.count(MISMATCH)} mismatch, "
            f"{self.count(NOT_COMPUTED)} not computed, {self.count(SKIPPED)} skipped"
        )


def _compare(out: list[Outcome], n: int, layer: str, name: str, expected, got) -> None:
    status = MATCH if expected == got else MISMATCH
    out.append(Outcome(n, layer, name, status, expected, got))


def _padded(c: tuple[int, ...], width: int) -> tuple[int, ...]:
    return tuple(c) + (0,) * (width - len(c))


def _check(rec: CensusRecord, layer: str, ref: ReferenceTables, out: list[Outcome]) -> None:
    n = rec.n
    if layer == "chi":
        chi, b = ref.table1[n]
        _compare(out, n, layer, "chi", chi, rec.chi)
        _compare(out, n, layer, "b", b, rec.b)
    elif layer == "cliques":
        c, omega, chi = ref.table2[n]
        width = max(len(c), len(rec.c))
        for r, (want, got) in enumerate(zip(_padded(c, width), _padded(rec.c, width)), start=1):
            _compare(out, n, layer, f"c{r}", want, got)
        _compare(out, n, layer, "omega", omega, rec.omega)
        _compare(out, n, layer, "chi", chi, rec.chi)
    elif layer == "lowdim":
        c, omega, leaders = ref.table3[n]
        got = _padded(rec.c, 5)
        for r in range(1, 6):
            _compare(out, n, layer, f"c{r}", c[r - 1], got[r - 1])
        _compare(out, n, layer, "omega", omega, rec.omega)
        lead = leader_profile(CliqueProfile(n, rec.c, rec.omega is not None))
        _compare(out, n, layer, "leaders", leaders, lead)
        if n == 60:
            for r, want in enumerate(ref.n60_high, start=6):
                _compare(out, n, layer, f"c{r}", want, _padded(rec.c, 11)[r - 1])
    elif layer == "cover":
        row = ref.table4[n]
        for name, want in zip(("nu_star", "nu_top", "nu_c"), row[:3]):
            _compare(out, n, layer, name, want, getattr(rec, name))
    elif layer == "maximal":
        row = ref.table4[n]
        for name, want in zip(("m_star", "m_top", "m_e", "m_max"), row[3:]):
            _compare(out, n, layer, name, want, getattr(rec, name))
    elif layer == "based":
        for name, want in zip(("mb_star", "mb_top", "mb_e"), ref.table5[n]):
            _compare(out, n, layer, name, want, getattr(rec, name))
    elif layer == "nerve":
        _compare(out, n, layer, "chi_nerve", ref.table1[n][0], rec.chi_nerve)
        if rec.chi is not None:
            out.append(
                Outcome(n, layer, "chi_nerve=chi",
                        MATCH if rec.chi == rec.chi_nerve else MISMATCH, rec.chi, rec.chi_nerve)
            )  # fmt: skip


def _in_table(layer: str, n: int, ref: ReferenceTables) -> bool:
    table = {
        "chi": ref.table1, "cliques": ref.table2, "lowdim": ref.table3,
        "cover": ref.table4, "maximal": ref.table4, "based": ref.table5, "nerve": ref.table1,
    }[layer]  # fmt: skip
    return n in table


def verify_range(
    lo: int,
    hi: int,
    layers: Iterable[str] = LAYERS,
    reference: ReferenceTables = REFERENCE,
    guards: Guards = Guards(),
    workers: int = 0,
    cache: RecordCache | None = None,
    progress: Callable[[str], None] | None = None,
) -> VerificationReport:
    """Recompute the requested layers for lo..hi and compare with ``reference``.

    Layers without a reference row for some n are skipped for that n; layers
    a guard refuses are reported as not computed.  Neither counts as failure.
    """
    if not 1 <= lo <= hi <= 60:
        raise ValueError("verification range must satisfy 1 <= from <= to <= 60")
    layers = tuple(layers)
    report = VerificationReport()
    for n in range(lo, hi + 1):
        wanted = [layer for layer in layers if _in_table(layer, n, reference)]
        for layer in layers:
            if layer not in wanted:
                report.outcomes.append(Outcome(n, layer, "*", SKIPPED, note="no reference row"))
        if not wanted:
            continue
        rec, refused = obtain_record(n, wanted, guards, workers, cache)
        report.records[n] = rec
        for problem in rec.consistency_errors():
            report.outcomes.append(Outcome(n, "record", "consistency", MISMATCH, "consistent", problem))
        for layer in wanted:
            if layer in refused:
                report.outcomes.append(Outcome(n, layer, "*", NOT_COMPUTED, note=refused[layer]))
            else:
                _check(rec, layer, reference, report.outcomes)
        if progress:
            progress(f"n={n} done in {rec.seconds:.2f}s")
    return report


@dataclass(frozen=True)
class Crossover:
    n: int
    margin: int  # c_4(n) - c_3(n)


def crossover_scan(
    lo: int,
    hi: int,
    counts: Callable[[int], tuple[int, ...]] | None = None,
) -> Crossover | None:
    """First n in lo..hi with c_4(n) > c_3(n).

    ``counts(n)`` must return at least (c_1, .., c_4); by default they are
    computed with a size-4 cap.
    """
    if counts is None:
        def counts(n: int) -> tuple[int, ...]:
            return clique_profile(build_graph(n), r_cap=4).counts

    for n in range(lo, hi + 1):
        c = _padded(counts(n), 4)
        if c[3] > c[2]:
            return Crossover(n, c[3] - c[2])
    return None

"""Census records and the append-only record cache.

One record per line: tab-separated ``key=value`` pairs, first pair
``schema=parttopo.v1``.  Empty values mean "not computed".
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)

SCHEMA = "parttopo.v1"
ENGINE = f"parttopo-{__version__}"
CACHE_ENV = "PARTTOPO_CACHE"

INT_FIELDS = (
    "omega", "chi", "b",
    "nu_star", "nu_top", "nu_c",
    "m_star", "m_top", "m_e", "m_max",
    "mb_star", "mb_top", "mb_e",
    "chi_nerve",
)  # fmt: skip
FIELD_ORDER = ("n", "c") + INT_FIELDS + ("engine", "seconds")


@dataclass(frozen=True)
class CensusRecord:
    """Every computed quantity for one n; ``None`` marks a layer not computed.

    ``c`` holds c_1, c_2, ...; when ``omega`` is None it is a capped prefix.
    """

    n: int
    c: tuple[int, ...] = ()
    omega: int | None = None
    chi: int | None = None
    b: int | None = None
    nu_star: int | None = None
    nu_top: int | None = None
    nu_c: int | None = None
    m_star: int | None = None
    m_top: int | None = None
    m_e: int | None = None
    m_max: int | None = None
    mb_star: int | None = None
    mb_top: int | None = None
    mb_e: int | None = None
    chi_nerve: int | None = None
    engine: str = ENGINE
    seconds: float = 0.0
    provenance: str = "computed"

    def consistency_errors(self) -> list[str]:
        errs = []
        if self.omega is not None:
            if len(self.c) != self.omega or (self.c and self.c[-1] == 0):
                errs.append("omega disagrees with the stored profile")
            alt = sum(v if r % 2 else -v for r, v in enumerate(self.c, start=1))
            if self.chi is not None and self.chi != alt:
                errs.append(f"chi={self.chi} but alternating clique sum is {alt}")
        if self.chi is not None and self.b is not None and self.b != self.chi - 1:
            errs.append("b != chi - 1")
        if None not in (self.nu_star, self.nu_top, self.nu_c):
            if self.nu_c > self.nu_star + self.nu_top:
                errs.append("nu_c exceeds nu_star + nu_top")
        return errs

    def merged(self, other: "CensusRecord") -> "CensusRecord":
        """Fill this record's missing fields from ``other`` (same n)."""
        if other.n != self.n:
            raise ValueError("cannot merge records for different n")
        updates = {}
        for f in INT_FIELDS:
            if getattr(self, f) is None and getattr(other, f) is not None:
                updates[f] = getattr(other, f)
        if self.omega is None and (other.omega is not None or len(other.c) > len(self.c)):
            updates["c"] = other.c
        return replace(self, **updates)


def format_record(rec: CensusRecord) -> str:
    pairs = [("schema", SCHEMA), ("n", str(rec.n)), ("c", ",".join(map(str, rec.c)))]
    for f in INT_FIELDS:
        v = getattr(rec, f)
        pairs.append((f, "" if v is None else str(v)))
    pairs += [("engine", rec.engine), ("seconds", repr(float(rec.seconds)))]
    return "\t".join(f"{k}={v}" for k, v in pairs)


def parse_record(line: str) -> CensusRecord:
    items = line.rstrip("\n").split("\t")
    kv = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"malformed pair {item!r}")
        kv[key] = value
    if items[0] != f"schema={SCHEMA}":
        raise ValueError(f"unknown schema in {items[0]!r}")
    missing = [f for f in FIELD_ORDER if f not in kv]
    if missing:
        raise ValueError(f"missing fields {missing}")
    args: dict = {
        "n": int(kv["n"]),
        "c": tuple(int(x) for x in kv["c"].split(",")) if kv["c"] else (),
        "engine": kv["engine"],
        "seconds": float(kv["seconds"]),
    }
    for f in INT_FIELDS:
        args[f] = int(kv[f]) if kv[f] else None
    return CensusRecord(**args)


class CacheMiss(KeyError):
    def __init__(self, n: int, stale: bool = False, note: str = ""):
        super().__init__(n)
        self.n = n
        self.stale = stale
        self.note = note

    def __str__(self) -> str:
        return self.note or f"no cached record for n={self.n}"


def default_cache_path() -> Path | None:
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


class RecordCache:
    """Append-only record log; later lines win."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.corrupt_lines: list[tuple[int, str]] = []

    def _scan(self) -> list[CensusRecord]:
        self.corrupt_lines = []
        if not self.path.exists():
            return []
        out = []
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    out.append(parse_record(line))
                except ValueError as exc:
                    self.corrupt_lines.append((lineno, str(exc)))
                    log.warning("%s:%d: skipping corrupted record (%s)", self.path, lineno, exc)
        return out

    def store(self, rec: CensusRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(format_record(rec) + "\n")

    def load(self, n: int, engine: str = ENGINE) -> CensusRecord:
        """Newest record for ``n`` written by ``engine``; raises :class:`CacheMiss`."""
        found = None
        stale = None
        for rec in self._scan():
            if rec.n != n:
                continue
            if rec.engine == engine:
                found = rec
            else:
                stale = rec.engine
        if found is not None:
            return found
        if stale is not None:
            raise CacheMiss(n, True, f"stale version: n={n} cached by {stale}, need {engine}")
        raise CacheMiss(n)

    def records(self) -> list[CensusRecord]:
        return self._scan()

    def clear(self) -> None:
        if self.path.exists():
            self.path.unlink()


def store_record(path: str | Path, rec: CensusRecord) -> None:
    RecordCache(path).store(rec)


def load_record(path: str | Path, n: int, engine: str = ENGINE) -> CensusRecord:
    return RecordCache(path).load(n, engine)

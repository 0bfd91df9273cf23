"""Compute census records layer by layer, under resource guards."""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

from .cliques import GuardError, clique_profile
from .graph import build_graph
from .nerve import nerve_euler
from .partitions import check_n
from .startop import based_counts, cover, maximal_census
from .store import CacheMiss, CensusRecord, RecordCache

LAYERS = ("chi", "cliques", "lowdim", "cover", "maximal", "based", "nerve")
PROFILE_LAYERS = {"chi", "cliques", "lowdim"}
STAR_TOP_LAYERS = {"cover", "maximal", "based"}


@dataclass(frozen=True)
class Guards:
    clique_n: int = 60  # clique-profile layers
    star_top_n: int = 25  # cover / maximal / based
    nerve_n: int = 10
    maximal_n: int = 16  # Bron-Kerbosch listing

    @classmethod
    def with_max_n(cls, max_n: int | None, **kw) -> "Guards":
        if max_n is None:
            return cls(**kw)
        return cls(clique_n=max_n, star_top_n=max_n, **kw)


def parse_layers(text: str) -> tuple[str, ...]:
    if text == "all":
        return LAYERS
    layers = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [t for t in layers if t not in LAYERS]
    if bad or not layers:
        raise ValueError(f"unknown layers {bad}; choose from {','.join(LAYERS)} or 'all'")
    return layers


def _has(rec: CensusRecord | None, layer: str) -> bool:
    if rec is None:
        return False
    if layer in PROFILE_LAYERS:
        return rec.omega is not None
    if layer == "cover":
        return rec.nu_c is not None
    if layer == "maximal":
        return rec.m_max is not None
    if layer == "based":
        return rec.mb_e is not None
    return rec.chi_nerve is not None


def compute_record(
    n: int,
    layers=LAYERS,
    guards: Guards = Guards(),
    workers: int = 0,
    r_cap: int | None = None,
) -> tuple[CensusRecord, dict[str, str]]:
    """Compute the requested layers for one n.

    Returns the record and a map layer -> reason for layers a guard refused.
    ``r_cap`` limits the clique profile to sizes <= r_cap.
    """
    check_n(n)
    start = time.perf_counter()
    refused: dict[str, str] = {}
    values: dict = {}
    layers = set(layers)
    if layers & PROFILE_LAYERS:
        if n > guards.clique_n:
            for layer in layers & PROFILE_LAYERS:
                refused[layer] = f"n={n} exceeds clique guard {guards.clique_n}"
        else:
            prof = clique_profile(build_graph(n), r_cap=r_cap, workers=workers)
            values.update(c=prof.counts, omega=prof.omega, chi=prof.chi, b=prof.b)
    if layers & STAR_TOP_LAYERS:
        if n > guards.star_top_n:
            for layer in layers & STAR_TOP_LAYERS:
                refused[layer] = f"n={n} exceeds star/top guard {guards.star_top_n}"
        else:
            if "cover" in layers:
                cc, _ = cover(n)
                values.update(nu_star=cc.nu_star, nu_top=cc.nu_top, nu_c=cc.nu_c)
            if "maximal" in layers:
                mc = maximal_census(n)
                values.update(m_star=mc.m_star, m_top=mc.m_top, m_e=mc.m_e, m_max=mc.m_max)
            if "based" in layers:
                bc = based_counts(n)
                values.update(mb_star=bc.m_star_based, mb_top=bc.m_top_based, mb_e=bc.m_e_based)
    if "nerve" in layers:
        try:
            values["chi_nerve"] = nerve_euler(n, guard=guards.nerve_n).chi_nerve
        except GuardError as exc:
            refused["nerve"] = str(exc)
    rec = CensusRecord(n=n, seconds=round(time.perf_counter() - start, 6), **values)
    return rec, refused


def obtain_record(
    n: int,
    layers=LAYERS,
    guards: Guards = Guards(),
    workers: int = 0,
    cache: RecordCache | None = None,
    r_cap: int | None = None,
) -> tuple[CensusRecord, dict[str, str]]:
    """Like :func:`compute_record` but reuse and extend a cache when given."""
    cached = None
    if cache is not None:
        try:
            cached = cache.load(n)
        except CacheMiss:
            cached = None
    need = [layer for layer in layers if not _has(cached, layer)]
    if r_cap is not None and cached is not None and len(cached.c) >= r_cap:
        need = [layer for layer in need if layer not in PROFILE_LAYERS]
    if not need:
        return cached, {}
    rec, refused = compute_record(n, need, guards, workers, r_cap)
    if cached is not None:
        rec = replace(rec, seconds=rec.seconds + cached.seconds).merged(cached)
    if cache is not None:
        cache.store(rec)
    return rec, refused

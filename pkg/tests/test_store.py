from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from parttopo.reference import REFERENCE
from parttopo.store import (
    ENGINE,
    CacheMiss,
    CensusRecord,
    RecordCache,
    format_record,
    load_record,
    parse_record,
    store_record,
)

_c25, _omega25, _chi25 = REFERENCE.table2[25]
_nu_star, _nu_top, _nu_c, _m_star, _m_top, _m_e, _m_max = REFERENCE.table4[25]
_mb_star, _mb_top, _mb_e = REFERENCE.table5[25]
ROW25 = CensusRecord(
    n=25,
    c=_c25,
    omega=_omega25,
    chi=_chi25,
    b=_chi25 - 1,
    nu_star=_nu_star,
    nu_top=_nu_top,
    nu_c=_nu_c,
    m_star=_m_star,
    m_top=_m_top,
    m_e=_m_e,
    m_max=_m_max,
    mb_star=_mb_star,
    mb_top=_mb_top,
    mb_e=_mb_e,
    seconds=1.25,
)

opt_int = st.none() | st.integers(-(2**63), 2**64 - 1)
records_st = st.builds(
    CensusRecord,
    n=st.integers(1, 100),
    c=st.lists(st.integers(0, 2**64 - 1), max_size=12).map(tuple),
    omega=opt_int,
    chi=opt_int,
    b=opt_int,
    nu_star=opt_int,
    nu_c=opt_int,
    mb_e=opt_int,
    chi_nerve=opt_int,
    engine=st.sampled_from([ENGINE, "parttopo-0.0.1"]),
    seconds=st.floats(0, 1e6, allow_nan=False),
)


@given(records_st)
def test_round_trip(rec):
    line = format_record(rec)
    assert "\n" not in line and line.startswith("schema=parttopo.v1\t")
    assert parse_record(line) == rec


def test_store_then_load(tmp_path):
    path = tmp_path / "c.tsv"
    store_record(path, ROW25)
    assert load_record(path, 25) == ROW25


def test_fixed_field_names():
    keys = [kv.split("=")[0] for kv in format_record(ROW25).split("\t")]
    assert keys == [
        "schema", "n", "c", "omega", "chi", "b", "nu_star", "nu_top", "nu_c",
        "m_star", "m_top", "m_e", "m_max", "mb_star", "mb_top", "mb_e",
        "chi_nerve", "engine", "seconds",
    ]  # fmt: skip


def test_missing_is_cache_miss(tmp_path):
    cache = RecordCache(tmp_path / "c.tsv")
    with pytest.raises(CacheMiss) as exc:
        cache.load(7)
    assert not exc.value.stale
    cache.store(ROW25)
    with pytest.raises(CacheMiss):
        cache.load(7)


def test_stale_engine(tmp_path):
    cache = RecordCache(tmp_path / "c.tsv")
    cache.store(replace(ROW25, engine="parttopo-0.0.1"))
    with pytest.raises(CacheMiss) as exc:
        cache.load(25)
    assert exc.value.stale and "stale version" in str(exc.value)
    assert cache.load(25, engine="parttopo-0.0.1").chi == 3325


def test_newest_wins(tmp_path):
    cache = RecordCache(tmp_path / "c.tsv")
    cache.store(replace(ROW25, nu_c=None))
    cache.store(ROW25)
    assert cache.load(25).nu_c == 4009
    assert len(cache.records()) == 2


def test_corrupted_lines_reported_and_skipped(tmp_path, caplog):
    path = tmp_path / "c.tsv"
    good = format_record(ROW25)
    path.write_text("garbage line\n" + good[: len(good) // 2] + "\n" + good + "\n")
    cache = RecordCache(path)
    assert cache.load(25) == ROW25
    assert [lineno for lineno, _ in cache.corrupt_lines] == [1, 2]
    assert "corrupted" in caplog.text


def test_clear(tmp_path):
    cache = RecordCache(tmp_path / "c.tsv")
    cache.store(ROW25)
    cache.clear()
    assert cache.records() == []
    cache.clear()


def test_consistency():
    assert ROW25.consistency_errors() == []
    assert replace(ROW25, chi=3326).consistency_errors()
    assert replace(ROW25, b=1).consistency_errors() == ["b != chi - 1"]
    assert replace(ROW25, nu_c=5000).consistency_errors() == ["nu_c exceeds nu_star + nu_top"]
    assert replace(ROW25, omega=6).consistency_errors()


def test_merge():
    partial = CensusRecord(n=25, c=ROW25.c[:2], nu_c=4009)
    merged = partial.merged(ROW25)
    assert merged.c == ROW25.c and merged.chi == 3325 and merged.nu_c == 4009
    with pytest.raises(ValueError):
        partial.merged(CensusRecord(n=24))

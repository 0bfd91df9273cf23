from collections import Counter

import pytest
from hypothesis import given, strategies as st

from parttopo.partitions import (
    Inadmissible,
    InadmissibleTransfer,
    Partition,
    PartitionRangeError,
    TransferSpec,
    a_max,
    addable_values,
    admissible_transfers,
    apply_transfer,
    c_max,
    enumerate_partitions,
    neighbors,
    partition_count_table,
    partition_rank,
    removable_values,
)
from parttopo.reference import REFERENCE


def P(*parts):
    return Partition(parts)


# -- Ferrers-diagram oracles (cell level, independent of the value-level rules)


def diagram_removable(lam):
    """Part sizes whose row can lose its last cell and stay a diagram."""
    rows = list(lam.parts)
    out = set()
    for i in range(len(rows)):
        new = rows.copy()
        new[i] -= 1
        if all(new[k] >= new[k + 1] for k in range(len(new) - 1)):
            out.add(rows[i])
    return out


def diagram_addable(lam):
    """Row lengths (0 for a new row) where a cell can be appended and stay a diagram."""
    rows = list(lam.parts) + [0]
    out = set()
    for i in range(len(rows)):
        new = rows.copy()
        new[i] += 1
        if all(new[k] >= new[k + 1] for k in range(len(new) - 1)):
            out.add(rows[i])
    return out


def diagram_neighbors(lam):
    """Move one cell from any row to any other row (or a new row), then re-sort."""
    rows = list(lam.parts)
    out = set()
    for i in range(len(rows)):
        for j in range(len(rows) + 1):
            if j == i:
                continue
            new = rows + [0]
            new[i] -= 1
            new[j] += 1
            mu = Partition(tuple(sorted((p for p in new if p), reverse=True)))
            if mu != lam:
                out.add(mu)
    return out


def test_enumerate_examples():
    assert enumerate_partitions(1) == [P(1)]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(25)) == 1958


@pytest.mark.parametrize("bad", [0, -3, 101])
def test_enumerate_range(bad):
    with pytest.raises(PartitionRangeError):
        enumerate_partitions(bad)


def test_enumerate_order_and_rank():
    for n in range(1, 21):
        parts = enumerate_partitions(n)
        assert len(parts) == partition_count_table(n)[n][n]
        assert [p.parts for p in parts] == sorted((p.parts for p in parts), reverse=True)
        assert len(set(parts)) == len(parts)
        assert all(partition_rank(p) == i for i, p in enumerate(parts))
    assert [str(p) for p in enumerate_partitions(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]


def test_parse_and_validation():
    assert Partition.parse("3,1,1") == P(3, 1, 1)
    assert P(3, 1, 1).n == 5
    for bad in ("1,3", "2,0", "", "a,b"):
        with pytest.raises(ValueError):
            Partition.parse(bad)


@pytest.mark.parametrize(
    "lam, removable",
    [(P(2, 1), {2, 1}), (P(1, 1, 1), {1}), (P(3, 1), {3, 1})],
)
def test_removable_values(lam, removable):
    assert removable_values(lam) == removable == diagram_removable(lam)


@pytest.mark.parametrize(
    "lam, addable",
    [(P(2), {2, 0}), (P(1), {1, 0}), (P(2, 1), {2, 1, 0})],
)
def test_addable_values(lam, addable):
    assert addable_values(lam) == addable == diagram_addable(lam)


def test_corner_values_match_diagram_everywhere():
    for n in range(1, 13):
        for lam in enumerate_partitions(n):
            assert removable_values(lam) == diagram_removable(lam)
            assert addable_values(lam) == diagram_addable(lam)


def test_apply_transfer_examples():
    assert apply_transfer(P(2), (2, 0)) == P(1, 1)
    assert apply_transfer(P(3, 1), TransferSpec(3, 1)) == P(2, 2)
    with pytest.raises(InadmissibleTransfer) as exc:
        apply_transfer(P(2, 1), (2, 1))
    assert exc.value.reason is Inadmissible.IDENTITY_TRANSFER


@pytest.mark.parametrize(
    "lam, t, reason",
    [
        (P(3, 1), (2, 0), Inadmissible.MISSING_SOURCE_VALUE),
        (P(3, 1), (3, 2), Inadmissible.MISSING_TARGET_VALUE),
        (P(3, 1), (1, 0), Inadmissible.IDENTITY_TRANSFER),
        (P(3, 1), (3, 3), Inadmissible.SAME_PART_CONFLICT),
    ],
)
def test_inadmissible_reasons(lam, t, reason):
    with pytest.raises(InadmissibleTransfer) as exc:
        apply_transfer(lam, t)
    assert exc.value.reason is reason


def test_a_max_examples():
    assert a_max(P(3, 1), 3) == {1, 0}
    assert a_max(P(2), 2) == {0}
    assert a_max(P(1), 1) == set()
    with pytest.raises(ValueError):
        a_max(P(3, 1), 2)


def test_c_max_examples():
    assert c_max(P(2), 0) == {2}
    assert c_max(P(1, 1), 1) == {1}
    assert c_max(P(1, 1), 0) == set()
    with pytest.raises(ValueError):
        c_max(P(1, 1), 2)


def test_neighbors_examples():
    assert neighbors(P(2, 1)) == {P(3), P(1, 1, 1)}
    assert neighbors(P(1)) == set()
    assert neighbors(P(3, 1, 1)) == {P(4, 1), P(2, 2, 1), P(2, 1, 1, 1), P(3, 2)}


def test_neighbors_match_diagram_oracle():
    for n in range(1, 13):
        for lam in enumerate_partitions(n):
            assert neighbors(lam) == diagram_neighbors(lam), lam


def test_symmetry_and_irreflexivity():
    for n in range(1, 15):
        nb = {lam: neighbors(lam) for lam in enumerate_partitions(n)}
        for lam, mus in nb.items():
            assert lam not in mus
            for mu in mus:
                assert lam in nb[mu]


def test_unique_oriented_presentation():
    for n in range(1, 13):
        for lam in enumerate_partitions(n):
            images = Counter(apply_transfer(lam, t) for t in admissible_transfers(lam))
            assert all(k == 1 for k in images.values()), lam
            assert set(images) == neighbors(lam)


def test_degree_sum_is_twice_c2():
    for n in range(1, 26):
        profile = REFERENCE.table2[n][0]
        c2 = profile[1] if len(profile) > 1 else 0
        assert sum(len(neighbors(lam)) for lam in enumerate_partitions(n)) == 2 * c2


partitions_st = st.lists(st.integers(1, 9), min_size=1, max_size=9).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True)))
)


@given(partitions_st, st.integers(1, 10), st.integers(0, 10))
def test_transfer_properties(lam, v, w):
    try:
        mu = apply_transfer(lam, (v, w))
    except InadmissibleTransfer:
        if v in lam.parts and w in addable_values(lam):
            assert w not in a_max(lam, v)
        return
    assert mu.n == lam.n and mu != lam
    assert mu in neighbors(lam) and lam in neighbors(mu)
    assert w in a_max(lam, v) and v in c_max(lam, w)

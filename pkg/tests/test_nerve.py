import random
from itertools import combinations

import pytest

from parttopo.cliques import GuardError, clique_profile
from parttopo.graph import build_graph
from parttopo.nerve import build_cover_incidence, nerve_euler, nerve_simplices
from parttopo.partitions import Partition


def test_incidence_examples():
    inc2 = build_cover_incidence(2)
    assert len(inc2.elements) == 3
    assert [len(f) for f in inc2.member_of] == [2, 2]
    inc1 = build_cover_incidence(1)
    assert inc1.elements == ((0,),) and inc1.member_of == ((0,),)
    assert len(build_cover_incidence(10).elements) == 84


def test_incidence_is_inverse_map():
    for n in range(1, 13):
        inc = build_cover_incidence(n)
        for x, fam in enumerate(inc.member_of):
            assert fam and list(fam) == sorted(fam)
            assert set(fam) == {u for u, e in enumerate(inc.elements) if x in e}


def test_nerve_examples():
    s2 = nerve_euler(2)
    assert (s2.simplex_counts, s2.chi_nerve) == ((3, 2), 1)
    assert nerve_euler(1).chi_nerve == 1
    assert nerve_euler(9).chi_nerve == 3


def test_nerve_guard():
    with pytest.raises(GuardError, match="guard-nerve"):
        nerve_euler(11)
    assert nerve_euler(11, guard=11).chi_nerve == clique_profile(build_graph(11)).chi


def test_nerve_matches_clique_census():
    for n in range(1, 11):
        assert nerve_euler(n).chi_nerve == clique_profile(build_graph(n)).chi, n


def test_pairs_are_intersecting_pairs():
    for n in range(1, 11):
        inc = build_cover_incidence(n)
        sets = [frozenset(e) for e in inc.elements]
        pairs = sum(1 for a, b in combinations(sets, 2) if a & b)
        counts = nerve_euler(n).simplex_counts
        assert (counts[1] if len(counts) > 1 else 0) == pairs


def test_generated_once_and_downward_closed():
    rng = random.Random(7)
    inc = build_cover_incidence(8)
    sets = [frozenset(e) for e in inc.elements]
    seen = list(nerve_simplices(inc))
    assert len(seen) == len(set(seen))
    for fam in rng.sample(seen, 300):
        assert frozenset.intersection(*(sets[u] for u in fam))
        for k in range(1, len(fam)):
            for sub in combinations(fam, k):
                assert frozenset.intersection(*(sets[u] for u in sub))


def test_single_vertex_cover_element():
    inc = build_cover_incidence(3)
    g = build_graph(3)
    # (2,1) sits in the middle of the path and is in every non-singleton element
    mid = g.index(Partition((2, 1)))
    assert all(mid in e for e in inc.elements if len(e) > 1)

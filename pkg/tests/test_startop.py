import pytest

from parttopo.cliques import GuardError, clique_profile, maximal_cliques
from parttopo.graph import build_graph
from parttopo.partitions import Partition
from parttopo.reference import REFERENCE
from parttopo.startop import (
    BasedCounts,
    CoverCounts,
    MaximalCounts,
    StarBase,
    TopBase,
    based_counts,
    cliques_via_containers,
    cover,
    full_star_simplex,
    full_top_simplex,
    maximal_census,
    maximal_families,
    maximal_simplices,
    star_top_data,
    verify_containment,
)


def P(*parts):
    return Partition(parts)


def members(s, g):
    return {g.vertices[i] for i in s}


def test_full_star_examples():
    g4 = build_graph(4)
    s = full_star_simplex(StarBase(P(3, 1), 3), g4)
    assert members(s, g4) == {P(3, 1), P(2, 2), P(2, 1, 1)} and len(s) == 3
    g1 = build_graph(1)
    assert full_star_simplex(StarBase(P(1), 1), g1) == (0,)
    g2 = build_graph(2)
    assert members(full_star_simplex(StarBase(P(2), 2), g2), g2) == {P(2), P(1, 1)}
    with pytest.raises(ValueError):
        full_star_simplex(StarBase(P(3, 1), 2), g4)


def test_full_top_examples():
    g2 = build_graph(2)
    assert members(full_top_simplex(TopBase(P(2), 0), g2), g2) == {P(2), P(1, 1)}
    assert members(full_top_simplex(TopBase(P(1, 1), 0), g2), g2) == {P(1, 1)}
    assert full_top_simplex(TopBase(P(1), 0), build_graph(1)) == (0,)
    with pytest.raises(ValueError):
        full_top_simplex(TopBase(P(1, 1), 2), g2)


def test_cover_examples():
    assert cover(2)[0] == CoverCounts(1, 3, 3)
    assert cover(1)[0] == CoverCounts(1, 1, 1)
    assert cover(25)[0] == CoverCounts(1575, 2436, 4009)


def test_based_examples():
    assert based_counts(4) == BasedCounts(3, 0, 4)
    assert based_counts(1) == BasedCounts(0, 0, 0)
    assert based_counts(25) == BasedCounts(7322, 9020, 4)


def test_maximal_examples():
    assert maximal_census(4) == MaximalCounts(1, 0, 2, 3)
    assert maximal_census(1) == MaximalCounts(0, 0, 0, 1)
    assert maximal_census(25) == MaximalCounts(1567, 2296, 2, 3865)


def test_containment_examples():
    r4 = verify_containment(4)
    assert r4.ok and r4.cliques_checked == 5 + 5 + 1
    assert verify_containment(1).ok
    r10 = verify_containment(10)
    assert r10.ok and r10.cliques_checked == 42 + 114 + 90 + 12
    with pytest.raises(GuardError):
        verify_containment(13)


def test_containers_examples():
    c7 = cliques_via_containers(7)
    assert c7.profile.counts == (15, 28, 15, 1)
    assert c7.profile == clique_profile(build_graph(7))
    c2 = cliques_via_containers(2)
    assert c2.profile.counts == (2, 1)
    # both star bases give the edge; top bases give the edge twice plus two singletons
    assert c2.star_based == (4, 2)
    assert c2.top_based == (6, 2)
    assert c2.top_based[0] >= c2.profile.counts[0]
    assert cliques_via_containers(1).profile.counts == (1,)
    with pytest.raises(GuardError):
        cliques_via_containers(16)


def test_every_full_simplex_contains_its_base():
    for n in range(1, 16):
        data = star_top_data(n)
        g = data.graph
        for base, s, k in data.stars + data.tops:
            assert g.index(base.lam) in s and len(s) == k + 1


def test_cover_and_based_inequalities():
    for n in range(1, 26):
        cc, elements = cover(n)
        assert cc.nu_c == len(elements) <= cc.nu_star + cc.nu_top
        mc, bc = maximal_census(n), based_counts(n)
        assert bc.m_star_based >= mc.m_star and bc.m_top_based >= mc.m_top
        assert mc.m_max <= mc.m_star + mc.m_top + mc.m_e or n == 1
    c2 = cover(2)[0]
    assert c2.nu_c < c2.nu_star + c2.nu_top


def test_observed_identities_over_verified_range():
    for n in range(2, 26):
        mc, bc = maximal_census(n), based_counts(n)
        assert bc.m_e_based == 2 * mc.m_e
        assert mc.m_max == mc.m_star + mc.m_top + mc.m_e


def test_classification_matches_direct_maximal_cliques():
    for n in range(2, 15):
        assert maximal_simplices(n) == maximal_cliques(build_graph(n)).simplices, n
    assert maximal_census(1).m_max == len(maximal_simplices(1)) == 1


def test_families_are_pairwise_typed():
    stars, tops, edges = maximal_families(10)
    assert all(len(e) == 2 for e in edges)
    assert all(len(s) >= 3 for s in stars | tops)


def test_tables_four_and_five_full_range():
    for n in range(1, 26):
        cc, mc = cover(n)[0], maximal_census(n)
        got = (cc.nu_star, cc.nu_top, cc.nu_c, mc.m_star, mc.m_top, mc.m_e, mc.m_max)
        assert got == REFERENCE.table4[n], n
        bc = based_counts(n)
        assert (bc.m_star_based, bc.m_top_based, bc.m_e_based) == REFERENCE.table5[n], n

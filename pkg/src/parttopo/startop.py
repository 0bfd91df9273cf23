"""Full star/top simplices, the canonical cover, and maximal-simplex bookkeeping.

For a partition ``lam`` and a removable value ``v`` the full star simplex is
``lam`` plus every admissible transfer off a ``v``-part; the full top simplex
for an addable value ``w`` is ``lam`` plus every admissible transfer onto a
``w``-part.  Cover counts (nu_*) include singleton simplices; maximal counts
(m_*) use only those with at least two transfers, plus residual edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple

from .cliques import CliqueProfile, GuardError, SimplexSet, iter_cliques, simplex
from .graph import PartitionGraph, build_graph
from .partitions import (
    Partition,
    a_max,
    addable_values,
    apply_transfer,
    c_max,
    removable_values,
)


class StarBase(NamedTuple):
    lam: Partition
    source: int


class TopBase(NamedTuple):
    lam: Partition
    target: int


class ClassificationError(AssertionError):
    """A constructed simplex is not a clique of G_n."""


@dataclass(frozen=True)
class CoverCounts:
    nu_star: int
    nu_top: int
    nu_c: int


@dataclass(frozen=True)
class MaximalCounts:
    m_star: int
    m_top: int
    m_e: int
    m_max: int


@dataclass(frozen=True)
class BasedCounts:
    m_star_based: int
    m_top_based: int
    m_e_based: int


def _assert_clique(s: SimplexSet, g: PartitionGraph, what: object) -> SimplexSet:
    for i, j in combinations(s, 2):
        if not g.has_edge(i, j):
            raise ClassificationError(f"{what} produced a non-clique {s}")
    return s


def full_star_simplex(base: StarBase, g: PartitionGraph) -> SimplexSet:
    lam, v = base
    if v not in removable_values(lam):
        raise ValueError(f"{v} is not removable in {lam}")
    members = [lam] + [apply_transfer(lam, (v, w)) for w in a_max(lam, v)]
    return _assert_clique(simplex(g.index(mu) for mu in members), g, base)


def full_top_simplex(base: TopBase, g: PartitionGraph) -> SimplexSet:
    lam, w = base
    if w not in addable_values(lam):
        raise ValueError(f"{w} is not addable in {lam}")
    members = [lam] + [apply_transfer(lam, (v, w)) for v in c_max(lam, w)]
    return _assert_clique(simplex(g.index(mu) for mu in members), g, base)


def star_bases(g: PartitionGraph) -> Iterator[StarBase]:
    for lam in g.vertices:
        for v in sorted(removable_values(lam)):
            yield StarBase(lam, v)


def top_bases(g: PartitionGraph) -> Iterator[TopBase]:
    for lam in g.vertices:
        for w in sorted(addable_values(lam)):
            yield TopBase(lam, w)


@dataclass(frozen=True, eq=False)
class StarTopData:
    """Every full simplex of G_n together with its local admissibility size."""

    graph: PartitionGraph
    stars: tuple[tuple[StarBase, SimplexSet, int], ...]
    tops: tuple[tuple[TopBase, SimplexSet, int], ...]


@lru_cache(maxsize=32)
def star_top_data(n: int) -> StarTopData:
    g = build_graph(n)
    stars = tuple(
        (b, full_star_simplex(b, g), len(a_max(b.lam, b.source))) for b in star_bases(g)
    )
    tops = tuple((b, full_top_simplex(b, g), len(c_max(b.lam, b.target))) for b in top_bases(g))
    return StarTopData(g, stars, tops)


def cover(n: int) -> tuple[CoverCounts, frozenset[SimplexSet]]:
    """The canonical cover C_n: distinct full star and top simplices, singletons included."""
    data = star_top_data(n)
    star_sets = {s for _, s, _ in data.stars}
    top_sets = {s for _, s, _ in data.tops}
    elements = frozenset(star_sets | top_sets)
    return CoverCounts(len(star_sets), len(top_sets), len(elements)), elements


def _edge_presentations(data: StarTopData) -> list[tuple[Partition, int, int]]:
    """Oriented triples (lam, v, w) with |A_max(lam,v)| = |C_max(lam,w)| = 1."""
    star_size = {(b.lam, b.source): k for b, _, k in data.stars}
    top_size = {(b.lam, b.target): k for b, _, k in data.tops}
    out = []
    for lam in data.graph.vertices:
        for v in sorted(removable_values(lam)):
            if star_size[lam, v] != 1:
                continue
            (w,) = a_max(lam, v)
            if top_size[lam, w] == 1:
                out.append((lam, v, w))
    return out


def based_counts(n: int) -> BasedCounts:
    data = star_top_data(n)
    return BasedCounts(
        sum(1 for _, _, k in data.stars if k >= 2),
        sum(1 for _, _, k in data.tops if k >= 2),
        len(_edge_presentations(data)),
    )


def maximal_families(n: int) -> tuple[frozenset[SimplexSet], frozenset[SimplexSet], frozenset[SimplexSet]]:
    """Distinct maximal star simplices, maximal top simplices and residual edges."""
    data = star_top_data(n)
    g = data.graph
    stars = frozenset(s for _, s, k in data.stars if k >= 2)
    tops = frozenset(s for _, s, k in data.tops if k >= 2)
    edges = frozenset(
        simplex((g.index(lam), g.index(apply_transfer(lam, (v, w)))))
        for lam, v, w in _edge_presentations(data)
    )
    return stars, tops, edges


def maximal_census(n: int) -> MaximalCounts:
    if n == 1:
        # K_1 is a single maximal vertex, outside the star/top/edge typing
        return MaximalCounts(0, 0, 0, 1)
    stars, tops, edges = maximal_families(n)
    return MaximalCounts(len(stars), len(tops), len(edges), len(stars | tops | edges))


def maximal_simplices(n: int) -> frozenset[SimplexSet]:
    """Deduplicated union of the three maximal families (``{(0,)}`` for n = 1)."""
    if n == 1:
        return frozenset({(0,)})
    stars, tops, edges = maximal_families(n)
    return stars | tops | edges


@dataclass(frozen=True)
class ContainmentReport:
    n: int
    cliques_checked: int
    uncovered: tuple[SimplexSet, ...]

    @property
    def ok(self) -> bool:
        return not self.uncovered


def verify_containment(n: int, guard: int = 12) -> ContainmentReport:
    """Check that every clique of G_n lies inside some cover element."""
    if n > guard:
        raise GuardError(f"containment check refused for n={n} > guard {guard}")
    _, elements = cover(n)
    g = star_top_data(n).graph
    by_vertex: dict[int, list[frozenset[int]]] = {}
    for e in elements:
        fe = frozenset(e)
        for x in e:
            by_vertex.setdefault(x, []).append(fe)
    checked = 0
    uncovered = []
    for c in iter_cliques(g.adjacency_sets()):
        checked += 1
        if not any(e.issuperset(c) for e in by_vertex.get(c[0], ())):
            uncovered.append(c)
    return ContainmentReport(n, checked, tuple(uncovered))


@dataclass(frozen=True)
class ContainerCensus:
    profile: CliqueProfile
    star_based: tuple[int, ...]  # c_r^{star,based}, index r-1
    top_based: tuple[int, ...]


def _bump(counts: list[int], r: int) -> None:
    while len(counts) < r:
        counts.append(0)
    counts[r - 1] += 1


def cliques_via_containers(n: int, guard: int = 15) -> ContainerCensus:
    """Clique counts from all sub-simplices of full star/top simplices.

    Based counts tally (base, subset) presentations; the profile comes from
    the globally deduplicated subsets.
    """
    if n > guard:
        raise GuardError(f"container enumeration refused for n={n} > guard {guard}")
    data = star_top_data(n)
    seen: set[SimplexSet] = set()
    star_based: list[int] = []
    top_based: list[int] = []
    for family, based in ((data.stars, star_based), (data.tops, top_based)):
        for _, s, _ in family:
            for r in range(1, len(s) + 1):
                for sub in combinations(s, r):
                    _bump(based, r)
                    seen.add(sub)
    counts: list[int] = []
    for sub in seen:
        _bump(counts, len(sub))
    return ContainerCensus(CliqueProfile(n, tuple(counts)), tuple(star_based), tuple(top_based))

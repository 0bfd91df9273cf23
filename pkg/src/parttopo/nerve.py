"""Nerve of the canonical cover and its Euler characteristic by direct enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import GuardError, SimplexSet
from .startop import cover, star_top_data


@dataclass(frozen=True)
class CoverIncidence:
    elements: tuple[SimplexSet, ...]  # sorted canonical cover C_n
    member_of: tuple[tuple[int, ...], ...]  # member_of[x]: elements containing vertex x


@dataclass(frozen=True)
class NerveStats:
    n: int
    chi_nerve: int
    simplex_counts: tuple[int, ...]  # simplex_counts[k-1]: k-element subfamilies


def build_cover_incidence(n: int) -> CoverIncidence:
    _, elements = cover(n)
    ordered = tuple(sorted(elements))
    count = star_top_data(n).graph.num_vertices
    member_of: list[list[int]] = [[] for _ in range(count)]
    for u, e in enumerate(ordered):
        for x in e:
            member_of[x].append(u)
    return CoverIncidence(ordered, tuple(tuple(m) for m in member_of))


def nerve_simplices(inc: CoverIncidence):
    """Yield every subfamily of the cover with non-empty intersection, once.

    A subfamily is generated at vertex x exactly when x is the smallest
    vertex of its intersection.  Items are sorted tuples of element indices.
    """
    masks = [sum(1 << x for x in e) for e in inc.elements]
    for x, fam in enumerate(inc.member_of):
        below = (1 << x) - 1
        k = len(fam)
        for sel in range(1, 1 << k):
            inter = -1
            picked = []
            for t in range(k):
                if sel >> t & 1:
                    inter &= masks[fam[t]]
                    picked.append(fam[t])
            if not inter & below:
                yield tuple(picked)


def nerve_euler(n: int, guard: int = 10) -> NerveStats:
    """chi(N_n) as the alternating count of nerve simplices."""
    inc = build_cover_incidence(n)
    if n > guard:
        widest = max(len(f) for f in inc.member_of)
        raise GuardError(
            f"nerve enumeration refused for n={n} > guard {guard} "
            f"(about {len(inc.member_of)} x 2^{widest} subsets); raise --guard-nerve"
        )
    counts: list[int] = []
    for fam in nerve_simplices(inc):
        while len(counts) < len(fam):
            counts.append(0)
        counts[len(fam) - 1] += 1
    chi = sum(c if k % 2 else -c for k, c in enumerate(counts, start=1))
    return NerveStats(n, chi, tuple(counts))

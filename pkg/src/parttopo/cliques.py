"""Clique census of G_n: per-size counts, Euler characteristic, maximal cliques."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numba
import numpy as np

from . import _kernels
from .graph import PartitionGraph, VertexOrdering, degeneracy_order

U64_MAX = 2**64 - 1

SimplexSet = tuple[int, ...]


def simplex(vertices) -> SimplexSet:
    """Canonical form of a vertex set: sorted, duplicate-free tuple of ints."""
    return tuple(sorted({int(v) for v in vertices}))


class CountOverflowError(ArithmeticError):
    pass


class GuardError(RuntimeError):
    """A size guard refused an exponential computation."""


def checked_add(a: int, b: int, limit: int = U64_MAX) -> int:
    """Add two non-negative counters, refusing to exceed ``limit`` (u64 by default)."""
    if a < 0 or b < 0:
        raise CountOverflowError(f"negative counter operand: {a}, {b}")
    if a > limit - b:
        raise CountOverflowError(f"counter overflow: {a} + {b} > {limit}")
    return a + b


@dataclass(frozen=True)
class CliqueProfile:
    """Clique counts ``counts[r-1] = c_r(n)``.

    A profile is *complete* when it is known to contain every non-zero size.
    Capped profiles whose last counted size is already zero are complete too.
    """

    n: int
    counts: tuple[int, ...]
    complete: bool = True

    def __post_init__(self) -> None:
        if self.complete:
            counts = list(self.counts)
            while counts and counts[-1] == 0:
                counts.pop()
            object.__setattr__(self, "counts", tuple(counts))

    def c(self, r: int) -> int:
        """c_r(n); zero beyond the stored sizes (error if capped and unknown)."""
        if r < 1:
            raise ValueError("clique size starts at 1")
        if r <= len(self.counts):
            return self.counts[r - 1]
        if not self.complete:
            raise ValueError(f"c_{r} was not counted (capped profile)")
        return 0

    def f(self, p: int) -> int:
        """f_p(n) = c_{p+1}(n) under dimension grading."""
        return self.c(p + 1)

    @property
    def omega(self) -> int | None:
        return len(self.counts) if self.complete else None

    @property
    def chi(self) -> int | None:
        if not self.complete:
            return None
        return sum(c if r % 2 else -c for r, c in enumerate(self.counts, start=1))

    @property
    def b(self) -> int | None:
        chi = self.chi
        return None if chi is None else chi - 1


def clique_profile(
    g: PartitionGraph,
    r_cap: int | None = None,
    ordering: VertexOrdering | None = None,
    workers: int = 0,
) -> CliqueProfile:
    """Exact r-clique counts of ``g``.

    Each clique is counted once, at its first vertex in ``ordering``
    (degeneracy order by default), by extending along later neighbours.
    ``workers`` bounds the numba thread count; 0 means the default.
    """
    if r_cap is not None and r_cap < 1:
        raise ValueError("r_cap must be positive")
    ordering = ordering or degeneracy_order(g)
    optr, oidx = _kernels.orient(g.indptr, g.indices, ordering.order)
    max_size = r_cap if r_cap is not None else 1 << 30
    threads = workers if workers > 0 else numba.config.NUMBA_NUM_THREADS
    threads = min(threads, numba.config.NUMBA_NUM_THREADS)
    previous = numba.get_num_threads()
    numba.set_num_threads(threads)
    try:
        n_chunks = max(1, min(g.num_vertices, 64 * threads))
        partial, ok = _kernels.count_cliques(optr, oidx, max_size, n_chunks)
    finally:
        numba.set_num_threads(previous)
    if not ok.all():
        raise CountOverflowError("clique counter overflowed inside the counting kernel")
    totals = [0] * partial.shape[1]
    for row in partial.tolist():
        for k, v in enumerate(row):
            totals[k] = checked_add(totals[k], v)
    if r_cap is not None:
        totals = (totals + [0] * r_cap)[:r_cap]
        complete = totals[-1] == 0
    else:
        complete = True
    return CliqueProfile(g.n, tuple(totals), complete)


def euler_from_profile(profile: CliqueProfile) -> tuple[int, int]:
    """(chi, b) from a complete profile."""
    if not profile.complete:
        raise ValueError("Euler characteristic needs an uncapped clique profile")
    chi = 0
    for r, c in enumerate(profile.counts, start=1):
        chi += c if r % 2 else -c
    return chi, chi - 1


def leader_profile(profile: CliqueProfile) -> frozenset[int]:
    """Sizes r in 1..5 where c_r(n) attains the maximum of c_1..c_5."""
    low = [profile.counts[r - 1] if r <= len(profile.counts) else 0 for r in range(1, 6)]
    if not profile.complete and len(profile.counts) < 5:
        raise ValueError("leader profile needs counts through size 5")
    best = max(low)
    return frozenset(r for r, c in enumerate(low, start=1) if c == best)


def iter_cliques(adj: list[set[int]]) -> Iterator[SimplexSet]:
    """Every non-empty clique once, grown in increasing vertex order."""

    def grow(clique: list[int], cand: set[int]) -> Iterator[SimplexSet]:
        yield tuple(clique)
        for v in sorted(cand):
            clique.append(v)
            yield from grow(clique, {u for u in cand & adj[v] if u > v})
            clique.pop()

    for v in range(len(adj)):
        yield from grow([v], {u for u in adj[v] if u > v})


def clique_profile_reference(g: PartitionGraph) -> CliqueProfile:
    """Pure-Python counterpart of :func:`clique_profile` for small n."""
    counts: list[int] = []
    for c in iter_cliques(g.adjacency_sets()):
        while len(counts) < len(c):
            counts.append(0)
        counts[len(c) - 1] += 1
    return CliqueProfile(g.n, tuple(counts))


@dataclass(frozen=True)
class MaximalCliqueList:
    simplices: frozenset[SimplexSet]

    @property
    def total(self) -> int:
        return len(self.simplices)


def maximal_cliques(g: PartitionGraph, guard: int = 16) -> MaximalCliqueList:
    """Inclusion-maximal cliques by Bron-Kerbosch with Tomita pivoting."""
    if g.n > guard:
        raise GuardError(f"maximal clique listing refused for n={g.n} > guard {guard}; raise --guard-max")
    adj = g.adjacency_sets()
    found: set[SimplexSet] = set()

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.add(simplex(r))
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
        for v in sorted(p - adj[pivot]):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p.discard(v)
            x.add(v)

    expand([], set(range(g.num_vertices)), set())
    return MaximalCliqueList(frozenset(found))

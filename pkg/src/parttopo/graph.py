"""The partition graph G_n as a compressed sparse adjacency structure."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernels
from .partitions import (
    DEFAULT_MAX_N,
    Partition,
    check_n,
    enumerate_partitions,
    neighbors,
    partition_count_table,
    partition_rank,
)


class PartitionTable(Sequence):
    """Read-only ``Sequence[Partition]`` backed by a zero-padded int8 matrix."""

    def __init__(self, rows: np.ndarray, lens: np.ndarray):
        self._rows = rows
        self._lens = lens

    def __len__(self) -> int:
        return len(self._lens)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        return Partition(tuple(int(x) for x in self._rows[i, : self._lens[i]]))


@dataclass(frozen=True, eq=False)
class PartitionGraph:
    n: int
    vertices: Sequence[Partition]
    indptr: np.ndarray  # int64, length p(n) + 1
    indices: np.ndarray  # int32, each row strictly increasing

    @property
    def num_vertices(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return int(self.indptr[-1]) // 2

    def neighbors_of(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def degree(self, i: int) -> int:
        return int(self.indptr[i + 1] - self.indptr[i])

    def index(self, lam: Partition) -> int:
        if lam.n != self.n:
            raise ValueError(f"{lam} is not a partition of {self.n}")
        return partition_rank(lam.parts)

    def adjacency_sets(self) -> list[set[int]]:
        return [set(self.neighbors_of(i).tolist()) for i in range(self.num_vertices)]

    def has_edge(self, i: int, j: int) -> bool:
        row = self.neighbors_of(i)
        k = int(np.searchsorted(row, j))
        return k < len(row) and row[k] == j

    def same_as(self, other: "PartitionGraph") -> bool:
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )


def build_graph(n: int, max_n: int = DEFAULT_MAX_N) -> PartitionGraph:
    """Build G_n with the compiled neighbour kernel."""
    check_n(n, max_n)
    count = partition_count_table(n)[n][n]
    rows, lens = _kernels.enumerate_rows(n, count)
    indptr, indices = _kernels.adjacency_csr(rows, lens, n, _kernels.rank_prefix_table(n))
    return PartitionGraph(n, PartitionTable(rows, lens), indptr, indices)


def build_graph_reference(n: int, max_n: int = DEFAULT_MAX_N) -> PartitionGraph:
    """Build G_n through :func:`partitions.neighbors` and a dict index.

    Slow; kept as the cross-check for :func:`build_graph`.
    """
    verts = enumerate_partitions(n, max_n)
    where = {lam: i for i, lam in enumerate(verts)}
    indptr = [0]
    indices: list[int] = []
    for lam in verts:
        row = sorted(where[mu] for mu in neighbors(lam))
        indices.extend(row)
        indptr.append(len(indices))
    return PartitionGraph(
        n, verts, np.asarray(indptr, dtype=np.int64), np.asarray(indices, dtype=np.int32)
    )


class OrderKind(enum.Enum):
    CANONICAL = "canonical"
    DEGENERACY = "degeneracy"


@dataclass(frozen=True, eq=False)
class VertexOrdering:
    order: np.ndarray  # int32 permutation of vertex indices
    kind: OrderKind

    def positions(self) -> np.ndarray:
        pos = np.empty(len(self.order), dtype=np.int64)
        pos[self.order] = np.arange(len(self.order))
        return pos


def canonical_order(g: PartitionGraph) -> VertexOrdering:
    return VertexOrdering(np.arange(g.num_vertices, dtype=np.int32), OrderKind.CANONICAL)


def degeneracy_order(g: PartitionGraph) -> VertexOrdering:
    """Repeatedly remove a minimum-degree vertex (smallest index on ties)."""
    return VertexOrdering(_kernels.degeneracy_peel(g.indptr, g.indices), OrderKind.DEGENERACY)


def degeneracy(g: PartitionGraph, ordering: VertexOrdering | None = None) -> int:
    """Largest number of neighbours a vertex has later in the removal order."""
    ordering = ordering or degeneracy_order(g)
    optr, _ = _kernels.orient(g.indptr, g.indices, ordering.order)
    return int(np.diff(optr).max(initial=0))


def write_edge_list(g: PartitionGraph, path: str | Path) -> None:
    """Dump ``i j`` pairs (i < j) under a one-line header."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# parttopo-graph n={g.n} vertices={g.num_vertices} edges={g.edge_count}\n")
        for i in range(g.num_vertices):
            for j in g.neighbors_of(i):
                if j > i:
                    fh.write(f"{i} {j}\n")

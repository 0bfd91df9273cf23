"""Integer partitions and the one-cell transfer calculus.

A transfer ``(v, w)`` moves one cell from a part of size ``v`` to a part of
size ``w`` (``w == 0`` opens a new part), then re-sorts.  Corners are
identified by part *values*: all parts of equal size are interchangeable
once the result is re-sorted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

DEFAULT_MAX_N = 100


class PartitionRangeError(ValueError):
    """n is outside 1..max_n."""


class Inadmissible(enum.Enum):
    MISSING_SOURCE_VALUE = "MissingSourceValue"
    MISSING_TARGET_VALUE = "MissingTargetValue"
    IDENTITY_TRANSFER = "IdentityTransfer"
    SAME_PART_CONFLICT = "SamePartConflict"


class InadmissibleTransfer(ValueError):
    def __init__(self, reason: Inadmissible, partition: "Partition", transfer: "TransferSpec"):
        super().__init__(f"{reason.value}: {transfer} on {partition}")
        self.reason = reason
        self.partition = partition
        self.transfer = transfer


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``n`` stored as weakly decreasing parts."""

    parts: tuple[int, ...]
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("partition must have at least one part")
        prev = parts[0]
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers: {parts}")
            if p > prev:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
            prev = p
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1,1"``; non-canonical order is rejected."""
        try:
            parts = tuple(int(tok) for tok in text.strip().split(","))
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def count(self, value: int) -> int:
        return self.parts.count(value)


class TransferSpec(NamedTuple):
    source: int  # size of the part losing a cell
    target: int  # size of the part gaining a cell; 0 opens a new part

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"


def check_n(n: int, max_n: int = DEFAULT_MAX_N) -> None:
    if not isinstance(n, int) or n < 1 or n > max_n:
        raise PartitionRangeError(f"n must satisfy 1 <= n <= {max_n}, got {n!r}")


def iter_partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n as tuples, descending lexicographic order."""
    # Iterative: start from (n) and step to the lexicographic predecessor.
    a = [n]
    while True:
        yield tuple(a)
        # drop trailing ones, then decrement the last part > 1
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        k = a.pop() - 1
        rest = ones + 1
        a.append(k)
        while rest > k:
            a.append(k)
            rest -= k
        if rest:
            a.append(rest)


def enumerate_partitions(n: int, max_n: int = DEFAULT_MAX_N) -> list[Partition]:
    """Every partition of ``n`` once, descending lexicographic.

    The position of a partition in this list is its vertex index everywhere
    else in the package.
    """
    check_n(n, max_n)
    return [Partition(t) for t in iter_partition_tuples(n)]


@lru_cache(maxsize=None)
def partition_count_table(n_max: int) -> tuple[tuple[int, ...], ...]:
    """``table[m][k]`` = number of partitions of m with all parts <= k."""
    table = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    for k in range(n_max + 1):
        table[0][k] = 1
    for m in range(1, n_max + 1):
        for k in range(1, n_max + 1):
            table[m][k] = table[m][k - 1] + (table[m - k][k] if k <= m else 0)
    return tuple(tuple(row) for row in table)


def partition_rank(parts: tuple[int, ...] | Partition) -> int:
    """Index of a partition within ``enumerate_partitions(n)``."""
    parts = tuple(parts)
    n = sum(parts)
    table = partition_count_table(n)
    rank = 0
    remaining, bound = n, n
    for p in parts:
        # partitions of `remaining` (parts <= bound) whose first part exceeds p
        for first in range(p + 1, min(bound, remaining) + 1):
            rank += table[remaining - first][first]
        remaining -= p
        bound = p
    return rank


def removable_values(lam: Partition) -> set[int]:
    return set(lam.parts)


def addable_values(lam: Partition) -> set[int]:
    return set(lam.parts) | {0}


def _reason(parts: tuple[int, ...], v: int, w: int) -> Inadmissible | None:
    if v not in parts:
        return Inadmissible.MISSING_SOURCE_VALUE
    if w != 0 and w not in parts:
        return Inadmissible.MISSING_TARGET_VALUE
    if w == v - 1:
        return Inadmissible.IDENTITY_TRANSFER
    if v == w and parts.count(v) < 2:
        return Inadmissible.SAME_PART_CONFLICT
    return None


def _transfer_tuple(parts: tuple[int, ...], v: int, w: int) -> tuple[int, ...]:
    out = list(parts)
    # last row of size v loses a cell; first row of size w gains one
    i = len(out) - 1 - out[::-1].index(v)
    if w == 0:
        out.append(1)
    else:
        out[out.index(w)] += 1
    out[i] -= 1
    return tuple(sorted((p for p in out if p), reverse=True))


def is_admissible(lam: Partition, t: TransferSpec | tuple[int, int]) -> bool:
    return _reason(lam.parts, t[0], t[1]) is None


def apply_transfer(lam: Partition, t: TransferSpec | tuple[int, int]) -> Partition:
    """Apply a transfer; raises :class:`InadmissibleTransfer` with a reason code."""
    t = TransferSpec(*t)
    reason = _reason(lam.parts, t.source, t.target)
    if reason is not None:
        raise InadmissibleTransfer(reason, lam, t)
    return Partition(_transfer_tuple(lam.parts, t.source, t.target))


def a_max(lam: Partition, v: int) -> set[int]:
    """Targets ``w`` for which moving a cell off a part of size ``v`` is admissible."""
    if v not in removable_values(lam):
        raise ValueError(f"{v} is not a removable value of {lam}")
    return {w for w in addable_values(lam) if _reason(lam.parts, v, w) is None}


def c_max(lam: Partition, w: int) -> set[int]:
    """Sources ``v`` for which adding a cell at a part of size ``w`` is admissible."""
    if w not in addable_values(lam):
        raise ValueError(f"{w} is not an addable value of {lam}")
    return {v for v in removable_values(lam) if _reason(lam.parts, v, w) is None}


def admissible_transfers(lam: Partition) -> list[TransferSpec]:
    """All admissible transfers of ``lam`` in (source, target) order."""
    parts = lam.parts
    return [
        TransferSpec(v, w)
        for v in sorted(removable_values(lam))
        for w in sorted(addable_values(lam))
        if _reason(parts, v, w) is None
    ]


def neighbors(lam: Partition) -> set[Partition]:
    return {Partition(_transfer_tuple(lam.parts, v, w)) for v, w in admissible_transfers(lam)}

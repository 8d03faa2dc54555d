"""Integer partitions and the parity classes that drive orbit enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Sequence, Tuple

MAX_PARTITION_SIZE = 64


class Partition:
    """A partition stored as ``((d1, t1), (d2, t2), ...)`` with parts descending.

    ``d`` is a part size, ``t`` its multiplicity.
    """

    __slots__ = ("_pairs",)

    def __init__(self, parts: Sequence[int]):
        counts: Dict[int, int] = {}
        for d in parts:
            if d < 1:
                raise ValueError("parts must be positive")
            counts[d] = counts.get(d, 0) + 1
        self._pairs = tuple(sorted(counts.items(), reverse=True))

    @staticmethod
    def from_pairs(pairs: Sequence[Tuple[int, int]]) -> "Partition":
        parts: List[int] = []
        for d, t in pairs:
            if t < 1:
                raise ValueError("multiplicities must be positive")
            parts.extend([d] * t)
        return Partition(parts)

    @property
    def pairs(self) -> tuple:
        return self._pairs

    def parts(self) -> List[int]:
        out: List[int] = []
        for d, t in self._pairs:
            out.extend([d] * t)
        return out

    def size(self) -> int:
        return sum(d * t for d, t in self._pairs)

    def multiplicity(self, d: int) -> int:
        for dd, t in self._pairs:
            if dd == d:
                return t
        return 0

    def distinct_parts(self) -> List[int]:
        return [d for d, _ in self._pairs]

    def largest_part(self) -> int:
        return self._pairs[0][0] if self._pairs else 0

    def is_zero_type(self) -> bool:
        """True for the partition [1, 1, ..., 1] (and for the empty one)."""
        return all(d == 1 for d, _ in self._pairs)

    def to_json(self) -> list:
        return [[d, t] for d, t in self._pairs]

    @staticmethod
    def from_json(data) -> "Partition":
        return Partition.from_pairs([(int(d), int(t)) for d, t in data])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts() < other.parts()

    def __repr__(self) -> str:
        return f"Partition({self.parts()})"

    def __str__(self) -> str:
        return "[" + ",".join(str(d) for d in self.parts()) + "]"


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in ascending lexicographic order.

    The order on the descending part lists is lexicographic, e.g. for n=4:
    [1,1,1,1] < [2,1,1] < [2,2] < [3,1] < [4].  ``n = 0`` yields the single
    empty partition.
    """
    if n < 0:
        raise ValueError("partition size must be non-negative")
    if n > MAX_PARTITION_SIZE:
        raise ValueError(f"partition size capped at {MAX_PARTITION_SIZE}")

    def gen(total: int, cap: int) -> Iterator[List[int]]:
        if total == 0:
            yield []
            return
        for first in range(1, min(total, cap) + 1):
            for rest in gen(total - first, first):
                yield [first] + rest

    return [Partition(parts) for parts in gen(n, n)]


@dataclass(frozen=True)
class PartitionClasses:
    """Parity bookkeeping for one partition.

    ``multiplicities`` maps part size to multiplicity; the remaining fields
    split the distinct part sizes by parity and by residue mod 4.
    """

    multiplicities: Tuple[Tuple[int, int], ...]
    even_parts: Tuple[int, ...]
    odd_parts: Tuple[int, ...]
    odd_parts_1mod4: Tuple[int, ...]
    odd_parts_3mod4: Tuple[int, ...]
    is_even: bool
    is_very_even: bool
    in_even_mult_class: bool
    in_odd_mult_class: bool


def classify(partition: Partition) -> PartitionClasses:
    """Classify a partition by the parity data the orbit maps depend on.

    * ``is_even``: every part is even.
    * ``is_very_even``: every part even and every multiplicity even.
    * ``in_even_mult_class``: every even part has even multiplicity (the
      orthogonal parametrizing condition).
    * ``in_odd_mult_class``: every odd part has even multiplicity (the
      symplectic parametrizing condition).
    """
    pairs = partition.pairs
    evens = tuple(d for d, _ in pairs if d % 2 == 0)
    odds = tuple(d for d, _ in pairs if d % 2 == 1)
    return PartitionClasses(
        multiplicities=pairs,
        even_parts=evens,
        odd_parts=odds,
        odd_parts_1mod4=tuple(d for d in odds if d % 4 == 1),
        odd_parts_3mod4=tuple(d for d in odds if d % 4 == 3),
        is_even=len(odds) == 0,
        is_very_even=len(odds) == 0 and all(t % 2 == 0 for _, t in pairs),
        in_even_mult_class=all(t % 2 == 0 for d, t in pairs if d % 2 == 0),
        in_odd_mult_class=all(t % 2 == 0 for d, t in pairs if d % 2 == 1),
    )

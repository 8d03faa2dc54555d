"""Signed Young diagrams: sign matrices, box counts, and enumeration.

A signed diagram is a partition together with one sign choice per part
size: for a part of size ``d`` with multiplicity ``t``, the integer ``p_d``
(0 <= p_d <= t) says how many of the ``t`` rows start with ``+1``.  Rows
are canonically sorted so the ``+``-starting rows come first, and the signs
along a row follow the alternation rules below, so ``(d, t, p_d)`` data
determines the whole diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .partitions import Partition, classify, enumerate_partitions

SYD_VARIANTS = ("all", "even", "odd", "even1", "oddm1")


def sign_row(d: int, start: int) -> Tuple[int, ...]:
    """Signs along one row of length ``d`` starting with ``start`` (+1/-1).

    Signs alternate along the row, except that a row whose length is
    congruent to 3 mod 4 flips its final box so the row ends opposite to
    its start.
    """
    if start not in (1, -1):
        raise ValueError("row start sign must be +1 or -1")
    row = [start * (-1) ** j for j in range(d)]
    if d % 4 == 3:
        row[-1] = -start
    return tuple(row)


def sign_matrix(d: int, t: int, p: int) -> Tuple[Tuple[int, ...], ...]:
    """The ``t x d`` sign matrix with ``p`` rows starting ``+`` listed first."""
    if not 0 <= p <= t:
        raise ValueError(f"need 0 <= p <= {t}, got {p}")
    rows = [sign_row(d, 1)] * p + [sign_row(d, -1)] * (t - p)
    return tuple(rows)


def row_plus_minus(d: int, start: int) -> Tuple[int, int]:
    """Counts of +1 and -1 boxes in one row."""
    row = sign_row(d, start)
    plus = sum(1 for s in row if s == 1)
    return plus, d - plus


class SignedDiagram:
    """A partition with per-part-size sign data ``p_d``."""

    __slots__ = ("partition", "_p")

    def __init__(self, partition: Partition, p_by_part: Dict[int, int]):
        self.partition = partition
        cleaned = {}
        for d, t in partition.pairs:
            if d not in p_by_part:
                raise ValueError(f"missing sign count for part {d}")
            p = p_by_part[d]
            if not 0 <= p <= t:
                raise ValueError(f"sign count for part {d} out of range")
            cleaned[d] = p
        if set(p_by_part) != set(cleaned):
            raise ValueError("sign data names a part size not in the partition")
        self._p = tuple(sorted(cleaned.items(), reverse=True))

    @property
    def p_pairs(self) -> tuple:
        """((d, p_d), ...) with d descending."""
        return self._p

    def p_of(self, d: int) -> int:
        for dd, p in self._p:
            if dd == d:
                return p
        raise KeyError(d)

    def q_of(self, d: int) -> int:
        return self.partition.multiplicity(d) - self.p_of(d)

    def sgn_counts(self) -> Tuple[int, int]:
        """Total (+1 boxes, -1 boxes) across the whole diagram."""
        plus = minus = 0
        for d, t in self.partition.pairs:
            p = self.p_of(d)
            pp, pm = row_plus_minus(d, 1)
            mp, mm = row_plus_minus(d, -1)
            plus += p * pp + (t - p) * mp
            minus += p * pm + (t - p) * mm
        return plus, minus

    def to_json(self) -> dict:
        return {
            "partition": self.partition.to_json(),
            "p": [[d, p] for d, p in self._p],
        }

    @staticmethod
    def from_json(data) -> "SignedDiagram":
        part = Partition.from_json(data["partition"])
        return SignedDiagram(part, {int(d): int(p) for d, p in data["p"]})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedDiagram):
            return NotImplemented
        return self.partition == other.partition and self._p == other._p

    def __hash__(self) -> int:
        return hash((self.partition, self._p))

    def __repr__(self) -> str:
        return f"SignedDiagram({self.partition.parts()}, {dict(self._p)})"

    def __str__(self) -> str:
        signs = ",".join(f"{d}:{p}" for d, p in self._p)
        return f"{self.partition}({signs})"


def in_sign_balance_class(diagram: SignedDiagram) -> bool:
    """The refinement that doubles orbit fibers in the indefinite orthogonal case.

    True when every odd row of the diagram has an even number of ``+1``
    boxes, or every odd row has an even number of ``-1`` boxes (vacuously
    true when no odd parts exist).
    """
    plus_ok = True
    minus_ok = True
    for d, t in diagram.partition.pairs:
        if d % 2 == 0:
            continue
        p = diagram.p_of(d)
        for start, count in ((1, p), (-1, t - p)):
            if count == 0:
                continue
            l_plus, l_minus = row_plus_minus(d, start)
            if l_plus % 2:
                plus_ok = False
            if l_minus % 2:
                minus_ok = False
    return plus_ok or minus_ok


def enumerate_signed_diagrams(
    partition: Partition,
    variant: str = "all",
    signature: Optional[Tuple[int, int]] = None,
) -> List[SignedDiagram]:
    """All sign choices on one partition, filtered by variant and signature.

    Variants:

    * ``"all"``   - every row may start with either sign.
    * ``"even"``  - rows of even length must start ``+`` (p_d = t_d there).
    * ``"odd"``   - rows of odd length must start ``+``.
    * ``"even1"`` - as ``"even"``, and every even part size must also have
      even multiplicity (the orthogonal parametrizing restriction).
    * ``"oddm1"`` - as ``"odd"``, and every odd part size must have even
      multiplicity.

    ``signature=(p, q)`` keeps only diagrams whose box counts are exactly
    (p, q).  Output order: sign tuples ascending lexicographically in the
    (d descending) part order.
    """
    if variant not in SYD_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    cls = classify(partition)
    if variant == "even1" and not cls.in_even_mult_class:
        return []
    if variant == "oddm1" and not cls.in_odd_mult_class:
        return []

    choices: List[List[int]] = []
    sizes = [d for d, _ in partition.pairs]
    for d, t in partition.pairs:
        if variant in ("even", "even1") and d % 2 == 0:
            choices.append([t])
        elif variant in ("odd", "oddm1") and d % 2 == 1:
            choices.append([t])
        else:
            choices.append(list(range(t + 1)))

    def product(idx: int) -> Iterator[List[int]]:
        if idx == len(choices):
            yield []
            return
        for val in choices[idx]:
            for rest in product(idx + 1):
                yield [val] + rest

    out = []
    for combo in product(0):
        diag = SignedDiagram(partition, dict(zip(sizes, combo)))
        if signature is not None and diag.sgn_counts() != signature:
            continue
        out.append(diag)
    return out


def enumerate_signed_diagrams_of_size(
    n: int,
    variant: str = "all",
    signature: Optional[Tuple[int, int]] = None,
) -> List[SignedDiagram]:
    """Signed diagrams over every partition of ``n``, partition-lex order."""
    out: List[SignedDiagram] = []
    for part in enumerate_partitions(n):
        out.extend(enumerate_signed_diagrams(part, variant, signature))
    return out

"""Partitions, transposes, containment and horizontal strips.

Parts are stored weakly decreasing with no trailing zeros.  Diagrams are
drawn with parts as columns, so a "horizontal strip" is a skew shape in which
every part grows by at most one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple


class InvalidPartition(ValueError):
    pass


class Partition(tuple):
    """Immutable weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 1:
                raise InvalidPartition(f"non-positive part {x} in {parts}")
            if i and parts[i - 1] < x:
                raise InvalidPartition(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if text in ("", "0"):
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"

    def part(self, i: int) -> int:
        """1-based part, missing parts read as 0."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> "Partition":
        return transpose(self)


def transpose(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff inner_i <= outer_i for every i."""
    if len(inner) > len(outer):
        return False
    return all(b <= a for a, b in zip(outer, inner))


@dataclass(frozen=True)
class SkewStrip:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise InvalidPartition(f"{self.inner} is not contained in {self.outer}")

    def differences(self) -> Tuple[int, ...]:
        inner = self.inner
        return tuple(x - (inner[i] if i < len(inner) else 0) for i, x in enumerate(self.outer))

    @property
    def length(self) -> int:
        return self.outer.size - self.inner.size

    def violation(self) -> Optional[int]:
        """1-based index of the first part growing by more than one, else None."""
        for i, d in enumerate(self.differences()):
            if d > 1:
                return i + 1
        return None

    def rows(self, m: int) -> int:
        """Number of boxes in row m (row m holds the m-th box of each column)."""
        return transpose(self.outer).part(m) - transpose(self.inner).part(m)


def is_horizontal_strip(s: SkewStrip) -> Tuple[bool, int]:
    """(is_strip, strip length); see SkewStrip.violation for the failing index."""
    return s.violation() is None, s.length


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)

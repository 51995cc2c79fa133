"""LR-tableaux as chains of partitions.

A tableau is a chain ``[g0, ..., gs]``; boxes of ``g[l] - g[l-1]`` carry the
label ``l``.  Because partitions are drawn with parts as columns, "row m" of a
diagram is read off the transposed partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .partitions import InvalidPartition, Partition, SkewStrip, transpose


class TableauError(ValueError):
    pass


class NotIncreasing(TableauError):
    def __init__(self, ell: int):
        self.ell = ell
        super().__init__(f"step {ell} of the chain is not a proper enlargement")


class NotHorizontalStrip(TableauError):
    def __init__(self, ell: int, i: int):
        self.ell, self.i = ell, i
        super().__init__(f"step {ell} grows part {i} by more than one box")


class LatticeViolation(TableauError):
    def __init__(self, ell: int, h: int):
        self.ell, self.h = ell, h
        super().__init__(f"lattice permutation property fails at l={ell}, h={h}")


class IndexOutOfRange(IndexError):
    pass


def _diff(outer: Sequence[int], inner: Sequence[int]) -> List[int]:
    return [x - (inner[i] if i < len(inner) else 0) for i, x in enumerate(outer)]


def _tail_sums(d: Sequence[int], n: int) -> List[int]:
    """tails[h-1] = sum_{i >= h} d_i for h = 1..n+1."""
    out = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        out[i] = out[i + 1] + (d[i] if i < len(d) else 0)
    return out


@dataclass(frozen=True)
class LRTableau:
    chain: Tuple[Partition, ...]

    @property
    def s(self) -> int:
        return len(self.chain) - 1

    @property
    def gamma(self) -> Partition:
        return self.chain[0]

    @property
    def beta(self) -> Partition:
        return self.chain[-1]

    @property
    def alpha(self) -> Partition:
        return transpose([self.chain[k].size - self.chain[k - 1].size for k in range(1, len(self.chain))])

    @property
    def type(self) -> Tuple[Partition, Partition, Partition]:
        return self.alpha, self.beta, self.gamma

    def count_boxes(self, ell: int, m: int) -> int:
        return count_boxes(self, ell, m)

    def to_json(self) -> List[List[int]]:
        return [list(g) for g in self.chain]

    def labels(self) -> List[List[int]]:
        """labels[i][r-1] = label of the box in column i+1, row r (0 if unlabelled)."""
        beta = self.beta
        out = [[0] * b for b in beta]
        for ell in range(1, len(self.chain)):
            prev, cur = self.chain[ell - 1], self.chain[ell]
            for i, x in enumerate(cur):
                for r in range(prev.part(i + 1), x):
                    out[i][r] = ell
        return out


def validate(chain: Sequence[Sequence[int]]) -> LRTableau:
    """Check the horizontal-strip and lattice conditions; return the tableau."""
    if not chain:
        raise TableauError("empty chain")
    parts = tuple(Partition(g) for g in chain)
    strips: List[List[int]] = []
    for ell in range(1, len(parts)):
        prev, cur = parts[ell - 1], parts[ell]
        if len(prev) > len(cur) or any(b > a for a, b in zip(cur, prev)):
            raise NotIncreasing(ell)
        d = _diff(cur, prev)
        if sum(d) == 0:
            raise NotIncreasing(ell)
        for i, x in enumerate(d):
            if x > 1:
                raise NotHorizontalStrip(ell, i + 1)
        strips.append(d)
    n = len(parts[-1])
    tails = [_tail_sums(d, n) for d in strips]
    for ell in range(2, len(parts)):
        cur, prev = tails[ell - 1], tails[ell - 2]
        for h in range(1, n + 1):
            if cur[h - 1] > prev[h - 1]:
                raise LatticeViolation(ell, h)
    return LRTableau(parts)


def is_valid(chain: Sequence[Sequence[int]]) -> bool:
    try:
        validate(chain)
    except (TableauError, InvalidPartition):
        return False
    return True


def count_boxes(t: LRTableau, ell: int, m: int) -> int:
    """Number of boxes labelled ``ell`` in row ``m``."""
    if not 1 <= ell <= t.s:
        raise IndexOutOfRange(f"label {ell} outside 1..{t.s}")
    if m < 1:
        raise IndexOutOfRange(f"row {m} must be positive")
    return transpose(t.chain[ell]).part(m) - transpose(t.chain[ell - 1]).part(m)


def reduce(t: LRTableau, ell: int) -> SkewStrip:
    if not 1 <= ell <= t.s:
        raise IndexOutOfRange(f"label {ell} outside 1..{t.s}")
    return SkewStrip(t.chain[ell], t.chain[ell - 1])


def _strips(cur: Tuple[int, ...], beta: Tuple[int, ...], size: int, prev_tail) -> Iterator[Tuple[int, ...]]:
    """Horizontal strips of ``size`` boxes added to ``cur`` inside ``beta``.

    ``cur`` is padded to ``len(beta)``.  ``prev_tail`` bounds the tail sums of
    the new strip (lattice condition); None for the first strip.
    """
    n = len(beta)
    chosen = [0] * n

    # walk from the last part upward so tail sums are known at each choice
    def rec(i: int, remaining: int, tail: int) -> Iterator[Tuple[int, ...]]:
        if i < 0:
            if remaining == 0:
                yield tuple(x + c for x, c in zip(cur, chosen))
            return
        if remaining > i + 1:
            return
        below = cur[i + 1] + chosen[i + 1] if i + 1 < n else 0
        for c in (0, 1):
            if c > remaining:
                break
            x = cur[i] + c
            if x > beta[i] or x < below:
                continue
            if prev_tail is not None and tail + c > prev_tail[i]:
                continue
            chosen[i] = c
            yield from rec(i - 1, remaining - c, tail + c)
            chosen[i] = 0

    yield from rec(n - 1, size, 0)


def enumerate_tableaux(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> List[LRTableau]:
    """All LR-tableaux of type (alpha, beta, gamma), in lexicographic order of chains."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if alpha.size + gamma.size != beta.size:
        return []
    if len(gamma) > len(beta) or any(g > b for b, g in zip(beta, gamma)):
        return []
    sizes = list(transpose(alpha))
    bt = tuple(beta)
    n = len(bt)
    out: List[LRTableau] = []

    def rec(chain: List[Tuple[int, ...]], prev_tail):
        ell = len(chain)
        if ell > len(sizes):
            if chain[-1] == bt:
                out.append(LRTableau(tuple(Partition(c) for c in chain)))
            return
        for nxt in _strips(chain[-1], bt, sizes[ell - 1], prev_tail):
            d = [a - b for a, b in zip(nxt, chain[-1])]
            rec(chain + [nxt], _tail_sums(d, n))

    start = tuple(gamma) + (0,) * (n - len(gamma))
    rec([start], None)
    out.sort(key=lambda t: [tuple(g) for g in t.chain])
    return out


def lr_coefficient(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> int:
    return len(enumerate_tableaux(alpha, beta, gamma))

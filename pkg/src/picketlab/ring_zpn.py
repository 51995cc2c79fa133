"""Exact arithmetic in the chain ring Z/p^N and Smith normal form over it.

Matrices are plain lists of lists of Python ints.  Every routine here is a
pure function; nothing is mutated in place that the caller can see.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence

Matrix = List[List[int]]

_MAX_MODULUS = 2**63


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class RingCtx:
    """The ring Z/p^cap."""

    p: int
    cap: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.cap < 1:
            raise ValueError(f"cap must be positive, got {self.cap}")
        modulus = self.p**self.cap
        if modulus > _MAX_MODULUS:
            raise ValueError(f"p^cap = {self.p}^{self.cap} exceeds 2^63")
        object.__setattr__(self, "modulus", modulus)

    def elt(self, value: int) -> "RingElt":
        return RingElt(value % self.modulus, self)

    def valuation(self, value: int) -> int:
        return valuation(value, self.p, self.cap)

    def unit_inverse(self, u: int) -> int:
        return pow(u, -1, self.modulus)


@dataclass(frozen=True)
class RingElt:
    value: int
    ctx: RingCtx

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.modulus:
            raise ValueError(f"{self.value} not reduced mod {self.ctx.modulus}")

    @property
    def valuation(self) -> int:
        return self.ctx.valuation(self.value)

    def __add__(self, other: "RingElt") -> "RingElt":
        return self.ctx.elt(self.value + other.value)

    def __sub__(self, other: "RingElt") -> "RingElt":
        return self.ctx.elt(self.value - other.value)

    def __mul__(self, other: "RingElt") -> "RingElt":
        return self.ctx.elt(self.value * other.value)

    def __neg__(self) -> "RingElt":
        return self.ctx.elt(-self.value)


def valuation(value: int, p: int, cap: int) -> int:
    """Largest e <= cap with p^e dividing value (mod p^cap); cap for zero."""
    value %= p**cap
    if value == 0:
        return cap
    e = 0
    while value % p == 0:
        value //= p
        e += 1
    return e


@dataclass(frozen=True)
class SnfResult:
    """``left @ input @ right`` is diagonal with entries p^diag_valuations[i]."""

    ctx: RingCtx
    diag_valuations: List[int]
    left: Matrix
    right: Matrix

    def cokernel_type(self, nrows: int) -> List[int]:
        """Invariant exponents of (Z/p^cap)^nrows modulo the column span."""
        exps = [v for v in self.diag_valuations if v > 0]
        exps += [self.ctx.cap] * (nrows - len(self.diag_valuations))
        return sorted(exps, reverse=True)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], modulus: int) -> Matrix:
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(inner)) % modulus for j in range(ncols)]
        for row in a
    ]


def snf(m: Sequence[Sequence[int]], ctx: RingCtx, *, transforms: bool = True) -> SnfResult:
    """Smith normal form of ``m`` over Z/p^cap.

    The pivot is the entry of minimal valuation in the remaining block,
    topmost then leftmost on ties, scaled to an exact power of p.
    With ``transforms=False`` the left/right matrices are returned empty.
    """
    p, cap, mod = ctx.p, ctx.cap, ctx.modulus
    a = [[x % mod for x in row] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    left = identity(nrows) if transforms else []
    right = identity(ncols) if transforms else []
    pows = [p**e for e in range(cap + 1)]
    diag: List[int] = []

    for k in range(min(nrows, ncols)):
        best_v, bi, bj = cap, -1, -1
        for i in range(k, nrows):
            row = a[i]
            for j in range(k, ncols):
                x = row[j]
                if x:
                    v = 0
                    while x % p == 0:
                        x //= p
                        v += 1
                    if v < best_v:
                        best_v, bi, bj = v, i, j
                        if v == 0:
                            break
            if best_v == 0:
                break
        if bi < 0:
            diag.extend([cap] * (min(nrows, ncols) - k))
            break
        v = best_v
        if bi != k:
            a[k], a[bi] = a[bi], a[k]
            if transforms:
                left[k], left[bi] = left[bi], left[k]
        if bj != k:
            for row in a:
                row[k], row[bj] = row[bj], row[k]
            if transforms:
                for row in right:
                    row[k], row[bj] = row[bj], row[k]
        pk = pows[v]
        # pivot = p^v * u with u a unit; rescale the row so the pivot is p^v
        u = a[k][k] // pk
        uinv = pow(u, -1, mod)
        if uinv != 1:
            a[k] = [x * uinv % mod for x in a[k]]
            if transforms:
                left[k] = [x * uinv % mod for x in left[k]]
        prow = a[k]
        for i in range(k + 1, nrows):
            x = a[i][k]
            if x:
                c = x // pk
                a[i] = [(y - c * z) % mod for y, z in zip(a[i], prow)]
                if transforms:
                    left[i] = [(y - c * z) % mod for y, z in zip(left[i], left[k])]
        # column k is now zero off the pivot, so clearing row k is local
        for j in range(k + 1, ncols):
            x = prow[j]
            if x:
                c = x // pk
                prow[j] = 0
                if transforms:
                    for row in right:
                        row[j] = (row[j] - c * row[k]) % mod
        diag.append(v)
    return SnfResult(ctx, diag, left, right)


def det_mod(m: Sequence[Sequence[int]], modulus: int) -> int:
    """Determinant over Z/modulus (Bareiss elimination over Z, then reduced)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] % modulus

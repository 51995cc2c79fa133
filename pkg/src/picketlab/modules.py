"""Finite-length modules over Z/p^N in standard coordinates.

A module of type ``(e_1, ..., e_r)`` is Z/p^e_1 + ... + Z/p^e_r; an element is
an integer vector with entry i read mod p^e_i.  Exponent lists need not be
sorted here (Hom groups use this machinery too), only positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .partitions import Partition
from .ring_zpn import RingCtx, snf

Vector = List[int]


def _ctx(p: int, exps: Sequence[int]) -> RingCtx:
    return RingCtx(p, max([1, *exps]))


def reduce_vector(p: int, exps: Sequence[int], x: Sequence[int]) -> Vector:
    return [v % p**e for v, e in zip(x, exps)]


@dataclass(frozen=True)
class QuotientMap:
    """Surjection from an ambient group onto Z/p^type_1 + ... in standard coordinates."""

    p: int
    source_exps: Tuple[int, ...]
    type: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __call__(self, x: Sequence[int]) -> Vector:
        p = self.p
        return [sum(a * b for a, b in zip(row, x)) % p**e for row, e in zip(self.rows, self.type)]

    def kills(self, x: Sequence[int]) -> bool:
        return not any(self(x))

    @property
    def length(self) -> int:
        return sum(self.type)


def quotient(p: int, exps: Sequence[int], gens: Sequence[Sequence[int]]) -> QuotientMap:
    """The quotient of Z/p^exps by the subgroup spanned by ``gens``."""
    exps = tuple(exps)
    r = len(exps)
    if r == 0:
        return QuotientMap(p, exps, Partition(), ())
    ctx = _ctx(p, exps)
    rel = [[p**exps[i] if j == i else 0 for j in range(r)] + [g[i] for g in gens] for i in range(r)]
    res = snf(rel, ctx)
    pairs = [(d, tuple(x % p**d for x in res.left[i])) for i, d in enumerate(res.diag_valuations) if d > 0]
    pairs.sort(key=lambda t: -t[0])
    return QuotientMap(p, exps, Partition(d for d, _ in pairs), tuple(row for _, row in pairs))


def subgroup_length(p: int, exps: Sequence[int], gens: Sequence[Sequence[int]]) -> int:
    return sum(exps) - quotient(p, exps, gens).length


def subgroup_type(p: int, exps: Sequence[int], gens: Sequence[Sequence[int]]) -> Partition:
    """Isomorphism type of the subgroup spanned by ``gens``.

    The subgroup is the image of Z^k -> Z/p^exps; its type comes from the SNF
    of the generator matrix stacked against the ambient relations, read as a
    presentation of the subgroup itself: the kernel of Z^k -> ambient.
    """
    if not gens:
        return Partition()
    k = len(gens)
    kern = kernel(p, [[g[i] for g in gens] for i in range(len(exps))], exps, [max([1, *exps])] * k)
    return quotient(p, [max([1, *exps])] * k, kern).type


def kernel(
    p: int,
    matrix: Sequence[Sequence[int]],
    target_exps: Sequence[int],
    source_exps: Sequence[int],
) -> List[Vector]:
    """Generators of the kernel of x -> matrix @ x from Z/p^source to Z/p^target.

    Row k of ``matrix`` is read mod p^target_exps[k]; the map must be well
    defined on the source (the caller guarantees it).
    """
    n = len(source_exps)
    if n == 0:
        return []
    N = max([1, *target_exps, *source_exps])
    rows = [
        [x * p ** (N - c) for x in row]
        for row, c in zip(matrix, target_exps)
        if c > 0
    ]
    if not rows:
        gens = [[int(i == j) for j in range(n)] for i in range(n)]
    else:
        res = snf(rows, RingCtx(p, N))
        V = res.right
        diag = res.diag_valuations
        gens = []
        for i in range(n):
            d = diag[i] if i < len(diag) else N
            if d == 0:
                continue
            scale = p ** (N - d)
            gens.append([V[j][i] * scale for j in range(n)])
    out = []
    for g in gens:
        g = reduce_vector(p, source_exps, g)
        if any(g):
            out.append(g)
    return out


def annihilator(p: int, exps: Sequence[int], gens: Sequence[Sequence[int]]) -> List[Vector]:
    """Generators of ann(A) under the pairing <e_i, e_j> = delta_ij p^(N - e_i)."""
    if not exps:
        return []
    N = max(exps)
    rows = [[a[i] * p ** (N - e) for i, e in enumerate(exps)] for a in gens]
    return kernel(p, rows, [N] * len(rows), exps)


def pairing(p: int, exps: Sequence[int], x: Sequence[int], y: Sequence[int]) -> int:
    N = max([1, *exps])
    return sum(a * b * p ** (N - e) for a, b, e in zip(x, y, exps)) % p**N


@dataclass(frozen=True)
class FLModule:
    p: int
    type: Partition

    def __post_init__(self):
        object.__setattr__(self, "type", Partition(self.type))

    @property
    def ctx(self) -> RingCtx:
        return _ctx(self.p, self.type)

    @property
    def length(self) -> int:
        return self.type.size

    @property
    def loewy_length(self) -> int:
        return self.type.part(1)


@dataclass(frozen=True)
class Presentation:
    ambient: FLModule
    relations: Tuple[Tuple[int, ...], ...] = ()


def type_of_quotient(pr: Presentation) -> Tuple[Partition, QuotientMap]:
    q = quotient(pr.ambient.p, pr.ambient.type, pr.relations)
    return q.type, q


def hom_length(X: Sequence[int], m: int) -> int:
    """len Hom_R(M(X), P^m)."""
    return sum(min(x, m) for x in X)


def row_via_homs(X: Sequence[int], m: int) -> int:
    """The m-th row length of X computed from Hom lengths into cyclic modules."""
    return hom_length(X, m) - hom_length(X, m - 1)


def dual_coordinates(X: FLModule) -> FLModule:
    """The dual module, identified with X itself through ``pairing``."""
    return FLModule(X.p, X.type)

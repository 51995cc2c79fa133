"""Embeddings (A in B) given by generators of A in standard coordinates of B."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from . import modules
from .lr_tableaux import IndexOutOfRange, LRTableau, validate
from .modules import QuotientMap
from .partitions import Partition
from .ring_zpn import is_prime


class EntryOutOfRange(ValueError):
    pass


class NotSemisimpleSubmodule(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    """The submodule A of B = M(beta) spanned by the rows of ``gens``.

    Derived data (alpha, gamma, the tableau) is computed lazily; the cache is
    a plain attribute write of a pure result, so concurrent first access just
    repeats the work.
    """

    p: int
    beta: Partition
    gens: Tuple[Tuple[int, ...], ...] = ()

    @property
    def exps(self) -> Tuple[int, ...]:
        return tuple(self.beta)

    @cached_property
    def quotient_map(self) -> QuotientMap:
        return modules.quotient(self.p, self.beta, self.gens)

    @cached_property
    def gamma(self) -> Partition:
        return self.quotient_map.type

    @cached_property
    def alpha(self) -> Partition:
        return modules.subgroup_type(self.p, self.beta, self.gens)

    @property
    def type(self) -> Tuple[Partition, Partition, Partition]:
        return self.alpha, self.beta, self.gamma

    def scaled_gens(self, k: int) -> List[List[int]]:
        """Generators of p^k A."""
        pk = self.p**k
        return [modules.reduce_vector(self.p, self.beta, [pk * x for x in g]) for g in self.gens]

    def quotient_by_power(self, k: int) -> QuotientMap:
        """The quotient map B -> B / p^k A."""
        if k == 0:
            return self.quotient_map
        return modules.quotient(self.p, self.beta, self.scaled_gens(k))

    @cached_property
    def tableau(self) -> LRTableau:
        return lr_tableau_of(self)

    def contains(self, x: Sequence[int]) -> bool:
        return self.quotient_map.kills(x)

    def in_s(self, n: int) -> bool:
        """True iff p^n B = 0."""
        return self.beta.part(1) <= n

    def to_json(self) -> dict:
        return {"p": self.p, "beta": list(self.beta), "generators": [list(g) for g in self.gens]}


def make_embedding(p: int, beta: Sequence[int], gens: Sequence[Sequence[int]] = ()) -> Embedding:
    """Validate and canonicalize; entries may be given in (-p^beta_i, p^beta_i)."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    beta = Partition(beta)
    rows = []
    for g in gens:
        if len(g) != len(beta):
            raise EntryOutOfRange(f"generator {list(g)} has {len(g)} coordinates, beta has {len(beta)}")
        for x, e in zip(g, beta):
            if not -(p**e) < x < p**e:
                raise EntryOutOfRange(f"entry {x} not representable mod {p}^{e}")
        rows.append(tuple(modules.reduce_vector(p, beta, g)))
    return Embedding(p, beta, tuple(rows))


def embedding_from_json(data: dict) -> Embedding:
    return make_embedding(int(data["p"]), data["beta"], data.get("generators", []))


@dataclass(frozen=True, order=True)
class Picket:
    """P_ell^m = ((p^(m-ell)) in R/(p^m)); m = 0 is the zero object."""

    ell: int
    m: int

    def __post_init__(self):
        if not 0 <= self.ell <= self.m:
            raise IndexOutOfRange(f"picket needs 0 <= ell <= m, got ({self.ell}, {self.m})")

    def embedding(self, p: int) -> Embedding:
        if self.m == 0:
            return Embedding(p, Partition())
        gens = ((p ** (self.m - self.ell) % p**self.m,),) if self.ell else ()
        return Embedding(p, Partition((self.m,)), gens)

    def __str__(self):
        return f"P_{self.ell}^{self.m}"


def picket(p: int, ell: int, m: int) -> Embedding:
    return Picket(ell, m).embedding(p)


def lr_tableau_of(M: Embedding) -> LRTableau:
    s = M.alpha.part(1)
    chain = [M.quotient_by_power(k).type for k in range(s + 1)]
    return validate(chain)


def subfactor(M: Embedding, ell: int) -> Embedding:
    """(p^(ell-1) A / p^ell A in B / p^ell A) in standard coordinates of the quotient."""
    s = M.alpha.part(1)
    if not 1 <= ell <= s:
        raise IndexOutOfRange(f"subfactor index {ell} outside 1..{s}")
    q = M.quotient_by_power(ell)
    gens = [q(g) for g in M.scaled_gens(ell - 1)]
    return Embedding(M.p, q.type, tuple(tuple(g) for g in gens if any(g)))


def decompose_s1(M: Embedding) -> Counter:
    """Picket decomposition of an object with pA = 0, as a Counter of Pickets."""
    if any(any(g) for g in M.scaled_gens(1)):
        raise NotSemisimpleSubmodule("p A != 0")
    beta, gamma = M.beta, M.gamma
    return Counter(Picket(b - gamma.part(i + 1), b) for i, b in enumerate(beta))


def picket_multiplicity(M: Embedding, ell: int, m: int) -> int:
    return decompose_s1(M)[Picket(ell, m)]


def dual(M: Embedding) -> Embedding:
    """(ann A in B*) with B* identified with B via modules.pairing."""
    gens = modules.annihilator(M.p, M.beta, M.gens)
    return Embedding(M.p, M.beta, tuple(tuple(g) for g in gens))


def construct_c(n: int, ell: int, m: int, p: int = 2) -> Embedding:
    """The kernel embedding (incl, -can): P^(n+ell-m) -> P^n + P^(ell-1); P_n^n if ell = m."""
    if not 1 <= ell <= m <= n:
        raise IndexOutOfRange(f"C needs 1 <= ell <= m <= n, got ({n}, {ell}, {m})")
    if ell == m:
        return picket(p, n, n)
    if ell == 1:
        return make_embedding(p, (n,), [(p ** (m - 1),)])
    return make_embedding(p, (n, ell - 1), [(p ** (m - ell), -1)])


def construct_a(n: int, q: int, m: int, p: int = 2) -> Embedding:
    if not 0 <= q < m <= n:
        raise IndexOutOfRange(f"A needs 0 <= q < m <= n, got ({n}, {q}, {m})")
    if q == 0:
        return picket(p, 0, n)
    return dual(construct_c(n, m - q, m, p))


@dataclass(frozen=True)
class PicketMorphism:
    """A map between direct sums of pickets.

    ``matrix[j][i]`` is the multiplier R/p^(m_i) -> R/p^(m_j) from source
    summand i to target summand j.  Zero summands (m = 0) are dropped.
    """

    kind: str
    indices: Tuple[int, int]
    source: Tuple[Picket, ...]
    target: Tuple[Picket, ...]
    matrix: Tuple[Tuple[int, ...], ...] = field(repr=False)


def _morphism(kind, indices, source, target, matrix) -> PicketMorphism:
    keep_s = [i for i, P in enumerate(source) if P.m > 0]
    keep_t = [j for j, P in enumerate(target) if P.m > 0]
    return PicketMorphism(
        kind,
        indices,
        tuple(source[i] for i in keep_s),
        tuple(target[j] for j in keep_t),
        tuple(tuple(matrix[j][i] for i in keep_s) for j in keep_t),
    )


def make_g(ell: int, m: int, p: int = 2) -> PicketMorphism:
    """The sink map g_ell^m into P_ell^m; every component is a picket inclusion."""
    if not 0 <= ell <= m or m < 1:
        raise IndexOutOfRange(f"g needs 0 <= ell <= m, m >= 1, got ({ell}, {m})")
    if ell == m:
        return _morphism("g", (ell, m), (Picket(m - 1, m),), (Picket(m, m),), ((1,),))
    if ell == 0:
        return _morphism("g", (ell, m), (Picket(0, m - 1),), (Picket(0, m),), ((p,),))
    return _morphism("g", (ell, m), (Picket(ell - 1, m), Picket(ell, m - 1)), (Picket(ell, m),), ((1, p),))


def make_h(q: int, m: int, p: int = 2) -> PicketMorphism:
    """The map h_q^m out of P_q^m; components are canonical projections."""
    if not 0 <= q <= m or m < 1:
        raise IndexOutOfRange(f"h needs 0 <= q <= m, m >= 1, got ({q}, {m})")
    if q == 0:
        return _morphism("h", (q, m), (Picket(0, m),), (Picket(1, m),), ((1,),))
    if q == m:
        return _morphism("h", (q, m), (Picket(m, m),), (Picket(m - 1, m - 1),), ((1,),))
    return _morphism("h", (q, m), (Picket(q, m),), (Picket(q - 1, m - 1), Picket(q + 1, m)), ((1,), (1,)))


def direct_sum(parts: Sequence[Embedding]) -> Embedding:
    """Direct sum with coordinates sorted into partition order."""
    if not parts:
        raise ValueError("empty direct sum")
    p = parts[0].p
    coords: List[Tuple[int, int, int]] = []  # (exponent, summand, index)
    for s, E in enumerate(parts):
        coords += [(e, s, i) for i, e in enumerate(E.beta)]
    order = sorted(coords, key=lambda t: (-t[0], t[1], t[2]))
    pos: Dict[Tuple[int, int], int] = {(s, i): k for k, (_, s, i) in enumerate(order)}
    gens = []
    for s, E in enumerate(parts):
        for g in E.gens:
            v = [0] * len(order)
            for i, x in enumerate(g):
                v[pos[(s, i)]] = x
            gens.append(tuple(v))
    return Embedding(p, Partition(e for e, _, _ in order), tuple(gens))

"""Hom spaces between embeddings and the quotients through the maps g and h.

A morphism M -> N is a matrix F (rows: coordinates of N's ambient, columns:
coordinates of M's ambient) with F[j][i] read mod p^beta'_j.  It must be
R-linear and carry the submodule of M into the submodule of N.  All Hom
groups for a fixed pair live in the ambient group G = prod_{j,i} Z/p^beta'_j
of such matrices, flattened row-major; lengths and memberships are computed
there.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import modules
from .embeddings import (
    Embedding,
    PicketMorphism,
    construct_a,
    construct_c,
    dual,
    make_g,
    make_h,
    picket,
    picket_multiplicity,
    subfactor,
)
from .lr_tableaux import IndexOutOfRange, count_boxes
from .modules import QuotientMap, hom_length

Morphism = Tuple[Tuple[int, ...], ...]

#: exhaustive coset enumeration up to this many cosets, sampling beyond
COSET_CAP = 2**10


class RouteDisagreement(AssertionError):
    """Two computations of the same number differ; always an implementation bug."""


class NotInSn(ValueError):
    pass


def _flat(F: Sequence[Sequence[int]]) -> List[int]:
    return [x for row in F for x in row]


@dataclass(frozen=True)
class HomSpace:
    source: Embedding
    target: Embedding
    gens: Tuple[Morphism, ...]

    @property
    def ambient_exps(self) -> Tuple[int, ...]:
        r = len(self.source.beta)
        return tuple(e for e in self.target.beta for _ in range(r))

    def flat(self, F: Sequence[Sequence[int]]) -> List[int]:
        return _flat(F)

    @cached_property
    def quotient_map(self) -> QuotientMap:
        return modules.quotient(self.source.p, self.ambient_exps, [_flat(F) for F in self.gens])

    @property
    def length(self) -> int:
        return sum(self.ambient_exps) - self.quotient_map.length

    def contains(self, F: Sequence[Sequence[int]]) -> bool:
        return self.quotient_map.kills(_flat(F))

    def subgroup(self, gens: Sequence[Sequence[Sequence[int]]]) -> "HomSpace":
        return HomSpace(self.source, self.target, tuple(_canon(self.target, F) for F in gens))


def _canon(target: Embedding, F: Sequence[Sequence[int]]) -> Morphism:
    p = target.p
    return tuple(tuple(x % p**e for x in row) for row, e in zip(F, target.beta))


def compose(second: Sequence[Sequence[int]], first: Sequence[Sequence[int]], target: Embedding) -> Morphism:
    """second . first, reduced in the coordinates of ``target``."""
    inner = len(first)
    ncols = len(first[0]) if first else 0
    out = [
        [sum(row[k] * first[k][i] for k in range(inner)) for i in range(ncols)]
        for row in second
    ]
    return _canon(target, out)


@lru_cache(maxsize=8192)
def hom_space(M: Embedding, N: Embedding) -> HomSpace:
    """Hom_S(M, N) as the solution set of one linear system over Z/p^cap.

    Hom_R(B, B') is parametrised by t_ij mod p^min(beta_i, beta'_j) via
    F[j][i] = p^max(0, beta'_j - beta_i) t_ij; the submodule condition
    F a in A' becomes: the quotient map of N kills F a, for each generator a.
    """
    p = M.p
    beta, tbeta = M.beta, N.beta
    r, rt = len(beta), len(tbeta)
    pairs = [(j, i) for j in range(rt) for i in range(r)]
    scale = {(j, i): p ** max(0, tbeta[j] - beta[i]) for j, i in pairs}
    src_exps = [min(beta[i], tbeta[j]) for j, i in pairs]
    qN = N.quotient_map
    rows, texps = [], []
    for a in M.gens:
        for qrow, c in zip(qN.rows, qN.type):
            rows.append([qrow[j] * scale[(j, i)] * a[i] for j, i in pairs])
            texps.append(c)
    sols = modules.kernel(p, rows, texps, src_exps)
    gens = []
    for t in sols:
        F = [[0] * r for _ in range(rt)]
        for (j, i), x in zip(pairs, t):
            F[j][i] = x * scale[(j, i)]
        F = _canon(N, F)
        if any(any(row) for row in F):
            gens.append(F)
    return HomSpace(M, N, tuple(gens))


def hom_to_picket(M: Embedding, ell: int, m: int) -> HomSpace:
    """Hom_S(M, P_ell^m) = Hom_R(B / p^ell A, P^m), pulled back to B-coordinates."""
    if not 0 <= ell <= m:
        raise IndexOutOfRange(f"need 0 <= ell <= m, got ({ell}, {m})")
    target = picket(M.p, ell, m)
    if m == 0:
        return HomSpace(M, target, ())
    p = M.p
    q = M.quotient_by_power(ell)
    gens = []
    for row, x in zip(q.rows, q.type):
        # e_j of M(X) -> p^max(0, m - x) in P^m, precomposed with the quotient map
        c = p ** max(0, m - x)
        gens.append(((tuple(c * v % p**m for v in row)),))
    return HomSpace(M, target, tuple(F for F in gens if any(F[0])))


def hom_from_picket(q: int, m: int, M: Embedding) -> HomSpace:
    """Hom_S(P_q^m, M): images b with p^m b = 0 and p^(m-q) b in A."""
    if not 0 <= q <= m:
        raise IndexOutOfRange(f"need 0 <= q <= m, got ({q}, {m})")
    return hom_space(picket(M.p, q, m), M)


def _image_into(morph: PicketMorphism, M: Embedding) -> List[Morphism]:
    """Generators of Im Hom(M, morph) inside Hom(M, target); target is one picket."""
    (T,) = morph.target
    target = T.embedding(M.p)
    out = []
    for S, mult in zip(morph.source, morph.matrix[0]):
        for F in hom_space(M, S.embedding(M.p)).gens:
            out.append(_canon(target, [[mult * x for x in F[0]]]))
    return out


def _image_from(morph: PicketMorphism, M: Embedding) -> List[Morphism]:
    """Generators of Im Hom(morph, M) inside Hom(source, M); source is one picket."""
    (S,) = morph.source
    out = []
    for T, (mult,) in zip(morph.target, morph.matrix):
        for F in hom_space(T.embedding(M.p), M).gens:
            out.append(_canon(M, [[mult * row[0]] for row in F]))
    return out


@dataclass
class FactorQuotient:
    """H / I for a Hom group H and the subgroup I of maps factoring through a fixed map."""

    hom: HomSpace
    image: HomSpace

    @property
    def dim(self) -> int:
        return self.hom.length - self.image.length

    def check(self) -> None:
        """I is inside H and p H is inside I (so the quotient is a k-vector space)."""
        for F in self.image.gens:
            if not self.hom.contains(F):
                raise RouteDisagreement("factoring map outside the Hom group")
        p = self.hom.source.p
        for F in self.hom.gens:
            if not self.image.contains([[p * x for x in row] for row in F]):
                raise RouteDisagreement("quotient is not elementary abelian")

    def basis(self) -> List[Morphism]:
        """Representatives of an F_p-basis of H / I."""
        chosen: List[Morphism] = []
        current = self.image
        for F in self.hom.gens:
            if current.contains(F):
                continue
            chosen.append(F)
            current = current.subgroup(list(current.gens) + [F])
            if len(chosen) == self.dim:
                break
        return chosen

    def cosets(self, cap: int = COSET_CAP, seed: int = 0) -> Tuple[List[Morphism], bool]:
        """Nonzero coset representatives; (reps, exhaustive)."""
        basis = self.basis()
        p = self.hom.source.p
        d = len(basis)
        if d == 0:
            return [], True
        if p**d <= cap:
            coeffs = [c for c in itertools.product(range(p), repeat=d) if any(c)]
            exhaustive = True
        else:
            rng = random.Random(seed)
            coeffs = []
            while len(coeffs) < cap:
                c = tuple(rng.randrange(p) for _ in range(d))
                if any(c):
                    coeffs.append(c)
            exhaustive = False
        reps = []
        for c in coeffs:
            acc = [[0] * len(basis[0][0]) for _ in basis[0]]
            for coef, F in zip(c, basis):
                for row_a, row_f in zip(acc, F):
                    for k, x in enumerate(row_f):
                        row_a[k] += coef * x
            reps.append(_canon(self.hom.target, acc))
        return reps, exhaustive


def g_quotient(M: Embedding, ell: int, m: int) -> FactorQuotient:
    """Hom_S(M, P_ell^m) / Im Hom_S(M, g_ell^m), both groups solved directly."""
    H = hom_space(M, picket(M.p, ell, m))
    image = H.subgroup(_image_into(make_g(ell, m, M.p), M))
    fq = FactorQuotient(H, image)
    fq.check()
    return fq


def h_quotient(q: int, m: int, M: Embedding) -> FactorQuotient:
    """Hom_S(P_q^m, M) / Im Hom_S(h_q^m, M)."""
    H = hom_from_picket(q, m, M)
    image = H.subgroup(_image_from(make_h(q, m, M.p), M))
    fq = FactorQuotient(H, image)
    fq.check()
    return fq


@dataclass
class QuotientReport:
    ell: int
    m: int
    dim: int
    routes: Dict[str, int] = field(default_factory=dict)


def _formula_star(M: Embedding, ell: int, m: int) -> int:
    X = M.quotient_by_power(ell).type
    Y = M.quotient_by_power(ell - 1).type
    if ell == m:
        return hom_length(X, m) - hom_length(Y, m)
    return hom_length(X, m) - hom_length(X, m - 1) - hom_length(Y, m) + hom_length(Y, m - 1)


def tableau_count(M: Embedding, ell: int, m: int) -> int:
    t = M.tableau
    return count_boxes(t, ell, m) if ell <= t.s else 0


def subfactor_count(M: Embedding, ell: int, m: int) -> int:
    if ell > M.alpha.part(1):
        q = M.quotient_by_power(ell)
        return picket_multiplicity(Embedding(M.p, q.type), 1, m)
    return picket_multiplicity(subfactor(M, ell), 1, m)


TO_PICKET_ROUTES = {
    "tableau": tableau_count,
    "formula": _formula_star,
    "subfactor": subfactor_count,
    "oracle": lambda M, ell, m: g_quotient(M, ell, m).dim,
}


def _agree(ell, m, values: Dict[str, int], who: str) -> QuotientReport:
    distinct = set(values.values())
    if len(distinct) != 1:
        raise RouteDisagreement(f"{who} at (ell, m) = ({ell}, {m}): {values}")
    return QuotientReport(ell, m, distinct.pop(), values)


def quotient_dim_to_picket(M: Embedding, ell: int, m: int, routes: Optional[Sequence[str]] = None) -> QuotientReport:
    """dim Hom(M, P_ell^m) / Im Hom(M, g_ell^m), by every requested route."""
    if not 1 <= ell <= m:
        raise IndexOutOfRange(f"need 1 <= ell <= m, got ({ell}, {m})")
    names = routes or list(TO_PICKET_ROUTES)
    return _agree(ell, m, {r: TO_PICKET_ROUTES[r](M, ell, m) for r in names}, "to-picket routes")


def quotient_dim_from_picket(M: Embedding, q: int, m: int, routes: Optional[Sequence[str]] = None) -> QuotientReport:
    """dim Hom(P_q^m, M) / Im Hom(h_q^m, M); the formula route reads the dual tableau."""
    if not 0 <= q <= m or m < 1:
        raise IndexOutOfRange(f"need 0 <= q <= m, got ({q}, {m})")
    names = list(routes or ("formula", "oracle"))
    values = {}
    if "oracle" in names:
        values["oracle"] = h_quotient(q, m, M).dim
    if "formula" in names and q < m:
        D = dual(M)
        values["formula"] = tableau_count(D, m - q, m)
    return _agree(q, m, values, "from-picket routes")


@dataclass
class PairingReport:
    side: str
    n: int
    indices: Tuple[int, int]
    target_dim: int
    quotient_dim: int
    cosets_checked: int
    exhaustive: bool
    failures: List[Morphism] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return self.quotient_dim == 0

    @property
    def ok(self) -> bool:
        return self.target_dim == 1 and not self.failures


def pairing_left(n: int, ell: int, m: int, M: Embedding) -> PairingReport:
    """Every nonzero [r] in Hom(M, P)/Im g pairs nontrivially with some C -> M."""
    if not M.in_s(n):
        raise NotInSn(f"p^{n} B != 0 for beta = {list(M.beta)}")
    if not 1 <= ell <= m <= n:
        raise IndexOutOfRange(f"need 1 <= ell <= m <= n, got ({ell}, {m}, {n})")
    C = construct_c(n, ell, m, M.p)
    target = g_quotient(C, ell, m)
    left = g_quotient(M, ell, m)
    maps_in = hom_space(C, M).gens
    P = target.hom.target
    reps, exhaustive = left.cosets()
    failures = []
    for r in reps:
        if not any(not target.image.contains(compose(r, qm, P)) for qm in maps_in):
            failures.append(r)
    return PairingReport("left", n, (ell, m), target.dim, left.dim, len(reps), exhaustive, failures)


def pairing_right(n: int, q: int, m: int, M: Embedding) -> PairingReport:
    """Every nonzero [t] in Hom(P_q^m, M)/Im h pairs nontrivially with some M -> A."""
    if not M.in_s(n):
        raise NotInSn(f"p^{n} B != 0 for beta = {list(M.beta)}")
    if not 0 <= q < m <= n:
        raise IndexOutOfRange(f"need 0 <= q < m <= n, got ({q}, {m}, {n})")
    A = construct_a(n, q, m, M.p)
    target = h_quotient(q, m, A)
    right = h_quotient(q, m, M)
    maps_out = hom_space(M, A).gens
    reps, exhaustive = right.cosets()
    failures = []
    for t in reps:
        if not any(not target.image.contains(compose(f, t, A)) for f in maps_out):
            failures.append(t)
    return PairingReport("right", n, (q, m), target.dim, right.dim, len(reps), exhaustive, failures)


def proper_inclusion_image(M: Embedding, ell: int, m: int) -> HomSpace:
    """Maps M -> P_ell^m factoring through some proper picket inclusion P_a^b -> P_ell^m."""
    p = M.p
    H = hom_space(M, picket(p, ell, m))
    gens = []
    for b in range(1, m + 1):
        for a in range(0, min(ell, b) + 1):
            if (a, b) == (ell, m) or m - a > b:
                continue
            for F in hom_space(M, picket(p, a, b)).gens:
                gens.append([[p ** (m - b) * x for x in F[0]]])
    return H.subgroup(gens)


def to_picket_rows(M: Embedding, max_m: Optional[int] = None) -> List[QuotientReport]:
    """All 1 <= ell <= m <= max_m (default beta_1 + 1)."""
    if max_m is None:
        max_m = M.beta.part(1) + 1
    return [quotient_dim_to_picket(M, ell, m) for m in range(1, max_m + 1) for ell in range(1, m + 1)]


def from_picket_rows(M: Embedding, max_m: Optional[int] = None) -> List[QuotientReport]:
    """Rows indexed by (ell, m) with q = m - ell, matching to_picket_rows of the dual."""
    if max_m is None:
        max_m = M.beta.part(1) + 1
    rows = []
    for m in range(1, max_m + 1):
        for ell in range(1, m + 1):
            rep = quotient_dim_from_picket(M, m - ell, m)
            rows.append(QuotientReport(ell, m, rep.dim, rep.routes))
    return rows


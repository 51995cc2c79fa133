"""Test corpora: every submodule of small ambient modules, and seeded random embeddings.

Random entries come from a splitmix64 stream so files are reproducible across
platforms and Python versions: state += 0x9E3779B97F4A7C15, then the usual
xor-shift-multiply finalizer.  An entry mod p^e is drawn by rejection
sampling on the 64-bit output, so it is exactly uniform.
"""

from __future__ import annotations

import itertools
import json
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .embeddings import Embedding, make_embedding
from .partitions import Partition, partitions_up_to

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next()
            if x < limit:
                return x % n


def random_embedding(p: int, beta: Sequence[int], num_gens: int, seed: int) -> Embedding:
    beta = Partition(beta)
    rng = SplitMix64(seed)
    gens = [[rng.below(p**e) for e in beta] for _ in range(num_gens)]
    return make_embedding(p, beta, gens)


def random_corpus(count: int, seed: int, primes=(2, 3), max_size: int = 12, max_gens: int = 3) -> Iterator[Tuple[int, Embedding]]:
    """``count`` embeddings; item i is determined by (seed, i) alone."""
    shapes = [b for b in partitions_up_to(max_size) if b]
    for i in range(count):
        rng = SplitMix64(seed ^ (i * 0xD1B54A32D192ED03 & _MASK))
        p = primes[rng.below(len(primes))]
        beta = shapes[rng.below(len(shapes))]
        k = rng.below(max_gens + 1)
        yield i, random_embedding(p, beta, k, rng.next())


def _elements(p: int, beta: Sequence[int]) -> List[Tuple[int, ...]]:
    return list(itertools.product(*(range(p**e) for e in beta)))


def _closure(p: int, beta: Sequence[int], gens: Sequence[Sequence[int]]) -> FrozenSet[Tuple[int, ...]]:
    mods = [p**e for e in beta]
    zero = tuple(0 for _ in beta)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % n for a, b, n in zip(x, g, mods))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _extend(S: FrozenSet, x: Tuple[int, ...], mods: Sequence[int]) -> FrozenSet:
    """<S, x> for a subgroup S: the union of the cosets S + kx."""
    out = set(S)
    y = x
    while y not in S:
        out.update(tuple((a + b) % n for a, b, n in zip(s, y, mods)) for s in S)
        y = tuple((a + b) % n for a, b, n in zip(y, x, mods))
    return frozenset(out)


def all_submodules(p: int, beta: Sequence[int]) -> List[Tuple[Tuple[int, ...], ...]]:
    """Generator tuples for every subgroup of M(beta), one per subgroup.

    Breadth-first over subgroups: each new subgroup is a known one with one
    extra element adjoined.
    """
    mods = [p**e for e in beta]
    elements = _elements(p, beta)
    found: Dict[FrozenSet, Tuple[Tuple[int, ...], ...]] = {_closure(p, beta, []): ()}
    frontier = list(found.items())
    while frontier:
        nxt = []
        for S, gens in frontier:
            for x in elements:
                if x in S:
                    continue
                T = _extend(S, x, mods)
                if T not in found:
                    found[T] = gens + (x,)
                    nxt.append((T, found[T]))
        frontier = nxt
    return sorted(found.values(), key=lambda g: (len(g), g))


def exhaustive_corpus(p: int, max_size: int, max_part: int = 0) -> Iterator[Embedding]:
    """Every (A in B) with |beta| <= max_size (and beta_1 <= max_part if given)."""
    for beta in partitions_up_to(max_size):
        if not beta or (max_part and beta[0] > max_part):
            continue
        for gens in all_submodules(p, beta):
            yield Embedding(p, beta, gens)


def worked_example_embedding() -> Embedding:
    """The shipped fixture in S(5) with tableau [(3,1),(3,2,1),(4,3,1),(5,3,1)].

    Found by ``random_embedding(2, (5, 3, 1), 2, seed=375)``.
    """
    from importlib.resources import files

    data = json.loads(files("picketlab").joinpath("data/worked_example.json").read_text())
    return make_embedding(data["p"], data["beta"], data["generators"])

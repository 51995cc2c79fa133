import itertools
import random

import pytest

from oracles import annihilator_set, closure, group_type_of_quotient, subgroup_length
from picketlab import modules
from picketlab.modules import FLModule, Presentation, hom_length, row_via_homs, type_of_quotient
from picketlab.partitions import Partition, partitions_up_to, transpose


def test_type_of_quotient_examples():
    amb = FLModule(2, (3, 2))
    assert type_of_quotient(Presentation(amb, ((2, 1),)))[0] == Partition((3,))
    assert type_of_quotient(Presentation(amb, ((4, 2),)))[0] == Partition((3, 1))
    assert type_of_quotient(Presentation(FLModule(3, (4,))))[0] == Partition((4,))


def test_quotient_map_is_surjective_and_kills_relations():
    t, q = type_of_quotient(Presentation(FLModule(2, (3, 2)), ((2, 1),)))
    assert q((2, 1)) == [0]
    images = {tuple(q(x)) for x in itertools.product(range(8), range(4))}
    assert len(images) == 2 ** t.size


def test_hom_length():
    assert hom_length((3, 2), 2) == 4
    assert hom_length((5, 3, 1), 0) == 0
    assert hom_length((5, 3, 1), 4) == 8


def test_row_via_homs():
    assert row_via_homs((5, 3, 1), 2) == 2
    assert row_via_homs((5, 3, 1), 1) == 3
    assert row_via_homs((), 3) == 0


def test_transpose_rows_via_hom_lengths():
    for X in partitions_up_to(12):
        for m in range(1, 13):
            assert row_via_homs(X, m) == transpose(X).part(m)


def test_dual_coordinates():
    assert modules.dual_coordinates(FLModule(2, (4,))).type == Partition((4,))
    assert modules.dual_coordinates(FLModule(2, (5, 3, 1))).type == Partition((5, 3, 1))
    assert modules.annihilator(2, (3, 2), [(1, 0), (0, 1)]) == []


def _random_case(rng):
    p = rng.choice([2, 3])
    shapes = [b for b in partitions_up_to(5 if p == 2 else 3) if b and p ** b.size <= 2**10]
    beta = rng.choice(shapes)
    gens = [tuple(rng.randrange(p**e) for e in beta) for _ in range(rng.randrange(4))]
    return p, beta, gens


def test_quotient_and_length_against_brute_force():
    rng = random.Random(7)
    for _ in range(300):
        p, beta, gens = _random_case(rng)
        q = modules.quotient(p, beta, gens)
        assert tuple(q.type) == group_type_of_quotient(p, beta, gens)
        n = subgroup_length(p, beta, gens)
        assert modules.subgroup_length(p, beta, gens) == n
        assert sum(beta) == q.length + n
        assert modules.subgroup_type(p, beta, gens).size == n


def test_subgroup_type_against_brute_force():
    rng = random.Random(11)
    for _ in range(200):
        p, beta, gens = _random_case(rng)
        S = closure(p, beta, gens)
        # type of S from its p^k-torsion sizes
        mods = [p**e for e in beta]
        cols = []
        prev = 1
        for k in range(1, max(beta) + 1):
            size = sum(1 for x in S if all(p**k * a % n == 0 for a, n in zip(x, mods)))
            cols.append(round(__import__("math").log(size // prev, p)))
            prev = size
        assert modules.subgroup_type(p, beta, gens) == transpose([c for c in cols if c])


def test_annihilator_against_brute_force():
    rng = random.Random(3)
    for _ in range(200):
        p, beta, gens = _random_case(rng)
        ann = modules.annihilator(p, beta, gens)
        assert closure(p, beta, ann) == annihilator_set(p, beta, gens)


def test_kernel_simple():
    assert modules.kernel(2, [[2]], [2], [3]) == [[2]]
    assert modules.kernel(2, [], [], [2, 1]) == [[1, 0], [0, 1]]


@pytest.mark.parametrize("beta", [(4,), (3, 1), (2, 2, 1)])
def test_pairing_is_perfect(beta):
    p = 2
    elems = list(itertools.product(*(range(p**e) for e in beta)))
    for x in elems:
        if any(x):
            assert any(modules.pairing(p, beta, x, y) for y in elems)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import group_type_of_quotient
from picketlab.ring_zpn import RingCtx, det_mod, matmul, snf, valuation


@pytest.mark.parametrize(
    "p, cap, x, expected",
    [(2, 5, 12, 2), (2, 5, 0, 5), (3, 4, 1, 0), (3, 4, 81, 4), (2, 3, 24, 3)],
)
def test_valuation(p, cap, x, expected):
    assert valuation(x, p, cap) == expected
    assert RingCtx(p, cap).elt(x).valuation == expected


def test_ring_ctx_rejects():
    with pytest.raises(ValueError):
        RingCtx(4, 2)
    with pytest.raises(ValueError):
        RingCtx(2, 0)
    with pytest.raises(ValueError):
        RingCtx(3, 40)
    RingCtx(2, 63)


def test_elt_arithmetic():
    ctx = RingCtx(3, 2)
    a, b = ctx.elt(5), ctx.elt(7)
    assert (a + b).value == 3
    assert (a * b).value == 8
    assert (-a).value == 4


def test_snf_relations_example():
    res = snf([[8, 0, 4], [0, 4, 2]], RingCtx(2, 5))
    assert res.diag_valuations == [1, 3]
    assert res.cokernel_type(2) == [3, 1]


def test_snf_identity_and_zero():
    assert snf([[1, 0], [0, 1]], RingCtx(2, 5)).diag_valuations == [0, 0]
    assert snf([[0]], RingCtx(2, 3)).diag_valuations == [3]
    assert snf([], RingCtx(2, 3)).diag_valuations == []


def test_snf_pivot_is_topmost_leftmost():
    # two unit entries; the (0, 1) entry wins over (1, 0)
    res = snf([[2, 1], [1, 0]], RingCtx(2, 3))
    assert [row[0] for row in res.right] == [0, 1]
    assert res.left[0] == [1, 0]


def _check_transforms(m, ctx):
    res = snf(m, ctx)
    mod = ctx.modulus
    d = matmul(matmul(res.left, m, mod), res.right, mod)
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i == j and i < len(res.diag_valuations):
                assert x == ctx.p ** res.diag_valuations[i] % mod
            else:
                assert x == 0
    assert res.diag_valuations == sorted(res.diag_valuations)
    assert valuation(det_mod(res.left, mod), ctx.p, ctx.cap) == 0
    assert valuation(det_mod(res.right, mod), ctx.p, ctx.cap) == 0
    return res


matrices = st.tuples(
    st.sampled_from([2, 3]), st.integers(1, 5), st.integers(1, 4), st.integers(1, 4), st.randoms(use_true_random=False)
)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_snf_transforms_are_invertible(args):
    p, cap, r, c, rng = args
    ctx = RingCtx(p, cap)
    m = [[rng.randrange(ctx.modulus) for _ in range(c)] for _ in range(r)]
    _check_transforms(m, ctx)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_brute_force_cokernel(args):
    p, cap, r, c, rng = args
    if p ** (cap * r) > 2**16:
        cap = 1
    ctx = RingCtx(p, cap)
    # bias toward non-units so the cokernel is interesting
    m = [[p ** rng.randrange(cap + 1) * rng.randrange(ctx.modulus) % ctx.modulus for _ in range(c)] for _ in range(r)]
    res = snf(m, ctx)
    cols = [tuple(m[i][j] for i in range(r)) for j in range(c)]
    assert tuple(res.cokernel_type(r)) == group_type_of_quotient(p, [cap] * r, cols)


def test_snf_diagonal_input_sorts():
    ctx = RingCtx(3, 4)
    for _ in range(50):
        vals = [random.randrange(5) for _ in range(4)]
        m = [[3**v % 81 if i == j else 0 for j in range(4)] for i, v in enumerate(vals)]
        assert snf(m, ctx).diag_valuations == sorted(vals)

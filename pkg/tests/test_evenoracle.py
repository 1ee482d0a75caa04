import itertools
from math import comb

import pytest

from oddnil import combinat as C
from oddnil import evenoracle as E


def poly(nvars, *terms):
    return {tuple(m): c for m, c in terms}


def test_even_divided_difference_basics():
    # d_1(x_1) = 1, d_1(x_2) = -1, d_1(x_1 x_2) = 0
    a = 2
    assert E.even_divided_difference(1, poly(a, ((1, 0), 1)), a) == poly(a, ((0, 0), 1))
    assert E.even_divided_difference(1, poly(a, ((0, 1), 1)), a) == poly(a, ((0, 0), -1))
    assert E.even_divided_difference(1, poly(a, ((1, 1), 1)), a) == {}
    # d_1(x_1^2) = x_1 + x_2
    assert E.even_divided_difference(1, poly(a, ((2, 0), 1)), a) == poly(
        a, ((1, 0), 1), ((0, 1), 1)
    )


def test_even_divided_difference_is_quotient():
    # (f - s_i f) equals (x_i - x_{i+1}) * d_i(f), multiplied back
    import random

    rng = random.Random(4)
    for _ in range(80):
        a = rng.randint(2, 4)
        i = rng.randint(1, a - 1)
        m = tuple(rng.randint(0, 3) for _ in range(a))
        f = poly(a, (m, 1))
        sm = list(m)
        sm[i - 1], sm[i] = sm[i], sm[i - 1]
        diff = E.zpoly_add(f, E.zpoly_scale(poly(a, (tuple(sm), 1)), -1))
        xi = [0] * a
        xi[i - 1] = 1
        xi1 = [0] * a
        xi1[i] = 1
        root = E.zpoly_add(poly(a, (tuple(xi), 1)), E.zpoly_scale(poly(a, (tuple(xi1), 1)), -1))
        back = E.zpoly_mul(root, E.even_divided_difference(i, f, a))
        assert back == diff, (a, i, m)


def test_even_elementary_and_complete_counts():
    for a in (1, 2, 3, 4):
        for k in range(0, a + 1):
            assert sum(E.even_elementary(k, a).values()) == comb(a, k)
        for k in range(0, 4):
            assert sum(E.even_complete(k, a).values()) == comb(a + k - 1, k)


def test_even_e_h_alternating_identity():
    # sum_k (-1)^k e_k h_{m-k} = 0, the classical Newton-type identity
    for a in (1, 2, 3):
        for m in range(1, 6):
            total = {}
            for k in range(0, m + 1):
                term = E.zpoly_mul(E.even_elementary(k, a), E.even_complete(m - k, a))
                total = E.zpoly_add(total, E.zpoly_scale(term, (-1) ** k))
            assert total == {}, (a, m)


def test_even_schur_examples():
    a = 3
    assert E.even_schur((), a) == {(0, 0, 0): 1}
    assert E.even_schur((1,), a) == E.even_elementary(1, a)
    assert E.even_schur((1, 1), a) == E.even_elementary(2, a)
    assert E.even_schur((1, 1, 1), a) == E.even_elementary(3, a)
    # h_2 = s_(2)
    assert E.even_schur((2,), a) == E.even_complete(2, a)


def test_even_schur_pieri_spot_check():
    # s_(1) * e_1 = s_(2) + s_(1,1) classically
    a = 3
    lhs = E.zpoly_mul(E.even_schur((1,), a), E.even_elementary(1, a))
    rhs = E.zpoly_add(E.even_schur((2,), a), E.even_schur((1, 1), a))
    assert lhs == rhs


def test_gf2_poly_arithmetic():
    p = E.Gf2Poly(2, {(1, 0): 1, (0, 1): 1})
    q = E.Gf2Poly(2, {(1, 0): 1, (0, 1): 1})
    assert (p + q).is_zero()
    sq = p * q
    # (x+y)^2 = x^2 + y^2 over GF(2)
    assert sq == E.Gf2Poly(2, {(2, 0): 1, (0, 2): 1})


def test_even_quotient_ranks_match_box_counts():
    # classical fact: dim of degree-2k slice of the Grassmannian cohomology
    # equals the number of partitions of k inside the a x (N-a) box
    for (a, n_param) in [(1, 3), (2, 3), (2, 4), (3, 4)]:
        box = C.partitions_in_box(a, n_param - a)
        for k in range(0, a * (n_param - a) + 1):
            want = sum(1 for lam in box if sum(lam) == k)
            assert E.even_quotient_rank_gf2(a, n_param, k) == want, (a, n_param, k)


def test_even_expand_roundtrip():
    a = 3
    f = E.zpoly_mul(E.even_elementary(2, a), E.even_elementary(1, a))
    coeffs = E._even_expand(f, a)
    assert coeffs == {(2, 1): 1}
    with pytest.raises(ValueError):
        E._even_expand({(0, 1, 0): 1}, a)

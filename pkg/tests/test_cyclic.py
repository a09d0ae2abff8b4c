from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy import primerange

from tik import TorusSpec, element_orders, primitive_root, reduce_orders
from tik.caps import ValidationError

from oracles import naive_order, naive_primitive_root

SMALL_PRIMES = list(primerange(3, 400))


@pytest.mark.parametrize("q, v, d", [
    (54001, [1500, 1000, 432, 360, 240], [36, 54, 125, 150, 225]),
    (211, [42, 35, 30], [5, 6, 7]),
    (7, [6, 6], [1, 1]),
    (271, [30, 135, 54], [9, 2, 5]),
])
def test_element_orders_examples(q, v, d):
    assert element_orders(TorusSpec(q, v)) == d


@pytest.mark.parametrize("d, r, dprime", [
    ([36, 54, 125, 150, 225], 1, [36, 54, 125, 150, 225]),
    ([4, 6], 2, [2, 3]),
    ([5, 5], 5, [1, 1]),
])
def test_reduce_orders_examples(d, r, dprime):
    od = reduce_orders(d)
    assert (od.r, list(od.dprime), list(od.d)) == (r, dprime, d)


@pytest.mark.parametrize("q", [3, 7, 211, 271, 54001])
def test_primitive_root_matches_search(q):
    assert primitive_root(q) == naive_primitive_root(q)


@pytest.mark.parametrize("q, v", [
    (4, [1, 1]), (2, [1, 1]), (1, [1, 1]), (15, [1, 2]),
    (7, [1]), (7, []), (7, [0, 1]), (7, [-1, 2]),
])
def test_invalid_specs_rejected(q, v):
    with pytest.raises(ValidationError):
        TorusSpec(q, v)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_PRIMES), st.lists(st.integers(1, 10**6), min_size=2, max_size=5))
def test_orders_match_repeated_multiplication(q, v):
    beta = naive_primitive_root(q)
    want = [naive_order(pow(beta, vi, q), q) for vi in v]
    assert element_orders(TorusSpec(q, v)) == want


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_PRIMES), st.lists(st.integers(1, 500), min_size=2, max_size=5),
       st.randoms())
def test_orders_are_permutation_equivariant(q, v, rnd):
    perm = list(range(len(v)))
    rnd.shuffle(perm)
    d = element_orders(TorusSpec(q, v))
    dp = element_orders(TorusSpec(q, [v[i] for i in perm]))
    assert dp == [d[i] for i in perm]
    assert all((q - 1) % x == 0 for x in d)


@given(st.lists(st.integers(1, 10**4), min_size=1, max_size=6))
def test_reduce_orders_divides_out_gcd(d):
    od = reduce_orders(d)
    assert [x * od.r for x in od.dprime] == d
    g = 0
    for x in od.dprime:
        g = gcd(g, x)
    assert g == 1

from math import gcd, prod
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from tik import ci_gluing
from tik.groebner import (TermOrder, buchberger, hilbert_data, ideal_equal,
                          minimal_generators, normal_form, saturate)
from tik.lattice_ideal import (Binomial, GradedBinomialSet, kernel_basis, parse_binomial,
                               toric_relations, transfer)

from oracles import count_standard, sympy_reduced_gb, sympy_saturation

IX_567 = ["t2^12 - t1^5*t3^7", "t1^20 - t2^6*t3^14", "t1^15*t2^6 - t3^21"]


def std(texts, n):
    return GradedBinomialSet.standard([parse_binomial(t, n) for t in texts], n)


def pairs(gs):
    return [(g.plus, g.minus) for g in gs]


def test_normal_form_examples():
    gb = buchberger(std(["t1 - t2"], 2))
    assert normal_form(parse_binomial("t1^2 - t2^2", 2), gb) is None
    gb2 = buchberger(std(["t1^2 - t2^2"], 2))
    g = parse_binomial("t1 - t2", 2)
    assert normal_form(g, gb2) == g
    gb3 = buchberger(std(IX_567, 3))
    assert normal_form(parse_binomial("t1^30 - t2^30", 3), gb3) is None


def test_buchberger_examples():
    assert [str(g) for g in buchberger(std(["t1^2 - t2^2"], 2)).elements] == ["t1^2 - t2^2"]
    gb = buchberger(std(["t1 - t2", "t2 - t3"], 3), TermOrder.cheapest((1, 1, 1), 2))
    assert sorted(str(g) for g in gb.elements) == ["t1 - t3", "t2 - t3"]


def test_buchberger_agrees_with_sympy_on_example():
    gb = buchberger(std(IX_567, 3))
    assert sympy_reduced_gb(pairs(gb.elements), 3) == sympy_reduced_gb(pairs(std(IX_567, 3)), 3)


def test_hilbert_data_example():
    hd = hilbert_data(buchberger(std(IX_567, 3)))
    assert (hd.reg, hd.degree) == (25, 210)
    assert hd.value(24) < 210 == hd.value(25) == hd.value(400)
    leads = buchberger(std(IX_567, 3)).leading
    assert [count_standard(leads, 3, k) for k in range(28)] == [hd.value(k) for k in range(28)]


@pytest.mark.parametrize("a", [1, 2, 3, 7, 12])
def test_hilbert_two_variables(a):
    hd = hilbert_data(buchberger(std([f"t1^{a} - t2^{a}"], 2)))
    assert (hd.degree, hd.reg, hd.hvector) == (a, a - 1, (1,) * a)
    leads = buchberger(std([f"t1^{a} - t2^{a}"], 2)).leading
    assert [count_standard(leads, 2, k) for k in range(a + 3)] == [hd.value(k) for k in range(a + 3)]


def test_hilbert_of_a_point():
    hd = hilbert_data(buchberger(std(["t1 - t2"], 2)))
    assert (hd.degree, hd.reg) == (1, 0)


def test_saturation_examples():
    sat = saturate(toric_relations([5, 6, 7]))
    assert ideal_equal(sat, std(IX_567, 3))
    assert not ideal_equal(toric_relations([5, 6, 7]), std(IX_567, 3))
    assert [str(g) for g in saturate(std(["t1*t2 - t2^2"], 2))] == ["t1 - t2"]
    equal = toric_relations([4, 4, 4])
    assert ideal_equal(saturate(equal), equal)


def test_saturation_agrees_with_elimination():
    got = saturate(toric_relations([5, 6, 7]))
    assert sympy_reduced_gb(pairs(got), 3) == sympy_saturation(pairs(toric_relations([5, 6, 7])), 3)


def test_ideal_equal_reflexive():
    s = std(IX_567, 3)
    assert ideal_equal(s, s)


def test_weighted_toric_ideal_matches_herzog():
    # P for <5,6,7> from saturating the kernel binomials under deg t_i = d_i
    d = (5, 6, 7)
    kb = GradedBinomialSet(d, tuple(Binomial.from_vector(r) for r in kernel_basis(d).basis))
    P = saturate(kb)
    herzog = GradedBinomialSet(d, tuple(parse_binomial(t, 3) for t in
                                        ["t2^2 - t1*t3", "t1^4 - t2*t3^2", "t1^3*t2 - t3^3"]))
    assert ideal_equal(P, herzog)
    assert len(minimal_generators(P)) == 3


def test_large_example_generators_agree():
    # two generating sets of P for <36,54,125,150,225>
    d = (36, 54, 125, 150, 225)
    ours = GradedBinomialSet(d, tuple(ci_gluing(d).generators))
    other = GradedBinomialSet(d, tuple(parse_binomial(t, 5) for t in [
        "t1^3 - t2^2", "t3^3 - t4*t5", "t4^3 - t5^2", "t1^8*t2^3 - t4^3"]))
    assert ideal_equal(ours, other)


small_d = st.lists(st.integers(1, 9), min_size=3, max_size=3)


@settings(max_examples=25, deadline=None)
@given(small_d)
def test_saturation_matches_elimination_oracle(d):
    rels = toric_relations(d)
    assert sympy_reduced_gb(pairs(saturate(rels)), 3) == sympy_saturation(pairs(rels), 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=2, max_size=4))
def test_hilbert_matches_standard_monomial_count(d):
    gb = buchberger(saturate(toric_relations(d)))
    hd = hilbert_data(gb)
    n = len(d)
    top = hd.reg + 2
    if n == 4 and top > 40:
        top = 40
    assert [count_standard(gb.leading, n, k) for k in range(top)] == [hd.value(k) for k in range(top)]
    # the degree of S/I(X) is |X| = prod(d) / gcd(d)
    assert hd.degree == prod(d) // reduce(gcd, d)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=2, max_size=4).filter(lambda g: reduce(gcd, g) == 1))
def test_complete_intersection_hilbert_invariants(gens):
    dec = ci_gluing(gens)
    if not dec.is_ci:
        return
    ix = GradedBinomialSet.standard([transfer(g, gens) for g in dec.generators], len(gens))
    degs = [g.degree() for g in ix]
    hd = hilbert_data(buchberger(ix))
    assert hd.reg == sum(x - 1 for x in degs)
    assert hd.degree == prod(degs) == prod(gens)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 25), min_size=3, max_size=4).filter(lambda g: reduce(gcd, g) == 1))
def test_minimal_generator_count_detects_ci(gens):
    kb = GradedBinomialSet(tuple(gens), tuple(Binomial.from_vector(r) for r in kernel_basis(gens).basis))
    P = saturate(kb)
    mins = minimal_generators(P)
    assert ideal_equal(GradedBinomialSet(tuple(gens), tuple(mins)), P)
    assert (len(mins) == len(gens) - 1) == ci_gluing(gens).is_ci

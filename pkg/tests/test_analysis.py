from functools import reduce
from itertools import combinations_with_replacement
from math import gcd, prod

import pytest
from sympy import divisors

from tik import TorusSpec, analyze, ci_gluing, reduce_orders
from tik.analysis import toric_generators


def non_ci_tuples(m, sizes=(3, 4)):
    """Every multiset of divisors of m whose reduced orders are not a CI."""
    out = []
    for n in sizes:
        for c in combinations_with_replacement(divisors(m), n):
            if not ci_gluing(reduce_orders(list(c)).dprime).is_ci:
                out.append(c)
    return out


NON_CI_210 = non_ci_tuples(210)


def test_fixture_is_not_empty():
    assert len(NON_CI_210) == 81
    assert (5, 6, 7) in NON_CI_210


@pytest.mark.parametrize("d", NON_CI_210, ids=lambda d: "-".join(map(str, d)))
def test_non_ci_orders_pass_all_oracles(d):
    spec = TorusSpec(211, [210 // x for x in d])
    oracles = ["lattice", "gb", "sat"]
    if prod(d) // reduce(gcd, d) <= 3000:
        oracles.append("points")
    rep = analyze(spec, oracles)
    assert list(rep.d) == list(d)
    assert not rep.is_ci
    assert not rep.failed, rep.failed
    assert rep.reg is not None
    assert len(rep.ix_generators) >= len(d)
    if len(d) == 3:
        assert len(rep.ix_generators) == 3


def test_examples_with_every_oracle():
    rep = analyze(TorusSpec(211, [42, 35, 30]), ["all"])
    assert all(c.status == "passed" for c in rep.oracle_checks), rep.oracle_checks
    rep = analyze(TorusSpec(271, [30, 135, 54]), ["all"])
    assert all(c.status == "passed" for c in rep.oracle_checks), rep.oracle_checks


def test_gcd_above_one_keeps_formulas():
    # d = (6, 4): r = 2, d' = (3, 2), g(<2,3>) = 1
    rep = analyze(TorusSpec(13, [2, 3]), ["all"])
    assert (rep.d, rep.r, rep.dprime) == ([6, 4], 2, [3, 2])
    assert rep.frobenius == 1
    assert rep.degree == 12
    assert rep.reg == 2 * 1 + 10 - 1
    assert not rep.failed


def test_report_serializes_without_timings():
    rep = analyze(TorusSpec(211, [42, 35, 30]))
    d = rep.to_dict(timings=False)
    assert "timings" not in d and d["frobenius"] == 9
    assert rep.check("lattice_span").status == "passed"
    assert rep.check("gb_hilbert").status == "skipped"


def test_toric_generators_routes():
    assert toric_generators([9, 2, 5])[0] is True
    is_ci, gens, frob = toric_generators([5, 6, 7])
    assert not is_ci and len(gens) == 3 and frob is None
    # four generators, not a CI: generators come from a saturation
    is_ci, gens, _ = toric_generators([5, 6, 7, 8])
    assert not is_ci and all(g.is_homogeneous([5, 6, 7, 8]) for g in gens)

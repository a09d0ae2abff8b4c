"""Randomized survey over small tori, comparing every closed formula with a
brute-force route case by case."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import prod

from sympy import divisors, primerange

from .analysis import toric_generators
from .cyclic import TorusSpec, element_orders, reduce_orders
from .groebner import buchberger, hilbert_data
from .lattice_ideal import GradedBinomialSet, transfer
from .points_codes import enumerate_points, hilbert_profile_by_rank
from .semigroup import ci_gluing, frobenius_bruteforce


@dataclass(frozen=True)
class SurveyConfig:
    cases: int = 200
    seed: int = 7
    max_q: int = 500
    min_n: int = 2
    max_n: int = 4
    # compare the point-rank and Groebner profiles when prod(d) is at most this
    points_limit: int = 2000
    # chance that v_i is (q-1)/k for a divisor k, which spreads the orders out
    divisor_bias: float = 0.6
    # share of cases redrawn until the toric ideal is not a complete intersection
    non_ci_share: float = 0.25


def _draw(rng: random.Random, cfg: SurveyConfig, primes: list[int]) -> TorusSpec:
    q = rng.choice(primes)
    n = rng.randint(cfg.min_n, cfg.max_n)
    divs = divisors(q - 1)
    v = [(q - 1) // rng.choice(divs) if rng.random() < cfg.divisor_bias else rng.randint(1, q)
         for _ in range(n)]
    return TorusSpec(q, v)


def sample_specs(cfg: SurveyConfig) -> list[TorusSpec]:
    rng = random.Random(cfg.seed)
    primes = list(primerange(3, cfg.max_q + 1))
    out = []
    for _ in range(cfg.cases):
        spec = _draw(rng, cfg, primes)
        if cfg.max_n >= 3 and rng.random() < cfg.non_ci_share:
            for _ in range(10_000):
                if spec.n >= 3 and not ci_gluing(reduce_orders(element_orders(spec)).dprime).is_ci:
                    break
                spec = _draw(rng, cfg, primes)
        out.append(spec)
    return out


@dataclass
class CaseResult:
    spec: TorusSpec
    d: list[int]
    r: int
    is_ci: bool
    n_generators: int
    # None means the check does not apply to this case
    checks: dict[str, bool | None] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]


def run_case(spec: TorusSpec, points_limit: int = 2000) -> CaseResult:
    od = reduce_orders(element_orders(spec))
    d, r, dp = list(od.d), od.r, list(od.dprime)
    n = spec.n
    is_ci, p_gens, _ = toric_generators(dp)
    ix = [transfer(g, d) for g in p_gens]
    g_bf = frobenius_bruteforce(dp)
    checks: dict[str, bool | None] = dict.fromkeys(
        ("frobenius", "degree", "reg", "profile", "n3_bound"))

    if is_ci:
        Dp = [g.degree(dp) for g in p_gens]
        D = [h.degree() for h in ix]
        checks["frobenius"] = g_bf == sum(Dp) - sum(dp)
        checks["degree"] = prod(D) == prod(d) // r
        checks["reg"] = r * g_bf + sum(d) - (n - 1) == sum(x - 1 for x in D)
    if prod(d) <= points_limit:
        hd = hilbert_data(buchberger(GradedBinomialSet.standard(ix, n)))
        profile = hilbert_profile_by_rank(enumerate_points(spec), max_degree=hd.reg + 1)
        checks["profile"] = profile == [hd.value(k) for k in range(hd.reg + 2)]
    if n == 3:
        checks["n3_bound"] = len(ix) in (2, 3)
    return CaseResult(spec, d, r, is_ci, len(ix), checks)

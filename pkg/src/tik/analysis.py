"""The analysis pipeline behind ``tik analyze``."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from math import prod

from .caps import ResourceError
from .cyclic import TorusSpec, element_orders, reduce_orders
from .groebner import (buchberger, hilbert_data, ideal_equal, minimal_generators,
                       saturate)
from .lattice_ideal import (Binomial, GradedBinomialSet, dilate, kernel_basis,
                            spans_lattice, toric_relations, transfer)
from .points_codes import enumerate_points, hilbert_profile_by_rank
from .semigroup import ci_gluing, frobenius_bruteforce, herzog3, is_member

ORACLES = ("lattice", "gb", "sat", "points")


@dataclass
class Check:
    name: str
    status: str  # "passed", "failed" or "skipped"
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class AnalysisReport:
    q: int
    v: list[int]
    d: list[int]
    r: int
    dprime: list[int]
    is_ci: bool
    p_generators: list[dict] | None
    ix_generators: list[dict] | None
    frobenius: int
    degree: int
    reg: int | None
    hilbert: list[int] | None = None
    oracle_checks: list[Check] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.oracle_checks if c.status == "failed"]

    def check(self, name: str) -> Check | None:
        return next((c for c in self.oracle_checks if c.name == name), None)

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "q": self.q,
            "v": self.v,
            "d": self.d,
            "r": self.r,
            "dprime": self.dprime,
            "is_ci": self.is_ci,
            "p_generators": self.p_generators,
            "ix_generators": self.ix_generators,
            "frobenius": self.frobenius,
            "degree": self.degree,
            "reg": self.reg,
            "hilbert": self.hilbert,
            "oracle_checks": [c.to_dict() for c in self.oracle_checks],
        }
        if timings:
            out["timings"] = self.timings
        return out


class _Run:
    def __init__(self):
        self.checks: list[Check] = []
        self.timings: dict[str, float] = {}

    @contextmanager
    def timed(self, name):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - t0, 6)

    def expect(self, name, ok, detail=""):
        self.checks.append(Check(name, "passed" if ok else "failed", detail))
        return ok

    def skip(self, name, reason):
        self.checks.append(Check(name, "skipped", reason))


def _serialize(gens, weights):
    return [{"binomial": str(g), "degree": g.degree(weights)} for g in gens]


def _kernel_binomials(dprime) -> GradedBinomialSet:
    return GradedBinomialSet(dprime, tuple(Binomial.from_vector(row)
                                           for row in kernel_basis(dprime).basis))


def toric_generators(dprime, run: _Run | None = None):
    """Binomial generators of the toric ideal P of the list d'.

    Returns (is_ci, generators, ci_frobenius).  Generators come from the
    gluing tree when P is a complete intersection, from Herzog's
    construction for three generators, and otherwise from a saturation.
    """
    run = run or _Run()
    n = len(dprime)
    dec = ci_gluing(dprime)
    if n == 3:
        minimal = not any(is_member(dprime[i], [dprime[j] for j in range(3) if j != i])
                          for i in range(3))
        if minimal:
            hz = herzog3(dprime)
            run.expect("herzog_vs_gluing", (len(hz) == 2) == dec.is_ci,
                       f"herzog emits {len(hz)} binomials, gluing is_ci={dec.is_ci}")
            if not dec.is_ci:
                return False, hz, None
        else:
            run.expect("herzog_vs_gluing", dec.is_ci,
                       "non-minimal triple must glue")
    if dec.is_ci:
        return True, dec.generators, dec.frobenius
    try:
        sat = saturate(_kernel_binomials(dprime))
        gens = minimal_generators(sat)
    except ResourceError as e:
        run.skip("toric_generators", f"saturation for P aborted: {e}")
        return False, None, None
    gens = sorted(gens, key=lambda g: (g.degree(dprime), g))
    return False, gens, None


def analyze(spec: TorusSpec, oracles=("lattice",)) -> AnalysisReport:
    oracles = set(ORACLES) if "all" in oracles else set(oracles)
    unknown = oracles - set(ORACLES)
    if unknown:
        raise ValueError(f"unknown oracles {sorted(unknown)}")
    run = _Run()
    n = spec.n

    with run.timed("orders"):
        od = reduce_orders(element_orders(spec))
        d, r, dp = list(od.d), od.r, list(od.dprime)
        degree = prod(d) // r

    with run.timed("frobenius"):
        frob_bf = frobenius_bruteforce(dp)

    with run.timed("generators"):
        is_ci, p_gens, ci_frob = toric_generators(dp, run)
        ix_gens = None if p_gens is None else [transfer(g, d) for g in p_gens]

    reg = None
    if is_ci:
        D = [h.degree() for h in ix_gens]
        run.expect("frobenius_formula", ci_frob == frob_bf,
                   f"sum D' - sum d' = {ci_frob}, brute force = {frob_bf}")
        reg = r * ci_frob + sum(d) - (n - 1)
        run.expect("reg_formula_vs_degree_sum", reg == sum(x - 1 for x in D),
                   f"r g(S') + sum d - (n-1) = {reg}, sum (D_i - 1) = {sum(x - 1 for x in D)}")
        run.expect("degree_product", prod(D) == degree,
                   f"prod D_i = {prod(D)}, prod d_i / r = {degree}")
    if ix_gens is not None:
        run.expect("transfer_positional",
                   all(h.degree() == g.degree(d) for g, h in zip(p_gens, ix_gens)),
                   "deg h_i = deg_d g_i")

    if "lattice" in oracles:
        with run.timed("lattice"):
            if p_gens is None:
                run.skip("lattice_span", "no generators")
            else:
                L1 = kernel_basis(d)
                ok_p = spans_lattice(p_gens, L1)
                ok_x = spans_lattice(ix_gens, dilate(L1, d))
                run.expect("lattice_span", ok_p and ok_x,
                           f"P spans ker(psi): {ok_p}; I(X) spans D(ker(psi)): {ok_x}")
    else:
        run.skip("lattice_span", "not requested (enable with --oracles lattice)")

    gb_profile = None
    ix_set = None if ix_gens is None else GradedBinomialSet.standard(ix_gens, n)
    if "gb" in oracles or "points" in oracles:
        if ix_set is None:
            run.skip("gb_hilbert", "no generators")
        else:
            with run.timed("gb"):
                try:
                    hd = hilbert_data(buchberger(ix_set))
                except ResourceError as e:
                    run.skip("gb_hilbert", str(e))
                else:
                    gb_profile = list(hd.values)
                    ok = hd.degree == degree and (reg is None or hd.reg == reg)
                    run.expect("gb_hilbert", ok,
                               f"GB route: reg={hd.reg}, degree={hd.degree}")
                    if reg is None:
                        reg = hd.reg
    else:
        run.skip("gb_hilbert", "not requested (enable with --oracles gb)")

    if "sat" in oracles:
        if ix_set is None:
            run.skip("saturation_vs_transfer", "no generators")
        else:
            with run.timed("sat"):
                try:
                    sat = saturate(toric_relations(d))
                    equal = ideal_equal(sat, ix_set)
                    toric_alone = ideal_equal(toric_relations(d), ix_set)
                except ResourceError as e:
                    run.skip("saturation_vs_transfer", str(e))
                else:
                    run.expect("saturation_vs_transfer", equal,
                               f"(I' : (t1...tn)^inf) equals transfer route: {equal}; "
                               f"toric relations alone generate: {toric_alone}")
    else:
        run.skip("saturation_vs_transfer", "not requested (enable with --oracles sat)")

    hilbert = gb_profile
    if "points" in oracles:
        with run.timed("points"):
            try:
                ps = enumerate_points(spec)
                profile = hilbert_profile_by_rank(ps)
            except ResourceError as e:
                run.skip("points_hilbert", str(e))
            else:
                pts_reg = profile.index(len(ps))
                ok = len(ps) == degree and (reg is None or pts_reg == reg)
                if gb_profile is not None:
                    ok = ok and profile == gb_profile
                run.expect("points_hilbert", ok,
                           f"|X|={len(ps)}, rank stabilizes at {pts_reg}"
                           + ("" if gb_profile is None else
                              f", matches GB profile: {profile == gb_profile}"))
                if reg is None:
                    reg = pts_reg
                if hilbert is None:
                    hilbert = profile
    else:
        run.skip("points_hilbert", "not requested (enable with --oracles points)")

    return AnalysisReport(
        q=spec.q, v=list(spec.v), d=d, r=r, dprime=dp, is_ci=is_ci,
        p_generators=None if p_gens is None else _serialize(p_gens, dp),
        ix_generators=None if ix_gens is None else _serialize(ix_gens, None),
        frobenius=frob_bf, degree=degree, reg=reg, hilbert=hilbert,
        oracle_checks=run.checks, timings=run.timings,
    )

"""Buchberger's algorithm for pure-difference binomial ideals.

Reducing t^a - t^b by t^u - t^v only ever rewrites a monomial into another
monomial, so every polynomial met here keeps coefficients +1/-1 and nothing
depends on the characteristic of the field.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .caps import ResourceError, cap
from .lattice_ideal import Binomial, GradedBinomialSet, Monomial


@dataclass(frozen=True)
class TermOrder:
    """Weighted graded reverse lexicographic order.

    ``perm`` lists the variables from most expensive to cheapest; the default
    makes the last variable cheapest.
    """

    weights: tuple[int, ...]
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        perm = tuple(range(len(self.weights))) if self.perm is None else tuple(self.perm)
        if sorted(perm) != list(range(len(self.weights))):
            raise ValueError(f"{perm} is not a permutation")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def cheapest(cls, weights: Sequence[int], i: int) -> "TermOrder":
        n = len(weights)
        return cls(tuple(weights), tuple(j for j in range(n) if j != i) + (i,))

    def degree(self, m: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def key(self, m: Monomial):
        """Sort key: a > b in the order iff key(a) > key(b)."""
        return (self.degree(m), tuple(-m[i] for i in reversed(self.perm)))


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    elements: tuple[Binomial, ...]
    leading: tuple[Monomial, ...]

    def pairs(self):
        """(lead, tail) exponent pairs."""
        for g, lead in zip(self.elements, self.leading):
            yield lead, (g.minus if g.plus == lead else g.plus)

    def generated(self) -> GradedBinomialSet:
        return GradedBinomialSet(self.order.weights, self.elements)


def _divides(u: Monomial, m: Monomial) -> bool:
    return all(x <= y for x, y in zip(u, m))


def _lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(u, v))


def _coprime(u: Monomial, v: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(u, v))


def _reduce_monomial(m: Monomial, basis) -> Monomial:
    """Normal form of a monomial modulo (lead, tail) pairs."""
    changed = True
    while changed:
        changed = False
        for lead, tail in basis:
            if _divides(lead, m):
                k = min(mi // li for mi, li in zip(m, lead) if li)
                m = tuple(mi + k * (ti - li) for mi, li, ti in zip(m, lead, tail))
                changed = True
    return m


def _orient(a: Monomial, b: Monomial, order: TermOrder):
    if a == b:
        return None
    return (a, b) if order.key(a) > order.key(b) else (b, a)


def _to_binomial(pair) -> Binomial:
    lead, tail = pair
    assert lead != tail, "pure-difference closure violated"
    return Binomial.make(lead, tail)


def _reduce_pair(a: Monomial, b: Monomial, basis, order):
    return _orient(_reduce_monomial(a, basis), _reduce_monomial(b, basis), order)


def buchberger(gens: GradedBinomialSet, order: TermOrder | None = None,
               max_elements: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the binomial ideal.

    Normal selection strategy (lowest lcm degree first, ties by creation
    order) with the Gebauer-Moeller criteria.
    """
    if order is None:
        order = TermOrder(gens.weights)
    if tuple(order.weights) != tuple(gens.weights):
        raise ValueError("term order weights differ from the grading")
    limit = cap("gb_elements", max_elements)

    polys: list[tuple[Monomial, Monomial]] = []
    active: list[int] = []
    pairs: list = []  # heap of (degree, seq, i, j)
    seq = 0

    def active_basis():
        return [polys[i] for i in active]

    def update(h: tuple[Monomial, Monomial]):
        nonlocal seq, pairs, active
        polys.append(h)
        if len(polys) > limit:
            raise ResourceError("gb_elements", limit, len(polys))
        k = len(polys) - 1
        lh = h[0]
        cand = [(g, _lcm(polys[g][0], lh)) for g in active]
        keep = []
        for idx, (g, l) in enumerate(cand):
            if _coprime(polys[g][0], lh):
                keep.append((g, l))
                continue
            others = [l2 for _, l2 in cand[idx + 1:]] + [l2 for _, l2 in keep]
            if not any(_divides(l2, l) for l2 in others):
                keep.append((g, l))
        new_pairs = [(g, l) for g, l in keep if not _coprime(polys[g][0], lh)]
        old = []
        for item in pairs:
            _, _, i, j = item
            lij = _lcm(polys[i][0], polys[j][0])
            if (_divides(lh, lij)
                    and _lcm(polys[i][0], lh) != lij
                    and _lcm(polys[j][0], lh) != lij):
                continue
            old.append(item)
        for g, l in new_pairs:
            old.append((order.degree(l), seq, g, k))
            seq += 1
        heapq.heapify(old)
        pairs = old
        active = [g for g in active if not _divides(lh, polys[g][0])] + [k]

    for g in sorted(gens.binomials, key=lambda b: b.degree(gens.weights)):
        h = _reduce_pair(g.plus, g.minus, active_basis(), order)
        if h is not None:
            update(h)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        (li, ti), (lj, tj) = polys[i], polys[j]
        l = _lcm(li, lj)
        a = tuple(x - y + z for x, y, z in zip(l, li, ti))
        b = tuple(x - y + z for x, y, z in zip(l, lj, tj))
        h = _reduce_pair(a, b, active_basis(), order)
        if h is not None:
            update(h)

    basis = active_basis()
    reduced = []
    for idx, (lead, tail) in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        tail = _reduce_monomial(tail, others)
        reduced.append((lead, tail))
    reduced.sort(key=lambda p: order.key(p[0]))
    return GroebnerBasis(
        order,
        tuple(_to_binomial(p) for p in reduced),
        tuple(p[0] for p in reduced),
    )


def normal_form(g: Binomial, gb: GroebnerBasis) -> Binomial | None:
    """Remainder of t^a - t^b modulo the basis; None when it reduces to 0."""
    h = _reduce_pair(g.plus, g.minus, list(gb.pairs()), gb.order)
    return None if h is None else _to_binomial(h)


def saturate(gens: GradedBinomialSet, max_elements: int | None = None) -> GradedBinomialSet:
    """(I : (t_1 ... t_n)^inf) by one-variable saturations.

    For each variable t_i: Groebner basis with t_i cheapest, then strip the
    largest power of t_i from every element.  Sweeps repeat until nothing
    is stripped.
    """
    current = gens
    while True:
        changed = False
        for i in range(gens.n):
            gb = buchberger(current, TermOrder.cheapest(gens.weights, i), max_elements)
            out = []
            for lead, tail in gb.pairs():
                k = min(lead[i], tail[i])
                if k:
                    changed = True
                    lead = lead[:i] + (lead[i] - k,) + lead[i + 1:]
                    tail = tail[:i] + (tail[i] - k,) + tail[i + 1:]
                out.append(Binomial.make(lead, tail))
            current = GradedBinomialSet(gens.weights, tuple(out))
        if not changed:
            return current


def ideal_equal(a: GradedBinomialSet, b: GradedBinomialSet,
                max_elements: int | None = None) -> bool:
    """Equality of ideals via reduced Groebner bases in one fixed order."""
    if a.weights != b.weights:
        raise ValueError("ideal_equal needs the same grading on both sides")
    order = TermOrder(a.weights)
    return (buchberger(a, order, max_elements).elements
            == buchberger(b, order, max_elements).elements)


def minimal_generators(gens: GradedBinomialSet,
                       max_elements: int | None = None) -> list[Binomial]:
    """A minimal homogeneous generating set picked greedily by degree."""
    gb = buchberger(gens, max_elements=max_elements)
    chosen: list[Binomial] = []
    for g in sorted(gb.elements, key=lambda b: (b.degree(gens.weights), b)):
        if chosen:
            sub = buchberger(GradedBinomialSet(gens.weights, tuple(chosen)),
                             max_elements=max_elements)
            if normal_form(g, sub) is None:
                continue
        chosen.append(g)
    return chosen


# ---------------------------------------------------------------- Hilbert data

@dataclass(frozen=True)
class HilbertData:
    values: tuple[int, ...]  # H(0), ..., H(reg)
    reg: int
    degree: int
    hvector: tuple[int, ...]

    def value(self, d: int) -> int:
        if d < 0:
            return 0
        return self.values[d] if d < len(self.values) else self.degree


def _minimalize(mons: list[Monomial]) -> list[Monomial]:
    mons = sorted(set(mons), key=sum)
    out: list[Monomial] = []
    for m in mons:
        if not any(_divides(u, m) for u in out):
            out.append(m)
    return out


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p: list[int], q: list[int], shift: int = 0) -> list[int]:
    out = p + [0] * max(0, len(q) + shift - len(p))
    for j, b in enumerate(q):
        out[j + shift] += b
    return out


def _numerator(mons: list[Monomial], memo: dict) -> list[int]:
    """K(t) with HS(S/M) = K(t) / (1-t)^n for the monomial ideal M."""
    mons = tuple(_minimalize(mons))
    if mons in memo:
        return memo[mons]
    if not mons:
        res = [1]
    elif any(sum(m) == 0 for m in mons):
        res = [0]
    else:
        n = len(mons[0])
        shared = None
        for i in range(n):
            users = [m[i] for m in mons if m[i] > 0]
            if len(users) >= 2:
                shared = (i, min(users))
                break
        if shared is None:
            # pairwise coprime generators form a regular sequence
            res = [1]
            for m in mons:
                f = [0] * (sum(m) + 1)
                f[0], f[-1] = 1, -1
                res = _poly_mul(res, f)
        else:
            i, e = shared
            pivot = tuple(e if j == i else 0 for j in range(n))
            colon = [tuple(max(x - y, 0) for x, y in zip(m, pivot)) for m in mons]
            res = _poly_add(_numerator(list(mons) + [pivot], memo),
                            _numerator(colon, memo), shift=e)
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    memo[mons] = res
    return res


def hilbert_data(gb: GroebnerBasis, max_degree: int | None = None) -> HilbertData:
    """Hilbert function of S/I for a standard-graded ideal of dimension 1.

    Counts standard monomials through the Hilbert series of the initial
    ideal (pivot recursion on the leading monomials), then divides out
    (1-t)^(n-1) to get the h-vector.
    """
    if any(w != 1 for w in gb.order.weights):
        raise ValueError("hilbert_data needs the standard grading")
    n = len(gb.order.weights)
    limit = cap("hilbert_degree", max_degree)
    h = _numerator(list(gb.leading), {})
    # divide by (1 - t) as long as it divides
    mult = 0
    while any(h) and sum(h) == 0:
        q, acc = [], 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = q or [0]
        mult += 1
    if not any(h):
        raise ValueError("the quotient is zero")
    if mult != n - 1:
        raise ValueError(f"quotient has Krull dimension {n - mult}, expected 1")
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    reg = len(h) - 1
    if reg > limit:
        raise ResourceError("hilbert_degree", limit, reg)
    values, acc = [], 0
    for c in h:
        acc += c
        values.append(acc)
    degree = values[-1]
    # least d with H(d) = degree (h may in principle end with cancellations)
    first = next(i for i, x in enumerate(values) if x == degree and all(
        y == degree for y in values[i:]))
    return HilbertData(tuple(values[:first + 1]), first, degree, tuple(h))


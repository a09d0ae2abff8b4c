"""Numerical semigroups N*g_1 + ... + N*g_n.

Membership, witnesses, Apery sets and Frobenius numbers, the gluing search
deciding whether the toric ideal of the generator list is a complete
intersection, and Herzog's construction for three generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .caps import ResourceError, ValidationError, cap
from .lattice_ideal import Binomial

INF = float("inf")


@dataclass(frozen=True)
class NumericalSemigroup:
    """Generator list of a numerical semigroup, kept exactly as given.

    Duplicates and non-minimal generators are allowed: the toric ideal
    depends on the list, not only on the semigroup.
    """

    gens: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(int(g) for g in self.gens))
        if not self.gens:
            raise ValidationError("a semigroup needs at least one generator")
        if any(g < 1 for g in self.gens):
            raise ValidationError(f"generators must be positive, got {list(self.gens)}")
        if reduce(gcd, self.gens) != 1:
            raise ValidationError(f"gcd of {list(self.gens)} is not 1")

    @property
    def n(self) -> int:
        return len(self.gens)


def _gens(s) -> tuple[int, ...]:
    return s.gens if isinstance(s, NumericalSemigroup) else tuple(int(g) for g in s)


def _reach(c: int, gens: Sequence[int]) -> int:
    """Bitset of the members of <gens> in [0, c]."""
    if c > cap("member"):
        raise ResourceError("member", cap("member"), c)
    mask = (1 << (c + 1)) - 1
    bits = 1
    for g in sorted(set(gens)):
        step = g
        while step <= c:
            bits |= (bits << step) & mask
            step *= 2
    return bits


def is_member(c: int, s) -> bool:
    """Whether c is a nonnegative integer combination of the generators."""
    if c < 0:
        return False
    return bool(_reach(c, _gens(s)) >> c & 1)


def representation(c: int, s) -> list[int] | None:
    """Exponents e with sum e_i g_i = c, or None.

    Among all representations returns the one with the largest e_0, then the
    largest e_1, and so on (so 20 in <5,6,7> gives [4,0,0]).
    """
    gens = _gens(s)
    if c < 0:
        return None
    # suffix[k]: bitset of members of <gens[k:]> up to c
    suffix = [0] * (len(gens) + 1)
    suffix[-1] = 1
    for k in range(len(gens) - 1, -1, -1):
        suffix[k] = _reach(c, gens[k:])
    if not suffix[0] >> c & 1:
        return None
    out, rest = [], c
    for k, g in enumerate(gens):
        e = rest // g
        while not suffix[k + 1] >> (rest - e * g) & 1:
            e -= 1
        out.append(e)
        rest -= e * g
    assert rest == 0
    return out


def apery_set(s, m: int | None = None) -> list[int]:
    """Least member of the semigroup in each residue class mod m.

    Round-robin shortest-path relaxation over the residues (m = min(gens)).
    """
    gens = _gens(s)
    if m is None:
        m = min(gens)
    if m != min(gens):
        raise ValidationError("apery_set expects m = min(gens)")
    w = [INF] * m
    w[0] = 0
    for a in gens:
        if a == m:
            continue
        step = gcd(a, m)
        for r in range(step):
            cls = range(r, m, step)
            start = min(cls, key=lambda i: w[i])
            if w[start] == INF:
                continue
            cur, pos = w[start], start
            for _ in range(m // step):
                pos = (pos + a) % m
                cur = min(cur + a, w[pos])
                w[pos] = cur
    if any(x == INF for x in w):
        raise ValidationError(f"gcd of {list(gens)} is not 1")
    return [int(x) for x in w]


def frobenius_bruteforce(s) -> int:
    """Largest integer outside the semigroup; -1 when 1 is a generator."""
    gens = _gens(s)
    if reduce(gcd, gens) != 1:
        raise ValidationError(f"gcd of {list(gens)} is not 1")
    return max(apery_set(gens)) - min(gens)


@dataclass
class GlueNode:
    """Internal node of a gluing tree: gens[A] glued to gens[B] along lcm(a, b)."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    a: int
    b: int
    glue: int
    left_rep: list[int]
    right_rep: list[int]
    children: list["GlueNode"] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "A": [i + 1 for i in self.left],
            "B": [i + 1 for i in self.right],
            "a": self.a,
            "b": self.b,
            "glue": self.glue,
            "rep_A": self.left_rep,
            "rep_B": self.right_rep,
            "children": [c.to_dict() for c in self.children],
        }


@dataclass
class CIDecomposition:
    is_ci: bool
    tree: GlueNode | None = None
    generators: list[Binomial] | None = None
    frobenius: int | None = None


def _glue_search(gens: tuple[int, ...], memo: dict):
    """Return (tree, binomials in local coordinates) or None when not CI.

    The gens here always have gcd 1.
    """
    if gens in memo:
        return memo[gens]
    n = len(gens)
    result = None
    if n == 1:
        result = (None, [])
    elif n == 2:
        m1, m2 = gens
        g = gcd(m1, m2)
        result = (
            GlueNode((0,), (1,), m1, m2, lcm(m1, m2), [m2 // g], [m1 // g]),
            [Binomial.make((m2 // g, 0), (0, m1 // g))],
        )
    else:
        rest = range(1, n)
        for k in range(0, n - 1):
            for extra in combinations(rest, k):
                left = (0,) + extra
                right = tuple(i for i in rest if i not in extra)
                result = _try_split(gens, left, right, memo)
                if result is not None:
                    break
            if result is not None:
                break
    memo[gens] = result
    return result


def _try_split(gens, left, right, memo):
    n = len(gens)
    ga = [gens[i] for i in left]
    gb = [gens[i] for i in right]
    a, b = reduce(gcd, ga), reduce(gcd, gb)
    glue = lcm(a, b)
    sa = tuple(x // a for x in ga)
    sb = tuple(x // b for x in gb)
    rep_a = representation(glue // a, sa)
    if rep_a is None:
        return None
    rep_b = representation(glue // b, sb)
    if rep_b is None:
        return None
    sub_a = _glue_search(sa, memo)
    if sub_a is None:
        return None
    sub_b = _glue_search(sb, memo)
    if sub_b is None:
        return None

    def embed(local: Binomial, idx) -> Binomial:
        p, m = [0] * n, [0] * n
        for k, i in enumerate(idx):
            p[i], m[i] = local.plus[k], local.minus[k]
        return Binomial.make(p, m)

    plus, minus = [0] * n, [0] * n
    for k, i in enumerate(left):
        plus[i] = rep_a[k]
    for k, i in enumerate(right):
        minus[i] = rep_b[k]
    binoms = [embed(g, left) for g in sub_a[1]] + [embed(g, right) for g in sub_b[1]]
    binoms.append(Binomial.make(plus, minus))
    node = GlueNode(left, right, a, b, glue, rep_a, rep_b)
    for child, idx in ((sub_a[0], left), (sub_b[0], right)):
        if child is not None:
            node.children.append(_relabel(child, idx))
    return node, binoms


def _relabel(node: GlueNode, idx) -> GlueNode:
    return GlueNode(
        tuple(idx[i] for i in node.left),
        tuple(idx[i] for i in node.right),
        node.a, node.b, node.glue, node.left_rep, node.right_rep,
        [_relabel(c, idx) for c in node.children],
    )


def ci_gluing(s) -> CIDecomposition:
    """Decide whether the toric ideal of the generator list is a complete
    intersection by recursive gluing; on success return n - 1 generators
    (sorted by weighted degree) and the Frobenius number they determine."""
    gens = _gens(s)
    if not gens:
        raise ValidationError("ci_gluing needs at least one generator")
    NumericalSemigroup(gens)
    found = _glue_search(gens, {})
    if found is None:
        return CIDecomposition(is_ci=False)
    tree, binoms = found
    binoms = sorted(binoms, key=lambda g: g.degree(gens))
    frob = sum(g.degree(gens) for g in binoms) - sum(gens)
    return CIDecomposition(True, tree, binoms, frob)


def herzog3(s) -> list[Binomial]:
    """Generators of the toric ideal of a minimal three-generator semigroup.

    For each i let c_i be the least positive multiple with c_i g_i in the
    semigroup of the other two.  If some witness has a zero entry the ideal
    is a complete intersection and the two gluing binomials are returned;
    otherwise the three critical binomials t_i^{c_i} - t_j^{r_ij} t_k^{r_ik}.
    Output is sorted by weighted degree.
    """
    gens = _gens(s)
    if len(gens) != 3:
        raise ValidationError("herzog3 needs exactly three generators")
    NumericalSemigroup(gens)
    for i in range(3):
        others = [gens[j] for j in range(3) if j != i]
        if is_member(gens[i], others):
            raise ValidationError(f"generator {gens[i]} lies in <{others[0]},{others[1]}>")
    crit = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        c = 1
        while (rep := representation(c * gens[i], (gens[j], gens[k]))) is None:
            c += 1
        crit.append((i, j, k, c, rep))
    if any(0 in rep for *_, rep in crit):
        dec = ci_gluing(gens)
        assert dec.is_ci, f"Herzog witness says CI but gluing failed for {gens}"
        return dec.generators
    out = []
    for i, j, k, c, (rj, rk) in crit:
        p, m = [0, 0, 0], [0, 0, 0]
        p[i], m[j], m[k] = c, rj, rk
        out.append(Binomial.make(p, m))
    return sorted(out, key=lambda g: g.degree(gens))

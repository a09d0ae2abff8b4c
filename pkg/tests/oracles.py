"""Slow, independent reference implementations used only by the tests.

Nothing here imports tik; each routine takes the dumbest route that is still
fast enough for small inputs.
"""

from functools import reduce
from itertools import combinations, product
from math import gcd, lcm

import sympy


def naive_order(x, q):
    """Multiplicative order of x mod q by repeated multiplication."""
    k, y = 1, x % q
    while y != 1:
        y = y * x % q
        k += 1
    return k


def naive_primitive_root(q):
    return next(g for g in range(2, q) if naive_order(g, q) == q - 1)


def naive_members(gens, limit):
    """Set of semigroup elements <= limit, by closure under adding generators."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y <= limit and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def schur_bound(gens):
    a = sorted(gens)
    return max(0, (a[0] - 1) * (a[-1] - 1))


def naive_frobenius(gens):
    if 1 in gens:
        return -1
    bound = schur_bound(gens)
    members = naive_members(gens, bound)
    gaps = [x for x in range(bound + 1) if x not in members]
    return max(gaps) if gaps else -1


def naive_representations(c, gens):
    """All exponent vectors e with sum e_i * gens_i == c."""
    if not gens:
        return [[]] if c == 0 else []
    out = []
    for k in range(c // gens[0] + 1):
        for rest in naive_representations(c - k * gens[0], gens[1:]):
            out.append([k] + rest)
    return out


def naive_apery(gens, m):
    limit = m * max(gens) + schur_bound(gens) + m
    members = sorted(naive_members(gens, limit))
    out = []
    for res in range(m):
        out.append(next(x for x in members if x % m == res))
    return out


def minor_gcd(rows, k):
    """gcd of all k x k minors of an integer matrix."""
    n = len(rows[0])
    g = 0
    for rs in combinations(range(len(rows)), k):
        for cs in combinations(range(n), k):
            g = gcd(g, int(sympy.Matrix([[rows[i][j] for j in cs] for i in rs]).det()))
    return g


def same_lattice(a, b):
    """Row spans over Z agree, via ranks and gcds of maximal minors."""
    ra = sympy.Matrix(a).rank()
    rb = sympy.Matrix(b).rank()
    both = list(a) + list(b)
    if not (ra == rb == sympy.Matrix(both).rank()):
        return False
    g = minor_gcd(both, ra)
    return minor_gcd(list(a), ra) == g == minor_gcd(list(b), ra)


def monomials_of_degree(n, deg, weights=None):
    w = weights or [1] * n
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            if left % w[i] == 0:
                out.append(tuple(acc + [left // w[i]]))
            return
        for k in range(left // w[i] + 1):
            rec(i + 1, left - k * w[i], acc + [k])

    rec(0, deg, [])
    return out


def count_standard(leads, n, deg):
    """Monomials of degree deg divisible by no leading monomial."""
    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    return sum(1 for m in monomials_of_degree(n, deg)
               if not any(divides(a, m) for a in leads))


def rank_mod_p(rows, p):
    """Gaussian elimination over F_p on a list of int lists."""
    rows = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def naive_torus_points(q, v):
    """Points of X with first nonzero coordinate scaled to 1."""
    n = len(v)
    pts = set()
    for xs in product(range(1, q), repeat=n):
        p = [pow(x, e, q) for x, e in zip(xs, v)]
        inv = pow(p[0], -1, q)
        pts.add(tuple(c * inv % q for c in p))
    return sorted(pts)


def naive_hilbert(q, pts, deg):
    """Rank of the evaluation matrix of all degree-deg monomials."""
    n = len(pts[0])
    rows = []
    for m in monomials_of_degree(n, deg):
        rows.append([reduce(lambda acc, ie: acc * pow(ie[1], m[ie[0]], q) % q,
                            enumerate(p), 1) for p in pts])
    return rank_mod_p(rows, q)


def lcm_list(xs):
    return reduce(lcm, xs, 1)


def groebner_exprs(exprs, gens, order):
    return sorted(str(e) for e in sympy.groebner(exprs, *gens, order=order).exprs)


def binomial_expr(b, ts):
    """sympy expression for a tik-like binomial given (plus, minus)."""
    plus, minus = b
    return sympy.Mul(*[t**e for t, e in zip(ts, plus)]) - sympy.Mul(*[t**e for t, e in zip(ts, minus)])


def sympy_reduced_gb(pairs, n):
    """Reduced grevlex GB of pure binomials, as sorted strings."""
    ts = sympy.symbols(f"t1:{n + 1}")
    exprs = [binomial_expr(p, ts) for p in pairs]
    return groebner_exprs(exprs, ts, "grevlex")


def sympy_saturation(pairs, n):
    """(I : (t1...tn)^inf) via elimination of an extra variable, then a
    grevlex reduced GB."""
    ts = sympy.symbols(f"t1:{n + 1}")
    u = sympy.Symbol("u")
    exprs = [binomial_expr(p, ts) for p in pairs] + [1 - u * sympy.Mul(*ts)]
    G = sympy.groebner(exprs, u, *ts, order="lex").exprs
    kept = [g for g in G if u not in g.free_symbols]
    return groebner_exprs(kept, ts, "grevlex")

"""Pure-difference binomials, their gradings, and integer lattices.

Monomials are plain tuples of nonnegative exponents.  A binomial t^a - t^b is
stored oriented: at the last coordinate where a and b differ, ``plus`` has the
smaller exponent.  For homogeneous binomials this is the reverse-lexicographic
tie break of grevlex, and it reproduces the sign convention of the classical
examples (t2^2 - t1*t3, t1 - t2^2*t3, t1^9 - t2^4*t3^5, ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

Monomial = tuple[int, ...]


def revlex_larger(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return x < y
    return False


@dataclass(frozen=True, order=True)
class Binomial:
    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("monomials of a binomial must have equal length")
        if any(e < 0 for e in self.plus + self.minus):
            raise ValueError("exponents must be nonnegative")
        if self.plus == self.minus:
            raise ValueError("t^a - t^a is the zero polynomial")

    @classmethod
    def make(cls, a: Iterable[int], b: Iterable[int]) -> "Binomial":
        """Build t^a - t^b (or t^b - t^a) in canonical orientation."""
        a, b = tuple(int(x) for x in a), tuple(int(x) for x in b)
        if revlex_larger(b, a):
            a, b = b, a
        return cls(a, b)

    @classmethod
    def from_vector(cls, c: Iterable[int]) -> "Binomial":
        c = tuple(c)
        return cls.make((max(x, 0) for x in c), (max(-x, 0) for x in c))

    @property
    def n(self) -> int:
        return len(self.plus)

    @property
    def hat(self) -> tuple[int, ...]:
        return tuple(x - y for x, y in zip(self.plus, self.minus))

    def is_disjoint(self) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.plus, self.minus))

    def cancel(self) -> "Binomial":
        """Divide out the common monomial factor."""
        return Binomial.from_vector(self.hat)

    def degree(self, weights: Sequence[int] | None = None) -> int:
        """Weighted degree of ``plus`` (standard degree when weights is None)."""
        if weights is None:
            return sum(self.plus)
        return sum(w * e for w, e in zip(weights, self.plus))

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            return sum(self.plus) == sum(self.minus)
        return sum(w * (x - y) for w, x, y in zip(weights, self.plus, self.minus)) == 0

    def __str__(self) -> str:
        return f"{format_monomial(self.plus)} - {format_monomial(self.minus)}"


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"t{i}")
        elif e > 1:
            parts.append(f"t{i}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^t(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    exps = [0] * n
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(m.group(1)) - 1
        if not 0 <= i < n:
            raise ValueError(f"variable t{i + 1} out of range for n={n}")
        exps[i] += int(m.group(2) or 1)
    return tuple(exps)


def parse_binomial(text: str, n: int) -> Binomial:
    """Inverse of ``str(Binomial)``; accepts either orientation."""
    left, sep, right = text.partition(" - ")
    if not sep:
        raise ValueError(f"expected 'mono - mono', got {text!r}")
    return Binomial.make(parse_monomial(left, n), parse_monomial(right, n))


@dataclass(frozen=True)
class GradedBinomialSet:
    """Binomials homogeneous for the grading deg t_i = weights[i]."""

    weights: tuple[int, ...]
    binomials: tuple[Binomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "binomials", tuple(self.binomials))
        if any(w < 1 for w in self.weights):
            raise ValueError("grading weights must be positive")
        for g in self.binomials:
            if g.n != len(self.weights):
                raise ValueError(f"{g} has {g.n} variables, expected {len(self.weights)}")
            if not g.is_homogeneous(self.weights):
                raise ValueError(f"{g} is not homogeneous for weights {self.weights}")

    @classmethod
    def standard(cls, binomials: Iterable[Binomial], n: int) -> "GradedBinomialSet":
        return cls((1,) * n, tuple(binomials))

    @property
    def n(self) -> int:
        return len(self.weights)

    def degrees(self) -> list[int]:
        return [g.degree(self.weights) for g in self.binomials]

    def __iter__(self):
        return iter(self.binomials)

    def __len__(self):
        return len(self.binomials)


def hnf(rows: Iterable[Sequence[int]], n: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form of an integer matrix; zero rows dropped.

    Pivots are positive and entries above a pivot lie in [0, pivot).
    """
    A = [list(map(int, r)) for r in rows]
    if n is None:
        n = len(A[0]) if A else 0
    A = [r for r in A if any(r)]
    m = len(A)
    p = 0
    for col in range(n):
        if p == m:
            break
        while True:
            nz = [i for i in range(p, m) if A[i][col] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(A[i][col]))
            A[p], A[k] = A[k], A[p]
            piv = A[p][col]
            clean = True
            for i in range(p + 1, m):
                if A[i][col]:
                    f = A[i][col] // piv
                    A[i] = [x - f * y for x, y in zip(A[i], A[p])]
                    if A[i][col]:
                        clean = False
            if clean:
                break
        if p < m and A[p][col] != 0:
            if A[p][col] < 0:
                A[p] = [-x for x in A[p]]
            piv = A[p][col]
            for i in range(p):
                f = A[i][col] // piv
                if f:
                    A[i] = [x - f * y for x, y in zip(A[i], A[p])]
            p += 1
    return tuple(tuple(r) for r in A[:p])


@dataclass(frozen=True)
class IntegerLattice:
    """A subgroup of Z^n given by a basis; equality is HNF equality."""

    basis: tuple[tuple[int, ...], ...]
    n: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], n: int) -> "IntegerLattice":
        return cls(hnf(rows, n), n)

    @property
    def canonical(self) -> tuple[tuple[int, ...], ...]:
        return self.basis

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, c: Sequence[int]) -> bool:
        return hnf(self.basis + (tuple(c),), self.n) == self.basis


def kernel_basis(d: Sequence[int]) -> IntegerLattice:
    """ker(c -> sum c_i d_i), spanned by the pairwise relations
    (d_j/g) e_i - (d_i/g) e_j, g = gcd(d_i, d_j)."""
    d = [int(x) for x in d]
    n = len(d)
    if n < 2 or any(x < 1 for x in d):
        raise ValueError("kernel_basis needs n >= 2 positive integers")
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            row = [0] * n
            row[i] = d[j] // g
            row[j] = -(d[i] // g)
            rows.append(row)
    lat = IntegerLattice.from_rows(rows, n)
    assert lat.rank == n - 1, f"kernel of {d} has rank {lat.rank}"
    return lat


def dilate(lat: IntegerLattice, d: Sequence[int]) -> IntegerLattice:
    """Image of the lattice under the diagonal map e_i -> d_i e_i."""
    if len(d) != lat.n:
        raise ValueError("dimension mismatch")
    return IntegerLattice.from_rows(
        ([c * w for c, w in zip(row, d)] for row in lat.basis), lat.n
    )


def transfer(g: Binomial, d: Sequence[int]) -> Binomial:
    """Substitute t_i -> t_i^{d_i}."""
    if len(d) != g.n:
        raise ValueError("dimension mismatch")
    return Binomial.make(
        (e * w for e, w in zip(g.plus, d)), (e * w for e, w in zip(g.minus, d))
    )


def toric_relations(d: Sequence[int]) -> GradedBinomialSet:
    """t_i^{c_ij} - t_j^{c_ij} with c_ij = lcm(d_i, d_j), for all i < j."""
    n = len(d)
    if n < 2:
        raise ValueError("need n >= 2")
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            c = lcm(d[i], d[j])
            a, b = [0] * n, [0] * n
            a[i], b[j] = c, c
            out.append(Binomial.make(a, b))
    return GradedBinomialSet.standard(out, n)


def spans_lattice(bs: Iterable[Binomial], lat: IntegerLattice) -> bool:
    """Whether the hat-vectors of the binomials span exactly ``lat``."""
    return hnf((g.hat for g in bs), lat.n) == lat.basis

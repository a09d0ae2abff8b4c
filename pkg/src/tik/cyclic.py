"""Orders of powers of a primitive root of F_q and the reduction by their gcd."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from sympy import factorint, isprime

from .caps import ValidationError


@dataclass(frozen=True)
class TorusSpec:
    """A degenerate projective torus over F_q parameterized by x_i^{v_i}."""

    q: int
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if not isinstance(self.q, int) or self.q < 3 or not isprime(self.q):
            raise ValidationError(f"q must be an odd prime, got {self.q!r}")
        if len(self.v) < 2:
            raise ValidationError("need at least two exponents v_i")
        if any(x < 1 for x in self.v):
            raise ValidationError(f"exponents v_i must be positive, got {list(self.v)}")

    @property
    def n(self) -> int:
        return len(self.v)


@dataclass(frozen=True)
class OrderData:
    d: tuple[int, ...]
    r: int
    dprime: tuple[int, ...]


def element_orders(spec: TorusSpec) -> list[int]:
    """Return d_i = |<beta^{v_i}>| = (q-1)/gcd(q-1, v_i).

    The order does not depend on which primitive root beta is used.
    """
    if not isinstance(spec, TorusSpec):
        raise TypeError("element_orders expects a TorusSpec")
    m = spec.q - 1
    return [m // gcd(m, vi) for vi in spec.v]


def reduce_orders(d) -> OrderData:
    d = tuple(int(x) for x in d)
    if not d or any(x < 1 for x in d):
        raise ValidationError("orders must be a nonempty list of positive integers")
    r = reduce(gcd, d)
    return OrderData(d=d, r=r, dprime=tuple(x // r for x in d))


def primitive_root(q: int) -> int:
    """Smallest generator of (Z/q)^*."""
    if q < 3 or not isprime(q):
        raise ValidationError(f"q must be an odd prime, got {q!r}")
    m = q - 1
    primes = list(factorint(m))
    for g in range(2, q):
        if all(pow(g, m // p, q) != 1 for p in primes):
            return g
    raise AssertionError("unreachable: a prime field always has a primitive root")

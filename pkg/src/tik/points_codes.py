"""Ground truth by brute force: the points of X over F_q, the Hilbert
function as a rank over F_q, and parameters of the evaluation codes C_X(d)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd, prod

import numpy as np

from .caps import ResourceError, cap
from .cyclic import TorusSpec, element_orders, primitive_root


@dataclass(frozen=True)
class ProjectivePointSet:
    """Torus points scaled so that the first coordinate is 1, sorted."""

    q: int
    points: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class CodeParams:
    d: int
    length: int
    dimension: int
    min_distance: int | None = None


def enumerate_points(spec: TorusSpec, max_points: int | None = None) -> ProjectivePointSet:
    q = spec.q
    d = element_orders(spec)
    total = prod(d)
    limit = cap("points", max_points)
    if total > limit:
        raise ResourceError("points", limit, total)
    beta = primitive_root(q)
    cyclic = []
    for vi, di in zip(spec.v, d):
        h = pow(beta, vi, q)
        cyclic.append([pow(h, k, q) for k in range(di)])
    seen = set()
    for x in product(*cyclic):
        inv = pow(x[0], q - 2, q)
        seen.add(tuple(xi * inv % q for xi in x))
    expected = total // reduce(gcd, d)
    assert len(seen) == expected, f"|X| = {len(seen)}, expected {expected}"
    return ProjectivePointSet(q, tuple(sorted(seen)))


class _EchelonSpace:
    """Row space over F_q kept in reduced row echelon form.

    Vectors are added in blocks; the heavy updates are matrix products.
    Storage is float64 whenever every intermediate integer stays below
    2^53 (exact), and Python integers otherwise.
    """

    block = 128

    def __init__(self, q: int, length: int):
        self.q = q
        self.exact_float = q * q * max(length, 1) < 2**53
        self.dtype = np.float64 if self.exact_float else object
        self._rows = np.zeros((length, length), dtype=self.dtype)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> np.ndarray:
        out = self._rows[:self.rank]
        return out.astype(np.int64) if self.exact_float else out

    def _mod(self, x: np.ndarray) -> np.ndarray:
        if not self.exact_float:
            return x % self.q
        # np.mod on floats is slow.  For integers |x| < 2^53, floor(x / q) is
        # exact, so the remainder below is exact and lies in [0, q).
        t = x / self.q
        np.floor(t, out=t)
        t *= self.q
        return np.subtract(x, t, out=t)

    def _mulmod(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return self._mod(A @ B)

    def add(self, vecs: np.ndarray) -> list[bool]:
        """Insert vectors in order; flag those independent of their predecessors."""
        vecs = self._mod(np.asarray(vecs).astype(self.dtype))
        flags: list[bool] = []
        for start in range(0, vecs.shape[0], self.block):
            flags += self._add_block(vecs[start:start + self.block])
        return flags

    def _add_block(self, chunk: np.ndarray) -> list[bool]:
        q = self.q
        k = self.rank
        basis = self._rows[:k]
        if k:
            chunk = self._mod(chunk - chunk[:, self.pivots] @ basis)
        fresh = np.zeros_like(chunk)
        piv: list[int] = []
        flags = []
        for row in chunk:
            m = len(piv)
            if m:
                row = self._mod(row - row[piv] @ fresh[:m])
            nz = np.flatnonzero(row)
            if nz.size == 0:
                flags.append(False)
                continue
            col = int(nz[0])
            row = self._mod(row * pow(int(row[col]), q - 2, q))
            if m:
                fresh[:m] = self._mod(fresh[:m] - np.outer(fresh[:m, col], row))
            fresh[m] = row
            piv.append(col)
            flags.append(True)
        if piv:
            block = fresh[:len(piv)]
            if k:
                basis[:] = self._mod(basis - basis[:, piv] @ block)
            self._rows[k:k + len(piv)] = block
            self.pivots += piv
        return flags


def _evaluation_steps(ps: ProjectivePointSet):
    """Yield, for d = 0, 1, 2, ..., the evaluation vectors of degree-d
    monomials that did not occur in lower degrees.

    With the first coordinate normalized to 1, t_1 * m evaluates like m, so
    the degree-d columns contain those of degree d-1; the new ones arise as
    (degree d-1 column) * t_i for i >= 2.  Duplicate columns are dropped,
    which does not change any rank.
    """
    q = ps.q
    pts = np.array(ps.points, dtype=np.int64 if q < 2**31 else object)
    n = pts.shape[1]
    key = (lambda row: row.tobytes()) if pts.dtype != object else (lambda row: tuple(row))
    seen = set()
    layer = np.ones((1, len(ps)), dtype=pts.dtype)
    seen.add(key(layer[0]))
    yield layer
    frontier = layer
    while True:
        cand = np.concatenate([frontier * pts[:, i][None, :] % q for i in range(1, n)])
        fresh = []
        for row in cand:
            k = key(row)
            if k not in seen:
                seen.add(k)
                fresh.append(row)
        frontier = np.array(fresh, dtype=pts.dtype).reshape(len(fresh), len(ps))
        yield frontier
        if not fresh:
            return


def hilbert_profile_by_rank(ps: ProjectivePointSet, max_degree: int | None = None,
                            max_cells: int | None = None) -> list[int]:
    """[H_X(0), H_X(1), ...] as ranks of evaluation matrices.

    Runs to max_degree, or (when None) up to the first degree where the rank
    reaches |X|, after which H_X is constant.
    """
    limit = cap("rank_cells", max_cells)
    if len(ps) ** 2 > limit:
        raise ResourceError("rank_cells", limit, len(ps) ** 2)
    layers = []
    for d, fresh in enumerate(_evaluation_steps(ps)):
        if max_degree is not None and d > max_degree:
            break
        layers.append(fresh)
    space = _EchelonSpace(ps.q, len(ps))
    flags = space.add(np.concatenate(layers))
    profile, pos, rank = [], 0, 0
    for layer in layers:
        rank += sum(flags[pos:pos + layer.shape[0]])
        pos += layer.shape[0]
        profile.append(rank)
    if max_degree is None:
        if len(ps) in profile:
            profile = profile[:profile.index(len(ps)) + 1]
    else:
        # no new evaluation vectors appear past the last layer
        profile += [profile[-1]] * (max_degree + 1 - len(profile))
    return profile


def hilbert_by_rank(ps: ProjectivePointSet, d: int) -> int:
    """H_X(d) = rank of the degree-d evaluation map on X."""
    if d < 0:
        return 0
    return hilbert_profile_by_rank(ps, max_degree=d)[d]


def _code_basis(ps: ProjectivePointSet, d: int) -> np.ndarray:
    layers = [fresh for k, fresh in zip(range(d + 1), _evaluation_steps(ps))]
    space = _EchelonSpace(ps.q, len(ps))
    space.add(np.concatenate(layers))
    return space.rows


def min_distance(basis: np.ndarray, q: int, max_words: int | None = None) -> int:
    """Minimum Hamming weight of the nonzero codewords, by enumeration."""
    k, length = basis.shape
    limit = cap("distance", max_words)
    if q ** k > limit:
        raise ResourceError("distance", limit, q ** k)
    best = length
    chunk = max(1, 2**16 // max(1, k))
    msgs = product(range(q), repeat=k)
    next(msgs)  # skip the zero message
    while True:
        block = np.array(list(_take(msgs, chunk)), dtype=np.int64)
        if block.size == 0:
            return best
        words = block.astype(basis.dtype) @ basis % q
        best = min(best, int(np.count_nonzero(words, axis=1).min()))


def _take(it, k):
    for _ in range(k):
        try:
            yield next(it)
        except StopIteration:
            return


def code_params(spec: TorusSpec, d: int, want_distance: bool = False) -> CodeParams:
    ps = enumerate_points(spec)
    basis = _code_basis(ps, d)
    dist = min_distance(basis, spec.q) if want_distance and basis.shape[0] else None
    return CodeParams(d, len(ps), int(basis.shape[0]), dist)

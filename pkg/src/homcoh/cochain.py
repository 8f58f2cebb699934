"""Multilinear maps as dense coefficient tensors and canonical bases of
the twist-compatible (and alternating) cochain spaces.

Coefficient layout, fixed because canonical bases depend on it: the flat
array is indexed row-major lexicographically over the argument tuple
(i_1, ..., i_k), with the target coordinate innermost.

The alternating space solvers work internally in reduced coordinates (one
unknown per strictly increasing argument tuple) purely as a solver detail;
the returned basis elements are always full dense tensors.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

from .algebra import HomAlgebra
from .errors import ArityLimitError, UsageError
from .exact import (Matrix, Vector, nullspace_basis, solve, vec_is_zero,
                    zero_vector)

HOM = "hom"
LIE = "lie"

_DEFAULT_MAX_ARITY = 4


def max_arity() -> int:
    raw = os.environ.get("HOMCOH_MAX_ARITY", "")
    try:
        return int(raw) if raw else _DEFAULT_MAX_ARITY
    except ValueError:
        return _DEFAULT_MAX_ARITY


def _check_arity_guard(k: int):
    limit = max_arity()
    if k > limit:
        raise ArityLimitError(
            f"cochain arity {k} exceeds limit {limit}; "
            f"raise HOMCOH_MAX_ARITY to override")


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _sort_sign(t) -> tuple[tuple[int, ...], int]:
    """Sorted tuple and the sign of the sorting permutation (0 on repeats)."""
    if len(set(t)) != len(t):
        return tuple(sorted(t)), 0
    order = sorted(range(len(t)), key=lambda p: t[p])
    return tuple(t[p] for p in order), permutation_sign(order)


@dataclass(frozen=True)
class MultilinearMap:
    """Arity-k map between coordinate spaces, stored on basis tuples."""

    arity: int
    source_dim: int
    target_dim: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        expected = self.source_dim ** self.arity * self.target_dim
        if len(self.coeffs) != expected:
            raise UsageError(
                f"coefficient array must have length {expected}, "
                f"got {len(self.coeffs)}")

    @classmethod
    def zero(cls, arity: int, source_dim: int, target_dim: int) -> "MultilinearMap":
        size = source_dim ** arity * target_dim
        return cls(arity, source_dim, target_dim, (Fraction(0),) * size)

    @classmethod
    def from_values(cls, arity: int, source_dim: int, target_dim: int,
                    values: dict) -> "MultilinearMap":
        """Build from a sparse {argument tuple: output vector} dict."""
        coeffs = [Fraction(0)] * (source_dim ** arity * target_dim)
        for t, vec in values.items():
            if len(t) != arity or any(not 0 <= i < source_dim for i in t):
                raise UsageError(f"bad argument tuple {t}")
            off = cls._offset_static(t, source_dim, target_dim)
            for r, x in enumerate(vec):
                coeffs[off + r] = Fraction(x)
        return cls(arity, source_dim, target_dim, tuple(coeffs))

    @classmethod
    def from_matrix(cls, m: Matrix) -> "MultilinearMap":
        """Arity-1 map from a (target_dim x source_dim) matrix."""
        vals = {(j,): m.column(j) for j in range(m.cols)}
        return cls.from_values(1, m.cols, m.rows, vals)

    @classmethod
    def constant(cls, source_dim: int, vector) -> "MultilinearMap":
        """Arity-0 map, i.e. an element of the target space."""
        return cls(0, source_dim, len(vector),
                   tuple(Fraction(x) for x in vector))

    @staticmethod
    def _offset_static(t, source_dim: int, target_dim: int) -> int:
        off = 0
        for i in t:
            off = off * source_dim + i
        return off * target_dim

    def _offset(self, t) -> int:
        return self._offset_static(t, self.source_dim, self.target_dim)

    def value_on_basis(self, t) -> Vector:
        off = self._offset(t)
        return self.coeffs[off:off + self.target_dim]

    def evaluate(self, args) -> Vector:
        """Multilinear extension to arbitrary coordinate vectors."""
        if len(args) != self.arity:
            raise UsageError(f"expected {self.arity} arguments, got {len(args)}")
        cur = list(self.coeffs)
        size = len(cur)
        for arg in args:
            if len(arg) != self.source_dim:
                raise UsageError("argument length != source_dim")
            block = size // self.source_dim
            nxt = [Fraction(0)] * block
            for i, a in enumerate(arg):
                if a:
                    base = i * block
                    for off in range(block):
                        c = cur[base + off]
                        if c:
                            nxt[off] += a * c
            cur = nxt
            size = block
        return tuple(cur)

    def __add__(self, other: "MultilinearMap") -> "MultilinearMap":
        self._require_same_shape(other)
        return MultilinearMap(self.arity, self.source_dim, self.target_dim,
                              tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "MultilinearMap") -> "MultilinearMap":
        self._require_same_shape(other)
        return MultilinearMap(self.arity, self.source_dim, self.target_dim,
                              tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "MultilinearMap":
        return self.scale(-1)

    def scale(self, c) -> "MultilinearMap":
        c = Fraction(c)
        return MultilinearMap(self.arity, self.source_dim, self.target_dim,
                              tuple(c * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def _require_same_shape(self, other: "MultilinearMap"):
        if (self.arity, self.source_dim, self.target_dim) != (
                other.arity, other.source_dim, other.target_dim):
            raise UsageError("multilinear map shapes differ")

    def nonzero_entries(self):
        """Yield (argument tuple, output vector) with nonzero output."""
        for t in product(range(self.source_dim), repeat=self.arity):
            v = self.value_on_basis(t)
            if not vec_is_zero(v):
                yield t, v


def is_alternating(m: MultilinearMap) -> bool:
    if m.arity < 2:
        return True
    for t in product(range(m.source_dim), repeat=m.arity):
        srt, sign = _sort_sign(t)
        ref = m.value_on_basis(srt)
        val = m.value_on_basis(t)
        expect = zero_vector(m.target_dim) if sign == 0 else \
            tuple(sign * x for x in ref)
        if val != expect:
            return False
    return True


def is_compatible(m: MultilinearMap, alpha: Matrix, beta: Matrix) -> bool:
    """Does beta∘m equal m∘(alpha tensor ... tensor alpha)?"""
    cols = [alpha.column(j) for j in range(alpha.cols)]
    for t in product(range(m.source_dim), repeat=m.arity):
        lhs = beta.matvec(m.value_on_basis(t))
        rhs = m.evaluate([cols[i] for i in t])
        if lhs != rhs:
            return False
    return True


def alternator(m: MultilinearMap) -> MultilinearMap:
    """Average of signed argument permutations; projects onto alternating
    maps and fixes alternating input."""
    k = m.arity
    if k < 2:
        return m
    norm = Fraction(1, factorial(k))
    coeffs = [Fraction(0)] * len(m.coeffs)
    for t in product(range(m.source_dim), repeat=k):
        acc = [Fraction(0)] * m.target_dim
        for perm in permutations(range(k)):
            sign = permutation_sign(perm)
            val = m.value_on_basis(tuple(t[p] for p in perm))
            for r, x in enumerate(val):
                if x:
                    acc[r] += sign * x
        off = m._offset(t)
        for r in range(m.target_dim):
            coeffs[off + r] = norm * acc[r]
    return MultilinearMap(k, m.source_dim, m.target_dim, tuple(coeffs))


@dataclass(frozen=True)
class CochainSpace:
    arity: int
    flavor: str  # "hom" | "lie"
    source: HomAlgebra
    target_dim: int
    beta: Matrix
    basis: tuple[MultilinearMap, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coords) -> MultilinearMap:
        out = MultilinearMap.zero(self.arity, self.source.dim, self.target_dim)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def coordinates(self, m: MultilinearMap) -> Vector | None:
        """Coordinates of m in this basis, or None if outside the span."""
        if not self.basis:
            return () if m.is_zero() else None
        cols = [b.coeffs for b in self.basis]
        return solve(Matrix.from_columns(cols), m.coeffs)


def hom_cochain_basis(source: HomAlgebra, target_dim: int, beta: Matrix,
                      arity: int) -> CochainSpace:
    """Canonical basis of {f : beta∘f = f∘alpha^(tensor arity)}.

    Arity 0 is the full target space (no structure-map constraint there).
    """
    if arity < 0:
        raise UsageError("arity must be >= 0")
    _check_arity_guard(arity)
    n = source.dim
    if arity == 0:
        basis = tuple(
            MultilinearMap.constant(n, [1 if r == s else 0 for r in range(target_dim)])
            for s in range(target_dim))
        return CochainSpace(0, HOM, source, target_dim, beta, basis)
    tuples = list(product(range(n), repeat=arity))
    index = {t: i for i, t in enumerate(tuples)}
    nunk = len(tuples) * target_dim
    alpha_cols = [source.alpha.column(j) for j in range(n)]
    rows = []
    for ti, t in enumerate(tuples):
        # products of alpha-column entries over all image tuples
        contrib: dict[int, Fraction] = {}
        _alpha_tuple_expand(alpha_cols, t, contrib, index)
        for r in range(target_dim):
            row = [Fraction(0)] * nunk
            for s in range(target_dim):
                e = beta.at(r, s)
                if e:
                    row[ti * target_dim + s] += e
            for si, c in contrib.items():
                row[si * target_dim + r] -= c
            rows.append(row)
    basis = []
    for v in nullspace_basis(Matrix.from_rows(rows)):
        basis.append(MultilinearMap(arity, n, target_dim, tuple(v)))
    return CochainSpace(arity, HOM, source, target_dim, beta, tuple(basis))


def _alpha_tuple_expand(alpha_cols, t, out: dict, index):
    """out[tuple index] += product of alpha entries mapping tuple s to t."""
    n = len(alpha_cols)
    partial = [((), Fraction(1))]
    for pos in t:
        col = alpha_cols[pos]
        nxt = []
        for prefix, c in partial:
            for s in range(n):
                e = col[s]
                if e:
                    nxt.append((prefix + (s,), c * e))
        partial = nxt
    for s, c in partial:
        out[index[s]] = out.get(index[s], Fraction(0)) + c


def _expand_alternating(arity: int, source_dim: int, target_dim: int,
                        reduced: dict) -> MultilinearMap:
    """Full tensor of an alternating map given on increasing tuples."""
    coeffs = [Fraction(0)] * (source_dim ** arity * target_dim)
    for t in product(range(source_dim), repeat=arity):
        srt, sign = _sort_sign(t)
        if sign == 0 or srt not in reduced:
            continue
        off = MultilinearMap._offset_static(t, source_dim, target_dim)
        for r, x in enumerate(reduced[srt]):
            if x:
                coeffs[off + r] = sign * x
    return MultilinearMap(arity, source_dim, target_dim, tuple(coeffs))


def _minor_det(alpha: Matrix, row_idx, col_idx) -> Fraction:
    k = len(row_idx)
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for perm in permutations(range(k)):
        sign = permutation_sign(perm)
        prod = Fraction(1)
        for i in range(k):
            prod *= alpha.at(row_idx[perm[i]], col_idx[i])
            if prod == 0:
                break
        if prod:
            total += sign * prod
    return total


def lie_cochain_basis(source: HomAlgebra, target_dim: int, beta: Matrix,
                      arity: int) -> CochainSpace:
    """Canonical basis of the alternating twist-compatible maps.

    Solved on strictly increasing argument tuples; full alternation over
    the rationals follows from the adjacent-transposition relations, so the
    reduced system loses nothing.
    """
    if arity < 0:
        raise UsageError("arity must be >= 0")
    _check_arity_guard(arity)
    n = source.dim
    if arity == 0:
        basis = tuple(
            MultilinearMap.constant(n, [1 if r == s else 0 for r in range(target_dim)])
            for s in range(target_dim))
        return CochainSpace(0, LIE, source, target_dim, beta, basis)
    combos = list(combinations(range(n), arity))
    index = {c: i for i, c in enumerate(combos)}
    nunk = len(combos) * target_dim
    if nunk == 0:
        return CochainSpace(arity, LIE, source, target_dim, beta, ())
    rows = []
    for ti, t in enumerate(combos):
        # f(alpha e_{t_1}, ..., alpha e_{t_k}) expanded over increasing s
        for r in range(target_dim):
            row = [Fraction(0)] * nunk
            for s in range(target_dim):
                e = beta.at(r, s)
                if e:
                    row[ti * target_dim + s] += e
            for s in combos:
                d = _minor_det(source.alpha, s, t)
                if d:
                    row[index[s] * target_dim + r] -= d
            rows.append(row)
    basis = []
    for v in nullspace_basis(Matrix.from_rows(rows)):
        reduced = {c: tuple(v[ci * target_dim:(ci + 1) * target_dim])
                   for ci, c in enumerate(combos)}
        basis.append(_expand_alternating(arity, n, target_dim, reduced))
    return CochainSpace(arity, LIE, source, target_dim, beta, tuple(basis))


def full_multilinear_basis(flavor: str, source: HomAlgebra, target_dim: int,
                           beta: Matrix, arity: int) -> CochainSpace:
    """Basis of all multilinear (hom) or all alternating (lie) maps,
    without the twist-compatibility constraint."""
    _check_arity_guard(arity)
    n = source.dim
    if arity == 0:
        basis = tuple(
            MultilinearMap.constant(n, [1 if r == s else 0 for r in range(target_dim)])
            for s in range(target_dim))
        return CochainSpace(0, flavor, source, target_dim, beta, basis)
    basis = []
    if flavor == HOM:
        size = n ** arity * target_dim
        for u in range(size):
            coeffs = [Fraction(0)] * size
            coeffs[u] = Fraction(1)
            basis.append(MultilinearMap(arity, n, target_dim, tuple(coeffs)))
    elif flavor == LIE:
        for c in combinations(range(n), arity):
            for r in range(target_dim):
                vec = tuple(Fraction(1 if s == r else 0) for s in range(target_dim))
                basis.append(_expand_alternating(arity, n, target_dim, {c: vec}))
    else:
        raise UsageError(f"unknown flavor {flavor!r}")
    return CochainSpace(arity, flavor, source, target_dim, beta, tuple(basis))


@dataclass(frozen=True)
class MorphismCochain:
    """Degree-n cochain of a morphism: a pair of self-valued cochains plus
    an arity-(n-1) connecting cochain from source to target."""

    comp_A: MultilinearMap
    comp_B: MultilinearMap
    comp_AB: MultilinearMap

    def __post_init__(self):
        if self.comp_A.arity != self.comp_B.arity:
            raise UsageError("component arities must agree")
        if self.comp_AB.arity != self.comp_A.arity - 1:
            raise UsageError("connecting component must have arity n-1")

    @property
    def degree(self) -> int:
        return self.comp_A.arity

    def __add__(self, other: "MorphismCochain") -> "MorphismCochain":
        return MorphismCochain(self.comp_A + other.comp_A,
                               self.comp_B + other.comp_B,
                               self.comp_AB + other.comp_AB)

    def scale(self, c) -> "MorphismCochain":
        return MorphismCochain(self.comp_A.scale(c), self.comp_B.scale(c),
                               self.comp_AB.scale(c))

    def is_zero(self) -> bool:
        return (self.comp_A.is_zero() and self.comp_B.is_zero()
                and self.comp_AB.is_zero())

    def flat_coeffs(self) -> tuple[Fraction, ...]:
        return self.comp_A.coeffs + self.comp_B.coeffs + self.comp_AB.coeffs


def morphism_cochain_space(phi, degree: int, flavor: str):
    """The three component spaces at a given degree: arities
    (degree, degree, degree - 1), all twist-compatible."""
    if degree < 1:
        raise UsageError("degree must be >= 1")
    build = hom_cochain_basis if flavor == HOM else lie_cochain_basis
    A, B = phi.source, phi.target
    space_a = build(A, A.dim, A.alpha, degree)
    space_b = build(B, B.dim, B.alpha, degree)
    space_ab = build(A, B.dim, B.alpha, degree - 1)
    return space_a, space_b, space_ab

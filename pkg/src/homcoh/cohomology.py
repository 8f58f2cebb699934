"""Coboundary operators, their matrices on canonical bases, and exact
cocycle/coboundary/cohomology computation for all complex flavors.

Cocycle convention, fixed by the worked examples this tool reproduces and
applied uniformly per flavor:

* Lie-kind complexes: cocycles and coboundaries both live in the
  twist-compatible alternating cochain spaces.
* Associative-kind complexes: the cocycle equation is solved on the full
  multilinear cochain space, while coboundaries come from twist-compatible
  cochains (whose images are automatically cocycles for valid multiplicative
  algebras).

Invalid input algebras degrade to best-effort reports: the delta-squared
failure is detected, reported as a warning, and the coboundary space is
replaced by its intersection with the cocycles so the quotient stays
meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import (ASSOCIATIVE, LIE as LIE_KIND, HomAlgebra, alpha_power,
                      apply_alpha, multiply, validate)
from .bracket import compose_after, diamond
from .cochain import (HOM, LIE, CochainSpace, MorphismCochain, MultilinearMap,
                      full_multilinear_basis, hom_cochain_basis, is_alternating,
                      lie_cochain_basis, morphism_cochain_space)
from .errors import ImageOutsideCodomain, UsageError
from .exact import (Matrix, Vector, column_rank, independent_subset,
                    intersection_basis, nullspace_basis)
from .rep import (Bimodule, HomMorphism, LieModule, adjoint_bimodule,
                  check_morphism, lie_adjoint_module, validate_bimodule,
                  validate_lie_module)

HOM_SELF = "hom_self"
HOM_BIMODULE = "hom_bimodule"
LIE_SELF = "lie_self"
LIE_MODULE = "lie_module"
MORPHISM_HOM = "morphism_hom"
MORPHISM_LIE = "morphism_lie"


def _basis_args(n: int, t) -> list[Vector]:
    return [tuple(Fraction(1 if j == i else 0) for j in range(n)) for i in t]


def _delta_hom(A: HomAlgebra, left, right, target_dim: int,
               f: MultilinearMap) -> MultilinearMap:
    """Shared engine for the associative-kind coboundary formula."""
    n = f.arity
    if n < 1:
        raise UsageError("coboundary needs arity >= 1")
    ap = alpha_power(A, n - 1)
    values = {}
    for t in product(range(A.dim), repeat=n + 1):
        args = _basis_args(A.dim, t)
        alphas = [apply_alpha(A, a) for a in args]
        total = list(left(ap.matvec(args[0]), f.evaluate(args[1:])))
        for k in range(1, n + 1):
            margs = alphas[:k - 1] + [multiply(A, args[k - 1], args[k])] \
                + alphas[k + 1:]
            term = f.evaluate(margs)
            if k % 2:
                total = [x - y for x, y in zip(total, term)]
            else:
                total = [x + y for x, y in zip(total, term)]
        last = right(f.evaluate(args[:n]), ap.matvec(args[n]))
        if (n + 1) % 2:
            total = [x - y for x, y in zip(total, last)]
        else:
            total = [x + y for x, y in zip(total, last)]
        values[t] = tuple(total)
    return MultilinearMap.from_values(n + 1, A.dim, target_dim, values)


def delta_hom_self(A: HomAlgebra, f: MultilinearMap) -> MultilinearMap:
    """Coboundary of a self-valued cochain of an associative-kind algebra."""
    if A.kind != ASSOCIATIVE:
        raise UsageError("delta_hom_self needs an associative-kind algebra")
    if f.source_dim != A.dim or f.target_dim != A.dim:
        raise UsageError("cochain dimensions do not match the algebra")
    return _delta_hom(A, lambda x, m: multiply(A, x, m),
                      lambda m, x: multiply(A, m, x), A.dim, f)


def delta_hom_bimodule(A: HomAlgebra, M: Bimodule,
                       f: MultilinearMap) -> MultilinearMap:
    """Coboundary with values in a bimodule: first slot acts from the left,
    last slot from the right, inner slots get the twisted insertions."""
    if M.algebra != A:
        raise UsageError("bimodule does not belong to the given algebra")
    if f.source_dim != A.dim or f.target_dim != M.carrier_dim:
        raise UsageError("cochain dimensions do not match algebra/module")
    return _delta_hom(A, M.left, M.right, M.carrier_dim, f)


def _delta_lie(L: HomAlgebra, act, target_dim: int,
               f: MultilinearMap) -> MultilinearMap:
    n = f.arity
    if n < 1:
        raise UsageError("coboundary needs arity >= 1")
    if not is_alternating(f):
        raise UsageError("Lie-kind coboundary needs an alternating cochain")
    ap = alpha_power(L, n - 1)
    values = {}
    for t in product(range(L.dim), repeat=n + 1):
        args = _basis_args(L.dim, t)
        alphas = [apply_alpha(L, a) for a in args]
        total = [Fraction(0)] * target_dim
        for i in range(n + 1):
            rest = args[:i] + args[i + 1:]
            term = act(ap.matvec(args[i]), f.evaluate(rest))
            if i % 2:
                total = [x - y for x, y in zip(total, term)]
            else:
                total = [x + y for x, y in zip(total, term)]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                rest = [alphas[p] for p in range(n + 1) if p != i and p != j]
                margs = [multiply(L, args[i], args[j])] + rest
                term = f.evaluate(margs)
                if (i + j) % 2:
                    total = [x - y for x, y in zip(total, term)]
                else:
                    total = [x + y for x, y in zip(total, term)]
        values[t] = tuple(total)
    return MultilinearMap.from_values(n + 1, L.dim, target_dim, values)


def delta_lie_self(L: HomAlgebra, f: MultilinearMap) -> MultilinearMap:
    """Chevalley-Eilenberg style coboundary of a self-valued cochain."""
    if L.kind != LIE_KIND:
        raise UsageError("delta_lie_self needs a Lie-kind algebra")
    if f.source_dim != L.dim or f.target_dim != L.dim:
        raise UsageError("cochain dimensions do not match the algebra")
    return _delta_lie(L, lambda g, v: multiply(L, g, v), L.dim, f)


def delta_lie_module(L: HomAlgebra, P: LieModule,
                     f: MultilinearMap) -> MultilinearMap:
    if P.algebra != L:
        raise UsageError("module does not belong to the given algebra")
    if f.source_dim != L.dim or f.target_dim != P.carrier_dim:
        raise UsageError("cochain dimensions do not match algebra/module")
    return _delta_lie(L, P.act, P.carrier_dim, f)


@lru_cache(maxsize=None)
def _lazy_adjoint_bimodule(phi: HomMorphism) -> Bimodule:
    return adjoint_bimodule(phi, strict=False)


@lru_cache(maxsize=None)
def _lazy_lie_adjoint(phi: HomMorphism) -> LieModule:
    return lie_adjoint_module(phi, strict=False)


def delta_morphism(phi: HomMorphism, c: MorphismCochain,
                   flavor: str) -> MorphismCochain:
    """Coupled coboundary on morphism cochains.

    The connecting slot receives the commutator defect of the two
    self-components against phi plus (hom) or minus-sign-adjusted (lie) the
    module coboundary of the connecting component; the degree-1 case uses
    the zero map for the arity-0 coboundary.
    """
    n = c.degree
    if n < 1:
        raise UsageError("morphism coboundary needs degree >= 1")
    A, B = phi.source, phi.target
    defect = compose_after(phi, c.comp_A) - diamond(c.comp_B, phi)
    if flavor == HOM:
        d_a = delta_hom_self(A, c.comp_A)
        d_b = delta_hom_self(B, c.comp_B)
        if n == 1:
            d_ab = MultilinearMap.zero(1, A.dim, B.dim)
        else:
            d_ab = delta_hom_bimodule(A, _lazy_adjoint_bimodule(phi), c.comp_AB)
        third = defect - d_ab
    elif flavor == LIE:
        d_a = delta_lie_self(A, c.comp_A)
        d_b = delta_lie_self(B, c.comp_B)
        if n == 1:
            d_ab = MultilinearMap.zero(1, A.dim, B.dim)
        else:
            d_ab = delta_lie_module(A, _lazy_lie_adjoint(phi), c.comp_AB)
        third = d_ab + defect.scale((-1) ** (n - 1))
    else:
        raise UsageError(f"unknown flavor {flavor!r}")
    return MorphismCochain(d_a, d_b, third)


def d_component(A: HomAlgebra, M: Bimodule, i: int,
                f: MultilinearMap) -> MultilinearMap:
    """The i-th face operator of the associative-kind coboundary.

    The boundary cases fold the module actions into the end operators (for
    arity 1 both fold into the single operator), so that the alternating
    signed sum over i recovers the coboundary at every arity.
    """
    n = f.arity
    if n < 1:
        raise UsageError("face operators need arity >= 1")
    if i < 0 or i > n:
        raise UsageError(f"face index {i} out of range 0..{n}")
    if i >= n:
        return MultilinearMap.zero(n + 1, A.dim, M.carrier_dim)
    ap = alpha_power(A, n - 1)
    values = {}
    for t in product(range(A.dim), repeat=n + 1):
        args = _basis_args(A.dim, t)
        alphas = [apply_alpha(A, a) for a in args]
        margs = alphas[:i] + [multiply(A, args[i], args[i + 1])] + alphas[i + 2:]
        total = list(f.evaluate(margs))
        if i == 0:
            term = M.left(ap.matvec(args[0]), f.evaluate(args[1:]))
            total = [x - y for x, y in zip(total, term)]
        if i == n - 1:
            term = M.right(f.evaluate(args[:n]), ap.matvec(args[n]))
            total = [x - y for x, y in zip(total, term)]
        values[t] = tuple(total)
    return MultilinearMap.from_values(n + 1, A.dim, M.carrier_dim, values)


def differential_matrix(space_n: CochainSpace, space_n1: CochainSpace,
                        delta) -> Matrix:
    """Matrix of delta with columns over space_n's basis, expressed in
    space_n1's basis; raises ImageOutsideCodomain when an image escapes
    (which signals an invalid algebra or module)."""
    cols = []
    for j, f in enumerate(space_n.basis):
        image = delta(f)
        coords = space_n1.coordinates(image)
        if coords is None:
            raise ImageOutsideCodomain(
                f"image of basis cochain {j} lies outside the codomain basis")
        cols.append(coords)
    return Matrix.from_columns(cols, nrows=space_n1.dim)


@dataclass(frozen=True)
class DegreeRecord:
    degree: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    cocycle_basis: tuple
    representatives: tuple


@dataclass(frozen=True)
class ComplexSummary:
    flavor: str
    records: tuple[DegreeRecord, ...]
    warnings: tuple[str, ...]

    def record(self, degree: int) -> DegreeRecord:
        for r in self.records:
            if r.degree == degree:
                return r
        raise KeyError(degree)


class _ComplexBase:
    """Shared driver: each concrete complex supplies spaces, the operator,
    and flat coordinates of a degree-n object."""

    flavor = "?"

    def __init__(self):
        self._cycle_cache: dict[int, object] = {}
        self._bound_cache: dict[int, object] = {}
        self.warnings: list[str] = []

    def cocycle_space(self, n: int):
        if n not in self._cycle_cache:
            self._cycle_cache[n] = self._build_cocycle_space(n)
        return self._cycle_cache[n]

    def bound_space(self, n: int):
        if n not in self._bound_cache:
            self._bound_cache[n] = self._build_bound_space(n)
        return self._bound_cache[n]

    # overridden by subclasses
    def _build_cocycle_space(self, n: int):
        raise NotImplementedError

    def _build_bound_space(self, n: int):
        raise NotImplementedError

    def delta(self, f):
        raise NotImplementedError

    def raw(self, f) -> tuple:
        return f.coeffs if isinstance(f, MultilinearMap) else f.flat_coeffs()

    def degree_zero_images(self) -> list:
        """Images of the optional arity-0 coboundary (off by default)."""
        return []


class HomSelfComplex(_ComplexBase):
    flavor = HOM_SELF

    def __init__(self, A: HomAlgebra):
        super().__init__()
        if A.kind != ASSOCIATIVE:
            raise UsageError("hom_self complex needs an associative-kind algebra")
        self.algebra = A
        report = validate(A)
        if not report.is_valid:
            self.warnings.append(f"{A.name}: {report.describe()}")
        elif not report.multiplicative:
            self.warnings.append(f"{A.name}: twist is not multiplicative")

    def _build_cocycle_space(self, n: int):
        return full_multilinear_basis(HOM, self.algebra, self.algebra.dim,
                                      self.algebra.alpha, n)

    def _build_bound_space(self, n: int):
        return hom_cochain_basis(self.algebra, self.algebra.dim,
                                 self.algebra.alpha, n)

    def delta(self, f):
        return delta_hom_self(self.algebra, f)

    def degree_zero_images(self) -> list:
        A = self.algebra
        fixed = nullspace_basis(A.alpha - Matrix.identity(A.dim))
        out = []
        for m in fixed:
            values = {}
            for i in range(A.dim):
                e = A.basis_vector(i)
                v = tuple(a - b for a, b in zip(multiply(A, e, m),
                                                multiply(A, m, e)))
                values[(i,)] = v
            out.append(MultilinearMap.from_values(1, A.dim, A.dim, values))
        return out


class HomBimoduleComplex(_ComplexBase):
    flavor = HOM_BIMODULE

    def __init__(self, A: HomAlgebra, M: Bimodule, label: str = "module"):
        super().__init__()
        self.algebra = A
        self.module = M
        report = validate(A)
        if not report.is_valid:
            self.warnings.append(f"{A.name}: {report.describe()}")
        problems = validate_bimodule(M)
        for p in problems:
            self.warnings.append(f"{label}: {p}")

    def _build_cocycle_space(self, n: int):
        return full_multilinear_basis(HOM, self.algebra,
                                      self.module.carrier_dim,
                                      self.module.beta, n)

    def _build_bound_space(self, n: int):
        return hom_cochain_basis(self.algebra, self.module.carrier_dim,
                                 self.module.beta, n)

    def delta(self, f):
        return delta_hom_bimodule(self.algebra, self.module, f)

    def degree_zero_images(self) -> list:
        A, M = self.algebra, self.module
        fixed = nullspace_basis(M.beta - Matrix.identity(M.carrier_dim))
        out = []
        for m in fixed:
            values = {}
            for i in range(A.dim):
                e = A.basis_vector(i)
                v = tuple(a - b for a, b in zip(M.left(e, m), M.right(m, e)))
                values[(i,)] = v
            out.append(MultilinearMap.from_values(1, A.dim, M.carrier_dim, values))
        return out


class LieSelfComplex(_ComplexBase):
    flavor = LIE_SELF

    def __init__(self, L: HomAlgebra):
        super().__init__()
        if L.kind != LIE_KIND:
            raise UsageError("lie_self complex needs a Lie-kind algebra")
        self.algebra = L
        report = validate(L)
        if not report.is_valid:
            self.warnings.append(f"{L.name}: {report.describe()}")
        elif not report.multiplicative:
            self.warnings.append(f"{L.name}: twist is not multiplicative")

    def _build_cocycle_space(self, n: int):
        return lie_cochain_basis(self.algebra, self.algebra.dim,
                                 self.algebra.alpha, n)

    _build_bound_space = _build_cocycle_space

    def delta(self, f):
        return delta_lie_self(self.algebra, f)

    def degree_zero_images(self) -> list:
        L = self.algebra
        fixed = nullspace_basis(L.alpha - Matrix.identity(L.dim))
        out = []
        for m in fixed:
            values = {(i,): multiply(L, L.basis_vector(i), m)
                      for i in range(L.dim)}
            out.append(MultilinearMap.from_values(1, L.dim, L.dim, values))
        return out


class LieModuleComplex(_ComplexBase):
    flavor = LIE_MODULE

    def __init__(self, L: HomAlgebra, P: LieModule, label: str = "module"):
        super().__init__()
        self.algebra = L
        self.module = P
        report = validate(L)
        if not report.is_valid:
            self.warnings.append(f"{L.name}: {report.describe()}")
        for p in validate_lie_module(P):
            self.warnings.append(f"{label}: {p}")

    def _build_cocycle_space(self, n: int):
        return lie_cochain_basis(self.algebra, self.module.carrier_dim,
                                 self.module.beta, n)

    _build_bound_space = _build_cocycle_space

    def delta(self, f):
        return delta_lie_module(self.algebra, self.module, f)

    def degree_zero_images(self) -> list:
        L, P = self.algebra, self.module
        fixed = nullspace_basis(P.beta - Matrix.identity(P.carrier_dim))
        out = []
        for m in fixed:
            values = {(i,): P.act(L.basis_vector(i), m) for i in range(L.dim)}
            out.append(MultilinearMap.from_values(1, L.dim, P.carrier_dim, values))
        return out


@dataclass(frozen=True)
class MorphismCochainSpace:
    degree: int
    space_a: CochainSpace
    space_b: CochainSpace
    space_ab: CochainSpace
    basis: tuple[MorphismCochain, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coords) -> MorphismCochain:
        dims = (len(self.space_a.basis), len(self.space_b.basis),
                len(self.space_ab.basis))
        a = self.space_a.combine(coords[:dims[0]])
        b = self.space_b.combine(coords[dims[0]:dims[0] + dims[1]])
        ab = self.space_ab.combine(coords[dims[0] + dims[1]:])
        return MorphismCochain(a, b, ab)


def _embed_triples(degree, space_a, space_b, space_ab) -> MorphismCochainSpace:
    za = MultilinearMap.zero(degree, space_a.source.dim, space_a.target_dim)
    zb = MultilinearMap.zero(degree, space_b.source.dim, space_b.target_dim)
    zab = MultilinearMap.zero(degree - 1, space_ab.source.dim,
                              space_ab.target_dim)
    basis = tuple(
        [MorphismCochain(a, zb, zab) for a in space_a.basis]
        + [MorphismCochain(za, b, zab) for b in space_b.basis]
        + [MorphismCochain(za, zb, c) for c in space_ab.basis])
    return MorphismCochainSpace(degree, space_a, space_b, space_ab, basis)


class MorphismComplex(_ComplexBase):
    def __init__(self, phi: HomMorphism, flavor: str):
        super().__init__()
        if flavor not in (HOM, LIE):
            raise UsageError(f"unknown flavor {flavor!r}")
        self.phi = phi
        self.component_flavor = flavor
        self.flavor = MORPHISM_HOM if flavor == HOM else MORPHISM_LIE
        for X in (phi.source, phi.target):
            report = validate(X)
            if not report.is_valid:
                self.warnings.append(f"{X.name}: {report.describe()}")
        mreport = check_morphism(phi.source, phi.target, phi.matrix)
        if not mreport.is_valid:
            self.warnings.append(f"morphism: {mreport.describe()}")

    def _build_cocycle_space(self, n: int):
        A, B = self.phi.source, self.phi.target
        if self.component_flavor == HOM:
            sa = full_multilinear_basis(HOM, A, A.dim, A.alpha, n)
            sb = full_multilinear_basis(HOM, B, B.dim, B.alpha, n)
            sab = full_multilinear_basis(HOM, A, B.dim, B.alpha, n - 1)
        else:
            sa = lie_cochain_basis(A, A.dim, A.alpha, n)
            sb = lie_cochain_basis(B, B.dim, B.alpha, n)
            sab = lie_cochain_basis(A, B.dim, B.alpha, n - 1)
        return _embed_triples(n, sa, sb, sab)

    def _build_bound_space(self, n: int):
        sa, sb, sab = morphism_cochain_space(self.phi, n, self.component_flavor)
        return _embed_triples(n, sa, sb, sab)

    def delta(self, c):
        return delta_morphism(self.phi, c, self.component_flavor)


def compute_cohomology(complex_obj: _ComplexBase, degrees,
                       include_degree_zero: bool = False) -> ComplexSummary:
    """Per-degree cocycles, coboundaries, cohomology, and canonical
    representatives chosen by pivot positions of the cocycle basis modulo
    the coboundaries."""
    warnings = list(complex_obj.warnings)
    records = []
    for n in sorted(set(int(d) for d in degrees)):
        if n < 1:
            raise UsageError("degrees start at 1")
        space = complex_obj.cocycle_space(n)
        delta_cols = [complex_obj.raw(complex_obj.delta(f))
                      for f in space.basis]
        if delta_cols:
            kernel = nullspace_basis(Matrix.from_columns(delta_cols))
        else:
            kernel = []
        cocycles = [space.combine(coords) for coords in kernel]
        z_raw = [complex_obj.raw(z) for z in cocycles]

        if n == 1:
            bound_images = (complex_obj.degree_zero_images()
                            if include_degree_zero else [])
        else:
            bound_images = [complex_obj.delta(g)
                            for g in complex_obj.bound_space(n - 1).basis]
        b_raw_all = [complex_obj.raw(b) for b in bound_images]
        keep = independent_subset(b_raw_all)
        b_raw = [b_raw_all[i] for i in keep]

        if b_raw and column_rank(b_raw + z_raw) != len(z_raw):
            warnings.append(
                f"degree {n}: coboundaries escape the cocycles "
                "(delta-squared is nonzero; invalid input structure)")
            b_raw = intersection_basis(b_raw, z_raw)

        dim_z = len(z_raw)
        dim_b = len(b_raw)
        pivots = independent_subset(b_raw + z_raw)
        reps = tuple(cocycles[p - dim_b] for p in pivots if p >= dim_b)
        records.append(DegreeRecord(
            degree=n,
            dim_cochains=space.dim,
            dim_cocycles=dim_z,
            dim_coboundaries=dim_b,
            dim_cohomology=dim_z - dim_b,
            cocycle_basis=tuple(cocycles),
            representatives=reps))
    return ComplexSummary(flavor=complex_obj.flavor, records=tuple(records),
                          warnings=tuple(warnings))


def hom_self_cohomology(A: HomAlgebra, degrees, **kw) -> ComplexSummary:
    return compute_cohomology(HomSelfComplex(A), degrees, **kw)


def lie_self_cohomology(L: HomAlgebra, degrees, **kw) -> ComplexSummary:
    return compute_cohomology(LieSelfComplex(L), degrees, **kw)


def self_cohomology(X: HomAlgebra, degrees, **kw) -> ComplexSummary:
    if X.kind == ASSOCIATIVE:
        return hom_self_cohomology(X, degrees, **kw)
    return lie_self_cohomology(X, degrees, **kw)


def bimodule_cohomology(A: HomAlgebra, M: Bimodule, degrees, **kw) -> ComplexSummary:
    return compute_cohomology(HomBimoduleComplex(A, M), degrees, **kw)


def lie_module_cohomology(L: HomAlgebra, P: LieModule, degrees,
                          **kw) -> ComplexSummary:
    return compute_cohomology(LieModuleComplex(L, P), degrees, **kw)


def morphism_cohomology(phi: HomMorphism, degrees, flavor: str | None = None,
                        **kw) -> ComplexSummary:
    if flavor is None:
        flavor = HOM if phi.source.kind == ASSOCIATIVE else LIE
    return compute_cohomology(MorphismComplex(phi, flavor), degrees, **kw)


def connecting_complex(phi: HomMorphism) -> _ComplexBase:
    """The standalone module-valued complex of the connecting component:
    cochains from the source with values in the target seen as the adjoint
    module (or bimodule) through phi."""
    if phi.source.kind == ASSOCIATIVE:
        return HomBimoduleComplex(phi.source, _lazy_adjoint_bimodule(phi),
                                  label=f"adjoint({phi.target.name})")
    return LieModuleComplex(phi.source, _lazy_lie_adjoint(phi),
                            label=f"adjoint({phi.target.name})")

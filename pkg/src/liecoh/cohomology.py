"""The Chevalley-Eilenberg complex and cohomology dimensions.

C^n is the space of alternating n-linear maps from the algebra to the
module; its basis is indexed by lexicographic n-subsets of the algebra
basis with the module coordinate varying fastest.  The differential is

  (d w)(x_0..x_n) = sum_i (-1)^i rho(x_i) w(.. x_i omitted ..)
                  + sum_{i<j} (-1)^{i+j} w([x_i, x_j], .. x_i, x_j omitted ..)

with 0-based positions.  Any consistent sign convention yields the same
dimensions; d o d = 0 is verified exactly at build time and a failure
aborts, so a convention bug cannot produce silent wrong numbers.

Cohomology dimensions are nullity(d_n) - rank(d_{n-1}) with the border
maps zero.  Reports are cached by (algebra, module) value, which keeps
the verification suites cheap.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from . import repmod
from .errors import (
    DomainError,
    InternalCheckError,
    PreconditionError,
    ResourceLimitError,
)
from .exactlin import ZERO, IncrementalEchelon, Matrix, rank, rank_kernel
from .liealg import LieAlgebra, derived_subalgebra, is_nilpotent
from .repmod import Representation

DEFAULT_COLUMN_CEILING = 20000


@dataclass(frozen=True)
class CochainComplex:
    algebra: LieAlgebra
    module: Representation
    coboundaries: tuple[Matrix, ...]  # d_0 .. d_{dim-1}

    def cochain_dim(self, n: int) -> int:
        if not 0 <= n <= self.algebra.dim:
            return 0
        return comb(self.algebra.dim, n) * self.module.dim_v


def _check_ceiling(d: int, m: int, ceiling: int) -> None:
    for n in range(d + 1):
        width = comb(d, n) * m
        if width > ceiling:
            raise ResourceLimitError(
                f"cochain space in degree {n} needs {width} columns, ceiling is {ceiling}")


def build_complex(algebra: LieAlgebra, module: Representation,
                  ceiling: int = DEFAULT_COLUMN_CEILING) -> CochainComplex:
    """All coboundary matrices, with the complex property checked exactly."""
    if module.algebra != algebra:
        raise DomainError("module is not over the given algebra")
    d, m = algebra.dim, module.dim_v
    _check_ceiling(d, m, ceiling)
    subsets = [list(combinations(range(d), n)) for n in range(d + 1)]
    index = [{s: p for p, s in enumerate(level)} for level in subsets]
    mats = []
    for n in range(d):
        nrows = len(subsets[n + 1]) * m
        ncols = len(subsets[n]) * m
        data = [[ZERO] * ncols for _ in range(nrows)]
        for tpos, t in enumerate(subsets[n + 1]):
            rbase = tpos * m
            for i, ti in enumerate(t):
                s = t[:i] + t[i + 1:]
                cbase = index[n][s] * m
                neg = i % 2 == 1
                rho = module.action[ti].data
                for a in range(m):
                    row = data[rbase + a]
                    ra = rho[a]
                    for b in range(m):
                        v = ra[b]
                        if v:
                            row[cbase + b] += -v if neg else v
            for i in range(n + 1):
                for j in range(i + 1, n + 1):
                    terms = algebra.bracket_basis(t[i], t[j])
                    if not terms:
                        continue
                    rest = t[:i] + t[i + 1:j] + t[j + 1:]
                    base_neg = (i + j) % 2 == 1
                    for k, c in terms.items():
                        pos = bisect_left(rest, k)
                        if pos < len(rest) and rest[pos] == k:
                            continue
                        s = rest[:pos] + (k,) + rest[pos:]
                        neg = base_neg ^ (pos % 2 == 1)
                        val = -c if neg else c
                        cbase = index[n][s] * m
                        for a in range(m):
                            data[rbase + a][cbase + a] += val
        mats.append(Matrix(nrows, ncols, data))
    for n in range(d - 1):
        if not (mats[n + 1] * mats[n]).is_zero():
            raise InternalCheckError(
                f"coboundary composition d_{n + 1} after d_{n} is nonzero")
    return CochainComplex(algebra, module, tuple(mats))


@dataclass(frozen=True)
class CohomologyReport:
    dims: tuple[int, ...]                      # dim H^n for n = 0..dim L
    cochain_dims: tuple[int, ...]
    ranks: tuple[int, ...]                     # rank d_n, the top map being zero
    representatives: tuple[tuple[tuple[Fraction, ...], ...], ...] | None = None

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** n * h for n, h in enumerate(self.dims))

    def table(self) -> list[tuple[int, int, int, int]]:
        """Rows (n, dim C^n, rank d_n, dim H^n)."""
        return [
            (n, self.cochain_dims[n], self.ranks[n], self.dims[n])
            for n in range(len(self.dims))
        ]


_REPORT_CACHE: dict[tuple, CohomologyReport] = {}


def _representatives(cx: CochainComplex, dims: list[int]) -> tuple:
    """One exact cocycle per cohomology dimension, not in the coboundary image."""
    d = cx.algebra.dim
    reps: list[tuple] = []
    for n in range(d + 1):
        picked: list[tuple[Fraction, ...]] = []
        if dims[n] > 0:
            if n < d:
                _, kernel = rank_kernel(cx.coboundaries[n])
            else:
                width = cx.cochain_dim(d)
                kernel = Matrix.identity(width).data
            ech = IncrementalEchelon(cx.cochain_dim(n))
            if n > 0:
                prev = cx.coboundaries[n - 1]
                for j in range(prev.cols):
                    ech.insert(prev.col(j))
            for v in kernel:
                if ech.insert(v):
                    picked.append(tuple(v))
                if len(picked) == dims[n]:
                    break
        reps.append(tuple(picked))
    return tuple(reps)


def cohomology_dims(algebra: LieAlgebra, module: Representation,
                    representatives: bool = False,
                    ceiling: int = DEFAULT_COLUMN_CEILING) -> CohomologyReport:
    """Per-degree cohomology dimensions for n = 0 .. dim L."""
    if module.algebra != algebra:
        raise DomainError("module is not over the given algebra")
    d, m = algebra.dim, module.dim_v
    _check_ceiling(d, m, ceiling)
    key = (algebra.key(), module.key())
    cached = _REPORT_CACHE.get(key)
    if cached is not None and not representatives:
        return cached
    cx = build_complex(algebra, module, ceiling)
    cochain_dims = [comb(d, n) * m for n in range(d + 1)]
    ranks = [rank(mat) for mat in cx.coboundaries] + [0]
    dims = []
    for n in range(d + 1):
        nullity = cochain_dims[n] - ranks[n]
        prev_rank = ranks[n - 1] if n > 0 else 0
        dims.append(nullity - prev_rank)
    reps = _representatives(cx, dims) if representatives else None
    report = CohomologyReport(tuple(dims), tuple(cochain_dims), tuple(ranks), reps)
    if not representatives:
        _REPORT_CACHE[key] = report
    return report


def betti_numbers(algebra: LieAlgebra) -> tuple[int, ...]:
    """Cohomology of the trivial one-dimensional module."""
    return cohomology_dims(algebra, repmod.trivial_module(algebra)).dims


# -- verifiers ------------------------------------------------------------

@dataclass(frozen=True)
class DegreeCheck:
    degree: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class DualityReport:
    degrees: tuple[DegreeCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.degrees)


def verify_hazewinkel(algebra: LieAlgebra, module: Representation,
                      ceiling: int = DEFAULT_COLUMN_CEILING) -> DualityReport:
    """Check dim H^n(L, (V^tw)^*) = dim H^{dim L - n}(L, V) in every degree.

    For unimodular algebras the twist is the identity and this is the
    classical top-degree duality.
    """
    twisted_dual = repmod.dual(repmod.twist(module, -1))
    lhs = cohomology_dims(algebra, twisted_dual, ceiling=ceiling).dims
    rhs = cohomology_dims(algebra, module, ceiling=ceiling).dims
    d = algebra.dim
    checks = tuple(DegreeCheck(n, lhs[n], rhs[d - n]) for n in range(d + 1))
    return DualityReport(checks)


@dataclass(frozen=True)
class KunnethReport:
    degrees: tuple[DegreeCheck, ...]
    left_dims: tuple[int, ...]
    right_dims: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.degrees)


def verify_kunneth(l1: LieAlgebra, v1: Representation,
                   l2: LieAlgebra, v2: Representation,
                   ceiling: int = DEFAULT_COLUMN_CEILING) -> KunnethReport:
    """Cohomology of the direct sum with the outer tensor module must be the
    convolution of the summand cohomologies."""
    if v1.algebra != l1 or v2.algebra != l2:
        raise DomainError("modules do not match the given algebras")
    from . import liealg

    total = liealg.direct_sum(l1, l2)
    product_module = repmod.outer_tensor(v1, v2, algebra=total)
    left = cohomology_dims(total, product_module, ceiling=ceiling).dims
    a = cohomology_dims(l1, v1, ceiling=ceiling).dims
    b = cohomology_dims(l2, v2, ceiling=ceiling).dims
    checks = []
    for n in range(total.dim + 1):
        conv = sum(
            a[i] * b[n - i]
            for i in range(len(a))
            if 0 <= n - i < len(b)
        )
        checks.append(DegreeCheck(n, left[n], conv))
    return KunnethReport(tuple(checks), a, b)


@dataclass(frozen=True)
class VanishingReport:
    dims: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(h == 0 for h in self.dims)

    @property
    def counterexamples(self) -> tuple[int, ...]:
        return tuple(n for n, h in enumerate(self.dims) if h)


def dixmier_vanishing_check(algebra: LieAlgebra, module: Representation,
                            ceiling: int = DEFAULT_COLUMN_CEILING) -> VanishingReport:
    """All cohomology of a nilpotent algebra vanishes when the module has no
    trivial submodule; a nonzero dimension here means an engine bug."""
    if not is_nilpotent(algebra):
        raise PreconditionError("the algebra is not nilpotent")
    if not repmod.invariants(module).is_zero():
        raise PreconditionError("the module has a nonzero invariant vector")
    return VanishingReport(cohomology_dims(algebra, module, ceiling=ceiling).dims)


def h1_trivial_coeffs_perfectness(algebra: LieAlgebra) -> bool:
    """dim H^1(L, K) = 0 iff [L, L] = L; both sides computed, mismatch aborts."""
    perfect = derived_subalgebra(algebra).dim == algebra.dim
    if algebra.dim == 0:
        h1_zero = True
    else:
        h1_zero = cohomology_dims(algebra, repmod.trivial_module(algebra)).dims[1] == 0
    if h1_zero != perfect:
        raise InternalCheckError(
            "H^1 with trivial coefficients disagrees with perfectness")
    return h1_zero

"""Lie algebras over Q given by structure constants.

An algebra is a dimension plus the table [e_i, e_j] = sum_k c_ijk e_k for
i < j; antisymmetry is implicit in the storage.  Structural predicates
(nilpotent, solvable, semisimple, unimodular, perfect) and the radical,
center and series are all decided exactly.

Equality of algebras compares dimension and structure constants only;
basis names are presentation labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Mapping, Sequence

from .errors import (
    ConstraintError,
    MalformedInputError,
    RepresentationError,
    ShapeError,
)
from .exactlin import ZERO, Matrix, Subspace, as_scalar, kernel_basis, rank

if TYPE_CHECKING:  # pragma: no cover
    from .repmod import Representation

BracketTable = Mapping[tuple[int, int], Mapping[int, Fraction]]


class LieAlgebra:
    """Finite-dimensional Lie algebra on a fixed basis."""

    __slots__ = ("dim", "basis_names", "table", "_key")

    def __init__(self, dim: int, brackets: BracketTable | None = None,
                 basis_names: Sequence[str] | None = None):
        if dim < 0:
            raise MalformedInputError("negative dimension")
        if basis_names is None:
            basis_names = tuple(f"e{i + 1}" for i in range(dim))
        basis_names = tuple(basis_names)
        if len(basis_names) != dim:
            raise MalformedInputError(
                f"{len(basis_names)} basis names for dimension {dim}")
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise MalformedInputError(f"bracket indices ({i}, {j}) out of range for i < j < {dim}")
            entry = {}
            for k, c in terms.items():
                if not 0 <= k < dim:
                    raise MalformedInputError(f"bracket target index {k} out of range")
                c = as_scalar(c)
                if c:
                    entry[k] = c
            if entry:
                table[(i, j)] = entry
        self.dim = dim
        self.basis_names = basis_names
        self.table = table
        self._key = (
            dim,
            tuple(sorted(
                (i, j, tuple(sorted(terms.items())))
                for (i, j), terms in table.items()
            )),
        )

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.table)})"

    # -- bracket computations -------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse coefficient map."""
        if i == j:
            return {}
        if i < j:
            return dict(self.table.get((i, j), {}))
        return {k: -c for k, c in self.table.get((j, i), {}).items()}

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
        if len(u) != self.dim or len(v) != self.dim:
            raise ShapeError("bracket arguments must have the algebra's dimension")
        out = [ZERO] * self.dim
        for (i, j), terms in self.table.items():
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for k, c in terms.items():
                    out[k] += coef * c
        return out

    def basis_vector(self, i: int) -> list[Fraction]:
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return v


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    triple: tuple[int, int, int] | None = None
    residual: tuple[Fraction, ...] | None = None

    def describe(self, algebra: LieAlgebra) -> str:
        if self.ok:
            return "Jacobi identity holds on all basis triples"
        names = tuple(algebra.basis_names[t] for t in self.triple)
        res = ", ".join(str(x) for x in self.residual)
        return f"Jacobi identity fails at basis triple {names}: residual ({res})"


def validate(algebra: LieAlgebra) -> JacobiReport:
    """Exact Jacobi check over all basis triples; reports the first failure."""
    d = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                s1 = algebra.bracket(algebra.bracket(basis[i], basis[j]), basis[k])
                s2 = algebra.bracket(algebra.bracket(basis[j], basis[k]), basis[i])
                s3 = algebra.bracket(algebra.bracket(basis[k], basis[i]), basis[j])
                residual = [a + b + c for a, b, c in zip(s1, s2, s3)]
                if any(residual):
                    return JacobiReport(False, (i, j, k), tuple(residual))
    return JacobiReport(True)


def ad(algebra: LieAlgebra, x: Sequence[Fraction]) -> Matrix:
    """Matrix of y -> [x, y]; column j is the bracket of x with e_j."""
    if len(x) != algebra.dim:
        raise ShapeError("ad argument must have the algebra's dimension")
    d = algebra.dim
    cols = [algebra.bracket(list(x), algebra.basis_vector(j)) for j in range(d)]
    return Matrix(d, d, [[cols[j][i] for j in range(d)] for i in range(d)])


def ad_basis(algebra: LieAlgebra) -> list[Matrix]:
    return [ad(algebra, algebra.basis_vector(i)) for i in range(algebra.dim)]


def ad_traces(algebra: LieAlgebra) -> list[Fraction]:
    return [m.trace() for m in ad_basis(algebra)]


def is_unimodular(algebra: LieAlgebra) -> bool:
    """True iff the trace of ad vanishes on every basis element."""
    return all(t == 0 for t in ad_traces(algebra))


def killing_form(algebra: LieAlgebra) -> Matrix:
    ads = ad_basis(algebra)
    d = algebra.dim
    data = [[ZERO] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            t = (ads[i] * ads[j]).trace()
            data[i][j] = t
            data[j][i] = t
    return Matrix(d, d, data)


# -- subspace machinery ------------------------------------------------

def subspace_bracket(algebra: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of [u, v] over basis vectors u of a, v of b."""
    vecs = [algebra.bracket(list(u), list(v)) for u in a.basis for v in b.basis]
    return Subspace.from_vectors(algebra.dim, vecs)


def derived_subalgebra(algebra: LieAlgebra) -> Subspace:
    vecs = []
    for (i, j), terms in algebra.table.items():
        v = [ZERO] * algebra.dim
        for k, c in terms.items():
            v[k] = c
        vecs.append(v)
    return Subspace.from_vectors(algebra.dim, vecs)


def lower_central_series(algebra: LieAlgebra) -> list[Subspace]:
    full = Subspace.full(algebra.dim)
    series = [full]
    while True:
        nxt = subspace_bracket(algebra, full, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def derived_series(algebra: LieAlgebra) -> list[Subspace]:
    series = [Subspace.full(algebra.dim)]
    while True:
        last = series[-1]
        nxt = subspace_bracket(algebra, last, last)
        if nxt == last:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def derived_series_of(algebra: LieAlgebra, sub: Subspace) -> list[Subspace]:
    """Derived series of a subalgebra, inside the ambient coordinates."""
    series = [sub]
    while True:
        last = series[-1]
        nxt = subspace_bracket(algebra, last, last)
        if nxt == last:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def last_abelian_term(algebra: LieAlgebra, sub: Subspace) -> Subspace:
    """Last nonzero derived-series term; abelian when the series reaches zero,
    and an ideal of the whole algebra whenever sub is one."""
    series = derived_series_of(algebra, sub)
    for term in reversed(series):
        if not term.is_zero():
            return term
    return series[0]


def center(algebra: LieAlgebra) -> Subspace:
    """Kernel of the stacked ad maps."""
    if algebra.dim == 0:
        return Subspace.zero(0)
    stacked = Matrix.vstack(ad_basis(algebra), cols=algebra.dim)
    return Subspace.from_vectors(algebra.dim, kernel_basis(stacked))


def radical(algebra: LieAlgebra) -> Subspace:
    """Solvable radical: Killing-orthogonal complement of the derived subalgebra.

    Valid over characteristic zero, which is the only setting here.
    """
    derived = derived_subalgebra(algebra)
    if derived.is_zero():
        return Subspace.full(algebra.dim)
    conditions = derived.matrix() * killing_form(algebra)
    return Subspace.from_vectors(algebra.dim, kernel_basis(conditions))


def is_nilpotent(algebra: LieAlgebra) -> bool:
    return lower_central_series(algebra)[-1].is_zero()


def is_solvable(algebra: LieAlgebra) -> bool:
    return derived_series(algebra)[-1].is_zero()


@dataclass(frozen=True)
class StructureFlags:
    abelian: bool
    nilpotent: bool
    solvable: bool
    semisimple: bool
    perfect: bool
    killing: Matrix
    radical: Subspace
    center: Subspace
    derived: Subspace


def structure_flags(algebra: LieAlgebra) -> StructureFlags:
    killing = killing_form(algebra)
    derived = derived_subalgebra(algebra)
    return StructureFlags(
        abelian=not algebra.table,
        nilpotent=is_nilpotent(algebra),
        solvable=is_solvable(algebra),
        semisimple=rank(killing) == algebra.dim,
        perfect=derived.dim == algebra.dim,
        killing=killing,
        radical=radical(algebra),
        center=center(algebra),
        derived=derived,
    )


@dataclass(frozen=True)
class SplitNilpotentWitness:
    radical: Subspace
    radical_nilpotent: bool
    series_length: int
    action_matches: bool


def is_ss_plus_nilpotent(algebra: LieAlgebra) -> tuple[bool, SplitNilpotentWitness]:
    """Decide whether the algebra is a direct sum of a semisimple and a
    nilpotent algebra, without constructing a Levi complement.

    Criterion: the radical R is nilpotent as a subalgebra and
    [L, R] = [R, R] as subspaces.  With any Levi subalgebra S one has
    [L, R] = [S, R] + [R, R]; equality forces S to act trivially on
    R/[R, R], and complete reducibility of S-modules pushed down the
    lower central series of R then gives [S, R] = 0, so L = S + R splits
    as a direct sum with nilpotent R.  The converse is immediate.
    """
    rad = radical(algebra)
    term = rad
    steps = 0
    while not term.is_zero():
        nxt = subspace_bracket(algebra, rad, term)
        if nxt == term:
            break
        term = nxt
        steps += 1
    rad_nilpotent = term.is_zero()
    full = Subspace.full(algebra.dim)
    action_matches = subspace_bracket(algebra, full, rad) == subspace_bracket(algebra, rad, rad)
    witness = SplitNilpotentWitness(rad, rad_nilpotent, steps, action_matches)
    return rad_nilpotent and action_matches, witness


# -- constructions -----------------------------------------------------

def _merge_names(first: Sequence[str], second: Sequence[str]) -> tuple[str, ...]:
    names = list(first)
    used = set(names)
    for n in second:
        while n in used:
            n = n + "'"
        names.append(n)
        used.add(n)
    return tuple(names)


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block-diagonal structure constants; each summand is an ideal."""
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in a.table.items():
        brackets[(i, j)] = dict(terms)
    off = a.dim
    for (i, j), terms in b.table.items():
        brackets[(i + off, j + off)] = {k + off: c for k, c in terms.items()}
    return LieAlgebra(a.dim + b.dim, brackets, _merge_names(a.basis_names, b.basis_names))


def _check_action_matrices(algebra: LieAlgebra, mats: Sequence[Matrix], dim_v: int) -> None:
    if len(mats) != algebra.dim:
        raise RepresentationError("one action matrix per basis element is required")
    for m in mats:
        if m.shape != (dim_v, dim_v):
            raise RepresentationError(f"action matrix of shape {m.shape}, expected {(dim_v, dim_v)}")
    for (i, j), terms in algebra.table.items():
        lhs = mats[i] * mats[j] - mats[j] * mats[i]
        rhs = Matrix.zeros(dim_v, dim_v)
        for k, c in terms.items():
            rhs = rhs + mats[k].scale(c)
        if lhs != rhs:
            raise RepresentationError(
                f"homomorphism law fails on basis pair ({algebra.basis_names[i]}, {algebra.basis_names[j]})")
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            if (i, j) not in algebra.table:
                lhs = mats[i] * mats[j] - mats[j] * mats[i]
                if not lhs.is_zero():
                    raise RepresentationError(
                        f"homomorphism law fails on basis pair ({algebra.basis_names[i]}, {algebra.basis_names[j]})")


def semidirect_product(s: LieAlgebra, act: "Representation") -> LieAlgebra:
    """Semidirect sum of s with the abelian space of the module act.

    Basis order: s-part then module part; [x, v] = act(x) v and the
    module part brackets to zero with itself.
    """
    if act.algebra != s:
        raise RepresentationError("action is not a representation of the first argument")
    _check_action_matrices(s, act.action, act.dim_v)
    n = act.dim_v
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in s.table.items():
        brackets[(i, j)] = dict(terms)
    for i in range(s.dim):
        mat = act.action[i]
        for a in range(n):
            entry = {}
            for b in range(n):
                c = mat.data[b][a]
                if c:
                    entry[s.dim + b] = c
            if entry:
                brackets[(i, s.dim + a)] = entry
    names = _merge_names(s.basis_names, tuple(f"v{a + 1}" for a in range(n)))
    return LieAlgebra(s.dim + n, brackets, names)


def quotient_algebra(algebra: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, list[int]]:
    """Quotient by an ideal on the complement of the ideal's pivot coordinates.

    Returns the quotient and the ambient indices of the complement basis,
    which fixes the deterministic section used by module lifting.
    """
    if ideal.ambient_dim != algebra.dim:
        raise ShapeError("ideal lives in a different ambient space")
    full = Subspace.full(algebra.dim)
    if not ideal.contains(subspace_bracket(algebra, full, ideal)):
        raise ConstraintError("the given subspace is not an ideal")
    comp = ideal.complement_indices()
    pos = {c: a for a, c in enumerate(comp)}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(len(comp)):
        for b in range(a + 1, len(comp)):
            w = algebra.bracket(algebra.basis_vector(comp[a]), algebra.basis_vector(comp[b]))
            red = ideal.reduce(w)
            entry = {pos[c]: red[c] for c in comp if red[c]}
            if entry:
                brackets[(a, b)] = entry
    names = tuple(algebra.basis_names[c] for c in comp)
    return LieAlgebra(len(comp), brackets, names), comp


def project_to_quotient(ideal: Subspace, comp: Sequence[int], vec: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates of vec + ideal in the complement basis."""
    red = ideal.reduce(vec)
    return [red[c] for c in comp]


# -- fixed small algebras ----------------------------------------------

def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {})


def heisenberg3() -> LieAlgebra:
    """[x, y] = z."""
    return LieAlgebra(3, {(0, 1): {2: Fraction(1)}}, ("x", "y", "z"))


def affine1() -> LieAlgebra:
    """[x, y] = y, the non-abelian 2-dimensional algebra."""
    return LieAlgebra(2, {(0, 1): {1: Fraction(1)}}, ("x", "y"))


def sl2() -> LieAlgebra:
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return LieAlgebra(
        3,
        {
            (0, 1): {1: Fraction(2)},
            (0, 2): {2: Fraction(-2)},
            (1, 2): {0: Fraction(1)},
        },
        ("h", "e", "f"),
    )


def so3() -> LieAlgebra:
    """[x, y] = z, [y, z] = x, [z, x] = y."""
    return LieAlgebra(
        3,
        {
            (0, 1): {2: Fraction(1)},
            (1, 2): {0: Fraction(1)},
            (0, 2): {1: Fraction(-1)},
        },
        ("x", "y", "z"),
    )


def nonunimodular3() -> LieAlgebra:
    """[x, z] = x, [y, z] = y; solvable and not unimodular."""
    return LieAlgebra(
        3,
        {
            (0, 2): {0: Fraction(1)},
            (1, 2): {1: Fraction(1)},
        },
        ("x", "y", "z"),
    )


def unimodular_3dim(a, b, c) -> LieAlgebra:
    """The solvable unimodular family [x, y] = 0, [x, z] = a x + b y,
    [y, z] = c x - a y, subject to a^2 + bc != 0."""
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    if a * a + b * c == 0:
        raise ConstraintError(f"a^2 + bc must be nonzero, got a={a}, b={b}, c={c}")
    return LieAlgebra(
        3,
        {
            (0, 2): {0: a, 1: b},
            (1, 2): {0: c, 1: -a},
        },
        ("x", "y", "z"),
    )

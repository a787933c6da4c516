"""Finite-dimensional modules over a Lie algebra as matrix representations.

A module is one action matrix per algebra basis element; the homomorphism
law rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) is checkable exactly.  The
constructions here (dual, trace twists, characters, tensor and direct
sums, outer tensors, lifts through quotients) feed the cohomology layer.

Irreducibility over Q is decided by a Norton-style criterion: a singular
element of the enveloping algebra whose kernel vector spins to the whole
space, with the transposed spin filling the dual space, certifies
irreducibility (the certificate is only issued for nullity-one elements,
where the argument is watertight); proper spins yield reducibility
witnesses.  When the search budget runs out the verdict is "undecided"
rather than a guess.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import liealg
from .errors import ConstraintError, DomainError, ShapeError
from .exactlin import (
    ONE,
    ZERO,
    IncrementalEchelon,
    Matrix,
    Subspace,
    as_scalar,
    kernel_basis,
)
from .liealg import LieAlgebra

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
UNDECIDED = "undecided"


class Representation:
    """A module given by its action matrices, action[i] = rho(e_i)."""

    __slots__ = ("algebra", "dim_v", "action", "_key")

    def __init__(self, algebra: LieAlgebra, dim_v: int, action: Sequence[Matrix]):
        if dim_v < 0:
            raise ShapeError("negative module dimension")
        action = tuple(action)
        if len(action) != algebra.dim:
            raise ShapeError(
                f"{len(action)} action matrices for an algebra of dimension {algebra.dim}")
        for m in action:
            if m.shape != (dim_v, dim_v):
                raise ShapeError(f"action matrix of shape {m.shape}, expected {(dim_v, dim_v)}")
        self.algebra = algebra
        self.dim_v = dim_v
        self.action = action
        self._key = (algebra.key(), dim_v, tuple(m.key() for m in action))

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Representation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Representation(dim_v={self.dim_v} over dim {self.algebra.dim})"

    def rho(self, x: Sequence[Fraction]) -> Matrix:
        """Action of an arbitrary algebra element."""
        if len(x) != self.algebra.dim:
            raise ShapeError("element does not live in the algebra")
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for i, c in enumerate(x):
            if c:
                out = out + self.action[i].scale(c)
        return out


@dataclass(frozen=True)
class RepValidationReport:
    ok: bool
    pair: tuple[int, int] | None = None

    def describe(self, rep: Representation) -> str:
        if self.ok:
            return "homomorphism law holds on all basis pairs"
        i, j = self.pair
        names = rep.algebra.basis_names
        return f"homomorphism law fails on basis pair ({names[i]}, {names[j]})"


def validate_rep(rep: Representation) -> RepValidationReport:
    """Check rho([e_i, e_j]) = [rho(e_i), rho(e_j)] for every i < j."""
    algebra = rep.algebra
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            lhs = rep.action[i] * rep.action[j] - rep.action[j] * rep.action[i]
            rhs = Matrix.zeros(rep.dim_v, rep.dim_v)
            for k, c in algebra.bracket_basis(i, j).items():
                rhs = rhs + rep.action[k].scale(c)
            if lhs != rhs:
                return RepValidationReport(False, (i, j))
    return RepValidationReport(True)


# -- constructors --------------------------------------------------------

def trivial_module(algebra: LieAlgebra, dim_v: int = 1) -> Representation:
    return Representation(algebra, dim_v, [Matrix.zeros(dim_v, dim_v)] * algebra.dim)


def adjoint_module(algebra: LieAlgebra) -> Representation:
    return Representation(algebra, algebra.dim, liealg.ad_basis(algebra))


def dual(rep: Representation) -> Representation:
    """Adjoint module: negated transposes of the action matrices."""
    return Representation(rep.algebra, rep.dim_v, [-(m.transpose()) for m in rep.action])


def twist(rep: Representation, sign: int) -> Representation:
    """Shift the action by sign * Tr(ad x) * identity.

    Tr(ad .) is a character (traces of ad of brackets vanish), so the
    result satisfies the homomorphism law automatically.  sign=-1 subtracts
    the trace; sign=+1 adds it.
    """
    if sign not in (1, -1):
        raise DomainError("twist sign must be +1 or -1")
    traces = liealg.ad_traces(rep.algebra)
    ident = Matrix.identity(rep.dim_v)
    action = [
        m + ident.scale(t * sign) if t else m
        for m, t in zip(rep.action, traces)
    ]
    return Representation(rep.algebra, rep.dim_v, action)


def character_module(algebra: LieAlgebra, lam: Sequence) -> Representation:
    """One-dimensional module rho(e_i) = [lam_i]; lam must kill [L, L]."""
    lam = [as_scalar(x) for x in lam]
    if len(lam) != algebra.dim:
        raise ShapeError("functional has the wrong length")
    for (i, j), terms in algebra.table.items():
        s = sum((c * lam[k] for k, c in terms.items()), ZERO)
        if s:
            raise ConstraintError(
                "functional does not vanish on the derived subalgebra "
                f"(fails on [{algebra.basis_names[i]}, {algebra.basis_names[j]}])")
    return Representation(algebra, 1, [Matrix(1, 1, [[x]]) for x in lam])


def sl2_irreducible(m: int) -> Representation:
    """The (m+1)-dimensional irreducible module of sl2 with integer matrices.

    Basis v_0..v_m: h v_k = (m - 2k) v_k, f v_k = v_{k+1},
    e v_k = k (m - k + 1) v_{k-1}.
    """
    if m < 0:
        raise DomainError("highest weight must be nonnegative")
    n = m + 1
    h = Matrix.zeros(n, n)
    e = Matrix.zeros(n, n)
    f = Matrix.zeros(n, n)
    for k in range(n):
        h.data[k][k] = Fraction(m - 2 * k)
        if k + 1 < n:
            f.data[k + 1][k] = ONE
        if k > 0:
            e.data[k - 1][k] = Fraction(k * (m - k + 1))
    return Representation(liealg.sl2(), n, [h, e, f])


def tensor_product(v: Representation, w: Representation) -> Representation:
    """rho(x) = rho_V(x) (x) 1 + 1 (x) rho_W(x), over the common algebra."""
    if v.algebra != w.algebra:
        raise DomainError("tensor product requires modules over the same algebra")
    iv = Matrix.identity(v.dim_v)
    iw = Matrix.identity(w.dim_v)
    action = [a.kron(iw) + iv.kron(b) for a, b in zip(v.action, w.action)]
    return Representation(v.algebra, v.dim_v * w.dim_v, action)


def direct_sum_mod(v: Representation, w: Representation) -> Representation:
    if v.algebra != w.algebra:
        raise DomainError("direct sum requires modules over the same algebra")
    action = [Matrix.block_diag([a, b]) for a, b in zip(v.action, w.action)]
    return Representation(v.algebra, v.dim_v + w.dim_v, action)


def outer_tensor(v: Representation, w: Representation,
                 algebra: LieAlgebra | None = None) -> Representation:
    """Module over the direct sum algebra: the first summand acts on the
    first tensor factor, the second on the second."""
    ambient = liealg.direct_sum(v.algebra, w.algebra)
    if algebra is not None:
        if algebra != ambient:
            raise DomainError("supplied algebra is not the direct sum of the factors")
        ambient = algebra
    iv = Matrix.identity(v.dim_v)
    iw = Matrix.identity(w.dim_v)
    action = [a.kron(iw) for a in v.action] + [iv.kron(b) for b in w.action]
    return Representation(ambient, v.dim_v * w.dim_v, action)


def lift_through_quotient(algebra: LieAlgebra, ideal: Subspace,
                          vbar: Representation) -> Representation:
    """Pull a module of algebra/ideal back to the algebra, the ideal acting
    as zero."""
    quotient, comp = liealg.quotient_algebra(algebra, ideal)
    if vbar.algebra != quotient:
        raise DomainError("module is not over the quotient by the given ideal")
    action = []
    for i in range(algebra.dim):
        coords = liealg.project_to_quotient(ideal, comp, algebra.basis_vector(i))
        mat = Matrix.zeros(vbar.dim_v, vbar.dim_v)
        for a, c in enumerate(coords):
            if c:
                mat = mat + vbar.action[a].scale(c)
        action.append(mat)
    return Representation(algebra, vbar.dim_v, action)


# -- structural queries ---------------------------------------------------

def invariants(rep: Representation) -> Subspace:
    """Joint kernel of the action matrices; equals H^0."""
    if rep.algebra.dim == 0 or rep.dim_v == 0:
        return Subspace.full(rep.dim_v)
    stacked = Matrix.vstack(rep.action, cols=rep.dim_v)
    return Subspace.from_vectors(rep.dim_v, kernel_basis(stacked))


def is_trivial(rep: Representation) -> bool:
    return all(m.is_zero() for m in rep.action)


# -- irreducibility --------------------------------------------------------

@dataclass(frozen=True)
class IrreducibilityResult:
    status: str
    witness: Subspace | None = None
    certificate: str = ""

    @property
    def decided(self) -> bool:
        return self.status != UNDECIDED


def spin(vectors: Iterable[Sequence[Fraction]], mats: Sequence[Matrix], dim: int) -> Subspace:
    """Smallest subspace containing the vectors and closed under the matrices."""
    ech = IncrementalEchelon(dim)
    for v in vectors:
        ech.insert(list(v))
    frontier = ech.vectors()
    idx = 0
    while idx < len(frontier) and ech.dim_span < dim:
        v = frontier[idx]
        idx += 1
        for m in mats:
            w = m.apply(v)
            if any(w) and ech.insert(w):
                frontier.append(w)
    return Subspace.from_vectors(dim, ech.vectors())


def _is_invariant(sub: Subspace, mats: Sequence[Matrix]) -> bool:
    return all(sub.contains_vector(m.apply(list(v))) for v in sub.basis for m in mats)


def _candidate_elements(gens: list[Matrix], max_word_len: int,
                        random_combos: int, seed: int) -> Iterator[tuple[str, Matrix]]:
    nonzero = [(f"g{i}", g) for i, g in enumerate(gens) if not g.is_zero()]
    seen: set = set()
    for name, g in nonzero:
        k = g.key()
        if k not in seen:
            seen.add(k)
            yield name, g
    layer = nonzero
    for _ in range(max_word_len - 1):
        nxt = []
        for name, a in layer:
            for gname, g in nonzero:
                prod = a * g
                if prod.is_zero():
                    continue
                k = prod.key()
                wname = f"{name}*{gname}"
                nxt.append((wname, prod))
                if k not in seen:
                    seen.add(k)
                    yield wname, prod
        layer = nxt
    rng = random.Random(seed)
    for t in range(random_combos):
        coeffs = [rng.randint(-3, 3) for _ in nonzero]
        if not any(coeffs):
            continue
        combo = Matrix.zeros(gens[0].rows, gens[0].cols)
        for c, (_, g) in zip(coeffs, nonzero):
            if c:
                combo = combo + g.scale(c)
        if combo.is_zero():
            continue
        k = combo.key()
        if k not in seen:
            seen.add(k)
            yield f"rand{t}", combo


def is_irreducible(rep: Representation, seed: int = 0, max_word_len: int = 4,
                   random_combos: int = 64) -> IrreducibilityResult:
    """Decide irreducibility over Q, or return an honest "undecided".

    Certification requires a nullity-one singular element A of the
    enveloping algebra whose kernel vector spins to the full space while
    the kernel vector of the transpose spins to the full dual space: a
    proper submodule U would either meet ker A (so the kernel vector lies
    in U and cannot spin to everything) or have A invertible on it (so
    ker A^T lies in the annihilator of U and the dual spin stays proper).
    Higher-nullity elements are used to hunt for proper spins only.
    """
    n = rep.dim_v
    if n == 0:
        raise DomainError("irreducibility of the zero module is undefined")
    if n == 1:
        return IrreducibilityResult(IRREDUCIBLE, certificate="one-dimensional")
    gens = list(rep.action)
    inv = invariants(rep)
    if inv.dim == n:
        witness = Subspace.from_vectors(n, [[ONE if i == 0 else ZERO for i in range(n)]])
        return IrreducibilityResult(REDUCIBLE, witness, "trivial module")
    if inv.dim > 0:
        return IrreducibilityResult(REDUCIBLE, inv, "nonzero invariants")
    col_span = Subspace.from_vectors(
        n, [m.col(j) for m in gens for j in range(n)])
    if 0 < col_span.dim < n:
        return IrreducibilityResult(REDUCIBLE, col_span, "proper image of the action")
    transposed = [m.transpose() for m in gens]
    for name, a in _candidate_elements(gens, max_word_len, random_combos, seed):
        ker = kernel_basis(a)
        if not ker:
            continue
        full = True
        for v in ker:
            sub = spin([v], gens, n)
            if sub.dim < n:
                return IrreducibilityResult(REDUCIBLE, sub, f"kernel spin of {name}")
        dual_ker = kernel_basis(a.transpose())
        for w in dual_ker:
            dual_sub = spin([w], transposed, n)
            if dual_sub.dim < n:
                perp = Subspace.from_vectors(n, kernel_basis(dual_sub.matrix()))
                if 0 < perp.dim < n and _is_invariant(perp, gens):
                    return IrreducibilityResult(REDUCIBLE, perp, f"dual kernel spin of {name}")
                full = False
        if full and len(ker) == 1 and len(dual_ker) == 1:
            return IrreducibilityResult(
                IRREDUCIBLE, certificate=f"norton element {name} (nullity 1)")
    return IrreducibilityResult(UNDECIDED, certificate="search budget exhausted")

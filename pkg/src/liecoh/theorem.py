"""Structure-versus-cohomology verdicts on concrete algebras.

The equivalence under test: an algebra is a direct sum of a semisimple and
a nilpotent algebra (condition i) exactly when the cohomology of every
nontrivial irreducible module vanishes, in all degrees (ii), in degree
dim L - 1 (iii), or in degree 1 (iv).  Conditions (ii)-(iv) quantify over
all nontrivial irreducible modules, which no finite run can exhaust, so
verdicts are computed over an explicit ModuleFamily.  A single nonzero
dimension refutes; the absence of witnesses confirms only relative to the
family, and the family's `adequate` flag records whether the caller
curates it as rich enough to refute when condition (i) fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from . import liealg, repmod
from .cohomology import DEFAULT_COLUMN_CEILING, cohomology_dims
from .errors import DomainError, InternalCheckError
from .exactlin import Matrix, Subspace, kernel_basis
from .liealg import LieAlgebra
from .repmod import IRREDUCIBLE, REDUCIBLE, Representation


@dataclass(frozen=True)
class FamilyMember:
    name: str
    rep: Representation
    trivial: bool
    irreducibility: str
    claim: str | None = None


@dataclass(frozen=True)
class ModuleFamily:
    algebra: LieAlgebra
    members: tuple[FamilyMember, ...]
    adequate: bool = False


def make_family(algebra: LieAlgebra, items, adequate: bool = False,
                seed: int = 0, claims: dict[str, str] | None = None) -> ModuleFamily:
    """Build a family from (name, representation) pairs.

    Triviality and irreducibility are recomputed here; externally supplied
    claims are recorded for reporting but never trusted.
    """
    members = []
    for name, rep in items:
        if rep.algebra != algebra:
            raise DomainError(f"family member {name!r} is over a different algebra")
        report = repmod.validate_rep(rep)
        if not report.ok:
            raise DomainError(f"family member {name!r}: {report.describe(rep)}")
        res = repmod.is_irreducible(rep, seed=seed)
        members.append(FamilyMember(
            name=name,
            rep=rep,
            trivial=repmod.is_trivial(rep),
            irreducibility=res.status,
            claim=(claims or {}).get(name),
        ))
    return ModuleFamily(algebra, tuple(members), adequate)


@dataclass(frozen=True)
class Witness:
    module: str
    degree: int
    dim: int


@dataclass(frozen=True)
class TheoremVerdict:
    algebra_dim: int
    condition_i: bool
    condition_ii_family: bool
    condition_iii_family: bool
    condition_iv_family: bool
    witnesses: tuple[Witness, ...]
    evaluated: tuple[str, ...]
    skipped: tuple[tuple[str, str], ...]
    adequate: bool
    consistency: bool
    radical_dim: int


def _eligible(family: ModuleFamily):
    """Nontrivial members with certified irreducibility; others are noticed."""
    eligible, skipped = [], []
    for m in family.members:
        if m.trivial:
            skipped.append((m.name, "trivial module"))
        elif m.irreducibility == REDUCIBLE:
            skipped.append((m.name, "reducible module"))
        elif m.irreducibility != IRREDUCIBLE:
            skipped.append((m.name, "irreducibility undecided"))
        else:
            eligible.append(m)
    return eligible, skipped


def check_conditions(algebra: LieAlgebra, family: ModuleFamily,
                     ceiling: int = DEFAULT_COLUMN_CEILING) -> TheoremVerdict:
    """Evaluate condition (i) structurally and (ii)-(iv) over the family."""
    if family.algebra != algebra:
        raise DomainError("family is over a different algebra")
    condition_i, witness = liealg.is_ss_plus_nilpotent(algebra)
    eligible, skipped = _eligible(family)
    d = algebra.dim
    witnesses: list[Witness] = []
    top_missing = d - 1
    cond_iii = True
    cond_iv = True
    for member in eligible:
        dims = cohomology_dims(algebra, member.rep, ceiling=ceiling).dims
        for n, h in enumerate(dims):
            if h:
                witnesses.append(Witness(member.name, n, h))
                if n == top_missing:
                    cond_iii = False
                if n == 1:
                    cond_iv = False
    cond_ii = not witnesses
    consistency = True
    if condition_i and witnesses:
        consistency = False
    if not condition_i and family.adequate:
        consistency = consistency and not cond_ii and not cond_iii and not cond_iv
    return TheoremVerdict(
        algebra_dim=d,
        condition_i=condition_i,
        condition_ii_family=cond_ii,
        condition_iii_family=cond_iii,
        condition_iv_family=cond_iv,
        witnesses=tuple(witnesses),
        evaluated=tuple(m.name for m in eligible),
        skipped=tuple(skipped),
        adequate=family.adequate,
        consistency=consistency,
        radical_dim=witness.radical.dim,
    )


@dataclass(frozen=True)
class WitnessResult:
    name: str
    rep: Representation
    degree: int
    dim: int


def _annihilator_of_derived(algebra: LieAlgebra) -> list[list[Fraction]]:
    derived = liealg.derived_subalgebra(algebra)
    if derived.is_zero():
        return Matrix.identity(algebra.dim).data
    return kernel_basis(derived.matrix())


def _character_grid(algebra: LieAlgebra, box: int = 2):
    """Deterministic grid of characters vanishing on the derived subalgebra."""
    ann = _annihilator_of_derived(algebra)
    if not ann:
        return
    for coeffs in iter_product(range(-box, box + 1), repeat=len(ann)):
        if not any(coeffs):
            continue
        lam = [
            sum((Fraction(c) * row[k] for c, row in zip(coeffs, ann)), Fraction(0))
            for k in range(algebra.dim)
        ]
        name = "chi(" + ",".join(str(c) for c in coeffs) + ")"
        yield name, repmod.character_module(algebra, lam)


def _lift_candidates(algebra: LieAlgebra):
    """Lifts of semisimple-quotient modules through the radical.

    Only quotients whose structure constants literally match the stored
    sl2 or so3 tables are recognized; no isomorphism search is attempted.
    """
    rad = liealg.radical(algebra)
    if rad.is_zero() or rad.is_full():
        return
    quotient, _ = liealg.quotient_algebra(algebra, rad)
    if quotient == liealg.sl2():
        for m in range(1, 5):
            vbar = repmod.sl2_irreducible(m)
            yield f"lift(V({m}))", repmod.lift_through_quotient(algebra, rad, vbar)
    elif quotient == liealg.so3():
        yield "lift(adjoint)", repmod.lift_through_quotient(
            algebra, rad, repmod.adjoint_module(quotient))


def witness_search(algebra: LieAlgebra, budget: int = 200,
                   seed: int = 0,
                   ceiling: int = DEFAULT_COLUMN_CEILING) -> WitnessResult | None:
    """First nontrivial irreducible module with nonzero first cohomology.

    Candidate order: the one-dimensional module x -> Tr(ad x) when the
    algebra is not unimodular, then a small grid of characters, then lifts
    of modules of a recognized semisimple quotient.  Deterministic given
    the seed; returns None when the budget is exhausted.
    """
    def candidates():
        if not liealg.is_unimodular(algebra):
            yield "K^-tw", repmod.twist(repmod.trivial_module(algebra), +1)
        yield from _character_grid(algebra)
        yield from _lift_candidates(algebra)

    seen: set = set()
    examined = 0
    for name, rep in candidates():
        if examined >= budget:
            break
        key = rep.key()
        if key in seen:
            continue
        seen.add(key)
        examined += 1
        if repmod.is_trivial(rep):
            continue
        if repmod.is_irreducible(rep, seed=seed).status != IRREDUCIBLE:
            continue
        dims = cohomology_dims(algebra, rep, ceiling=ceiling).dims
        if len(dims) > 1 and dims[1]:
            return WitnessResult(name, rep, 1, dims[1])
    return None


@dataclass(frozen=True)
class CorollaryVerdict:
    algebra_dim: int
    vacuous: bool
    family_side: bool
    structural_side: bool
    matches: bool
    findings: tuple[Witness, ...]
    evaluated: tuple[str, ...]
    skipped: tuple[tuple[str, str], ...]


def verify_corollary(algebra: LieAlgebra, family: ModuleFamily,
                     ceiling: int = DEFAULT_COLUMN_CEILING) -> CorollaryVerdict:
    """Compare high-degree vanishing over the family with the structural side.

    Degrees n >= 3 are empty in dimension 2 (vacuously true); in dimension
    3 the structural side is unimodularity; in any other dimension it is
    the semisimple-plus-nilpotent split.
    """
    if family.algebra != algebra:
        raise DomainError("family is over a different algebra")
    d = algebra.dim
    eligible, skipped = _eligible(family)
    findings: list[Witness] = []
    if d != 2:
        for member in eligible:
            dims = cohomology_dims(algebra, member.rep, ceiling=ceiling).dims
            for n in range(3, d + 1):
                if dims[n]:
                    findings.append(Witness(member.name, n, dims[n]))
    family_side = not findings
    if d == 2:
        vacuous = True
        structural = True
    elif d == 3:
        vacuous = False
        structural = liealg.is_unimodular(algebra)
    else:
        vacuous = False
        structural = liealg.is_ss_plus_nilpotent(algebra)[0]
    return CorollaryVerdict(
        algebra_dim=d,
        vacuous=vacuous,
        family_side=family_side,
        structural_side=structural,
        matches=family_side == structural,
        findings=tuple(findings),
        evaluated=tuple(m.name for m in eligible),
        skipped=tuple(skipped),
    )


@dataclass(frozen=True)
class FiveTermReport:
    h1_quotient: int
    h1_lifted: int

    @property
    def holds(self) -> bool:
        return self.h1_quotient <= self.h1_lifted


def five_term_check(algebra: LieAlgebra, ideal: Subspace,
                    vbar: Representation,
                    ceiling: int = DEFAULT_COLUMN_CEILING) -> FiveTermReport:
    """Inflation is injective on first cohomology: with V the lift of vbar
    (the ideal acting as zero, so the ideal-invariants are all of V),
    dim H^1(L/I, vbar) <= dim H^1(L, V)."""
    lifted = repmod.lift_through_quotient(algebra, ideal, vbar)
    quotient, _ = liealg.quotient_algebra(algebra, ideal)
    lhs = cohomology_dims(quotient, vbar, ceiling=ceiling).dims
    rhs = cohomology_dims(algebra, lifted, ceiling=ceiling).dims
    h1_quot = lhs[1] if len(lhs) > 1 else 0
    h1_lift = rhs[1] if len(rhs) > 1 else 0
    return FiveTermReport(h1_quot, h1_lift)


@dataclass(frozen=True)
class SplittingReport:
    applicable: bool
    reason: str
    ideal: Subspace | None = None
    quotient_dim: int | None = None
    h2_dim: int | None = None


def _restrict_to_subspace(mats, sub: Subspace, ambient: int) -> list[Matrix]:
    out = []
    for m in mats:
        cols = [sub.coordinates(m.apply(list(v))) for v in sub.basis]
        out.append(Matrix(sub.dim, sub.dim,
                          [[cols[j][i] for j in range(sub.dim)] for i in range(sub.dim)]))
    return out


def _minimal_ideal_inside(algebra: LieAlgebra, candidate: Subspace,
                          seed: int) -> Subspace | None:
    """Shrink an abelian ideal to a minimal one; None when undecidable."""
    ads = liealg.ad_basis(algebra)
    current = candidate
    while True:
        best = current
        for v in current.basis:
            spun = repmod.spin([list(v)], ads, algebra.dim)
            if spun.dim < best.dim:
                best = spun
        if 0 < best.dim < current.dim:
            current = best
            continue
        mats = _restrict_to_subspace(ads, current, algebra.dim)
        as_module = Representation(algebra, current.dim, mats)
        res = repmod.is_irreducible(as_module, seed=seed)
        if res.status == IRREDUCIBLE:
            return current
        if res.status == REDUCIBLE:
            ambient_vectors = []
            for coords in res.witness.basis:
                vec = [Fraction(0)] * algebra.dim
                for c, row in zip(coords, current.basis):
                    if c:
                        for k in range(algebra.dim):
                            vec[k] += c * row[k]
                ambient_vectors.append(vec)
            current = Subspace.from_vectors(algebra.dim, ambient_vectors)
            continue
        return None


def splitting_h2_check(algebra: LieAlgebra, seed: int = 0,
                       ceiling: int = DEFAULT_COLUMN_CEILING) -> SplittingReport:
    """Locate a minimal abelian ideal with nontrivial quotient action and
    report dim H^2(L/I, I); the splitting itself is not constructed.

    Not applicable when the algebra is semisimple, when the minimal ideal
    found is central, or when minimality cannot be certified.
    """
    rad = liealg.radical(algebra)
    if rad.is_zero():
        return SplittingReport(False, "no nonzero solvable ideal")
    abelian_term = liealg.last_abelian_term(algebra, rad)
    minimal = _minimal_ideal_inside(algebra, abelian_term, seed)
    if minimal is None:
        return SplittingReport(False, "minimality of the candidate ideal undecided")
    restricted = _restrict_to_subspace(liealg.ad_basis(algebra), minimal, algebra.dim)
    if all(m.is_zero() for m in restricted):
        return SplittingReport(False, "the minimal ideal is central", ideal=minimal)
    quotient, comp = liealg.quotient_algebra(algebra, minimal)
    action = []
    for a in comp:
        mat = _restrict_to_subspace([liealg.ad_basis(algebra)[a]], minimal, algebra.dim)[0]
        action.append(mat)
    module = Representation(quotient, minimal.dim, action)
    if not repmod.validate_rep(module).ok:
        raise InternalCheckError("quotient action on a minimal ideal is not a representation")
    h2 = cohomology_dims(quotient, module, ceiling=ceiling).dims
    h2_dim = h2[2] if len(h2) > 2 else 0
    return SplittingReport(True, "minimal abelian ideal with nontrivial action",
                           ideal=minimal, quotient_dim=quotient.dim, h2_dim=h2_dim)

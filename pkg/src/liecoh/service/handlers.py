"""Request handlers shared by the HTTP app and the in-process CLI client.

Each handler takes a request model and returns a response model; domain
errors propagate as liecoh exceptions and are mapped to HTTP statuses by
the app (and to exit code 2 by the CLI).
"""

from __future__ import annotations

from .. import documents, families, liealg, repmod, theorem
from ..catalog import catalog, catalog_names
from ..cohomology import (
    cohomology_dims,
    verify_hazewinkel,
    verify_kunneth,
)
from ..errors import UnknownNameError
from ..exactlin import format_scalar
from ..liealg import LieAlgebra
from ..repmod import Representation
from ..theorem import ModuleFamily, make_family
from . import models


def _resolve(source: models.DocumentSource) -> tuple[LieAlgebra, documents.InputDocument | None, str | None]:
    if source.catalog is not None:
        return catalog(source.catalog), None, source.catalog
    doc = documents.parse(source.document)
    return doc.algebra, doc, None


def _resolve_module(source: models.DocumentSource, name: str) -> tuple[LieAlgebra, Representation]:
    algebra, doc, cat_name = _resolve(source)
    if name == "K":
        return algebra, repmod.trivial_module(algebra)
    if doc is not None:
        if name not in doc.modules:
            raise UnknownNameError(f"document declares no module named {name!r}")
        return algebra, doc.modules[name]
    fam = families.default_family(cat_name)
    return algebra, families.family_module(fam, name)


def _resolve_family(source: models.DocumentSource, seed: int,
                    adequate: bool | None) -> tuple[LieAlgebra, ModuleFamily]:
    algebra, doc, cat_name = _resolve(source)
    if doc is not None:
        names = doc.family_names()
        if not names:
            raise UnknownNameError("document declares no modules to use as a family")
        fam = make_family(
            algebra,
            [(n, doc.modules[n]) for n in names],
            adequate=bool(adequate),
            seed=seed,
            claims=doc.claims(),
        )
    else:
        fam = families.default_family(cat_name, seed=seed)
        if adequate is not None and adequate != fam.adequate:
            fam = ModuleFamily(fam.algebra, fam.members, adequate)
    return algebra, fam


def _vectors(rows) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in rows]


def handle_check(req: models.CheckRequest) -> models.CheckResponse:
    algebra, _, _ = _resolve(req)
    flags = liealg.structure_flags(algebra)
    split, _ = liealg.is_ss_plus_nilpotent(algebra)
    return models.CheckResponse(
        dim=algebra.dim,
        basis=list(algebra.basis_names),
        abelian=flags.abelian,
        nilpotent=flags.nilpotent,
        solvable=flags.solvable,
        semisimple=flags.semisimple,
        perfect=flags.perfect,
        unimodular=liealg.is_unimodular(algebra),
        ss_plus_nilpotent=split,
        radical_dim=flags.radical.dim,
        center_dim=flags.center.dim,
        derived_dim=flags.derived.dim,
        radical_basis=_vectors(flags.radical.basis),
        center_basis=_vectors(flags.center.basis),
        killing_form=_vectors(flags.killing.data),
    )


def handle_cohomology(req: models.CohomologyRequest) -> models.CohomologyResponse:
    algebra, module = _resolve_module(req, req.module)
    report = cohomology_dims(algebra, module, representatives=req.representatives,
                             ceiling=req.ceiling)
    reps = None
    if req.representatives:
        reps = {
            str(n): _vectors(report.representatives[n])
            for n in range(len(report.dims))
            if report.representatives[n]
        }
    return models.CohomologyResponse(
        module=req.module,
        algebra_dim=algebra.dim,
        dims=list(report.dims),
        table=[
            models.CohomologyRow(degree=n, cochain_dim=c, coboundary_rank=r,
                                 cohomology_dim=h)
            for n, c, r, h in report.table()
        ],
        euler_characteristic=report.euler_characteristic,
        representatives=reps,
    )


def handle_duality(req: models.DualityRequest) -> models.DualityResponse:
    algebra, module = _resolve_module(req, req.module)
    report = verify_hazewinkel(algebra, module, ceiling=req.ceiling)
    return models.DualityResponse(
        module=req.module,
        ok=report.ok,
        degrees=[
            models.DegreeComparison(degree=c.degree, lhs=c.lhs, rhs=c.rhs, ok=c.ok)
            for c in report.degrees
        ],
    )


def handle_kunneth(req: models.KunnethRequest) -> models.KunnethResponse:
    l1, v1 = _resolve_module(req.left, req.left_module)
    l2, v2 = _resolve_module(req.right, req.right_module)
    report = verify_kunneth(l1, v1, l2, v2, ceiling=req.ceiling)
    return models.KunnethResponse(
        ok=report.ok,
        degrees=[
            models.DegreeComparison(degree=c.degree, lhs=c.lhs, rhs=c.rhs, ok=c.ok)
            for c in report.degrees
        ],
        left_dims=list(report.left_dims),
        right_dims=list(report.right_dims),
    )


def _witness_models(witnesses) -> list[models.WitnessInfo]:
    return [
        models.WitnessInfo(module=w.module, degree=w.degree, dim=w.dim)
        for w in witnesses
    ]


def _skipped_models(skipped) -> list[models.SkippedMember]:
    return [models.SkippedMember(name=n, reason=r) for n, r in skipped]


def handle_theorem(req: models.TheoremRequest) -> models.TheoremResponse:
    algebra, fam = _resolve_family(req, req.seed, req.adequate)
    verdict = theorem.check_conditions(algebra, fam, ceiling=req.ceiling)
    return models.TheoremResponse(
        algebra_dim=verdict.algebra_dim,
        condition_i=verdict.condition_i,
        condition_ii_family=verdict.condition_ii_family,
        condition_iii_family=verdict.condition_iii_family,
        condition_iv_family=verdict.condition_iv_family,
        witnesses=_witness_models(verdict.witnesses),
        evaluated=list(verdict.evaluated),
        skipped=_skipped_models(verdict.skipped),
        adequate=verdict.adequate,
        consistency=verdict.consistency,
        radical_dim=verdict.radical_dim,
    )


def handle_corollary(req: models.CorollaryRequest) -> models.CorollaryResponse:
    algebra, fam = _resolve_family(req, req.seed, req.adequate)
    verdict = theorem.verify_corollary(algebra, fam, ceiling=req.ceiling)
    return models.CorollaryResponse(
        algebra_dim=verdict.algebra_dim,
        vacuous=verdict.vacuous,
        family_side=verdict.family_side,
        structural_side=verdict.structural_side,
        matches=verdict.matches,
        findings=_witness_models(verdict.findings),
        evaluated=list(verdict.evaluated),
        skipped=_skipped_models(verdict.skipped),
    )


def handle_witness(req: models.WitnessRequest) -> models.WitnessResponse:
    algebra, _, _ = _resolve(req)
    result = theorem.witness_search(algebra, budget=req.budget, seed=req.seed,
                                    ceiling=req.ceiling)
    if result is None:
        return models.WitnessResponse(found=False)
    doc = documents.module_document(algebra, "witness", result.rep, "irreducible")
    return models.WitnessResponse(
        found=True,
        module=result.name,
        degree=result.degree,
        dim=result.dim,
        document=doc,
    )


def handle_catalog_list() -> models.CatalogListResponse:
    return models.CatalogListResponse(names=catalog_names())


def handle_catalog(name: str) -> models.CatalogResponse:
    algebra = catalog(name)
    fam = families.default_family(name)
    return models.CatalogResponse(
        name=name,
        dim=algebra.dim,
        document=documents.algebra_document(algebra),
        family=[m.name for m in fam.members],
    )

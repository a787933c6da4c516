"""Request and response schemas for the service.

These models are the single machine-readable rendering of every report:
the HTTP endpoints return them and the CLI's --json flag prints them, so
key names stay stable across both surfaces.  Rational numbers travel as
canonical strings ("p" or "p/q") to keep exactness on the wire.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

DEFAULT_CEILING = 20000


class DocumentSource(BaseModel):
    """Exactly one of `document` (inline text) or `catalog` (a named algebra)."""

    document: str | None = None
    catalog: str | None = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.document is None) == (self.catalog is None):
            raise ValueError("provide exactly one of 'document' or 'catalog'")
        return self


class CheckRequest(DocumentSource):
    pass


class CohomologyRequest(DocumentSource):
    module: str = "K"
    representatives: bool = False
    ceiling: int = DEFAULT_CEILING


class DualityRequest(DocumentSource):
    module: str = "K"
    ceiling: int = DEFAULT_CEILING


class KunnethRequest(BaseModel):
    left: DocumentSource
    right: DocumentSource
    left_module: str = "K"
    right_module: str = "K"
    ceiling: int = DEFAULT_CEILING


class TheoremRequest(DocumentSource):
    seed: int = 0
    ceiling: int = DEFAULT_CEILING
    adequate: bool | None = Field(
        default=None,
        description="Override the family's adequacy flag; by default "
        "catalog families are adequate and document families are not.",
    )


class CorollaryRequest(TheoremRequest):
    pass


class WitnessRequest(DocumentSource):
    budget: int = 200
    seed: int = 0
    ceiling: int = DEFAULT_CEILING


# -- responses -------------------------------------------------------------

class CheckResponse(BaseModel):
    dim: int
    basis: list[str]
    abelian: bool
    nilpotent: bool
    solvable: bool
    semisimple: bool
    perfect: bool
    unimodular: bool
    ss_plus_nilpotent: bool
    radical_dim: int
    center_dim: int
    derived_dim: int
    radical_basis: list[list[str]]
    center_basis: list[list[str]]
    killing_form: list[list[str]]


class CohomologyRow(BaseModel):
    degree: int
    cochain_dim: int
    coboundary_rank: int
    cohomology_dim: int


class CohomologyResponse(BaseModel):
    module: str
    algebra_dim: int
    dims: list[int]
    table: list[CohomologyRow]
    euler_characteristic: int
    representatives: dict[str, list[list[str]]] | None = None


class DegreeComparison(BaseModel):
    degree: int
    lhs: int
    rhs: int
    ok: bool


class DualityResponse(BaseModel):
    module: str
    ok: bool
    degrees: list[DegreeComparison]


class KunnethResponse(BaseModel):
    ok: bool
    degrees: list[DegreeComparison]
    left_dims: list[int]
    right_dims: list[int]


class WitnessInfo(BaseModel):
    module: str
    degree: int
    dim: int


class SkippedMember(BaseModel):
    name: str
    reason: str


class TheoremResponse(BaseModel):
    algebra_dim: int
    condition_i: bool
    condition_ii_family: bool
    condition_iii_family: bool
    condition_iv_family: bool
    witnesses: list[WitnessInfo]
    evaluated: list[str]
    skipped: list[SkippedMember]
    adequate: bool
    consistency: bool
    radical_dim: int


class CorollaryResponse(BaseModel):
    algebra_dim: int
    vacuous: bool
    family_side: bool
    structural_side: bool
    matches: bool
    findings: list[WitnessInfo]
    evaluated: list[str]
    skipped: list[SkippedMember]


class WitnessResponse(BaseModel):
    found: bool
    module: str | None = None
    degree: int | None = None
    dim: int | None = None
    document: str | None = None


class CatalogListResponse(BaseModel):
    names: list[str]


class CatalogResponse(BaseModel):
    name: str
    dim: int
    document: str
    family: list[str]


class HealthResponse(BaseModel):
    status: str

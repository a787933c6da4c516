"""Exact-arithmetic cohomology engine for finite-dimensional Lie algebras over Q.

Layers, bottom up:

  exactlin    rational scalars, matrices, ranks, kernels, subspaces
  liealg      algebras by structure constants; structural predicates
  repmod      modules as matrix representations; duals, twists, lifts,
              irreducibility over Q
  cohomology  the alternating-cochain complex and dimension reports,
              with duality / product / vanishing verifiers
  theorem     structure-versus-cohomology verdicts over module families
  documents   plain-text input format
  service     FastAPI wrapper (pydantic request/response models)
  cli         thin client over the service handlers
"""

from .catalog import catalog, catalog_names
from .cohomology import (
    betti_numbers,
    build_complex,
    cohomology_dims,
    dixmier_vanishing_check,
    h1_trivial_coeffs_perfectness,
    verify_hazewinkel,
    verify_kunneth,
)
from .documents import InputDocument, emit, parse
from .exactlin import Matrix, Subspace, format_scalar, parse_scalar, rank, rank_kernel
from .liealg import (
    LieAlgebra,
    ad,
    direct_sum,
    is_ss_plus_nilpotent,
    is_unimodular,
    semidirect_product,
    structure_flags,
    unimodular_3dim,
    validate,
)
from .repmod import (
    Representation,
    character_module,
    direct_sum_mod,
    dual,
    invariants,
    is_irreducible,
    lift_through_quotient,
    outer_tensor,
    sl2_irreducible,
    tensor_product,
    trivial_module,
    twist,
    validate_rep,
)
from .theorem import (
    ModuleFamily,
    check_conditions,
    five_term_check,
    make_family,
    splitting_h2_check,
    verify_corollary,
    witness_search,
)

__version__ = "0.1.0"

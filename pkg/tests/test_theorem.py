from fractions import Fraction

import pytest

from liecoh import catalog, liealg, repmod
from liecoh.cohomology import build_complex, cohomology_dims
from liecoh.errors import DomainError
from liecoh.exactlin import Matrix, Subspace, rank
from liecoh.families import default_family, family_module
from liecoh.repmod import (
    character_module,
    sl2_irreducible,
    trivial_module,
    twist,
)
from liecoh.theorem import (
    check_conditions,
    five_term_check,
    make_family,
    splitting_h2_check,
    verify_corollary,
    witness_search,
)

from conftest import BASE_CATALOG


def test_check_conditions_positive_case(default_families):
    big = catalog("sl2_plus_heis3")
    verdict = check_conditions(big, default_families["sl2_plus_heis3"])
    assert verdict.condition_i
    assert verdict.witnesses == ()
    assert verdict.condition_ii_family
    assert verdict.consistency
    # only the doubly-trivial outer tensor is skipped
    assert [s[0] for s in verdict.skipped] == ["V(0)xchi(0,0)"]


def test_check_conditions_aff1_witness(default_families):
    aff1 = catalog("aff1")
    verdict = check_conditions(aff1, default_families["aff1"])
    assert not verdict.condition_i
    assert not verdict.condition_iv_family
    assert verdict.consistency
    # the character x -> 1 carries one-dimensional first cohomology
    hits = [w for w in verdict.witnesses if w.degree == 1]
    assert ("chi(1)", 1) in {(w.module, w.dim) for w in hits}


def test_check_conditions_semidirect_witness(default_families):
    sdp = catalog("sl2_semidirect_v1")
    verdict = check_conditions(sdp, default_families["sl2_semidirect_v1"])
    assert not verdict.condition_i
    assert not verdict.condition_iv_family
    assert verdict.consistency
    assert ("lift(V(1))", 1, 1) in {(w.module, w.degree, w.dim) for w in verdict.witnesses}


def test_check_conditions_rejects_wrong_family(default_families):
    with pytest.raises(DomainError):
        check_conditions(catalog("sl2"), default_families["heis3"])


def test_explicit_cocycle_for_semidirect_lift():
    # The projection (s, v) -> v is a nonbounding 1-cocycle of the lift of
    # the natural module: d phi = 0 and phi is not in the image of d_0.
    sdp = catalog("sl2_semidirect_v1")
    rad = liealg.radical(sdp)
    lifted = repmod.lift_through_quotient(sdp, rad, sl2_irreducible(1))
    cx = build_complex(sdp, lifted)
    m = lifted.dim_v
    phi = [Fraction(0)] * (5 * m)
    phi[3 * m + 0] = Fraction(1)  # basis vector v1 maps to module vector 1
    phi[4 * m + 1] = Fraction(1)  # basis vector v2 maps to module vector 2
    assert all(x == 0 for x in cx.coboundaries[1].apply(phi))
    d0 = cx.coboundaries[0]
    extended = Matrix.hstack([d0, Matrix(d0.rows, 1, [[x] for x in phi])])
    assert rank(extended) == rank(d0) + 1
    assert cohomology_dims(sdp, lifted).dims[1] == 1


def test_witness_search_aff1():
    result = witness_search(catalog("aff1"))
    assert result is not None
    assert result.name == "K^-tw" and result.degree == 1 and result.dim == 1
    # the witness is the character x -> 1
    assert result.rep == character_module(catalog("aff1"), [1, 0])


def test_witness_search_nonunimod3():
    # K^-tw itself has vanishing H^1 here; the grid finds the character
    # z -> -1 instead, with two independent cocycle classes.
    nonuni = catalog("nonunimod3")
    ktw = twist(trivial_module(nonuni), +1)
    assert cohomology_dims(nonuni, ktw).dims[1] == 0
    result = witness_search(nonuni)
    assert result is not None
    assert result.name == "chi(-1)" and result.degree == 1 and result.dim == 2
    assert result.rep == character_module(nonuni, [0, 0, -1])


def test_witness_search_none_on_split_algebras():
    assert witness_search(catalog("heis3")) is None
    assert witness_search(catalog("sl2")) is None
    assert witness_search(catalog("sl2_plus_heis3")) is None


def test_witness_search_lift_branch():
    result = witness_search(catalog("sl2_semidirect_v1"))
    assert result is not None
    assert result.name == "lift(V(1))" and result.degree == 1 and result.dim == 1


def test_witness_search_respects_budget():
    # with budget 1 only the twisted line is examined, and on nonunimod3 it
    # has vanishing first cohomology
    assert witness_search(catalog("nonunimod3"), budget=1) is None
    assert witness_search(catalog("nonunimod3"), budget=10) is not None


def test_witness_search_deterministic():
    first = witness_search(catalog("nonunimod3"), seed=5)
    second = witness_search(catalog("nonunimod3"), seed=5)
    assert first.name == second.name and first.rep == second.rep


def test_inadequate_family_keeps_consistency_honest():
    # chi(2) over aff1 has identically vanishing cohomology, so a family
    # made of it alone cannot refute anything: with the adequate flag the
    # verdict is inconsistent, without it the verdict stays consistent.
    aff1 = catalog("aff1")
    items = [("chi(2)", character_module(aff1, [2, 0]))]
    assert cohomology_dims(aff1, items[0][1]).dims == (0, 0, 0)
    modest = check_conditions(aff1, make_family(aff1, items, adequate=False))
    assert not modest.condition_i and modest.witnesses == ()
    assert modest.consistency
    overclaimed = check_conditions(aff1, make_family(aff1, items, adequate=True))
    assert not overclaimed.consistency


def test_witness_search_succeeds_on_non_unimodular(algebras):
    for name, algebra in algebras.items():
        if not liealg.is_unimodular(algebra):
            assert witness_search(algebra) is not None, name


def test_consistency_across_catalog(algebras, default_families):
    for name in BASE_CATALOG:
        verdict = check_conditions(algebras[name], default_families[name])
        assert verdict.consistency, name


def test_semisimple_members_vanish_everywhere(default_families):
    for name in ("sl2", "so3"):
        fam = default_families[name]
        algebra = fam.algebra
        for member in fam.members:
            if member.trivial or member.irreducibility != "irreducible":
                continue
            dims = cohomology_dims(algebra, member.rep).dims
            assert dims == tuple([0] * (algebra.dim + 1)), (name, member.name)


def test_verify_corollary_dim2_vacuous():
    ab2 = catalog("abelian_2")
    verdict = verify_corollary(ab2, default_family("abelian_2"))
    assert verdict.vacuous and verdict.matches


def test_verify_corollary_grid():
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            for c in (-1, 0, 1):
                if a * a + b * c == 0:
                    continue
                name = f"unimod3({a},{b},{c})"
                algebra = catalog(name)
                verdict = verify_corollary(algebra, default_family(name))
                assert verdict.structural_side, name
                assert verdict.family_side, name
                assert verdict.matches, name


def test_verify_corollary_nonunimodular():
    nonuni = catalog("nonunimod3")
    ktw = twist(trivial_module(nonuni), +1)
    assert cohomology_dims(nonuni, ktw).dims[3] == 1
    verdict = verify_corollary(nonuni, default_family("nonunimod3"))
    assert not verdict.structural_side
    assert not verdict.family_side
    assert verdict.matches
    assert any(w.degree == 3 and w.dim == 1 for w in verdict.findings)


def test_verify_corollary_matches_unimodularity_on_3dim(algebras, default_families):
    for name in ("heis3", "nonunimod3", "unimod3(1,0,0)", "unimod3(0,1,1)", "sl2", "so3"):
        verdict = verify_corollary(algebras[name], default_families[name])
        assert verdict.matches, name
        assert verdict.structural_side == liealg.is_unimodular(algebras[name]), name


def test_verify_corollary_higher_dimensions(algebras, default_families):
    # dim 5: the lifted natural module has nonzero degree-4 cohomology,
    # matching the failed structural split
    verdict = verify_corollary(algebras["sl2_semidirect_v1"],
                               default_families["sl2_semidirect_v1"])
    assert not verdict.structural_side and not verdict.family_side
    assert verdict.matches
    assert any(w.degree >= 3 for w in verdict.findings)
    # dim 6: split algebra, everything in high degrees vanishes
    verdict = verify_corollary(algebras["sl2_plus_heis3"],
                               default_families["sl2_plus_heis3"])
    assert verdict.structural_side and verdict.family_side and verdict.matches


def test_five_term_instances():
    sdp = catalog("sl2_semidirect_v1")
    rad = liealg.radical(sdp)
    report = five_term_check(sdp, rad, sl2_irreducible(2))
    assert report.holds and report.h1_quotient == 0

    aff1 = catalog("aff1")
    report = five_term_check(aff1, Subspace.zero(2), character_module(aff1, [1, 0]))
    assert report.holds and report.h1_quotient == report.h1_lifted

    heis3 = catalog("heis3")
    cen = liealg.center(heis3)
    quotient, _ = liealg.quotient_algebra(heis3, cen)
    vbar = character_module(quotient, [1, 0])
    report = five_term_check(heis3, cen, vbar)
    assert report.holds


def test_five_term_rejects_non_ideal():
    sl2 = catalog("sl2")
    with pytest.raises(Exception):
        five_term_check(sl2, Subspace.from_vectors(3, [[0, 1, 0]]), sl2_irreducible(1))


def test_splitting_h2_semidirect_cases():
    report = splitting_h2_check(catalog("sl2_semidirect_v1"))
    assert report.applicable and report.h2_dim == 0
    assert report.ideal.dim == 2 and report.quotient_dim == 3

    sl2 = catalog("sl2")
    bigger = liealg.semidirect_product(sl2, sl2_irreducible(2))
    report = splitting_h2_check(bigger)
    assert report.applicable and report.h2_dim == 0
    assert report.ideal.dim == 3


def test_splitting_h2_central_branch():
    report = splitting_h2_check(catalog("heis3"))
    assert not report.applicable
    assert "central" in report.reason


def test_splitting_h2_semisimple_not_applicable():
    report = splitting_h2_check(catalog("sl2"))
    assert not report.applicable


def test_family_module_lookup(default_families):
    fam = default_families["sl2"]
    assert family_module(fam, "V(2)") == sl2_irreducible(2)
    assert repmod.is_trivial(family_module(fam, "K"))


def test_make_family_recomputes_statuses():
    sl2 = catalog("sl2")
    fam = make_family(
        sl2,
        [("nat", sl2_irreducible(1))],
        claims={"nat": "reducible"},  # wrong external claim
    )
    member = fam.members[0]
    assert member.irreducibility == "irreducible"
    assert member.claim == "reducible"


def test_make_family_rejects_invalid_member():
    sl2 = catalog("sl2")
    v1 = sl2_irreducible(1)
    broken = repmod.Representation(sl2, 2, [v1.action[0], v1.action[1], -v1.action[2]])
    with pytest.raises(DomainError, match="homomorphism"):
        make_family(sl2, [("broken", broken)])

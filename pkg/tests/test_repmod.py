import pytest

from liecoh import catalog, liealg
from liecoh.cohomology import cohomology_dims
from liecoh.errors import ConstraintError, DomainError
from liecoh.exactlin import Matrix, Subspace
from liecoh.repmod import (
    IRREDUCIBLE,
    REDUCIBLE,
    UNDECIDED,
    Representation,
    adjoint_module,
    character_module,
    direct_sum_mod,
    dual,
    invariants,
    is_irreducible,
    is_trivial,
    lift_through_quotient,
    outer_tensor,
    sl2_irreducible,
    tensor_product,
    trivial_module,
    twist,
    validate_rep,
)


def test_validate_rep_trivial_and_adjoint(algebras):
    for name, algebra in algebras.items():
        assert validate_rep(trivial_module(algebra)).ok, name
        assert validate_rep(adjoint_module(algebra)).ok, name


def test_validate_rep_detects_sign_flip():
    sl2 = catalog("sl2")
    v1 = sl2_irreducible(1)
    flipped = Representation(sl2, 2, [v1.action[0], v1.action[1], -v1.action[2]])
    report = validate_rep(flipped)
    assert not report.ok
    assert report.pair is not None


def test_dual_examples():
    heis3 = catalog("heis3")
    assert dual(trivial_module(heis3)) == trivial_module(heis3)
    v2 = sl2_irreducible(2)
    assert dual(dual(v2)) == v2
    # natural module of sl2 is self-dual up to basis: cohomology dims agree
    sl2 = catalog("sl2")
    v1 = sl2_irreducible(1)
    assert cohomology_dims(sl2, v1).dims == cohomology_dims(sl2, dual(v1)).dims


def test_twist_identity_on_unimodular(algebras):
    for name in ("heis3", "sl2", "so3", "unimod3(1,0,0)", "sl2_plus_heis3"):
        algebra = algebras[name]
        v = adjoint_module(algebra)
        assert twist(v, +1) == v
        assert twist(v, -1) == v


def test_twist_rejects_bad_sign():
    with pytest.raises(DomainError):
        twist(trivial_module(catalog("aff1")), 2)


def test_twist_round_trip_and_aff1_character():
    aff1 = catalog("aff1")
    k = trivial_module(aff1)
    minus = twist(k, +1)
    assert minus.action[0] == Matrix.from_rows([[1]])
    assert minus.action[1] == Matrix.from_rows([[0]])
    assert twist(twist(minus, +1), -1) == minus
    assert twist(twist(k, -1), +1) == k
    assert validate_rep(minus).ok


def test_invariants_examples():
    heis3 = catalog("heis3")
    assert invariants(trivial_module(heis3, 4)).is_full()
    sl2 = catalog("sl2")
    assert invariants(sl2_irreducible(1)).is_zero()
    # adjoint invariants are the center
    assert invariants(adjoint_module(heis3)) == liealg.center(heis3)


def test_character_module():
    heis3 = catalog("heis3")
    k = character_module(heis3, [0, 0, 0])
    assert is_trivial(k)
    chi = character_module(heis3, [1, 0, 0])
    assert not is_trivial(chi)
    assert validate_rep(chi).ok
    aff1 = catalog("aff1")
    with pytest.raises(ConstraintError):
        character_module(aff1, [0, 1])  # y spans the derived subalgebra


def test_sl2_irreducible_matrices():
    v0 = sl2_irreducible(0)
    assert v0.dim_v == 1 and is_trivial(v0)
    v1 = sl2_irreducible(1)
    assert v1.action[0] == Matrix.from_rows([[1, 0], [0, -1]])
    assert v1.action[1] == Matrix.from_rows([[0, 1], [0, 0]])
    assert v1.action[2] == Matrix.from_rows([[0, 0], [1, 0]])
    for m in range(5):
        assert validate_rep(sl2_irreducible(m)).ok


def test_sl2_v2_matches_adjoint_cohomology():
    sl2 = catalog("sl2")
    assert (cohomology_dims(sl2, sl2_irreducible(2)).dims
            == cohomology_dims(sl2, adjoint_module(sl2)).dims)


def test_tensor_with_trivial_is_identity_on_dims():
    sl2 = catalog("sl2")
    v2 = sl2_irreducible(2)
    prod = tensor_product(v2, trivial_module(sl2))
    assert prod.dim_v == v2.dim_v
    assert cohomology_dims(sl2, prod).dims == cohomology_dims(sl2, v2).dims


def test_direct_sum_mod_dims_and_invariants():
    sl2 = catalog("sl2")
    v1, v2 = sl2_irreducible(1), sl2_irreducible(2)
    total = direct_sum_mod(v1, v2)
    assert total.dim_v == v1.dim_v + v2.dim_v
    assert validate_rep(total).ok
    assert invariants(total).dim == invariants(v1).dim + invariants(v2).dim
    with pytest.raises(DomainError):
        direct_sum_mod(v1, trivial_module(catalog("heis3")))


def test_outer_tensor_irreducible():
    heis3 = catalog("heis3")
    chi = character_module(heis3, [1, 0, 0])
    ot = outer_tensor(sl2_irreducible(2), chi)
    assert validate_rep(ot).ok
    assert is_irreducible(ot).status == IRREDUCIBLE


def test_lift_through_zero_ideal_is_identity():
    aff1 = catalog("aff1")
    chi = character_module(aff1, [1, 0])
    lifted = lift_through_quotient(aff1, Subspace.zero(2), chi)
    assert lifted == chi


def test_lift_through_radical():
    sdp = catalog("sl2_semidirect_v1")
    rad = liealg.radical(sdp)
    lifted = lift_through_quotient(sdp, rad, sl2_irreducible(1))
    assert validate_rep(lifted).ok
    # the radical acts as zero on the lift
    for v in rad.basis:
        assert lifted.rho(list(v)).is_zero()
    assert is_irreducible(lifted).status == IRREDUCIBLE


def test_lift_through_whole_algebra_only_trivial():
    heis3 = catalog("heis3")
    full = Subspace.full(3)
    quotient, _ = liealg.quotient_algebra(heis3, full)
    assert quotient.dim == 0
    vbar = Representation(quotient, 2, [])
    lifted = lift_through_quotient(heis3, full, vbar)
    assert is_trivial(lifted) and lifted.dim_v == 2


def test_irreducibility_one_dimensional():
    heis3 = catalog("heis3")
    assert is_irreducible(character_module(heis3, [1, 0, 0])).status == IRREDUCIBLE
    assert is_irreducible(trivial_module(heis3)).status == IRREDUCIBLE


def test_irreducibility_zero_dimensional_rejected():
    heis3 = catalog("heis3")
    with pytest.raises(DomainError):
        is_irreducible(trivial_module(heis3, 0))


def test_irreducible_v1_plus_v1_witness_is_summand():
    v1 = sl2_irreducible(1)
    result = is_irreducible(direct_sum_mod(v1, v1))
    assert result.status == REDUCIBLE
    expected = Subspace.from_vectors(4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert result.witness == expected


def test_irreducible_v2():
    assert is_irreducible(sl2_irreducible(2)).status == IRREDUCIBLE


def test_reducible_witness_is_invariant():
    sl2 = catalog("sl2")
    mixed = direct_sum_mod(sl2_irreducible(1), sl2_irreducible(2))
    result = is_irreducible(mixed)
    assert result.status == REDUCIBLE
    sub = result.witness
    assert 0 < sub.dim < 5
    for v in sub.basis:
        for mat in mixed.action:
            assert sub.contains_vector(mat.apply(list(v)))


def test_irreducibility_honest_undecided():
    # Rotation generator over the 1-dimensional abelian algebra: the module
    # is irreducible over Q but its enveloping algebra is a field, so no
    # singular certificate exists and "undecided" is the only sound answer.
    ab1 = catalog("abelian_1")
    rot = Representation(ab1, 2, [Matrix.from_rows([[0, 1], [-1, 0]])])
    assert validate_rep(rot).ok
    assert is_irreducible(rot).status == UNDECIDED


def test_irreducibility_deterministic_in_seed(default_families):
    fam = default_families["sl2_semidirect_v1"]
    for member in fam.members:
        a = is_irreducible(member.rep, seed=123)
        b = is_irreducible(member.rep, seed=123)
        assert a.status == b.status and a.certificate == b.certificate


def test_dual_twist_preserve_dim_and_validity(default_families):
    for name in ("sl2", "heis3", "aff1", "nonunimod3"):
        fam = default_families[name]
        for member in fam.members:
            for derived in (dual(member.rep), twist(member.rep, 1), twist(member.rep, -1)):
                assert derived.dim_v == member.rep.dim_v
                assert validate_rep(derived).ok
            for sign in (1, -1):
                assert twist(twist(member.rep, sign), -sign) == member.rep


def test_irreducibility_invariant_under_dual_and_twist(default_families):
    for name in ("sl2", "aff1", "nonunimod3", "sl2_semidirect_v1"):
        for member in default_families[name].members:
            base = is_irreducible(member.rep)
            for other_rep in (dual(member.rep), twist(member.rep, 1), twist(member.rep, -1)):
                other = is_irreducible(other_rep)
                if base.decided and other.decided:
                    assert base.status == other.status, member.name


def test_minus_twist_detects_unimodularity(algebras):
    for name, algebra in algebras.items():
        # the dual of the minus-twisted trivial line has invariants exactly
        # when every ad trace vanishes
        line = dual(twist(trivial_module(algebra), -1))
        assert (not invariants(line).is_zero()) == liealg.is_unimodular(algebra), name
        k_minus = twist(trivial_module(algebra), +1)
        assert is_trivial(k_minus) == liealg.is_unimodular(algebra), name


def test_adjoint_invariants_equal_center(algebras):
    for name, algebra in algebras.items():
        assert invariants(adjoint_module(algebra)) == liealg.center(algebra), name

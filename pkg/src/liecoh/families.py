"""Default module families shipped for the catalog algebras.

Solvable algebras get a grid of characters with coordinates in {-2..2}
over a basis of the functionals killing the derived subalgebra; sl2 gets
its irreducible modules up to dimension five; so3 the adjoint; the direct
sum gets outer tensor products of the summand families; the semidirect
product gets lifts of the quotient's modules through the radical.

These families are curated to contain refuting modules whenever the
split-plus-nilpotent condition fails, so they are flagged adequate.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product as iter_product

from . import liealg, repmod
from .catalog import catalog
from .errors import UnknownNameError
from .exactlin import Matrix, kernel_basis
from .liealg import LieAlgebra
from .repmod import Representation
from .theorem import ModuleFamily, make_family

_ABELIAN_RE = re.compile(r"^abelian_(\d+)$")
_UNIMOD_RE = re.compile(r"^unimod3\(")


def _character_items(algebra: LieAlgebra, box: int = 2):
    derived = liealg.derived_subalgebra(algebra)
    if derived.is_zero():
        ann = Matrix.identity(algebra.dim).data
    else:
        ann = kernel_basis(derived.matrix())
    items = []
    for coeffs in iter_product(range(-box, box + 1), repeat=len(ann)):
        lam = [
            sum((Fraction(c) * row[k] for c, row in zip(coeffs, ann)), Fraction(0))
            for k in range(algebra.dim)
        ]
        name = "chi(" + ",".join(str(c) for c in coeffs) + ")"
        items.append((name, repmod.character_module(algebra, lam)))
    return items


def _sl2_items(limit: int = 4):
    return [(f"V({m})", repmod.sl2_irreducible(m)) for m in range(limit + 1)]


def _outer_items(total: LieAlgebra, left_items, right_items):
    items = []
    for lname, lrep in left_items:
        for rname, rrep in right_items:
            rep = repmod.outer_tensor(lrep, rrep, algebra=total)
            items.append((f"{lname}x{rname}", rep))
    return items


def default_family(name: str, seed: int = 0) -> ModuleFamily:
    """The shipped family for a catalog algebra name."""
    name = name.strip()
    algebra = catalog(name)
    if _ABELIAN_RE.match(name) or name in ("heis3", "aff1", "nonunimod3") \
            or _UNIMOD_RE.match(name):
        items = _character_items(algebra)
    elif name == "sl2":
        items = _sl2_items()
    elif name == "so3":
        items = [("K", repmod.trivial_module(algebra)),
                 ("adjoint", repmod.adjoint_module(algebra))]
    elif name == "sl2_plus_heis3":
        items = _outer_items(algebra, _sl2_items(2), _character_items(liealg.heisenberg3()))
    elif name == "sl2_semidirect_v1":
        rad = liealg.radical(algebra)
        items = [
            (f"lift(V({m}))",
             repmod.lift_through_quotient(algebra, rad, repmod.sl2_irreducible(m)))
            for m in (1, 2)
        ]
    else:  # pragma: no cover - catalog() already rejects unknown names
        raise UnknownNameError(f"no default family for {name!r}")
    return make_family(algebra, items, adequate=True, seed=seed)


def family_module(family: ModuleFamily, name: str) -> Representation:
    """Fetch a member module by name; "K" is always the trivial module."""
    if name == "K":
        return repmod.trivial_module(family.algebra)
    for member in family.members:
        if member.name == name:
            return member.rep
    raise UnknownNameError(f"no module named {name!r} in the family")

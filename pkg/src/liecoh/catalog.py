"""Named algebra catalog used by tests, the CLI and the service.

Names accepted by `catalog`:

  abelian_<n>          abelian algebra of dimension n
  heis3                Heisenberg algebra, [x, y] = z
  aff1                 [x, y] = y
  sl2                  [h, e] = 2e, [h, f] = -2f, [e, f] = h
  so3                  [x, y] = z, [y, z] = x, [z, x] = y
  sl2_plus_heis3       direct sum of sl2 and heis3
  sl2_semidirect_v1    sl2 acting on its natural 2-dimensional module
  nonunimod3           [x, z] = x, [y, z] = y (not unimodular)
  unimod3(a,b,c)       the solvable unimodular family, a^2 + bc != 0
"""

from __future__ import annotations

import re

from . import liealg, repmod
from .errors import UnknownNameError
from .exactlin import parse_scalar
from .liealg import LieAlgebra

_ABELIAN_RE = re.compile(r"^abelian_(\d+)$")
_UNIMOD_RE = re.compile(r"^unimod3\(([^,()]+),([^,()]+),([^,()]+)\)$")


def catalog(name: str) -> LieAlgebra:
    """Return the named algebra; raises UnknownNameError on a bad name."""
    name = name.strip()
    m = _ABELIAN_RE.match(name)
    if m:
        return liealg.abelian(int(m.group(1)))
    if name == "heis3":
        return liealg.heisenberg3()
    if name == "aff1":
        return liealg.affine1()
    if name == "sl2":
        return liealg.sl2()
    if name == "so3":
        return liealg.so3()
    if name == "sl2_plus_heis3":
        return liealg.direct_sum(liealg.sl2(), liealg.heisenberg3())
    if name == "sl2_semidirect_v1":
        return liealg.semidirect_product(liealg.sl2(), repmod.sl2_irreducible(1))
    if name == "nonunimod3":
        return liealg.nonunimodular3()
    m = _UNIMOD_RE.match(name)
    if m:
        try:
            a, b, c = (parse_scalar(m.group(k)) for k in (1, 2, 3))
        except ValueError as exc:
            raise UnknownNameError(f"bad unimod3 parameters in {name!r}: {exc}") from exc
        return liealg.unimodular_3dim(a, b, c)
    raise UnknownNameError(f"unknown catalog algebra {name!r}")


def catalog_names() -> list[str]:
    """Representative names; abelian_<n> and unimod3(a,b,c) are parametric."""
    return [
        "abelian_1",
        "abelian_2",
        "abelian_3",
        "aff1",
        "heis3",
        "nonunimod3",
        "sl2",
        "sl2_plus_heis3",
        "sl2_semidirect_v1",
        "so3",
        "unimod3(1,0,0)",
        "unimod3(0,1,1)",
    ]

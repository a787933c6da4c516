"""Plain-text documents describing an algebra, its modules and a family.

Format, one directive per line, `#` lines and blank lines ignored:

    algebra dim=3 basis=x,y,z
    bracket 0 1 2 1
    module name=chi dim=1
    row for x: 1
    row for y: 0
    row for z: 0
    family chi irreducible

`bracket i j k q` states that [e_i, e_j] contains q * e_k, with 0-based
indices, i < j, and q a rational literal "p" or "p/q" (q > 0).  A module
holds one `row for <basis name>:` line per algebra basis element, in
basis order, carrying the dim x dim action matrix row-major.  `family`
lines list module names with an optional external irreducibility claim
(irreducible | reducible | unknown); claims are recorded, never trusted.

The module name K is reserved for the trivial one-dimensional module and
is always available without being declared.

Documents emitted by `emit` are canonical: parse(emit(doc)) == doc.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .exactlin import Matrix, format_scalar, parse_scalar
from .liealg import LieAlgebra, validate
from .repmod import Representation, validate_rep

CLAIMS = ("irreducible", "reducible", "unknown")
RESERVED_MODULE_NAME = "K"


@dataclass
class InputDocument:
    algebra: LieAlgebra
    modules: dict[str, Representation] = field(default_factory=dict)
    family: tuple[tuple[str, str], ...] = ()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InputDocument)
            and self.algebra == other.algebra
            and self.algebra.basis_names == other.algebra.basis_names
            and self.modules == other.modules
            and self.family == other.family
        )

    def family_names(self) -> list[str]:
        """The family section, or every declared module when absent."""
        if self.family:
            return [name for name, _ in self.family]
        return list(self.modules)

    def claims(self) -> dict[str, str]:
        return {name: claim for name, claim in self.family if claim != "unknown"}


def _parse_kv(parts: list[str], lineno: int) -> dict[str, str]:
    out = {}
    for part in parts:
        if "=" not in part:
            raise ParseError(f"expected key=value, got {part!r}", lineno)
        key, _, value = part.partition("=")
        if key in out:
            raise ParseError(f"duplicate key {key!r}", lineno)
        out[key] = value
    return out


def parse(text: str) -> InputDocument:
    """Parse and fully validate a document; raises ParseError with the line."""
    lines = [
        (i + 1, raw.strip())
        for i, raw in enumerate(text.splitlines())
    ]
    lines = [(n, s) for n, s in lines if s and not s.startswith("#")]
    if not lines:
        raise ParseError("empty document")

    pos = 0
    lineno, line = lines[pos]
    if not line.startswith("algebra"):
        raise ParseError("document must start with an algebra line", lineno)
    kv = _parse_kv(line.split()[1:], lineno)
    if "dim" not in kv:
        raise ParseError("algebra line needs dim=<n>", lineno)
    try:
        dim = int(kv["dim"])
    except ValueError:
        raise ParseError(f"bad dimension {kv['dim']!r}", lineno)
    if dim < 0:
        raise ParseError("dimension must be nonnegative", lineno)
    if "basis" in kv and kv["basis"]:
        names = tuple(kv["basis"].split(","))
        if len(names) != dim or len(set(names)) != dim or any(not n for n in names):
            raise ParseError(f"basis must list {dim} distinct names", lineno)
    else:
        names = tuple(f"e{i + 1}" for i in range(dim))
    algebra_line = lineno
    pos += 1

    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen_brackets: set[tuple[int, int, int]] = set()
    while pos < len(lines) and lines[pos][1].startswith("bracket"):
        lineno, line = lines[pos]
        parts = line.split()
        if len(parts) != 5:
            raise ParseError("bracket lines read: bracket i j k p/q", lineno)
        try:
            i, j, k = int(parts[1]), int(parts[2]), int(parts[3])
        except ValueError:
            raise ParseError("bracket indices must be integers", lineno)
        if not (0 <= i < j < dim):
            raise ParseError(f"bracket indices ({i}, {j}) must satisfy 0 <= i < j < {dim}", lineno)
        if not 0 <= k < dim:
            raise ParseError(f"bracket target index {k} out of range", lineno)
        if (i, j, k) in seen_brackets:
            raise ParseError(f"duplicate bracket entry for ({i}, {j}, {k})", lineno)
        seen_brackets.add((i, j, k))
        try:
            coeff = parse_scalar(parts[4])
        except ValueError as exc:
            raise ParseError(str(exc), lineno)
        if coeff:
            brackets.setdefault((i, j), {})[k] = coeff
        pos += 1

    algebra = LieAlgebra(dim, brackets, names)
    report = validate(algebra)
    if not report.ok:
        raise ParseError(report.describe(algebra), algebra_line)

    modules: dict[str, Representation] = {}
    while pos < len(lines) and lines[pos][1].startswith("module"):
        lineno, line = lines[pos]
        kv = _parse_kv(line.split()[1:], lineno)
        if "name" not in kv or "dim" not in kv:
            raise ParseError("module lines read: module name=<label> dim=<m>", lineno)
        mname = kv["name"]
        if mname == RESERVED_MODULE_NAME:
            raise ParseError(f"module name {RESERVED_MODULE_NAME!r} is reserved "
                             "for the trivial module", lineno)
        if mname in modules:
            raise ParseError(f"duplicate module name {mname!r}", lineno)
        try:
            mdim = int(kv["dim"])
        except ValueError:
            raise ParseError(f"bad module dimension {kv['dim']!r}", lineno)
        if mdim < 1:
            raise ParseError("module dimension must be at least 1", lineno)
        pos += 1
        action = []
        for bi in range(dim):
            if pos >= len(lines):
                raise ParseError(f"module {mname!r} is missing its row for "
                                 f"{names[bi]!r}", lineno)
            rlineno, rline = lines[pos]
            prefix, _, payload = rline.partition(":")
            if prefix.strip() != f"row for {names[bi]}":
                raise ParseError(f"expected 'row for {names[bi]}: ...'", rlineno)
            entries = payload.split()
            if len(entries) != mdim * mdim:
                raise ParseError(
                    f"expected {mdim * mdim} entries for a {mdim}x{mdim} matrix, "
                    f"got {len(entries)}", rlineno)
            try:
                values = [parse_scalar(tok) for tok in entries]
            except ValueError as exc:
                raise ParseError(str(exc), rlineno)
            action.append(Matrix(mdim, mdim,
                                 [values[r * mdim:(r + 1) * mdim] for r in range(mdim)]))
            pos += 1
        rep = Representation(algebra, mdim, action)
        rep_report = validate_rep(rep)
        if not rep_report.ok:
            raise ParseError(f"module {mname!r}: {rep_report.describe(rep)}", lineno)
        modules[mname] = rep

    family: list[tuple[str, str]] = []
    family_seen: set[str] = set()
    while pos < len(lines):
        lineno, line = lines[pos]
        parts = line.split()
        if parts[0] != "family":
            raise ParseError(f"unexpected directive {parts[0]!r}", lineno)
        if len(parts) not in (2, 3):
            raise ParseError("family lines read: family <module> [claim]", lineno)
        fname = parts[1]
        if fname not in modules:
            raise ParseError(f"family references undeclared module {fname!r}", lineno)
        if fname in family_seen:
            raise ParseError(f"duplicate family entry {fname!r}", lineno)
        family_seen.add(fname)
        claim = parts[2] if len(parts) == 3 else "unknown"
        if claim not in CLAIMS:
            raise ParseError(f"claim must be one of {', '.join(CLAIMS)}", lineno)
        family.append((fname, claim))
        pos += 1

    return InputDocument(algebra, modules, tuple(family))


def emit(doc: InputDocument) -> str:
    """Canonical text form; emitted documents parse back equal."""
    algebra = doc.algebra
    out = [f"algebra dim={algebra.dim} basis={','.join(algebra.basis_names)}"]
    for (i, j) in sorted(algebra.table):
        for k in sorted(algebra.table[(i, j)]):
            out.append(f"bracket {i} {j} {k} {format_scalar(algebra.table[(i, j)][k])}")
    for name, rep in doc.modules.items():
        out.append(f"module name={name} dim={rep.dim_v}")
        for bi, bname in enumerate(algebra.basis_names):
            flat = " ".join(
                format_scalar(x) for row in rep.action[bi].data for x in row)
            out.append(f"row for {bname}: {flat}")
    for name, claim in doc.family:
        out.append(f"family {name} {claim}")
    return "\n".join(out) + "\n"


def algebra_document(algebra: LieAlgebra) -> str:
    return emit(InputDocument(algebra))


def module_document(algebra: LieAlgebra, name: str, rep: Representation,
                    claim: str = "unknown") -> str:
    return emit(InputDocument(algebra, {name: rep}, ((name, claim),)))

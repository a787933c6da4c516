"""Exact linear algebra over the rationals.

Everything downstream (structure constants, module actions, coboundary
maps) reduces to ranks, kernels and echelon forms computed here.  All
arithmetic uses `fractions.Fraction`; no floating point appears anywhere
in the package, so "dimension equals zero" is always a decidable exact
statement.

Values are immutable after construction and every function is pure, so
concurrent callers need no synchronization.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

from .errors import ShapeError

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_scalar(text: str) -> Fraction:
    """Parse a rational literal "p" or "p/q" with q > 0."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_scalar(x: Fraction) -> str:
    """Canonical text form, inverse to parse_scalar on canonical input."""
    return str(x)


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


Vector = list  # list[Fraction], ambient length fixed by context


class Matrix:
    """Dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[Fraction]]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeError(f"data does not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        data = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = ONE
        return cls(n, n, data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        data = [[as_scalar(x) for x in row] for row in rows]
        if data:
            width = len(data[0])
        elif cols is not None:
            width = cols
        else:
            width = 0
        return cls(len(data), width, data)

    # -- basic structure ----------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> list[Fraction]:
        return list(self.data[i])

    def col(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.data]

    def columns(self) -> list[list[Fraction]]:
        return [self.col(j) for j in range(self.cols)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.data == other.data
        )

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        return (self.rows, self.cols, tuple(tuple(r) for r in self.data))

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def copy(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [row[:] for row in self.data])

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix(
            self.rows,
            self.cols,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-a for a in row] for row in self.data])

    def scale(self, s) -> "Matrix":
        s = as_scalar(s)
        return Matrix(self.rows, self.cols, [[s * a for a in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        bdata = other.data
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.data):
            orow = out[i]
            for k, a in enumerate(arow):
                if a:
                    brow = bdata[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return Matrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ShapeError(f"vector of length {len(vec)} for {self.shape} matrix")
        out = []
        for row in self.data:
            acc = ZERO
            for a, v in zip(row, vec):
                if a and v:
                    acc += a * v
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows, [list(col) for col in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)]
        )

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ShapeError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, row-major blocks."""
        out = Matrix.zeros(self.rows * other.rows, self.cols * other.cols)
        for i, arow in enumerate(self.data):
            for j, a in enumerate(arow):
                if a:
                    for k, brow in enumerate(other.data):
                        orow = out.data[i * other.rows + k]
                        base = j * other.cols
                        for l, b in enumerate(brow):
                            if b:
                                orow[base + l] = a * b
        return out

    # -- stacking -------------------------------------------------------

    @staticmethod
    def vstack(mats: Sequence["Matrix"], cols: int | None = None) -> "Matrix":
        mats = list(mats)
        if not mats:
            if cols is None:
                raise ShapeError("vstack of nothing needs an explicit width")
            return Matrix.zeros(0, cols)
        width = mats[0].cols
        if any(m.cols != width for m in mats):
            raise ShapeError("vstack with mismatched widths")
        data = [row[:] for m in mats for row in m.data]
        return Matrix(len(data), width, data)

    @staticmethod
    def hstack(mats: Sequence["Matrix"]) -> "Matrix":
        mats = list(mats)
        if not mats:
            raise ShapeError("hstack of nothing")
        height = mats[0].rows
        if any(m.rows != height for m in mats):
            raise ShapeError("hstack with mismatched heights")
        data = [
            [x for m in mats for x in m.data[i]]
            for i in range(height)
        ]
        return Matrix(height, sum(m.cols for m in mats), data)

    @staticmethod
    def block_diag(mats: Sequence["Matrix"]) -> "Matrix":
        mats = list(mats)
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = Matrix.zeros(rows, cols)
        r0 = c0 = 0
        for m in mats:
            for i, row in enumerate(m.data):
                orow = out.data[r0 + i]
                for j, x in enumerate(row):
                    if x:
                        orow[c0 + j] = x
            r0 += m.rows
            c0 += m.cols
        return out


def product(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product (shape-checked)."""
    return a * b


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


# -- rank via fraction-free integer elimination -------------------------

def _scaled_int_rows(m: Matrix) -> list[list[int]]:
    # Row scaling preserves rank; integer rows let elimination avoid gcd work.
    out = []
    for row in m.data:
        mult = reduce(lcm, (x.denominator for x in row), 1)
        out.append([int(x * mult) for x in row])
    return out


def rank(m: Matrix) -> int:
    """Exact rank, Bareiss-style fraction-free elimination."""
    rows = [r for r in _scaled_int_rows(m) if any(r)]
    ncols = m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        best = 0
        for i in range(r, len(rows)):
            v = rows[i][c]
            if v != 0 and (piv is None or abs(v) < best):
                piv, best = i, abs(v)
                if best == 1:
                    break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pv = prow[c]
        for i in range(r + 1, len(rows)):
            irow = rows[i]
            iv = irow[c]
            if iv:
                for j in range(c + 1, ncols):
                    # Sylvester identity: the division is exact.
                    irow[j] = (irow[j] * pv - iv * prow[j]) // prev
                irow[c] = 0
            elif prev != 1 or pv != 1:
                for j in range(c + 1, ncols):
                    irow[j] = irow[j] * pv // prev
        prev = pv
        r += 1
        if r == len(rows):
            break
    return r


# -- reduced row echelon form and kernels --------------------------------

def rref(rows: Sequence[Sequence[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced echelon rows (zero rows dropped) and their pivot columns."""
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        pv = prow[c]
        if pv != 1:
            inv = ONE / pv
            for j in range(c, cols):
                if prow[j]:
                    prow[j] *= inv
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                irow = work[i]
                for j in range(c, cols):
                    if prow[j]:
                        irow[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank_kernel(m: Matrix) -> tuple[int, list[list[Fraction]]]:
    """Rank and a canonical kernel basis.

    Kernel vectors are indexed by the free columns in ascending order; the
    free coordinate is 1 and pivot coordinates are read off the reduced
    echelon form, so the output is deterministic and exact: m * v = 0.
    """
    rows, pivots = rref(m.data, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for ri, p in enumerate(pivots):
            if rows[ri][f]:
                v[p] = -rows[ri][f]
        basis.append(v)
    return len(pivots), basis


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    return rank_kernel(m)[1]


def column_space_basis(m: Matrix) -> list[list[Fraction]]:
    """Canonical basis of the column span."""
    rows, _ = rref([m.col(j) for j in range(m.cols)], m.rows)
    return rows


class IncrementalEchelon:
    """Row-echelon basis grown one vector at a time.

    Used for spinning vectors under matrix actions and for extending an
    image basis by kernel vectors; rows are pivot-normalized but not fully
    reduced, which is enough for exact dimension counting.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, list[Fraction]]] = []  # (pivot, row), sorted

    def insert(self, vec: Sequence[Fraction]) -> bool:
        v = list(vec)
        for p, row in self.rows:
            if v[p]:
                c = v[p]
                for j in range(p, self.dim):
                    if row[j]:
                        v[j] -= c * row[j]
        piv = next((j for j in range(self.dim) if v[j]), None)
        if piv is None:
            return False
        inv = ONE / v[piv]
        v = [x * inv if x else x for x in v]
        self.rows.append((piv, v))
        self.rows.sort(key=lambda t: t[0])
        return True

    @property
    def dim_span(self) -> int:
        return len(self.rows)

    def vectors(self) -> list[list[Fraction]]:
        return [row[:] for _, row in self.rows]


class Subspace:
    """Subspace of Q^n held as reduced-echelon basis rows.

    The canonical form makes equality and containment exact sequence
    comparisons; the pivot-free coordinates give a deterministic
    complement, used for quotient constructions.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence[Fraction]], pivots: Sequence[int]):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(row) for row in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [[as_scalar(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ShapeError(f"vector of length {len(row)} in ambient dimension {ambient_dim}")
        reduced, pivots = rref(rows, ambient_dim)
        return cls(ambient_dim, reduced, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [], [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(
            ambient_dim,
            Matrix.identity(ambient_dim).data,
            range(ambient_dim),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"

    def reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        """Remainder of vec after eliminating all pivot coordinates."""
        v = [as_scalar(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ShapeError("vector does not live in the ambient space")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j in range(self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def contains_vector(self, vec: Sequence[Fraction]) -> bool:
        return not any(self.reduce(vec))

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def coordinates(self, vec: Sequence[Fraction]) -> list[Fraction]:
        """Coefficients of vec in this basis; vec must lie in the subspace."""
        v = [as_scalar(x) for x in vec]
        coords = [v[p] for p in self.pivots]
        if any(self.reduce(v)):
            raise ShapeError("vector is not in the subspace")
        return coords

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("subspace sum across different ambient spaces")
        return Subspace.from_vectors(self.ambient_dim, list(self.basis) + list(other.basis))

    def complement_indices(self) -> list[int]:
        """Coordinate indices not used as pivots, ascending."""
        pivot_set = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivot_set]

    def matrix(self) -> Matrix:
        return Matrix.from_rows(self.basis, cols=self.ambient_dim)

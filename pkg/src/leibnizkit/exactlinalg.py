"""Exact row reduction and the subspace lattice of F^n.

Vectors are plain tuples of :class:`~leibnizkit.scalars.Scalar`.  A
:class:`Subspace` always stores its reduced row echelon basis, so two
subspaces are equal exactly when their dataclass fields are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AmbientMismatch, DimensionMismatch, ParseError
from .scalars import FieldSpec, Scalar

Vector = tuple  # tuple[Scalar, ...]

__all__ = [
    "Matrix",
    "Subspace",
    "Vector",
    "contains",
    "nullspace",
    "rref",
    "span",
    "subspace_intersect",
    "subspace_intersect_by_nullspace",
    "subspace_sum",
]


@dataclass(frozen=True)
class Matrix:
    """Rectangular grid of scalars over one field."""

    field: FieldSpec
    rows: tuple
    ncols: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        for r in rows:
            if len(r) != self.ncols:
                raise DimensionMismatch(f"row of length {len(r)} in a matrix with {self.ncols} columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, ncols: int | None = None) -> Matrix:
        rows = [tuple(field(x) for x in r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(field, tuple(rows), ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        one, zero = field.one, field.zero
        return cls(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> Matrix:
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> Matrix:
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else (), len(self.rows))

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.ncols} columns")
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        zero = self.field.zero
        rows = []
        for r in self.rows:
            rows.append(tuple(sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols))
        return Matrix(self.field, tuple(rows), other.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def scale(self, k: Scalar) -> Matrix:
        return Matrix(self.field, tuple(tuple(k * a for a in r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def to_strings(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self.rows]


def _reduce_rows(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """In-place Gauss-Jordan with first-nonzero pivoting; drops zero rows."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != lead.field.one:
            inv = lead.inverse()
            rows[r] = [inv * x if x else x for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                k = rows[i][c]
                if k:
                    rows[i] = [x - k * y if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (zero rows removed) and pivot columns."""
    rows, pivots = _reduce_rows([list(r) for r in m.rows], m.ncols)
    return Matrix(m.field, tuple(tuple(r) for r in rows), m.ncols), pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^ambient_dim`` held by its RREF basis.

    Build through :func:`span` (or the other module functions); the
    constructor trusts its arguments.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        return all(contains(other, b) for b in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim)

    def non_pivots(self) -> list[int]:
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def residue(self, v: Sequence[Scalar]) -> Vector:
        """``v`` minus its reduction against the basis; zero iff ``v`` is inside.

        Only the non-pivot coordinates of the result can be nonzero, so this
        is the coordinate map of ``F^n / self`` on the non-pivot section.
        """
        out = list(v)
        for row, c in zip(self.basis, self.pivots):
            k = out[c]
            if k:
                out = [x - k * y if y else x for x, y in zip(out, row)]
        return tuple(out)

    def encode(self) -> str:
        """Semicolon-separated rows of comma-separated scalars."""
        return ";".join(",".join(str(x) for x in row) for row in self.basis)

    @classmethod
    def parse(cls, field: FieldSpec, n: int, text: str) -> Subspace:
        text = text.strip()
        if not text:
            return zero_subspace(field, n)
        rows = []
        for chunk in text.split(";"):
            entries = [e.strip() for e in chunk.split(",")]
            if len(entries) != n:
                raise ParseError(f"span row {chunk!r} has {len(entries)} entries, expected {n}")
            rows.append(tuple(field.parse(e) for e in entries))
        return span(field, n, rows)

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> Subspace:
        return span(field, n, Matrix.identity(field, n).rows)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> Subspace:
        return zero_subspace(field, n)

    def __repr__(self):
        return f"Subspace({self.field}, n={self.ambient_dim}, [{self.encode()}])"


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, (), ())


def span(field: FieldSpec, n: int, vectors: Iterable[Sequence]) -> Subspace:
    """Canonical span of ``vectors`` in ``field^n``."""
    rows = []
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in {n}-space")
        rows.append([field(x) for x in v])
    rows, pivots = _reduce_rows(rows, n)
    return Subspace(field, n, tuple(tuple(r) for r in rows), tuple(pivots))


def nullspace(m: Matrix) -> Subspace:
    """``{v : m v = 0}``."""
    rows, pivots = _reduce_rows([list(r) for r in m.rows], m.ncols)
    field = m.field
    n = m.ncols
    pivset = set(pivots)
    vectors = []
    for free in range(n):
        if free in pivset:
            continue
        v = [field.zero] * n
        v[free] = field.one
        for row, c in zip(rows, pivots):
            if row[free]:
                v[c] = -row[free]
        vectors.append(v)
    return span(field, n, vectors)


def _check_ambient(u: Subspace, w: Subspace):
    if u.ambient_dim != w.ambient_dim or u.field != w.field:
        raise AmbientMismatch(f"{u.field}^{u.ambient_dim} vs {w.field}^{w.ambient_dim}")


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_ambient(u, w)
    if not w.basis:
        return u
    if not u.basis:
        return w
    return span(u.field, u.ambient_dim, u.basis + w.basis)


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[[u, u], [w, 0]]``; rows with zero left half span the meet."""
    _check_ambient(u, w)
    n = u.ambient_dim
    field = u.field
    if not u.basis or not w.basis:
        return zero_subspace(field, n)
    zero = (field.zero,) * n
    block = [list(b + b) for b in u.basis] + [list(b + zero) for b in w.basis]
    rows, pivots = _reduce_rows(block, 2 * n)
    meet = [row[n:] for row, c in zip(rows, pivots) if c >= n]
    return span(field, n, meet)


def subspace_intersect_by_nullspace(u: Subspace, w: Subspace) -> Subspace:
    """Independent route: solve ``a U = b W`` and map the ``a`` part through ``U``."""
    _check_ambient(u, w)
    n = u.ambient_dim
    field = u.field
    if not u.basis or not w.basis:
        return zero_subspace(field, n)
    cols = list(u.basis) + [tuple(-x for x in b) for b in w.basis]
    system = Matrix(field, tuple(zip(*cols)), len(cols))
    sol = nullspace(system)
    du = len(u.basis)
    vectors = []
    for s in sol.basis:
        v = [field.zero] * n
        for coef, b in zip(s[:du], u.basis):
            if coef:
                v = [x + coef * y for x, y in zip(v, b)]
        vectors.append(v)
    return span(field, n, vectors)


def contains(u: Subspace, v: Sequence[Scalar]) -> bool:
    if len(v) != u.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in {u.ambient_dim}-space")
    return not any(u.residue(v))


def add_vectors(x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def scale_vector(k: Scalar, x: Sequence[Scalar]) -> Vector:
    return tuple(k * a for a in x)


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def zero_vector(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n

"""Dense exact linear algebra over Q, Q(i) and F_p.

Matrices are immutable row-major tables of exact scalars.  Subspaces keep
their basis in reduced row-echelon form, so two subspaces are equal exactly
when their stored bases are equal.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, FieldMismatchError, NotInvertibleError
from .fields import Field, Q, field_of

__all__ = [
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "intersect",
    "row_space",
    "span",
    "rank",
    "solve_left",
    "random_invertible",
]


@dataclass(frozen=True)
class Matrix:
    rows: tuple
    nrows: int
    ncols: int
    field: Field

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], field: Field | None = None, ncols: int | None = None):
        """Build a matrix, converting plain ints/fractions into ``field``.

        Without ``field`` the entries must already be exact scalars of a single
        field; mixing fields raises :class:`FieldMismatchError`.
        """
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionError("column count needed for an empty matrix")
            ncols = len(rows[0])
        if field is None:
            fields = {field_of(x) for r in rows for x in r if not isinstance(x, int)}
            if len(fields) > 1:
                raise FieldMismatchError(f"entries from {sorted(map(str, fields))}")
            field = fields.pop() if fields else Q
        return cls(tuple(tuple(field(x) for x in r) for r in rows), len(rows), ncols, field)

    @classmethod
    def identity(cls, n: int, field: Field = Q) -> Matrix:
        return cls.from_rows(([int(i == j) for j in range(n)] for i in range(n)), field, ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = Q) -> Matrix:
        return cls.from_rows(([0] * ncols for _ in range(nrows)), field, ncols=ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], field: Field | None = None, nrows: int | None = None):
        if not cols:
            return cls.from_rows([[] for _ in range(nrows or 0)], field, ncols=0)
        return cls.from_rows(zip(*cols), field, ncols=len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix(tuple(zip(*self.rows)) if self.nrows else tuple(() for _ in range(self.ncols)),
                      self.ncols, self.nrows, self.field)

    T = property(transpose)

    def _check(self, other: Matrix):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            zero = self.field.zero
            rows = tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols)
                for r in self.rows
            )
            return Matrix(rows, self.nrows, other.ncols, self.field)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionError("vector length does not match column count")
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), zero) for r in self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                      self.nrows, self.ncols, self.field)

    def __neg__(self) -> Matrix:
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows), self.nrows, self.ncols, self.field)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        return Matrix(tuple(tuple(c * a for a in r) for r in self.rows), self.nrows, self.ncols, self.field)

    def vstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.ncols:
            raise DimensionError("column counts differ")
        return Matrix(self.rows + other.rows, self.nrows + other.nrows, self.ncols, self.field)

    def hstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.nrows != other.nrows:
            raise DimensionError("row counts differ")
        return Matrix(tuple(a + b for a, b in zip(self.rows, other.rows)),
                      self.nrows, self.ncols + other.ncols, self.field)

    def map(self, field: Field) -> Matrix:
        """Entrywise image in another field (e.g. reduction mod p)."""
        return Matrix(tuple(tuple(field(x) for x in r) for r in self.rows), self.nrows, self.ncols, field)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def det(self):
        if self.nrows != self.ncols:
            raise DimensionError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        d = self.field.one
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                return self.field.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = -d
            pv = rows[c][c]
            d = d * pv
            inv = _inv(pv)
            for r in range(c + 1, n):
                f = rows[r][c]
                if f:
                    f = f * inv
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        return d

    def inverse(self) -> Matrix:
        n = self.nrows
        if n != self.ncols:
            raise DimensionError("inverse of a non-square matrix")
        aug = self.hstack(Matrix.identity(n, self.field))
        red, pivots = _rref_rows(aug.rows, aug.ncols)
        if pivots[:n] != list(range(n)):
            raise NotInvertibleError("singular matrix")
        return Matrix(tuple(tuple(r[n:]) for r in red), n, n, self.field)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and rank(self) == self.nrows

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.field}]({self.nrows}x{self.ncols}: {body})"


def _inv(x):
    return x.inverse() if hasattr(x, "inverse") else 1 / x


def _rref_rows(rows, ncols):
    """Row-reduce a list of rows.  Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = _inv(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def _check_uniform(M: Matrix):
    for r in M.rows:
        for x in r:
            if not M.field.contains(x):
                raise FieldMismatchError(f"{x!r} is not in {M.field}")


def rref(M: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form of ``M`` (same shape, zero rows last) and its rank."""
    _check_uniform(M)
    red, pivots = _rref_rows(M.rows, M.ncols)
    zero = M.field.zero
    full = [tuple(r) for r in red] + [tuple([zero] * M.ncols)] * (M.nrows - len(red))
    return Matrix(tuple(full), M.nrows, M.ncols, M.field), len(pivots)


def rank(M: Matrix) -> int:
    return len(_rref_rows(M.rows, M.ncols)[1])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of ``field**ambient`` with a canonical RREF basis."""

    ambient: int
    basis: Matrix
    pivots: tuple

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def field(self) -> Field:
        return self.basis.field

    def vectors(self) -> list[tuple]:
        return list(self.basis.rows)

    def contains(self, v: Sequence) -> bool:
        v = list(v)
        if len(v) != self.ambient:
            raise DimensionError("vector length does not match ambient dimension")
        for row, c in zip(self.basis.rows, self.pivots):
            f = v[c]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in the stored basis (``v`` must lie in the subspace)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def __add__(self, other: Subspace) -> Subspace:
        _same_ambient(self, other)
        return row_space(self.basis.vstack(other.basis))

    def __and__(self, other: Subspace) -> Subspace:
        return intersect(self, other)

    def __le__(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis.rows)

    def equations(self) -> Matrix:
        """Rows spanning the linear forms that vanish exactly on this subspace."""
        k = kernel(self.basis)
        return k.basis

    def complement_indices(self) -> tuple:
        """Standard basis indices outside the pivot columns."""
        return tuple(c for c in range(self.ambient) if c not in self.pivots)

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis.rows)
        return f"Subspace[{self.field}, {self.ambient}]<{vecs}>"


def _same_ambient(U: Subspace, V: Subspace):
    if U.ambient != V.ambient:
        raise DimensionError(f"ambient dimensions {U.ambient} and {V.ambient}")
    if U.field != V.field:
        raise FieldMismatchError(f"{U.field} vs {V.field}")


def row_space(M: Matrix) -> Subspace:
    _check_uniform(M)
    red, pivots = _rref_rows(M.rows, M.ncols)
    return Subspace(M.ncols, Matrix(tuple(tuple(r) for r in red), len(red), M.ncols, M.field), tuple(pivots))


def span(vectors: Iterable[Sequence], ambient: int, field: Field) -> Subspace:
    return row_space(Matrix.from_rows(list(vectors), field, ncols=ambient))


def kernel(M: Matrix) -> Subspace:
    """Right kernel ``{v : M v = 0}`` in canonical form."""
    _check_uniform(M)
    red, pivots = _rref_rows(M.rows, M.ncols)
    field = M.field
    free = [c for c in range(M.ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = [field.zero] * M.ncols
        v[f] = field.one
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        vecs.append(v)
    return span(vecs, M.ncols, field)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """``U ∩ V`` as the common zero set of both families of defining equations."""
    _same_ambient(U, V)
    eqs = U.equations().vstack(V.equations())
    return kernel(eqs)


def solve_left(M: Matrix, b: Sequence):
    """Some ``x`` with ``x M = b`` (row-vector convention), or None."""
    if len(b) != M.ncols:
        raise DimensionError("right-hand side length mismatch")
    # transpose: M^T x^T = b^T, augmented system
    aug = M.transpose().hstack(Matrix.from_rows([[x] for x in b], M.field, ncols=1)) if M.nrows else None
    field = M.field
    if aug is None:
        return () if not any(b) else None
    red, pivots = _rref_rows(aug.rows, aug.ncols)
    if M.nrows in pivots:
        return None
    x = [field.zero] * M.nrows
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return tuple(x)


def random_invertible(n: int, field: Field, rng: random.Random, bound: int = 3) -> Matrix:
    """A random invertible matrix with small integer (or residue) entries."""
    while True:
        if field.kind == "Qi":
            from .fields import GaussianRational

            rows = [[GaussianRational(rng.randint(-bound, bound), rng.randint(-1, 1)) for _ in range(n)]
                    for _ in range(n)]
        else:
            rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        M = Matrix.from_rows(rows, field, ncols=n)
        if rank(M) == n:
            return M

"""Scalar cocycles, coboundaries and the second cohomology space.

A cocycle on an n-dimensional algebra is any alternating bilinear form; it
is stored by its coefficients on the forms ``Δ_ij`` (``i < j``, lexicographic),
where ``Δ_ij(e_i, e_j) = -Δ_ij(e_j, e_i) = 1``.  A cocycle with values in an
s-dimensional space is a tuple of s such forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import Algebra, annihilator, pairs
from .errors import DimensionError, FieldMismatchError
from .fields import Field, Q
from .linalg import Matrix, Subspace, intersect, kernel, rank, span

__all__ = [
    "Cocycle",
    "CohomologySpace",
    "delta_basis",
    "theta",
    "coboundary",
    "h2",
    "radical",
    "common_radical",
    "in_Ts",
    "check_tuple",
]


@dataclass(frozen=True)
class Cocycle:
    n: int
    field: Field
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.n * (self.n - 1) // 2:
            raise DimensionError("wrong number of cocycle coefficients")

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence, field: Field = Q) -> Cocycle:
        return cls(n, field, tuple(field(c) for c in coeffs))

    @classmethod
    def from_dict(cls, n: int, terms: Mapping, field: Field = Q) -> Cocycle:
        """``{(i, j): c}`` with 1-based ``i < j``."""
        index = {p: k for k, p in enumerate(pairs(n))}
        coeffs = [field.zero] * len(index)
        for (i, j), c in terms.items():
            if not 1 <= i < j <= n:
                raise DimensionError(f"bad index pair ({i}, {j})")
            coeffs[index[(i - 1, j - 1)]] += field(c)
        return cls(n, field, tuple(coeffs))

    @classmethod
    def delta(cls, i: int, j: int, n: int, field: Field = Q) -> Cocycle:
        """The basis form ``Δ_ij`` (1-based, ``i < j``)."""
        return cls.from_dict(n, {(i, j): 1}, field)

    @classmethod
    def zero(cls, n: int, field: Field = Q) -> Cocycle:
        return cls(n, field, (field.zero,) * (n * (n - 1) // 2))

    def matrix(self) -> Matrix:
        n, F = self.n, self.field
        rows = [[F.zero] * n for _ in range(n)]
        for (i, j), c in zip(pairs(n), self.coeffs):
            rows[i][j] = c
            rows[j][i] = -c
        return Matrix.from_rows(rows, F, ncols=n)

    def __call__(self, x: Sequence, y: Sequence):
        out = self.field.zero
        for (i, j), c in zip(pairs(self.n), self.coeffs):
            if c:
                out += c * (x[i] * y[j] - x[j] * y[i])
        return out

    def _check(self, other: Cocycle):
        if self.n != other.n:
            raise DimensionError("cocycles on different dimensions")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: Cocycle) -> Cocycle:
        self._check(other)
        return Cocycle(self.n, self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Cocycle) -> Cocycle:
        return self + other.scale(-1)

    def scale(self, c) -> Cocycle:
        c = self.field(c)
        return Cocycle(self.n, self.field, tuple(c * a for a in self.coeffs))

    def over(self, field: Field) -> Cocycle:
        return Cocycle(self.n, field, tuple(field(c) for c in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> list[tuple[int, int, object]]:
        """Nonzero coefficients as 1-based ``(i, j, c)`` triples."""
        return [(i + 1, j + 1, c) for (i, j), c in zip(pairs(self.n), self.coeffs) if c]

    def __repr__(self):
        body = " + ".join(f"{c}*D{i}{j}" for i, j, c in self.terms()) or "0"
        return f"Cocycle({body})"


def delta_basis(n: int, field: Field = Q) -> list[Cocycle]:
    return [Cocycle.delta(i + 1, j + 1, n, field) for i, j in pairs(n)]


# θ₁ = Δ23, θ₂ = Δ13, θ₃ = Δ12 on three-dimensional algebras
_THETA = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


def theta(k: int, field: Field = Q) -> Cocycle:
    """The named forms θ₁, θ₂, θ₃ used for three-dimensional bases."""
    i, j = _THETA[k]
    return Cocycle.delta(i, j, 3, field)


def coboundary(A: Algebra, f: Sequence) -> Cocycle:
    """``δf(x, y) = f([x, y])`` for a covector ``f``."""
    if len(f) != A.dim:
        raise DimensionError("covector length does not match the algebra")
    f = [A.field(x) for x in f]
    zero = A.field.zero
    coeffs = tuple(sum((a * b for a, b in zip(f, v) if a and b), zero) for v in A.products)
    return Cocycle(A.dim, A.field, coeffs)


def check_tuple(A: Algebra, W: Sequence[Cocycle]) -> tuple:
    W = tuple(W)
    for w in W:
        if w.n != A.dim:
            raise DimensionError(f"cocycle on dimension {w.n}, algebra has dimension {A.dim}")
        if w.field != A.field:
            raise FieldMismatchError(f"cocycle over {w.field}, algebra over {A.field}")
    return W


@dataclass(frozen=True)
class CohomologySpace:
    """``Z²``, ``B²`` and a chosen complement of ``B²`` for one algebra.

    ``projection`` maps Z² coordinates (row vector) to H² coordinates; the
    representative cocycles are the ``Δ_ij`` at ``rep_indices``.
    """

    n: int
    field: Field
    coboundaries: Subspace
    rep_indices: tuple
    projection: Matrix

    @property
    def dim_z(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def dim_b(self) -> int:
        return self.coboundaries.dim

    @property
    def dim_h(self) -> int:
        return len(self.rep_indices)

    @property
    def representatives(self) -> list[Cocycle]:
        return [self.lift_coords([int(k == r) for k in range(self.dim_h)]) for r in range(self.dim_h)]

    def project(self, theta: Cocycle) -> tuple:
        """H² coordinates of the class of ``theta``."""
        if theta.n != self.n:
            raise DimensionError("cocycle dimension mismatch")
        if self.dim_h == 0:
            return ()
        return _row_times(theta.coeffs, self.projection)

    def lift_coords(self, coords: Sequence) -> Cocycle:
        """The representative cocycle with the given H² coordinates."""
        if len(coords) != self.dim_h:
            raise DimensionError("wrong number of H² coordinates")
        coeffs = [self.field.zero] * self.dim_z
        for idx, c in zip(self.rep_indices, coords):
            coeffs[idx] = self.field(c)
        return Cocycle(self.n, self.field, tuple(coeffs))

    def is_coboundary(self, theta: Cocycle) -> bool:
        return self.coboundaries.contains(theta.coeffs)

    def class_rank(self, cocycles: Sequence[Cocycle]) -> int:
        if not cocycles or self.dim_h == 0:
            return 0
        return rank(Matrix.from_rows([self.project(t) for t in cocycles], self.field, ncols=self.dim_h))


def _row_times(v: Sequence, M: Matrix) -> tuple:
    zero = M.field.zero
    out = [zero] * M.ncols
    for a, row in zip(v, M.rows):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] = out[j] + a * b
    return tuple(out)


def h2(A: Algebra) -> CohomologySpace:
    """Second cohomology with trivial coefficients.

    The representatives are the ``Δ_ij`` at the non-pivot columns of the
    RREF basis of ``B²``: the lexicographically earliest completion.
    """
    n, F = A.dim, A.field
    m = n * (n - 1) // 2
    cobs = [coboundary(A, A.basis_vector(k)).coeffs for k in range(n)]
    B = span(cobs, m, F)
    reps = B.complement_indices()
    proj_rows = []
    for z in range(m):
        v = [F.zero] * m
        v[z] = F.one
        for row, c in zip(B.basis.rows, B.pivots):
            f = v[c]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        proj_rows.append([v[r] for r in reps])
    projection = Matrix.from_rows(proj_rows, F, ncols=len(reps))
    return CohomologySpace(n, F, B, reps, projection)


def radical(theta: Cocycle) -> Subspace:
    """``{x : θ(x, A) = 0}``, the kernel of the alternating matrix."""
    if theta.n == 0:
        return span([], 0, theta.field)
    return kernel(theta.matrix())


def common_radical(W: Sequence[Cocycle], n: int, field: Field) -> Subspace:
    rad = span([[int(i == j) for j in range(n)] for i in range(n)], n, field)
    for w in W:
        rad = intersect(rad, radical(w))
    return rad


def in_Ts(A: Algebra, W: Sequence[Cocycle], H: CohomologySpace | None = None) -> bool:
    """Whether ``⟨[θ_1], …, [θ_s]⟩`` is an s-dimensional point of ``T_s(A)``."""
    W = check_tuple(A, W)
    if not W:
        return False
    H = H or h2(A)
    if H.class_rank(W) != len(W):
        return False
    return intersect(common_radical(W, A.dim, A.field), annihilator(A)).dim == 0

"""Anticommutative algebras given by structure constants.

Only the products ``[e_i, e_j]`` with ``i < j`` are stored; the rest follow
from alternation.  Indices are 0-based in the Python API.  ``from_table``
takes the 1-based notation used in printed multiplication tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .errors import DimensionError, FieldMismatchError, NotInvertibleError
from .fields import Field, Q
from .linalg import Matrix, Subspace, kernel, rank, span

__all__ = [
    "Algebra",
    "Fingerprint",
    "pairs",
    "bracket",
    "annihilator",
    "product_space",
    "series_dims",
    "derivation_dim",
    "delta_derivation_dim",
    "change_of_basis",
    "quotient_by_annihilator",
    "annihilator_adapted_basis",
    "direct_sum_trivial",
    "fingerprint",
]


def pairs(n: int) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Algebra:
    dim: int
    field: Field
    products: tuple
    name: str | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError("negative dimension")
        if len(self.products) != self.dim * (self.dim - 1) // 2:
            raise DimensionError("wrong number of stored products")
        for v in self.products:
            if len(v) != self.dim:
                raise DimensionError("product vector of wrong length")
            for x in v:
                if not self.field.contains(x):
                    raise FieldMismatchError(f"{x!r} is not in {self.field}")

    @classmethod
    def from_table(cls, n: int, table: Mapping, field: Field = Q, name: str | None = None) -> Algebra:
        """Build from ``{(i, j): {k: c}}`` with 1-based ``i < j``; missing products are zero.

        A value may also be a full coefficient sequence of length ``n``.

        >>> g1 = Algebra.from_table(3, {(2, 3): {1: 1}})
        >>> g1.bracket_basis(2, 1)
        (Fraction(1, 1), Fraction(0, 1), Fraction(0, 1))
        """
        prods = {p: [field.zero] * n for p in pairs(n)}
        for (i, j), out in table.items():
            if not (1 <= i < j <= n):
                raise DimensionError(f"bad product index ({i}, {j}) for dimension {n}")
            vec = prods[(i - 1, j - 1)]
            if isinstance(out, Mapping):
                for k, c in out.items():
                    if not 1 <= k <= n:
                        raise DimensionError(f"basis index {k} out of range")
                    vec[k - 1] = vec[k - 1] + field(c)
            else:
                if len(out) != n:
                    raise DimensionError("product vector of wrong length")
                prods[(i - 1, j - 1)] = [field(c) for c in out]
        return cls(n, field, tuple(tuple(prods[p]) for p in pairs(n)), name)

    @classmethod
    def from_tensor(cls, tensor, field: Field, name: str | None = None) -> Algebra:
        n = len(tensor)
        return cls(n, field, tuple(tuple(field(x) for x in tensor[i][j]) for i, j in pairs(n)), name)

    @cached_property
    def tensor(self) -> list:
        """Full table ``c[i][j][k]`` including the alternated entries."""
        n, zero = self.dim, self.field.zero
        c = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j), v in zip(pairs(n), self.products):
            c[i][j] = list(v)
            c[j][i] = [-x for x in v]
        return c

    def bracket_basis(self, i: int, j: int) -> tuple:
        """``[e_i, e_j]`` with 1-based indices, mirroring printed tables."""
        return tuple(self.tensor[i - 1][j - 1])

    def with_name(self, name: str | None) -> Algebra:
        return Algebra(self.dim, self.field, self.products, name)

    def over(self, field: Field) -> Algebra:
        """The same structure constants read in another field (e.g. reduced mod p)."""
        if field == self.field:
            return self
        return Algebra(self.dim, field, tuple(tuple(field(x) for x in v) for v in self.products), self.name)

    def vector(self, coords: Sequence) -> tuple:
        if len(coords) != self.dim:
            raise DimensionError(f"expected a vector of length {self.dim}")
        return tuple(self.field(x) for x in coords)

    def basis_vector(self, i: int) -> tuple:
        return tuple(self.field.one if k == i else self.field.zero for k in range(self.dim))

    def is_abelian(self) -> bool:
        return all(not x for v in self.products for x in v)

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        nz = []
        for (i, j), v in zip(pairs(self.dim), self.products):
            if any(v):
                terms = " + ".join(f"{c}*e{k + 1}" for k, c in enumerate(v) if c)
                nz.append(f"[e{i + 1},e{j + 1}]={terms}")
        return f"Algebra({label}dim={self.dim}, {self.field}: {'; '.join(nz) or 'abelian'})"


def bracket(A: Algebra, x: Sequence, y: Sequence) -> tuple:
    x, y = A.vector(x), A.vector(y)
    out = [A.field.zero] * A.dim
    for (i, j), v in zip(pairs(A.dim), A.products):
        w = x[i] * y[j] - x[j] * y[i]
        if w:
            for k, c in enumerate(v):
                if c:
                    out[k] = out[k] + w * c
    return tuple(out)


def ad_matrix(A: Algebra, x: Sequence) -> Matrix:
    """Matrix of ``y -> [x, y]`` (columns are images of basis vectors)."""
    cols = [bracket(A, x, A.basis_vector(j)) for j in range(A.dim)]
    return Matrix.from_columns(cols, A.field, nrows=A.dim) if cols else Matrix.zeros(0, 0, A.field)


def annihilator(A: Algebra) -> Subspace:
    """``{x : [x, A] = 0}``: kernel of the ad-maps stacked over the basis."""
    n, c = A.dim, A.tensor
    rows = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    if not rows:
        return span([], n, A.field)
    return kernel(Matrix.from_rows(rows, A.field, ncols=n))


def product_space(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of all ``[u, v]`` with ``u`` in ``U`` and ``v`` in ``V``."""
    vecs = [bracket(A, u, v) for u in U.vectors() for v in V.vectors()]
    return span(vecs, A.dim, A.field)


def _whole(A: Algebra) -> Subspace:
    return span([A.basis_vector(i) for i in range(A.dim)], A.dim, A.field)


def series_dims(A: Algebra) -> tuple[tuple, tuple]:
    """Dimensions of the derived series and of the lower central series.

    Both start at ``A^2 = [A, A]`` and stop once a term repeats.
    """
    whole = _whole(A)
    derived, cur = [], whole
    while True:
        nxt = product_space(A, cur, cur)
        if derived and nxt.dim == derived[-1]:
            break
        derived.append(nxt.dim)
        if nxt.dim == cur.dim or nxt.dim == 0:
            break
        cur = nxt
    lower, cur = [], whole
    while True:
        nxt = product_space(A, whole, cur)
        if lower and nxt.dim == lower[-1]:
            break
        lower.append(nxt.dim)
        if nxt.dim == cur.dim or nxt.dim == 0:
            break
        cur = nxt
    return tuple(derived), tuple(lower)


def _derivation_system(A: Algebra, delta=1) -> Matrix:
    # unknown D[k][l] (coefficient of e_k in D e_l) sits in column k*n + l
    n, c, F = A.dim, A.tensor, A.field
    delta = F(delta)
    rows = []
    for i, j in pairs(n):
        for r in range(n):
            row = [F.zero] * (n * n)
            for m in range(n):
                if c[i][j][m]:
                    row[r * n + m] = row[r * n + m] + c[i][j][m]
            for l in range(n):
                if c[l][j][r]:
                    row[l * n + i] = row[l * n + i] - delta * c[l][j][r]
                if c[i][l][r]:
                    row[l * n + j] = row[l * n + j] - delta * c[i][l][r]
            rows.append(row)
    return Matrix.from_rows(rows, F, ncols=n * n)


def derivation_dim(A: Algebra) -> int:
    """``dim Der(A)``, from the linear system ``D[x,y] = [Dx,y] + [x,Dy]``."""
    if A.dim < 2:
        return A.dim * A.dim
    return A.dim * A.dim - rank(_derivation_system(A))


def delta_derivation_dim(A: Algebra, delta) -> int:
    """Dimension of ``{D : D[x,y] = delta([Dx,y] + [x,Dy])}`` for a fixed scalar ``delta``."""
    if A.dim < 2:
        return A.dim * A.dim
    return A.dim * A.dim - rank(_derivation_system(A, delta))


def change_of_basis(A: Algebra, P: Matrix) -> Algebra:
    """The algebra ``[x, y]' = P^-1 [Px, Py]``; the new basis is the columns of ``P``."""
    if P.field != A.field:
        raise FieldMismatchError(f"{P.field} vs {A.field}")
    if P.shape != (A.dim, A.dim):
        raise DimensionError("change of basis must be n x n")
    Pinv = P.inverse()
    cols = P.columns()
    prods = tuple(Pinv @ bracket(A, cols[i], cols[j]) for i, j in pairs(A.dim))
    return Algebra(A.dim, A.field, prods, A.name)


def annihilator_adapted_basis(A: Algebra) -> tuple[Matrix, int]:
    """Columns: standard vectors off the pivots of Ann(A), then the RREF basis of Ann(A).

    Returns the basis matrix and ``dim Ann(A)``.
    """
    ann = annihilator(A)
    comp = ann.complement_indices()
    cols = [A.basis_vector(i) for i in comp] + list(ann.vectors())
    return Matrix.from_columns(cols, A.field, nrows=A.dim), ann.dim


def quotient_by_annihilator(A: Algebra) -> tuple[Algebra, Matrix, Subspace]:
    """``A / Ann(A)`` realised on the standard-vector complement of ``Ann(A)``.

    Returns the quotient algebra, the projection (complement coordinates of a
    vector, taken along ``Ann(A)``) and the complement itself.
    """
    Qb, m = annihilator_adapted_basis(A)
    if m == 0:
        raise ValueError("the annihilator is zero")
    q = A.dim - m
    Qinv = Qb.inverse()
    proj = Matrix(Qinv.rows[:q], q, A.dim, A.field)
    comp_vectors = Qb.columns()[:q]
    prods = tuple(proj @ bracket(A, comp_vectors[i], comp_vectors[j]) for i, j in pairs(q))
    name = f"{A.name}/Ann" if A.name else None
    complement = span(comp_vectors, A.dim, A.field)
    return Algebra(q, A.field, prods, name), proj, complement


def direct_sum_trivial(A: Algebra, k: int) -> Algebra:
    """``A ⊕ k^k`` with the new basis vectors appended and central."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return A
    n = A.dim + k
    zero = A.field.zero
    old = dict(zip(pairs(A.dim), A.products))
    prods = tuple(old[p] + (zero,) * k if p in old else (zero,) * n for p in pairs(n))
    return Algebra(n, A.field, prods, A.name)


# δ values at which δ-derivation dimensions are recorded; 1 is the ordinary Der
DELTA_PROBES = ("-1", "2", "1/2", "i", "-i")


def _probe_values(field: Field) -> list[tuple[str, object]]:
    out = []
    for label in DELTA_PROBES:
        if "i" in label and field.kind != "Qi":
            continue
        try:
            out.append((label, field(label) if field.kind != "Fp" else field(Fraction(label))))
        except (ArithmeticError, ValueError):
            continue
    return out


@dataclass(frozen=True)
class Fingerprint:
    """Basis-free ranks; each is unchanged by extending the ground field."""

    dim: int
    ann_dim: int
    derived: tuple
    lower_central: tuple
    der_dim: int
    delta_der_dims: tuple

    def stable(self) -> dict:
        return {
            "dim": self.dim,
            "ann_dim": self.ann_dim,
            "derived": self.derived,
            "lower_central": self.lower_central,
            "der_dim": self.der_dim,
            "delta_der_dims": self.delta_der_dims,
        }


@lru_cache(maxsize=4096)
def fingerprint(A: Algebra) -> Fingerprint:
    """Ann, series and (δ-)derivation dimensions.

    ``delta_der_dims`` pairs each probe δ available in the field with
    ``dim {D : D[x,y] = δ([Dx,y] + [x,Dy])}``.
    """
    derived, lower = series_dims(A)
    deltas = tuple((label, delta_derivation_dim(A, d)) for label, d in _probe_values(A.field))
    return Fingerprint(A.dim, annihilator(A).dim, derived, lower, derivation_dim(A), deltas)


def preserves_bracket(A: Algebra, B: Algebra, P: Matrix) -> bool:
    """Whether ``P[e_i, e_j]_A = [Pe_i, Pe_j]_B`` for all basis pairs."""
    if A.field != B.field or P.field != A.field:
        raise FieldMismatchError("algebras and map must share a field")
    if P.shape != (B.dim, A.dim):
        raise DimensionError(f"map has shape {P.shape}, expected {(B.dim, A.dim)}")
    cols = P.columns()
    return all(P @ v == bracket(B, cols[i], cols[j]) for (i, j), v in zip(pairs(A.dim), A.products))


def is_isomorphism(A: Algebra, B: Algebra, P: Matrix) -> bool:
    if A.dim != B.dim:
        return False
    try:
        invertible = P.is_invertible()
    except NotInvertibleError:
        return False
    return invertible and preserves_bracket(A, B, P)

"""Automorphism groups over finite fields and their orbits on ``T_s``.

Groups are stored as numpy stacks of matrices (column ``k`` is the image of
``e_k``).  Points of the Grassmannian ``G_s(H²)`` are s x h matrices in
reduced row-echelon form; they are ordered by their entries read row by row.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from . import _modp
from .algebra import Algebra, annihilator, is_isomorphism, pairs, product_space, _whole
from .cohomology import Cocycle, CohomologySpace, h2, in_Ts
from .errors import DimensionError, FieldMismatchError, NotAnAutomorphismError, SearchBudgetExceeded
from .fields import Field
from .linalg import Matrix

__all__ = [
    "AutSet",
    "SubspaceRep",
    "automorphisms",
    "isomorphisms",
    "act_on_cocycle",
    "act_on_class",
    "grassmannian",
    "gaussian_binomial",
    "stable_points",
    "orbit_partition",
    "orbit_reps",
    "MAX_AUT_DIM",
]

# direct enumeration of Aut is only attempted up to this dimension
MAX_AUT_DIM = 4


def to_array(M: Matrix) -> np.ndarray:
    return np.array([[int(x) for x in r] for r in M.rows], dtype=np.int64).reshape(M.nrows, M.ncols)


def structure_array(A: Algebra) -> np.ndarray:
    n = A.dim
    c = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), v in zip(pairs(n), A.products):
        w = np.array([int(x) for x in v], dtype=np.int64)
        c[i, j] = w
        c[j, i] = -w % A.field.p
    return c


def _require_finite(field: Field):
    if not field.is_finite:
        raise FieldMismatchError(f"enumeration needs a finite field, got {field}")


@dataclass(frozen=True, eq=False)
class AutSet:
    """A finite set of invertible matrices held as an int array (N, n, n)."""

    field: Field
    array: np.ndarray = dc_field(repr=False)

    @property
    def n(self) -> int:
        return self.array.shape[1]

    @property
    def order(self) -> int:
        return self.array.shape[0]

    def __len__(self) -> int:
        return self.order

    def __getitem__(self, k: int) -> Matrix:
        return Matrix.from_rows(self.array[k].tolist(), self.field, ncols=self.n)

    def __iter__(self) -> Iterator[Matrix]:
        for k in range(self.order):
            yield self[k]

    def __contains__(self, M: Matrix) -> bool:
        target = to_array(M)
        return bool((self.array == target).all(axis=(1, 2)).any())

    def __repr__(self):
        return f"AutSet(order={self.order}, n={self.n}, {self.field})"


def _characteristic_candidates(A: Algebra, B: Algebra, p: int):
    # e_k in Ann(A) must go to Ann(B); e_k in A² must go to B²
    n = A.dim
    pieces = []
    for sub_a, sub_b in ((annihilator(A), annihilator(B)),
                         (product_space(A, _whole(A), _whole(A)), product_space(B, _whole(B), _whole(B)))):
        if sub_a.dim != sub_b.dim:
            return None
        pieces.append((sub_a, sub_b))
    cands = [None] * n
    for sub_a, sub_b in pieces:
        if sub_b.dim == n:
            continue
        vecs = _modp.subspace_vectors(to_array(sub_b.basis), p) if sub_b.dim else np.zeros((1, n), np.int64)
        for k in range(n):
            if sub_a.contains(A.basis_vector(k)):
                if cands[k] is None:
                    cands[k] = vecs
                else:
                    keep = np.isin(_modp.encode(cands[k][:, None, :], p), _modp.encode(vecs[:, None, :], p))
                    cands[k] = cands[k][keep]
    return cands


def isomorphisms(A: Algebra, B: Algebra, max_rows: int = 6_000_000) -> AutSet:
    """Every isomorphism ``A → B`` over a finite field."""
    _require_finite(A.field)
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    p = A.field.p
    if A.dim != B.dim:
        return AutSet(A.field, np.zeros((0, A.dim, A.dim), dtype=np.int64))
    cands = _characteristic_candidates(A, B, p)
    if cands is None:
        return AutSet(A.field, np.zeros((0, A.dim, A.dim), dtype=np.int64))
    arr = _modp.morphisms(structure_array(A), structure_array(B), p, cands, max_rows=max_rows)
    return AutSet(A.field, arr)


def automorphisms(A: Algebra, max_dim: int = MAX_AUT_DIM) -> AutSet:
    """The full group ``Aut(A)`` over a finite field, by exhaustive search.

    Raises :class:`SearchBudgetExceeded` above ``max_dim``.
    """
    _require_finite(A.field)
    if A.dim > max_dim:
        raise SearchBudgetExceeded(f"Aut enumeration limited to dimension {max_dim}, got {A.dim}")
    return isomorphisms(A, A)


def act_on_cocycle(phi: Matrix, theta: Cocycle) -> Cocycle:
    """``(φθ)(x, y) = θ(φx, φy)``."""
    if phi.shape != (theta.n, theta.n):
        raise DimensionError("map and cocycle dimensions differ")
    if phi.field != theta.field:
        raise FieldMismatchError(f"{phi.field} vs {theta.field}")
    T = phi.transpose() @ theta.matrix() @ phi
    return Cocycle(theta.n, theta.field, tuple(T[i, j] for i, j in pairs(theta.n)))


def act_on_class(A: Algebra, phi: Matrix, coords: Sequence, H: CohomologySpace | None = None) -> tuple:
    """Action of an automorphism on H² coordinates (through the representative cocycle)."""
    if not is_isomorphism(A, A, phi):
        raise NotAnAutomorphismError("the map is not an automorphism of the algebra")
    H = H or h2(A)
    return H.project(act_on_cocycle(phi, H.lift_coords(coords)))


def class_action_arrays(H: CohomologySpace, group: np.ndarray, p: int) -> np.ndarray:
    """Matrices ``M_φ`` (N, h, h) with ``[φθ] = [θ] M_φ`` in row-vector convention."""
    pl = pairs(H.n)
    act = _modp.second_compound(group, pl) % p
    proj = to_array(H.projection) if H.dim_h else np.zeros((len(pl), 0), np.int64)
    rows = act[:, list(H.rep_indices), :]
    return np.einsum("nrc,ch->nrh", rows, proj) % p


@dataclass(frozen=True, order=True)
class SubspaceRep:
    """A point of the Grassmannian: an s x h matrix in reduced row-echelon form."""

    key: tuple
    s: int = dc_field(compare=False)
    h: int = dc_field(compare=False)
    field: Field = dc_field(compare=False)

    @classmethod
    def from_array(cls, arr: np.ndarray, field: Field) -> SubspaceRep:
        s, h = arr.shape
        return cls(tuple(int(x) for x in arr.reshape(-1)), s, h, field)

    @property
    def matrix(self) -> Matrix:
        return Matrix.from_rows([self.key[r * self.h:(r + 1) * self.h] for r in range(self.s)],
                                self.field, ncols=self.h)

    def cocycles(self, H: CohomologySpace) -> list[Cocycle]:
        """Representative cocycles spanning this subspace of H²."""
        return [H.lift_coords(row) for row in self.matrix.rows]

    def __repr__(self):
        return f"SubspaceRep({[list(r) for r in self.matrix.to_lists()]})"


def gaussian_binomial(h: int, s: int, q: int) -> int:
    if s < 0 or s > h:
        return 0
    num = den = 1
    for k in range(s):
        num *= q ** (h - k) - 1
        den *= q ** (k + 1) - 1
    return num // den


def _grassmannian_array(h: int, s: int, p: int) -> np.ndarray:
    from itertools import combinations, product
    out = []
    for pivots in combinations(range(h), s):
        # free entries: row r, columns after its pivot that are not pivots
        free = [(r, c) for r in range(s) for c in range(pivots[r] + 1, h) if c not in pivots]
        for vals in product(range(p), repeat=len(free)):
            M = np.zeros((s, h), dtype=np.int64)
            for r, c in enumerate(pivots):
                M[r, c] = 1
            for (r, c), v in zip(free, vals):
                M[r, c] = v
            out.append(M)
    if not out:
        return np.zeros((0, s, h), dtype=np.int64)
    arr = np.stack(out)
    if arr[0].size == 0:
        return arr
    order = np.lexsort(arr.reshape(len(arr), -1).T[::-1])
    return arr[order]


def grassmannian(h: int, s: int, field: Field) -> list[SubspaceRep]:
    """All s-dimensional subspaces of ``F_p^h`` in lexicographic order."""
    _require_finite(field)
    return [SubspaceRep.from_array(M, field) for M in _grassmannian_array(h, s, field.p)]


def stable_points(A: Algebra, s: int, H: CohomologySpace | None = None) -> list[SubspaceRep]:
    """The points of ``T_s(A)``, in lexicographic order."""
    H = H or h2(A)
    return [x for x in grassmannian(H.dim_h, s, A.field) if in_Ts(A, x.cocycles(H), H)]


def orbit_partition(A: Algebra, s: int, aut: AutSet | None = None,
                    H: CohomologySpace | None = None, chunk: int = 200_000) -> list[list[SubspaceRep]]:
    """The ``Aut(A)``-orbits on ``T_s(A)``, each sorted, ordered by their minima.

    Points are scanned in lexicographic order; the first point not yet placed
    is the minimum of its orbit, which is then swept out by applying every
    group element to it.  There are few orbits, so this beats pairwise merging.
    """
    _require_finite(A.field)
    p = A.field.p
    H = H or h2(A)
    points = stable_points(A, s, H)
    if not points:
        return []
    aut = aut if aut is not None else automorphisms(A)
    h = H.dim_h
    X = np.array([np.array(x.key, dtype=np.int64).reshape(s, h) for x in points])
    keys = _modp.encode(X, p)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    label = np.full(len(points), -1)
    orbits = []
    for j in range(len(points)):
        if label[j] >= 0:
            continue
        members = set()
        for start in range(0, aut.order, chunk):
            M = class_action_arrays(H, aut.array[start:start + chunk], p)
            img = np.einsum("sh,nhk->nsk", X[j], M) % p
            ikeys = np.unique(_modp.encode(_modp.rref_mod(img, p)[0], p))
            pos = np.minimum(np.searchsorted(sorted_keys, ikeys), len(sorted_keys) - 1)
            if not (sorted_keys[pos] == ikeys).all():
                raise AssertionError("T_s is not stable under the given maps")
            members.update(int(t) for t in order[pos])
        idx = sorted(members)
        label[idx] = len(orbits)
        orbits.append([points[k] for k in idx])
    return orbits


def orbit_reps(A: Algebra, s: int, aut: AutSet | None = None) -> list[SubspaceRep]:
    """One representative per orbit: the lexicographic minimum."""
    return [orbit[0] for orbit in orbit_partition(A, s, aut)]

"""Central extensions by a cocycle tuple, and their decomposition.

The extension of an n-dimensional algebra by ``θ = (θ_1, …, θ_s)`` has the
base vectors first and the central vectors ``e_{n+1}, …, e_{n+s}`` last.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    Algebra,
    annihilator,
    annihilator_adapted_basis,
    change_of_basis,
    is_isomorphism,
    pairs,
)
from .cohomology import Cocycle, check_tuple, coboundary, common_radical, h2
from .errors import DimensionError, FieldMismatchError, NoLiftError, NotAnAutomorphismError
from .linalg import Matrix, Subspace, intersect, solve_left, span
from .orbits import act_on_cocycle

__all__ = [
    "ExtensionResult",
    "central_extension",
    "expected_annihilator",
    "check_ann_formula",
    "has_annihilator_component",
    "decompose",
    "lift_iso",
    "lift_between",
]


@dataclass(frozen=True)
class ExtensionResult:
    algebra: Algebra
    base: Algebra
    cocycles: tuple
    annihilator: Subspace


def central_extension(A: Algebra, W: Sequence[Cocycle], name: str | None = None) -> ExtensionResult:
    W = check_tuple(A, W)
    n, s, F = A.dim, len(W), A.field
    old = dict(zip(pairs(n), A.products))
    k = {p: idx for idx, p in enumerate(pairs(n))}
    prods = []
    for p in pairs(n + s):
        if p in old:
            prods.append(tuple(old[p]) + tuple(w.coeffs[k[p]] for w in W))
        else:
            prods.append((F.zero,) * (n + s))
    E = Algebra(n + s, F, tuple(prods), name)
    return ExtensionResult(E, A, W, annihilator(E))


def expected_annihilator(A: Algebra, W: Sequence[Cocycle]) -> Subspace:
    """``(⋂ rad θ_i ∩ Ann A) ⊕ V`` inside the extension."""
    W = check_tuple(A, W)
    n, s, F = A.dim, len(W), A.field
    core = intersect(common_radical(W, n, F), annihilator(A))
    vecs = [tuple(v) + (F.zero,) * s for v in core.vectors()]
    vecs += [tuple(F.one if k == n + t else F.zero for k in range(n + s)) for t in range(s)]
    return span(vecs, n + s, F)


def check_ann_formula(E: ExtensionResult) -> bool:
    return E.annihilator == expected_annihilator(E.base, E.cocycles)


def has_annihilator_component(A: Algebra, W: Sequence[Cocycle]) -> bool:
    """Whether ``A_θ`` splits off a one-dimensional central ideal.

    Valid only when ``⋂ rad θ_i ∩ Ann A = 0``; this is then equivalent to the
    classes ``[θ_i]`` being linearly dependent.
    """
    W = check_tuple(A, W)
    if intersect(common_radical(W, A.dim, A.field), annihilator(A)).dim:
        raise ValueError("the common radical meets the annihilator")
    return h2(A).class_rank(W) < len(W)


def decompose(A: Algebra) -> tuple[Algebra, tuple]:
    """Write ``A`` as ``B_θ`` with ``B = A / Ann(A)``.

    The basis used is :func:`annihilator_adapted_basis`; when ``Ann(A)`` is
    spanned by the last standard vectors it is the identity, so
    ``central_extension(*decompose(A)).algebra == A``.
    """
    Qb, m = annihilator_adapted_basis(A)
    if m == 0:
        raise ValueError("the annihilator is zero")
    q = A.dim - m
    A2 = change_of_basis(A, Qb)
    k = dict(zip(pairs(A.dim), A2.products))
    F = A.field
    base = Algebra(q, F, tuple(tuple(k[p][:q]) for p in pairs(q)),
                   f"{A.name}/Ann" if A.name else None)
    W = tuple(Cocycle(q, F, tuple(k[p][q + t] for p in pairs(q))) for t in range(m))
    return base, W


def _coboundary_matrix(A: Algebra) -> Matrix:
    rows = [coboundary(A, A.basis_vector(k)).coeffs for k in range(A.dim)]
    return Matrix.from_rows(rows, A.field, ncols=A.dim * (A.dim - 1) // 2)


def lift_between(A: Algebra, B: Algebra, phi: Matrix, W1: Sequence[Cocycle],
                 W2: Sequence[Cocycle], C: Matrix) -> Matrix:
    """An isomorphism ``A_{W1} → B_{W2}`` of block form ``[[φ, 0], [f, C]]``.

    ``φ: A → B`` must be an isomorphism and ``C`` invertible; ``f`` is solved
    from ``φ*W2 = C·W1 + δf``.  Raises :class:`NoLiftError` when no ``f`` exists.
    """
    W1, W2 = check_tuple(A, W1), check_tuple(B, W2)
    n, s, F = A.dim, len(W1), A.field
    if len(W2) != s or C.shape != (s, s):
        raise DimensionError("cocycle tuples and C must have matching sizes")
    if C.field != F or phi.field != F or B.field != F:
        raise FieldMismatchError("all inputs must share a field")
    if not C.is_invertible():
        raise NoLiftError("C is singular")
    pulled = [act_on_cocycle(phi, w) for w in W2]
    D = _coboundary_matrix(A) if n > 1 else None
    f_rows = []
    for i in range(s):
        target = pulled[i]
        for j in range(s):
            target = target - W1[j].scale(C[i, j])
        if target.is_zero():
            f_rows.append([F.zero] * n)
            continue
        sol = solve_left(D, target.coeffs) if D is not None else None
        if sol is None:
            raise NoLiftError("φ*θ₂ - Cθ₁ is not a coboundary")
        f_rows.append(list(sol))
    rows = [list(r) + [F.zero] * s for r in phi.rows]
    rows += [f + list(c) for f, c in zip(f_rows, C.rows)]
    psi = Matrix.from_rows(rows, F, ncols=n + s)
    EA = central_extension(A, W1).algebra
    EB = central_extension(B, W2).algebra
    if not is_isomorphism(EA, EB, psi):
        raise NoLiftError("constructed map failed verification")
    return psi


def lift_iso(A: Algebra, phi: Matrix, W1: Sequence[Cocycle], W2: Sequence[Cocycle], C: Matrix) -> Matrix:
    """Lift ``φ ∈ Aut(A)`` to an isomorphism ``A_{W1} → A_{W2}``."""
    if not is_isomorphism(A, A, phi):
        raise NotAnAutomorphismError("φ is not an automorphism")
    return lift_between(A, A, phi, W1, W2, C)

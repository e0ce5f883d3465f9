"""Isomorphism witnesses, exhaustive search over F_p, and verdicts.

``iso_search`` decides isomorphism over a prime field.  When the algebras
have a nonzero annihilator it searches only over isomorphisms of the
quotients by the annihilator, and then lifts the survivor.  This is
complete: every isomorphism maps annihilator to annihilator, so it has the
block shape of a lift.  Algebras with zero annihilator are searched directly,
subject to a size guard.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _modp
from .algebra import (
    Algebra,
    annihilator,
    annihilator_adapted_basis,
    fingerprint,
    is_isomorphism,
    pairs,
)
from .catalog import parameter_witness
from .cohomology import h2
from .errors import (
    DimensionError,
    FieldMismatchError,
    SearchBudgetExceeded,
)
from .extensions import decompose, lift_between
from .fields import GF, Field
from .linalg import Matrix, rref
from .orbits import MAX_AUT_DIM, act_on_cocycle, isomorphisms, to_array

__all__ = [
    "verify_iso",
    "iso_search",
    "direct_limit",
    "distinguish",
    "DistinctByInvariant",
    "IsomorphicWitness",
    "UndecidedEvidence",
    "DEFAULT_EVIDENCE_PRIMES",
]

DEFAULT_EVIDENCE_PRIMES = (3,)


def verify_iso(A: Algebra, B: Algebra, P: Matrix) -> bool:
    if A.dim != B.dim:
        raise DimensionError(f"dimensions {A.dim} and {B.dim} differ")
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    return is_isomorphism(A, B, P)


def direct_limit(p: int) -> int:
    """Largest dimension searched directly (no annihilator reduction) over F_p."""
    return 4 if p <= 3 else 3


def _gl_transform(M: Matrix) -> Matrix:
    # invertible G with G·M in reduced row-echelon form
    s = M.nrows
    R, _ = rref(M.hstack(Matrix.identity(s, M.field)))
    return Matrix.from_rows([r[M.ncols:] for r in R.rows], M.field, ncols=s)


def _direct(A: Algebra, B: Algebra, max_rows: int) -> Matrix | None:
    p = A.field.p
    if A.dim > direct_limit(p):
        raise SearchBudgetExceeded(
            f"direct search over F_{p} is limited to dimension {direct_limit(p)}, got {A.dim}")
    found = isomorphisms(A, B, max_rows=max_rows)
    return found[0] if found.order else None


def _reduced(A: Algebra, B: Algebra, max_rows: int, chunk: int = 200_000) -> Matrix | None:
    F = A.field
    p = F.p
    QA, m = annihilator_adapted_basis(A)
    QB, _ = annihilator_adapted_basis(B)
    Ab, WA = decompose(A)
    Bb, WB = decompose(B)
    if Ab.dim > MAX_AUT_DIM:
        raise SearchBudgetExceeded(f"quotient of dimension {Ab.dim} is too large to enumerate")
    cands = isomorphisms(Ab, Bb, max_rows=max_rows)
    if cands.order == 0:
        return None
    H = h2(Ab)
    pl = pairs(Ab.dim)
    proj = to_array(H.projection) if H.dim_h else np.zeros((len(pl), 0), np.int64)
    t = np.array([[int(x) for x in w.coeffs] for w in WA], dtype=np.int64).reshape(m, len(pl)) @ proj % p
    wb = np.array([[int(x) for x in w.coeffs] for w in WB], dtype=np.int64).reshape(m, len(pl))
    t_rank = int(_modp.rank_mod(t[None], p)[0])
    hit = None
    for start in range(0, cands.order, chunk):
        phis = cands.array[start:start + chunk]
        act = _modp.second_compound(phis, pl) % p
        c = np.einsum("mr,nrc,ch->nmh", wb, act, proj) % p
        ok = _modp.rank_mod(c, p) == t_rank
        both = np.concatenate([np.broadcast_to(t, c.shape), c], axis=1)
        ok &= _modp.rank_mod(both, p) == t_rank
        idx = np.nonzero(ok)[0]
        if len(idx):
            hit = start + int(idx[0])
            break
    if hit is None:
        return None
    phi = cands[hit]
    c_exact = Matrix.from_rows([H.project(act_on_cocycle(phi, w)) for w in WB], F, ncols=H.dim_h)
    t_exact = Matrix.from_rows([H.project(w) for w in WA], F, ncols=H.dim_h)
    C = _gl_transform(c_exact).inverse() @ _gl_transform(t_exact)
    psi = lift_between(Ab, Bb, phi, WA, WB, C)
    P = QB @ psi @ QA.inverse()
    if not is_isomorphism(A, B, P):
        raise AssertionError("lifted map failed verification")
    return P


def iso_search(A: Algebra, B: Algebra, max_rows: int = 6_000_000, prefilter: bool = True) -> Matrix | None:
    """A verified isomorphism ``A → B`` over F_p, or None if none exists.

    With ``prefilter`` a fingerprint mismatch answers None at once; without
    it the search always runs to exhaustion.  Raises :class:`SearchBudgetExceeded` when the search is outside its
    guards; that outcome means undecided, not non-isomorphic.
    """
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    if not A.field.is_finite:
        raise FieldMismatchError(f"exhaustive search needs a finite field, got {A.field}")
    if A.dim != B.dim:
        return None
    if prefilter:
        if fingerprint(A) != fingerprint(B):
            return None
        if A == B:
            return Matrix.identity(A.dim, A.field)
    if annihilator(A).dim != annihilator(B).dim:
        return None
    if annihilator(A).dim == 0:
        return _direct(A, B, max_rows)
    return _reduced(A, B, max_rows)


@dataclass(frozen=True)
class DistinctByInvariant:
    invariant: str
    left: object
    right: object

    kind = "distinct"

    def to_json(self) -> dict:
        return {"verdict": self.kind, "invariant": self.invariant,
                "left": _jsonable(self.left), "right": _jsonable(self.right)}


@dataclass(frozen=True)
class IsomorphicWitness:
    matrix: Matrix
    method: str

    kind = "isomorphic"

    def to_json(self) -> dict:
        F = self.matrix.field
        return {"verdict": self.kind, "method": self.method, "field": F.to_json(),
                "matrix": [[F.format(x) for x in r] for r in self.matrix.rows]}


@dataclass(frozen=True)
class UndecidedEvidence:
    """Finite-field outcomes: ``(field, "isomorphic" | "none" | "budget" | "not-reducible")``."""

    results: tuple

    kind = "undecided"

    @property
    def exhaustive_none(self) -> tuple:
        """Fields over which exhaustive search found no isomorphism."""
        return tuple(f for f, r in self.results if r == "none")

    def to_json(self) -> dict:
        return {"verdict": self.kind, "results": [[str(f), r] for f, r in self.results]}


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def _reduce(A: Algebra, F: Field) -> Algebra | None:
    try:
        return A.over(F)
    except (ArithmeticError, FieldMismatchError):
        return None


def distinguish(A: Algebra, B: Algebra,
                evidence_primes: Sequence[int] = DEFAULT_EVIDENCE_PRIMES,
                max_rows: int = 6_000_000):
    """Compare two algebras over their common field.

    Returns :class:`DistinctByInvariant` when a rank invariant differs,
    :class:`IsomorphicWitness` when an explicit map is known, and
    :class:`UndecidedEvidence` with finite-field search results otherwise.
    Over a prime field the search is run in that field itself, so an empty
    result there is a proof of non-isomorphism over that field.
    """
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    if A.dim != B.dim:
        return DistinctByInvariant("dim", A.dim, B.dim)
    fa, fb = fingerprint(A).stable(), fingerprint(B).stable()
    for key in fa:
        if fa[key] != fb[key]:
            return DistinctByInvariant(key, fa[key], fb[key])
    if A == B:
        return IsomorphicWitness(Matrix.identity(A.dim, A.field), "identity")
    W = parameter_witness(A, B)
    if W is not None and verify_iso(A, B, W):
        return IsomorphicWitness(W, "parameter inversion")
    fields = [A.field] if A.field.is_finite else [GF(p) for p in evidence_primes]
    results = []
    for F in fields:
        Ar, Br = _reduce(A, F), _reduce(B, F)
        if Ar is None or Br is None:
            results.append((F, "not-reducible"))
            continue
        try:
            P = iso_search(Ar, Br, max_rows=max_rows)
        except SearchBudgetExceeded:
            results.append((F, "budget"))
            continue
        if P is not None and F == A.field:
            return IsomorphicWitness(P, f"exhaustive search over {F}")
        results.append((F, "none" if P is None else "isomorphic"))
    return UndecidedEvidence(tuple(results))

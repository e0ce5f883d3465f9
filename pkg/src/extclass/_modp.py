"""Batched integer kernels over F_p.

Everything here works on numpy int64 arrays holding residues in [0, p) and
processes whole stacks of small matrices at once.  The exact scalar classes
are far too slow for enumerating groups with millions of elements.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from .errors import SearchBudgetExceeded

# rows are expanded in chunks of at most this many candidates
CHUNK = 400_000


def inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def all_vectors(n: int, p: int) -> np.ndarray:
    """All of F_p^n in lexicographic order, shape (p**n, n)."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(product(range(p), repeat=n)), dtype=np.int64)


def subspace_vectors(basis: np.ndarray, p: int) -> np.ndarray:
    """Every vector of the span of the rows of ``basis``."""
    k = basis.shape[0]
    coeffs = all_vectors(k, p)
    if k == 0:
        return np.zeros((1, basis.shape[1]), dtype=np.int64)
    return coeffs @ basis % p


def rref_mod(M: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row-echelon forms of a stack (N, R, C) and the ranks.

    Zero rows end up at the bottom, so equal row spaces give equal arrays.
    """
    M = np.array(M, dtype=np.int64) % p
    N, R, C = M.shape
    inv = inverse_table(p)
    rk = np.zeros(N, dtype=np.int64)
    rows = np.arange(R)
    for c in range(C):
        mask = (M[:, :, c] != 0) & (rows[None, :] >= rk[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        piv = mask[sel].argmax(axis=1)
        r0 = rk[sel]
        a = M[sel, piv].copy()
        b = M[sel, r0].copy()
        M[sel, piv] = b
        M[sel, r0] = a
        scale = inv[M[sel, r0, c]]
        M[sel, r0] = M[sel, r0] * scale[:, None] % p
        f = M[sel, :, c].copy()
        f[np.arange(len(sel)), r0] = 0
        M[sel] = (M[sel] - f[:, :, None] * M[sel, r0][:, None, :]) % p
        rk[sel] += 1
        if R and (rk >= R).all():
            break
    return M, rk


def rank_mod(M: np.ndarray, p: int) -> np.ndarray:
    return rref_mod(M, p)[1]


def det_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Determinants of a stack (N, n, n) of square matrices."""
    M = np.array(M, dtype=np.int64) % p
    N, n, _ = M.shape
    inv = inverse_table(p)
    det = np.ones(N, dtype=np.int64)
    idx = np.arange(N)
    for c in range(n):
        nz = M[:, c:, c] != 0
        has = nz.any(axis=1)
        piv = c + nz.argmax(axis=1)
        a = M[idx, c].copy()
        b = M[idx, piv].copy()
        M[idx, c] = b
        M[idx, piv] = a
        det = np.where(piv != c, -det, det)
        pv = M[idx, c, c]
        det = np.where(has, det * pv % p, 0)
        f = M[:, c + 1:, c] * inv[pv][:, None] % p
        M[:, c + 1:, :] = (M[:, c + 1:, :] - f[:, :, None] * M[:, c:c + 1, :]) % p
    return det % p


def encode(M: np.ndarray, p: int) -> np.ndarray:
    """Integer key for each matrix of a stack (digits base p)."""
    N = M.shape[0]
    flat = M.reshape(N, -1)
    width = flat.shape[1]
    if width * np.log2(max(p, 2)) >= 62:
        raise SearchBudgetExceeded("matrices too large to encode as int64 keys")
    weights = p ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return flat @ weights


def bracket_batch(c: np.ndarray, X: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    """``[x, y]`` for stacks of vectors (N, n) with structure tensor ``c`` (n, n, n)."""
    return np.einsum("na,nb,abk->nk", X, Y, c, optimize=True) % p


def morphisms(cA: np.ndarray, cB: np.ndarray, p: int, candidates=None,
              max_rows: int = 6_000_000) -> np.ndarray:
    """All invertible P with ``P[x, y]_A = [Px, Py]_B``, as a stack (N, n, n).

    Columns are assigned one basis vector at a time; after each step the
    partial assignments are pruned by linear independence and by every
    bracket relation whose ingredients are already assigned.
    ``candidates[k]`` optionally restricts the image of ``e_k``.
    Raises :class:`SearchBudgetExceeded` if the frontier grows beyond ``max_rows``.
    """
    n = cA.shape[0]
    if n == 0:
        return np.zeros((1, 0, 0), dtype=np.int64)
    everything = all_vectors(n, p)
    # relation (i, j) becomes checkable once all of i, j and supp([e_i, e_j]_A) are placed
    checks = {k: [] for k in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            support = [l for l in range(n) if cA[i, j, l] % p]
            checks[max([i, j] + support)].append((i, j))
    frontier = np.zeros((1, 0, n), dtype=np.int64)
    for k in range(n):
        cand = everything if candidates is None or candidates[k] is None else candidates[k]
        cand = cand[(cand != 0).any(axis=1)]
        survivors = []
        total = 0
        step = max(1, CHUNK // max(1, len(cand)))
        for start in range(0, len(frontier), step):
            part = frontier[start:start + step]
            m = len(part)
            new = np.concatenate(
                [np.repeat(part, len(cand), axis=0),
                 np.tile(cand, (m, 1))[:, None, :]],
                axis=1,
            )
            if k > 0:
                new = new[rank_mod(new, p) == k + 1]
            for i, j in checks[k]:
                if len(new) == 0:
                    break
                lhs = np.einsum("l,nlk->nk", cA[i, j, :k + 1], new) % p
                rhs = bracket_batch(cB, new[:, i], new[:, j], p)
                new = new[(lhs == rhs).all(axis=1)]
            total += len(new)
            if total > max_rows:
                raise SearchBudgetExceeded(
                    f"more than {max_rows} partial maps after placing {k + 1} of {n} basis vectors")
            survivors.append(new)
        frontier = np.concatenate(survivors, axis=0) if survivors else np.zeros((0, k + 1, n), np.int64)
        if len(frontier) == 0:
            break
    if frontier.shape[1] != n:
        return np.zeros((0, n, n), dtype=np.int64)
    # frontier[:, k] is the image of e_k, i.e. column k
    return np.ascontiguousarray(frontier.transpose(0, 2, 1))


def second_compound(P: np.ndarray, pair_list) -> np.ndarray:
    """Matrices of ``θ ↦ θ(P·, P·)`` on Δ coordinates, stack (N, m, m).

    Row index is the Δ_ij being pulled back, column index the Δ_ab it lands on.
    """
    N = P.shape[0]
    m = len(pair_list)
    out = np.empty((N, m, m), dtype=np.int64)
    for r, (i, j) in enumerate(pair_list):
        for c, (a, b) in enumerate(pair_list):
            out[:, r, c] = P[:, i, a] * P[:, j, b] - P[:, j, a] * P[:, i, b]
    return out

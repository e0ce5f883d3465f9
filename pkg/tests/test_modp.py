"""Batched F_p kernels against the exact scalar implementation."""
from itertools import product

import numpy as np
from hypothesis import given, strategies as st

from extclass import _modp
from extclass.fields import GF
from extclass.linalg import Matrix, rank, rref

stacks = st.tuples(st.integers(1, 4), st.integers(1, 4), st.sampled_from([2, 3, 5, 7])).flatmap(
    lambda s: st.tuples(
        st.lists(st.lists(st.integers(0, s[2] - 1), min_size=s[0] * s[1], max_size=s[0] * s[1]),
                 min_size=1, max_size=6),
        st.just(s)))


@given(stacks)
def test_rref_mod_matches_exact(data):
    flat, (r, c, p) = data
    arr = np.array(flat, dtype=np.int64).reshape(len(flat), r, c)
    red, ranks = _modp.rref_mod(arr, p)
    for k in range(len(flat)):
        M = Matrix.from_rows(arr[k].tolist(), GF(p), ncols=c)
        R, rk = rref(M)
        assert ranks[k] == rk
        assert red[k].tolist() == [[int(x) for x in row] for row in R.rows]


@given(stacks.filter(lambda d: d[1][0] == d[1][1]))
def test_det_mod_matches_exact(data):
    flat, (n, _, p) = data
    arr = np.array(flat, dtype=np.int64).reshape(len(flat), n, n)
    dets = _modp.det_mod(arr, p)
    for k in range(len(flat)):
        assert dets[k] == int(Matrix.from_rows(arr[k].tolist(), GF(p), ncols=n).det())


def test_morphisms_of_abelian_algebra_is_general_linear_group():
    # |GL(2,3)| = 48, |GL(3,2)| = 168
    for n, p, order in ((2, 3, 48), (3, 2, 168), (2, 5, 480)):
        zero = np.zeros((n, n, n), dtype=np.int64)
        assert _modp.morphisms(zero, zero, p).shape[0] == order


def test_morphisms_against_brute_force():
    # g2 over F_3: [e1,e3] = e1, [e2,e3] = e2
    p, n = 3, 3
    c = np.zeros((n, n, n), dtype=np.int64)
    c[0, 2, 0], c[2, 0, 0] = 1, p - 1
    c[1, 2, 1], c[2, 1, 1] = 1, p - 1
    found = {m.tobytes() for m in _modp.morphisms(c, c, p)}
    brute = set()
    for entries in product(range(p), repeat=n * n):
        P = np.array(entries, dtype=np.int64).reshape(n, n)
        if round(np.linalg.det(P)) % p == 0:
            continue
        ok = True
        for a in range(n):
            for b in range(n):
                left = P @ c[a, b] % p
                right = np.einsum("i,j,ijk->k", P[:, a], P[:, b], c) % p
                if (left != right).any():
                    ok = False
        if ok:
            brute.add(P.tobytes())
    assert found == brute
    assert len(found) == 432


def test_encode_is_injective_on_small_stack():
    arr = np.array(list(product(range(3), repeat=4)), dtype=np.int64).reshape(-1, 2, 2)
    assert len(set(_modp.encode(arr, 3).tolist())) == len(arr)


def test_rank_mod_uses_exact_rank():
    M = np.array([[[1, 2, 0], [2, 4, 0]]], dtype=np.int64)
    assert _modp.rank_mod(M, 5)[0] == rank(Matrix.from_rows(M[0].tolist(), GF(5), ncols=3)) == 1

from itertools import product

import numpy as np
import pytest

from extclass.algebra import is_isomorphism
from extclass.catalog import table1
from extclass.cohomology import h2
from extclass.errors import FieldMismatchError, NotAnAutomorphismError, SearchBudgetExceeded
from extclass.fields import GF
from extclass.linalg import Matrix, rref
from extclass.orbits import (
    act_on_class,
    automorphisms,
    gaussian_binomial,
    grassmannian,
    orbit_partition,
    orbit_reps,
    stable_points,
)


def brute_force_aut_order(A) -> int:
    """Count bracket-preserving invertible matrices with plain integer arithmetic."""
    p, n = A.field.p, A.dim
    c = [[[int(x) for x in A.tensor[i][j]] for j in range(n)] for i in range(n)]
    count = 0
    for e in product(range(p), repeat=n * n):
        P = [e[r * n:(r + 1) * n] for r in range(n)]
        ok = True
        for a in range(n):
            for b in range(a + 1, n):
                left = [sum(P[k][l] * c[a][b][l] for l in range(n)) % p for k in range(n)]
                right = [sum(P[i][a] * P[j][b] * c[i][j][k] for i in range(n) for j in range(n)) % p
                         for k in range(n)]
                if left != right:
                    ok = False
                    break
            if not ok:
                break
        if ok and round(np.linalg.det(np.array(P, dtype=float))) % p:
            count += 1
    return count


@pytest.mark.parametrize("name,alpha", [("g1", None), ("g3", 0), ("g3", 2), ("A2", None), ("g4", None)])
def test_aut_order_matches_brute_force(name, alpha):
    A = table1(name, alpha, GF(3))
    assert automorphisms(A).order == brute_force_aut_order(A)


def test_aut_is_a_group(rng):
    A = table1("g3", 0, GF(5))
    aut = automorphisms(A)
    elems = list(aut)
    for _ in range(20):
        f, g = rng.choice(elems), rng.choice(elems)
        assert f @ g in aut
        assert f.inverse() in aut
        assert is_isomorphism(A, A, f)


def test_gaussian_binomial_counts():
    for h in range(4):
        for s in range(h + 1):
            for p in (2, 3, 5):
                assert len(grassmannian(h, s, GF(p))) == gaussian_binomial(h, s, p)


def test_grassmannian_points_are_canonical():
    F = GF(3)
    pts = grassmannian(3, 2, F)
    assert pts == sorted(pts)
    for x in pts:
        assert rref(x.matrix)[0] == x.matrix


@pytest.mark.parametrize("name,alpha,s", [("g3", 0, 1), ("g1", None, 1), ("N", None, 2), ("g1", None, 2)])
def test_orbits_partition_Ts(name, alpha, s, rng):
    F = GF(3)
    A = table1(name, alpha, F)
    H = h2(A)
    aut = automorphisms(A)
    orbits = orbit_partition(A, s, aut, H)
    members = [x for o in orbits for x in o]
    assert sorted(members) == stable_points(A, s, H)
    assert len(set(members)) == len(members)
    index = {x: k for k, o in enumerate(orbits) for x in o}
    elems = list(aut)
    for x in members:
        phi = rng.choice(elems)
        rows = [act_on_class(A, phi, r, H) for r in x.matrix.rows]
        image, _ = rref(Matrix.from_rows(rows, F, ncols=H.dim_h))
        key = tuple(int(v) for row in image.rows for v in row)
        assert index[type(x)(key, x.s, x.h, F)] == index[x]


def test_orbit_examples():
    F = GF(5)
    reps = orbit_reps(table1("g3", 0, F), 1)
    # coordinates are ([θ3], [θ1]); the two orbits are <[θ1]> and <[θ3]>
    assert [[int(v) for v in r.matrix.rows[0]] for r in reps] == [[0, 1], [1, 0]]
    assert orbit_reps(table1("N", None, GF(3)), 1) == []
    assert orbit_reps(table1("g2", None, GF(3)), 2) == []


def test_guards():
    with pytest.raises(FieldMismatchError):
        automorphisms(table1("g1"))
    from extclass.catalog import main_theorem
    with pytest.raises(SearchBudgetExceeded):
        automorphisms(main_theorem(5, 13, None, GF(3)))
    A = table1("g1", None, GF(3))
    with pytest.raises(NotAnAutomorphismError):
        act_on_class(A, Matrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 1]], GF(3)), (1, 0))

import json
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from extclass.algebra import change_of_basis, fingerprint
from extclass.catalog import main_theorem, table1
from extclass.errors import DimensionError, FieldMismatchError, SearchBudgetExceeded
from extclass.fields import GF, Q, QI
from extclass.isomorphism import (
    DistinctByInvariant,
    IsomorphicWitness,
    UndecidedEvidence,
    distinguish,
    iso_search,
    verify_iso,
)
from extclass.linalg import Matrix, random_invertible
from extclass.verify import pairwise_algebras

F3, F5 = GF(3), GF(5)


def test_verify_iso():
    A = table1("g1")
    assert verify_iso(A, A, Matrix.identity(3, Q))
    assert not verify_iso(A, A, Matrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 1]], Q))
    assert not verify_iso(A, A, Matrix.zeros(3, 3, Q))
    with pytest.raises(DimensionError):
        verify_iso(A, main_theorem(4, 7), Matrix.identity(3, Q))
    with pytest.raises(FieldMismatchError):
        verify_iso(A, table1("g1", None, QI), Matrix.identity(3, Q))


@pytest.mark.parametrize("n,i,alpha", [(4, 7, None), (4, 9, 2), (4, 11, None), (4, 12, None),
                                       (5, 14, None), (5, 15, None), (6, 16, None), (4, 3, None)])
def test_search_finds_relabelled_algebra(n, i, alpha, rng):
    A = main_theorem(n, i, alpha, F3)
    P = random_invertible(n, F3, rng)
    B = change_of_basis(A, P)
    found = iso_search(A, B, prefilter=False)
    assert found is not None and verify_iso(A, B, found)


def test_search_none():
    assert iso_search(main_theorem(4, 7, None, F3), main_theorem(4, 8, None, F3), prefilter=False) is None
    assert iso_search(main_theorem(4, 9, 2, F5), main_theorem(4, 9, 4, F5), prefilter=False) is None
    assert iso_search(table1("g1", None, F3), main_theorem(4, 7, None, F3)) is None


def test_search_guards():
    with pytest.raises(FieldMismatchError):
        iso_search(table1("g1"), table1("g1"))
    with pytest.raises(SearchBudgetExceeded):
        # zero annihilator in dimension 4 over F_5 is outside the direct guard
        A = main_theorem(4, 6, None, F5)
        B = A
        from extclass.isomorphism import _direct
        _direct(A, B, 10)


def test_parameter_inversion_witness():
    v = distinguish(table1("g3", "1/2"), table1("g3", 2))
    assert isinstance(v, IsomorphicWitness) and v.method == "parameter inversion"
    v = distinguish(main_theorem(4, 9, "i", QI), main_theorem(4, 9, "-i", QI))
    assert v.kind == "isomorphic"


def _verdicts_agree(v, w):
    if v.kind != w.kind:
        return False
    if v.kind == "distinct":
        return v.invariant == w.invariant and (v.left, v.right) == (w.right, w.left)
    return True


def test_pairwise_catalog_verdicts():
    algs = pairwise_algebras(__import__("extclass.catalog", fromlist=["CATALOG"]).CATALOG)
    for A, B in combinations(algs, 2):
        v, w = distinguish(A, B), distinguish(B, A)
        assert isinstance(v, DistinctByInvariant)
        assert _verdicts_agree(v, w)
        json.dumps(v.to_json())


def test_distinguish_is_transport_invariant(rng):
    algs = [main_theorem(4, i, 2 if i in (2, 4, 9) else None, F3) for i in range(1, 13)]
    for A, B in combinations(algs, 2):
        P = random_invertible(4, F3, rng)
        assert distinguish(A, B).kind == distinguish(change_of_basis(A, P), B).kind


def test_distinguish_finite_field_search(rng):
    A = main_theorem(4, 8, None, F3)
    B = change_of_basis(A, random_invertible(4, F3, rng))
    v = distinguish(A, B)
    assert isinstance(v, IsomorphicWitness) and verify_iso(A, B, v.matrix)
    assert v.to_json()["verdict"] == "isomorphic"


def test_undecided_over_q():
    # same fingerprint, no witness: evidence is gathered over F_3
    v = distinguish(main_theorem(4, 9, 3), main_theorem(4, 9, 5))
    assert v.kind == "undecided" and v.exhaustive_none == (F3,)
    assert v.to_json() == {"verdict": "undecided", "results": [["F_3", "none"]]}
    w = distinguish(main_theorem(4, 9, "2+i", QI), main_theorem(4, 9, "3+i", QI))
    assert w.results == ((F3, "not-reducible"),)


def test_undecided_not_reducible():
    v = UndecidedEvidence(((F3, "not-reducible"), (F5, "none")))
    assert v.exhaustive_none == (F5,)
    assert v.to_json() == {"verdict": "undecided", "results": [["F_3", "not-reducible"], ["F_5", "none"]]}


@settings(max_examples=15)
@given(st.integers(0, 2**31))
def test_fingerprint_is_basis_invariant(s):
    import random
    rng = random.Random(s)
    A = main_theorem(5, 15, None, Q)
    P = random_invertible(5, Q, rng)
    assert fingerprint(change_of_basis(A, P)) == fingerprint(A)

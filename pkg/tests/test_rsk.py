import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from invpaths.errors import DomainError
from invpaths.perms import contains_pattern, descent_set, enumerate_family, is_involution, maj
from invpaths.rsk import StandardTableau, inverse_rsk, rsk, transpose_involution

perm_strategy = st.integers(0, 10).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def T(rows):
    return StandardTableau.from_rows(rows)


def test_rsk_examples():
    P, Q = rsk((1, 3, 2))
    assert P == Q == T([[1, 2], [3]])
    P, Q = rsk((1, 2, 3, 4))
    assert P.rows == Q.rows == ((1, 2, 3, 4),)
    P, Q = rsk((4, 3, 2, 1))
    assert P.rows == Q.rows == ((1,), (2,), (3,), (4,))


def test_inverse_rsk_examples():
    assert inverse_rsk(T([[1, 2], [3]]), T([[1, 2], [3]])) == (1, 3, 2)
    assert inverse_rsk(T([[1, 2, 3]]), T([[1, 2, 3]])) == (1, 2, 3)
    col = T([[1], [2], [3]])
    assert inverse_rsk(col, col) == (3, 2, 1)


def test_inverse_rsk_errors():
    with pytest.raises(DomainError):
        inverse_rsk(T([[1, 2], [3]]), T([[1, 2, 3]]))
    with pytest.raises(DomainError):
        inverse_rsk(T([[2, 1], [3]]), T([[1, 2], [3]]))


@given(perm_strategy)
def test_rsk_roundtrip(p):
    P, Q = rsk(p)
    assert P.is_standard() and Q.is_standard()
    assert P.shape == Q.shape
    assert inverse_rsk(P, Q) == p
    # Schensted: first row length is the longest increasing subsequence
    longest = max((len(c) for r in range(len(p) + 1) for c in itertools.combinations(p, r)
                   if list(c) == sorted(c)), default=0) if len(p) <= 8 else None
    if longest is not None:
        assert (P.shape[0] if P.rows else 0) == longest


def test_involutions_have_equal_tableaux():
    for n in range(7):
        for p in itertools.permutations(range(1, n + 1)):
            P, Q = rsk(p)
            assert (P == Q) == is_involution(p)


def test_tableau_json_roundtrip():
    t = T([[1, 3, 4], [2, 5]])
    assert StandardTableau.from_json(t.to_json()) == t
    assert t.transpose() == T([[1, 2], [3, 5], [4]])
    assert t.transpose().transpose() == t
    assert t.row_of(5) == 1


def test_transpose_examples():
    assert transpose_involution((1, 2, 3)) == (3, 2, 1)
    assert transpose_involution((1, 3, 2)) == (2, 1, 3)
    assert descent_set((1, 3, 2)) == (2,)
    assert descent_set((2, 1, 3)) == (1,)
    with pytest.raises(DomainError):
        transpose_involution((2, 3, 1))
    # 4 3 2 1 contains 321 but avoids 123: allowed; 1 4 3 2 contains both
    assert transpose_involution((4, 3, 2, 1)) == (1, 2, 3, 4)
    with pytest.raises(DomainError):
        transpose_involution((1, 5, 3, 4, 2, 6))


@pytest.mark.parametrize("n", range(11))
def test_transpose_swaps_families_and_complements_descents(n):
    image = []
    for s in enumerate_family("I321", n):
        t = transpose_involution(s)
        image.append(t)
        assert is_involution(t)
        assert not contains_pattern(t, "123")
        assert transpose_involution(t) == s
        assert set(descent_set(t)) == set(range(1, n)) - set(descent_set(s))
        assert maj(t) == comb(n, 2) - maj(s)
    assert sorted(image) == list(enumerate_family("I123", n))

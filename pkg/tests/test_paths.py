import itertools

import pytest
from hypothesis import given, strategies as st

from invpaths.errors import DomainError, ParseError
from invpaths.paths import (
    Point,
    b_subset_index,
    endpoint,
    format_path,
    grand_paths,
    grand_subset,
    is_dyck,
    is_partial_dyck,
    parse_path,
    partial_dyck_paths,
    peaks,
    primal_factorization,
    sump,
    valleys,
)

TAU = "NENNNEENNEN"
PI = "NEENNEEENEN"

path_strategy = st.text(alphabet="NE", max_size=24)


def all_words(max_len):
    for n in range(max_len + 1):
        for w in itertools.product("NE", repeat=n):
            yield "".join(w)


def test_parse_path_examples():
    assert parse_path(TAU) == TAU
    assert endpoint(TAU) == (4, 7)
    assert parse_path("") == ""
    assert endpoint("") == (0, 0)
    assert parse_path(" ne n ") == "NEN"


def test_parse_path_reports_position():
    with pytest.raises(ParseError) as err:
        parse_path("NEX")
    assert err.value.position == 3
    assert "position 3" in str(err.value)


@given(path_strategy)
def test_format_parse_roundtrip(p):
    assert parse_path(format_path(p)) == p


def test_partial_dyck_examples():
    assert is_partial_dyck(TAU, 11)
    assert not is_partial_dyck(TAU, 10)
    assert not is_partial_dyck("ENN")
    assert is_partial_dyck("NNEE", 4)
    assert is_dyck("NNEE")
    assert not is_dyck("NNE")


@pytest.mark.parametrize("n", range(13))
def test_partial_dyck_count_is_central_binomial(n):
    from math import comb

    assert sum(1 for _ in partial_dyck_paths(n)) == comb(n, n // 2)


def test_peaks_valleys_examples():
    assert peaks(TAU) == [(0, 1), (1, 4), (3, 6)]
    assert peaks("NNEE") == [(0, 2)]
    assert valleys("NNEE") == []
    assert peaks(PI) == [(0, 1), (2, 3), (5, 4)]
    assert valleys("EN") == [(1, 0)]
    p = Point(2, 3)
    assert p.position == 5 and p.odd and p.parity == "odd"


def test_sump_examples():
    assert sump(TAU) == 15
    assert sump("NNEE") == 2
    assert sump(PI) == 15
    assert sump("") == 0


@given(path_strategy)
def test_sump_is_sum_of_peak_positions(p):
    # a peak at step boundary i (after i steps) is the point (x, y) with x + y = i
    expected = sum(i for i in range(1, len(p)) if p[i - 1] == "N" and p[i] == "E")
    assert sump(p) == expected
    assert abs(len(peaks(p)) - len(valleys(p))) <= 1


def test_primal_factorization_examples():
    assert primal_factorization("NENE") == ("N", "E", "N", "E")
    assert primal_factorization("EENN") == ("", "EE", "NN")
    assert primal_factorization("NNNN") == ("NNNN",)


@given(path_strategy)
def test_primal_factorization_shape(p):
    runs = primal_factorization(p)
    assert "".join(runs) == p
    for i, r in enumerate(runs):
        assert set(r) <= {"N" if i % 2 == 0 else "E"}
        assert r or i == 0


def test_b_subset_index():
    assert b_subset_index(PI) == 1
    assert b_subset_index("EENN") == 0
    assert b_subset_index("NNNEE") == 3
    with pytest.raises(DomainError):
        b_subset_index("NNN")


@pytest.mark.parametrize("n,m", [(a, b) for a in range(6) for b in range(6)])
def test_grand_paths_partition_into_subsets(n, m):
    full = list(grand_paths(n, m))
    assert full == sorted(full)
    assert len(full) == len(set(full))
    pieces = [set(grand_subset(n, m, j)) for j in range(n + 1)]
    union = set().union(*pieces)
    assert sum(len(s) for s in pieces) == len(union)
    assert union == {p for p in full if "E" in p}


def test_even_runs_iff_no_odd_corners():
    for n in range(7):
        for p in grand_paths(n, n):
            even_runs = all(len(r) % 2 == 0 for r in primal_factorization(p))
            odd_corner = any(pt.odd for pt in peaks(p) + valleys(p))
            assert even_runs == (not odd_corner)


def test_peak_count_matches_word_scan():
    for p in all_words(10):
        assert len(peaks(p)) == p.count("NE")
        assert len(valleys(p)) == p.count("EN")

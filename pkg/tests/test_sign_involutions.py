import pytest
from hypothesis import given, strategies as st

from invpaths.errors import DomainError
from invpaths.paths import b_subset_index, grand_paths, sump
from invpaths.sign_involutions import (
    Builder,
    Case,
    apply,
    build_fixed,
    builders_for,
    constructed_fixed_set,
    duplicate,
    geometric_fixed,
    is_fixed,
    phi1,
    phi2,
    phi3,
    phi4,
)
from invpaths.verify import check_involution_contracts


def test_duplicate_examples():
    assert duplicate("NEENEN") == "NNEEEENNEENN"
    assert duplicate("") == ""
    assert duplicate("NE") == "NNEE"
    assert (sump("NE"), sump("NNEE")) == (1, 2)


def test_phi1_examples():
    assert phi1("NENE") == "NEEN"
    assert phi1("NNEE") == "NNEE"
    assert phi1("EENN") == "EENN"
    with pytest.raises(DomainError):
        phi1("NNE")


def test_phi2_examples():
    assert phi2("NNENEENNEE") == "NNENEENNEE"
    assert phi2("NNNEEENNEE") == "NNNEEENNEE"
    assert phi2("ENNNEE") == "ENNNEE"
    assert phi2("ENNENE") == "ENNEEN"
    with pytest.raises(DomainError):
        phi2("NNEE")


def test_phi2_swaps_at_second_run_when_first_east_run_is_long():
    # mu_0 empty, mu_1 = EEE, mu_2 = NNN: the only odd runs are 1 and 2
    assert phi2("EEENNN") == "EENENN"
    assert phi2("EENENN") == "EEENNN"


def test_phi3_examples():
    assert phi3("NNEEEENNEEN") == "NNEEEENNEEN"
    assert phi3("NNENEENNEEE") == "NNENEENNEEE"
    # n = 0: B(1, 2)
    assert sorted(phi3(p) for p in grand_paths(1, 2)) == sorted(grand_paths(1, 2))
    with pytest.raises(DomainError):
        phi3("NNEE")


def test_phi4_examples():
    assert phi4("NNEEEENNEENNE") == "NNEEEENNEENNE"
    assert phi4("ENEENNEENNEEN") == "ENEENNEENNEEN"
    assert phi4("ENNEE") == "ENENE"
    # this path lies in the Phi4 domain at n = 1, not in the Phi3 one
    assert phi4("NENEE") == phi1("NENE") + "E" == "NEENE"
    with pytest.raises(DomainError):
        phi3("NENEE")


def test_builder_examples():
    assert build_fixed("phi1", "NEENE") == "NNENEENNEE"
    assert build_fixed("phi2", "NEENE") == "NNNEEENNEE"
    assert build_fixed("psi0", "NEENE") == "NNEEEENNEEN"
    assert build_fixed("psi1", "NEENE") == "NNENEENNEEE"
    assert build_fixed("psi2", "NEENE") == "NNNEEENNEEE"
    assert build_fixed("varphi0", "NEENENE") == "NNEEEENNEENNE"
    assert build_fixed("varphi1", "EENENEN") == "ENEENNEENNEEN"
    assert build_fixed("varphi2", "EENENEN") == "NEEENNEENNEEN"
    assert build_fixed("gamma", "NEENEN") == "NNEEEENNEENN"


def test_builder_errors():
    with pytest.raises(DomainError):
        build_fixed("gamma", "NEE")
    with pytest.raises(DomainError):
        build_fixed("phi1", "NE")
    with pytest.raises(DomainError):
        build_fixed("varphi0", "EENENEN")
    with pytest.raises(DomainError):
        build_fixed("varphi1", "NEENENE")


def test_is_fixed_examples():
    assert is_fixed("Phi1", "NNEE")
    assert not is_fixed("Phi1", "NENE")
    assert is_fixed("Phi2", "NNNEEENNEE")
    assert builders_for("Phi2") == (Builder.PHI1, Builder.PHI2)


@pytest.mark.parametrize("case,n", [(c, n) for c in Case for n in range(c.n_min, 4)])
def test_contracts_hold(case, n):
    report = check_involution_contracts(case, n)
    assert report.failures == []
    assert report.equal


@pytest.mark.parametrize("case", list(Case))
def test_fixed_points_match_geometry_and_builders(case):
    for n in range(case.n_min, 3):
        fixed = {p for p in case.domain(n) if is_fixed(case, p)}
        assert fixed == {p for p in case.domain(n) if geometric_fixed(case, p)}
        built = set().union(*constructed_fixed_set(case, n).values())
        assert fixed == built


def test_contract_examples():
    r = check_involution_contracts("Phi1", 1)
    assert r.counts == {"domain": 6, "fixed": 2, "constructed": 2}
    assert r.lhs.evaluate(1) == 2
    r = check_involution_contracts("Phi2", 0)
    assert r.counts["domain"] == 2
    r = check_involution_contracts("Phi1", 2)
    assert (r.counts["domain"], r.counts["fixed"]) == (70, 6)


@st.composite
def domain_path(draw):
    case = draw(st.sampled_from(list(Case)))
    n = draw(st.integers(case.n_min, 7))
    north, east = case.shape(n)
    steps = ["N"] * north + ["E"] * east
    return case, "".join(draw(st.permutations(steps)))


@given(domain_path())
def test_random_paths_larger_than_exhaustive_range(item):
    case, pi = item
    image = apply(case, pi)
    assert apply(case, image) == pi
    assert b_subset_index(image) == b_subset_index(pi)
    if image != pi:
        assert (sump(image) + sump(pi)) % 2 == 1
    assert geometric_fixed(case, pi) == (image == pi)

import json

import pytest

from invpaths.errors import BoundError
from invpaths.identities import IDENTITY_IDS, closed_form, get_identity
from invpaths.qpoly import q
from invpaths.verify import (
    MAIN_BOUND,
    VerificationReport,
    check,
    check_range,
    run_suite,
    suite_plan,
)
from math import comb


def test_registry_ids():
    assert set(IDENTITY_IDS) == {
        "JD-des", "JD-lead", "Lead-I", "Lead-II", "Lead-III", "Lead-IV",
        "Des321-I", "Des321-II", "Des321-III", "Des123-I", "Des123-II", "Des123-III",
        "Cor123", "AR-odd", "AR-even", "SS",
    }
    with pytest.raises(ValueError):
        get_identity("Lead-V")


def test_closed_form_examples():
    assert closed_form("JD-des", 3, k=1) == q + q ** 2
    assert closed_form("Lead-I", 1) == q + q ** 3
    for n in range(1, 12):
        total = sum(closed_form("Cor123", n, k=k).evaluate(1) for k in range(n))
        assert total == comb(n, n // 2)


def test_closed_form_parameter_errors():
    with pytest.raises(ValueError):
        closed_form("JD-des", 3)
    with pytest.raises(ValueError):
        closed_form("Lead-I", 1, k=2)
    with pytest.raises(ValueError):
        closed_form("Lead-I", 0)


def test_check_examples():
    r = check("Lead-I", 1)
    assert r.equal and r.lhs == r.rhs == q + q ** 3
    assert r.counts["I321_4"] == 6
    r = check("JD-des", 3, k=1)
    assert r.equal and r.lhs == q + q ** 2
    r = check("SS", 2)
    assert r.equal and r.lhs == 0


def test_check_refuses_out_of_bound():
    with pytest.raises(BoundError) as err:
        check("Lead-I", 5)
    assert "19" in str(err.value)
    with pytest.raises(BoundError):
        check("SS", 10)


def test_report_json_roundtrip():
    r = check("Des123-III", 3)
    d = json.loads(json.dumps(r.to_dict()))
    assert set(d) >= {"id", "n", "lhs", "rhs", "equal", "elapsed_ms", "counts"}
    back = VerificationReport.from_dict(d)
    assert (back.lhs, back.rhs, back.equal, back.id, back.n) == (r.lhs, r.rhs, r.equal, r.id, r.n)
    assert d["lhs_text"] == str(r.lhs)


@pytest.mark.parametrize("identity_id", IDENTITY_IDS)
def test_identity_holds_on_small_lengths(identity_id):
    ident = get_identity(identity_id)
    cap = 12 if ident.family.involutions_only else 8
    n = ident.n_min
    while ident.length(n) <= cap:
        for r in check_range(identity_id, n):
            assert r.equal, r.label
        n += 1


def test_suite_plan_respects_cap():
    plan = suite_plan(10)
    for identity_id, n in plan:
        if identity_id in IDENTITY_IDS:
            assert get_identity(identity_id).length(n) <= 10
    assert ("Lead-I", 2) in plan and ("Lead-I", 3) not in plan
    assert max(n for i, n in suite_plan(MAIN_BOUND) if i == "Lead-III") == 4


def test_small_suite_all_equal():
    assert all(r.equal for r in run_suite(8))

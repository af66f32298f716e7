import pytest

from crossedcoh.errors import UnknownScenario
from crossedcoh.scenarios import SCENARIOS, Report, run_scenario


def checks(rep):
    return {c.name: c for c in rep.checks}


def test_report_bookkeeping():
    rep = Report("demo")
    rep.expect("same", [1, 2], [1, 2], "derived")
    assert rep.passed
    rep.expect("override", 3, 4, "trivial", passed=True)
    assert rep.passed
    rep.expect("differs", {1}, {2}, "published")
    assert not rep.passed
    d = rep.to_dict()
    assert d["checks"][2]["computed"] == [1] and d["passed"] is False
    assert "[FAIL] differs" in rep.to_text()
    with pytest.raises(ValueError):
        rep.expect("bad tag", 1, 1, "rumour")


def test_unknown_scenario():
    with pytest.raises(UnknownScenario):
        run_scenario("nope")
    assert set(SCENARIOS) == {"pu2", "zmod8", "unitary", "axioms", "kang"}


def test_pu2_values():
    rep = run_scenario("pu2")
    assert rep.passed
    c = checks(rep)
    assert c["induced map is a homomorphism"].computed is False
    assert c["braiding witness"].computed == ["b1", "b2"]


def test_zmod8_values():
    rep = run_scenario("zmod8")
    assert rep.passed
    c = checks(rep)
    assert c["C^Γ"].computed == [0, 2]
    assert c["σ(x) − x"].computed == [4]
    assert c["δ[x] nontrivial"].computed is True
    assert c["δ[2x] trivial"].computed is True


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unitary(n):
    rep = run_scenario("unitary", n=n)
    assert rep.passed, [c for c in rep.checks if not c.passed]
    assert checks(rep)["kernel invariant factors"].computed == [2, 2, 2]
    assert checks(rep)["listed generators span the kernel"].computed == 8


def test_kang():
    rep = run_scenario("kang")
    assert rep.passed
    table = rep.values["classes [index, in im cr1, Δ neutral, 2-neutral]"]
    assert table["z2_to_one"] == [[0, True, True, True], [1, False, False, False]]


def test_axioms_seeded_reproducible():
    a = run_scenario("axioms", seed=3, random_count=3).to_dict()
    b = run_scenario("axioms", seed=3, random_count=3).to_dict()
    assert a == b and a["passed"]

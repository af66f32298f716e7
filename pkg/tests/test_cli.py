import json
import subprocess
import sys

import pytest

from crossedcoh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def d(data_dir):
    return lambda name: str(data_dir / name)


def test_validate_braided(capsys, d):
    code, out = run_json(capsys, "validate", "--input", d("q8_v4.json"))
    assert code == 0 and out["valid"] and out["symmetric"] and out["picard"]
    assert out["derived_identities"]["ok"]


def test_validate_other_kinds(capsys, d):
    assert run_json(capsys, "validate", "--input", d("groups/q8.json"))[1] == {"kind": "group", "order": 8, "valid": True}
    code, out = run_json(capsys, "validate", "--input", d("modules/unitary_x_n1.json"))
    assert code == 0 and out["invariant_factors"] == [4] and out["rank"] == 1
    code, out = run_json(capsys, "validate", "--input", d("a3_in_s3.json"))
    assert code == 0 and out["valid"] and "braiding" not in out


@pytest.mark.parametrize(
    "name, count, z1",
    [
        ("q8_v4.json", 2, 64),
        ("q8_v4_swap.json", 2, 64),
        ("one_to_v4.json", 4, 4),
        ("z2_to_one.json", 2, 4),
        ("z2_bilinear.json", 8, 16),
        ("s3_identity.json", 1, 36),
        ("a3_in_s3.json", 2, 18),
        ("z4_to_z2.json", 2, 16),
    ],
)
def test_h1_counts(capsys, d, name, count, z1):
    code, out = run_json(capsys, "h1", "--input", d(name))
    assert code == 0
    assert (out["count"], out["z1_size"]) == (count, z1)
    assert sum(c["orbit_size"] for c in out["classes"]) == z1


@pytest.mark.parametrize(
    "name, factors",
    [("q8_v4.json", [2]), ("one_to_v4.json", [2, 2]), ("z2_bilinear.json", [2, 4]), ("s3_identity.json", [])],
)
def test_h1_abelian(capsys, d, name, factors):
    code, out = run_json(capsys, "h1-abelian", "--input", d(name))
    assert code == 0 and out["abelian"] and out["invariant_factors"] == factors


def test_h1_abelian_without_braiding_is_an_input_error(capsys, d):
    code, out = run_json(capsys, "h1-abelian", "--input", d("a3_in_s3.json"))
    assert code == 2 and "braiding" in out["message"]


def test_cr1(capsys, d):
    for psi in ("psi_b1.json", "psi_b1b2.json"):
        code, out = run_json(capsys, "cr1", "--input", d("q8_v4.json"), "--psi", d(psi))
        assert code == 0 and out["class"] == 1 and not out["distinguished"]


def test_delta2(capsys, d):
    code, out = run_json(capsys, "delta2", "--input", d("z2_to_one.json"), "--cocycle", d("cocycle_z2_nonneutral.json"))
    assert code == 0 and out["is_2_cocycle"] and not out["neutral"] and out["witness"] is None
    code, out = run_json(capsys, "delta2", "--input", d("q8_v4.json"), "--cocycle", d("cocycle_b1.json"))
    assert code == 0 and out["neutral"] and out["is_2_cocycle"]


@pytest.mark.parametrize(
    "name, h1",
    [
        ("unitary_x_n1.json", [2, 2, 2]),
        ("unitary_x_n2.json", [2] * 5),
        ("unitary_xsc_n1.json", [2]),
        ("unitary_xsc_n2.json", [2, 2, 2]),
        ("z_sign.json", [2]),
        ("zmod8_a.json", [2, 2]),
        ("zmod8_b.json", [2]),
        ("zmod8_c.json", [2, 2]),
    ],
)
def test_module_h1(capsys, d, name, h1):
    code, out = run_json(capsys, "module-h1", "--input", d("modules/" + name))
    assert code == 0 and out["H1"]["invariant_factors"] == h1 and out["H1"]["rank"] == 0


def test_module_h0_of_sign_module_is_zero(capsys, d):
    _, out = run_json(capsys, "module-h1", "--input", d("modules/z_sign.json"))
    assert out["H0"] == {"invariant_factors": [], "rank": 0, "generators": []}


def test_budget_flag_and_environment(capsys, d, monkeypatch):
    code, out = run_json(capsys, "h1", "--input", d("q8_v4.json"), "--budget", "10")
    assert code == 2 and out["error"] == "BoundExceeded"
    monkeypatch.setenv("CROSSEDCOH_BUDGET", "10")
    code, out = run_json(capsys, "h1", "--input", d("q8_v4.json"))
    assert code == 2 and out["error"] == "BoundExceeded"
    code, _ = run_json(capsys, "h1", "--input", d("q8_v4.json"), "--budget", "100000")
    assert code == 0


def test_linalg_budget(capsys, d):
    code, out = run_json(capsys, "module-h1", "--input", d("modules/unitary_x_n2.json"), "--linalg-budget", "3")
    assert code == 2 and out["error"] == "BoundExceeded"


def test_schema_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"order": 1, "table": [[0]], "extra": 1}))
    code, out = run_json(capsys, "validate", "--input", str(p))
    assert code == 2 and out["error"] == "SchemaError" and "extra" in out["message"]
    code, out = run(capsys, "validate", "--input", str(p), "--format", "text")
    assert code == 2 and out.startswith("error: SchemaError")


def test_text_format(capsys, d):
    code, out = run(capsys, "h1", "--input", d("z2_to_one.json"), "--format", "text")
    assert code == 0 and "count: 2" in out
    code, out = run(capsys, "scenario", "zmod8", "--format", "text")
    assert code == 0 and out.splitlines()[0] == "scenario zmod8: PASS"


@pytest.mark.parametrize("argv", [["scenario", "pu2"], ["scenario", "zmod8"], ["scenario", "unitary", "--n", "1"], ["scenario", "kang"]])
def test_scenarios_pass(capsys, argv):
    code, out = run_json(capsys, *argv)
    assert code == 0 and out["passed"]
    assert all(c["provenance"] in ("published", "derived", "trivial") for c in out["checks"])


def test_axioms_scenario_small(capsys):
    code, out = run_json(capsys, "scenario", "axioms", "--random", "3", "--seed", "5")
    assert code == 0 and out["values"]["random instances"] == 3 and out["values"]["seed"] == 5


def test_output_is_deterministic(capsys, d):
    for argv in (
        ["h1", "--input", d("q8_v4.json")],
        ["scenario", "axioms", "--random", "2"],
        ["module-h1", "--input", d("modules/unitary_x_n2.json"), "--format", "text"],
    ):
        first = run(capsys, *argv)
        assert run(capsys, *argv) == first


def test_console_script_entry_point(d):
    r = subprocess.run(
        [sys.executable, "-m", "crossedcoh.cli", "h1", "--input", d("z2_to_one.json")],
        capture_output=True, text=True, check=False,
    )
    assert r.returncode == 0 and json.loads(r.stdout)["count"] == 2
    r2 = subprocess.run(
        [sys.executable, "-m", "crossedcoh.cli", "h1", "--input", d("z2_to_one.json")],
        capture_output=True, text=True, check=False,
    )
    assert r2.stdout == r.stdout


def test_failed_check_exits_one(capsys, monkeypatch):
    import crossedcoh.scenarios as sc

    real = sc.scenario_zmod8

    def broken(**kw):
        rep = real(**kw)
        rep.expect("forced mismatch", 1, 2, "trivial")
        return rep

    monkeypatch.setitem(sc._RUNNERS, "zmod8", broken)
    code, out = run_json(capsys, "scenario", "zmod8")
    assert code == 1 and not out["passed"]

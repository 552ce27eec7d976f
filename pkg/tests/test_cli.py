import json

import pytest

from expgroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_classify_alt_ten(capsys):
    code, out, _ = run(capsys, "classify", "--family", "alt", "--n", "10")
    assert code == 0
    assert "verdict: NO" in out and "reason: N_EQUALS_10" in out


def test_exponent_psp4_7(capsys):
    code, doc = run_json(capsys, "exponent", "--family", "psp", "--m", "2", "--q", "7")
    assert code == 0
    (val,) = doc["outputs"]
    assert val["expanded"] == 4200 and val["factored"] == "2^3*3*5^2*7"
    assert val["provenance"] == "formula"


def test_exponent_single_prime_and_signs(capsys):
    _, doc = run_json(capsys, "exponent", "--family", "sp", "--m", "2", "--q", "9", "--p", "2")
    assert doc["outputs"][0]["expanded"] == 16
    _, doc = run_json(capsys, "exponent", "--family", "omega+", "--m", "4", "--q", "2")
    assert doc["outputs"][0]["expanded"] == 2520
    _, doc = run_json(capsys, "exponent", "--family", "alt", "--n", "9")
    assert doc["outputs"][0]["expanded"] == 1260


def test_exponent_brute_projective(capsys):
    code, doc = run_json(capsys, "exponent-brute", "--group", "sl2:5", "--projective")
    assert code == 0
    vals = {o["name"]: o for o in doc["outputs"]}
    assert vals["exponent"]["expanded"] == 30 and vals["order"]["expanded"] == 60
    assert vals["exponent"]["provenance"] == "enumerated"


def test_exponent_brute_named_and_file(capsys, tmp_path):
    _, doc = run_json(capsys, "exponent-brute", "--group", "M11")
    assert doc["outputs"][1]["expanded"] == 1320
    f = tmp_path / "gens.txt"
    f.write_text("perm 4\n(1,2,3,4)\n(1,2)\n")
    _, doc = run_json(capsys, "exponent-brute", "--gens-file", str(f))
    assert [o["expanded"] for o in doc["outputs"]] == [24, 12]


def test_cap_exceeded_is_not_success(capsys, monkeypatch):
    code, _, err = run(capsys, "exponent-brute", "--group", "psp4:3", "--cap", "100")
    assert code == 1 and "budget" in err
    monkeypatch.setenv("EXPGROUPS_BUDGET", "100")
    code, _, _ = run(capsys, "exponent-brute", "--group", "M11")
    assert code == 1


def test_classify_range(capsys):
    _, doc = run_json(capsys, "classify", "--alt-range", "20")
    assert doc["fields"][0]["value"] == [5, 6, 7, 9, 10, 11, 13, 17, 18, 19]


def test_sylow(capsys):
    _, doc = run_json(capsys, "sylow", "--kind", "Wr", "--q", "7", "--r", "2")
    assert [o["expanded"] for o in doc["outputs"]] == [512, 16]


def test_verify_formulas_small_budget(capsys):
    code, doc = run_json(capsys, "verify", "formulas", "--budget", "60000")
    assert code == 0 and doc["passed"]
    assert len(doc["checks"]) >= 30


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["exponent", "--family", "sp", "--m", "2", "--q", "6"],
        ["exponent", "--family", "alt"],
        ["classify", "--family", "lie", "--n", "3"],
        ["exponent-brute"],
        ["verify", "formulas", "--grid", "huge"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_failed_check_exits_1_with_diff(capsys, monkeypatch):
    import expgroups.classify as cl

    rows = (("A6", 61, "L2(5)", 30),)
    monkeypatch.setattr(cl, "TABLE3", rows)
    code, out, _ = run(capsys, "verify", "table3", "--budget", "1000")
    assert code == 1
    assert "FAIL A6 vs L2(5)" in out
    assert "- expected 61 / 30" in out and "+ actual   60 / 30" in out


def test_output_is_deterministic(capsys):
    argv = ["--json", "exponent-brute", "--group", "psp4:3"]
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b
    assert "timing" not in json.loads(a)
    _, doc = run_json(capsys, "--timing", "exponent", "--family", "sp", "--m", "1", "--q", "5")
    assert "timing" in doc


def test_factored_and_expanded_agree(capsys):
    for argv in (["--m", "3", "--q", "7"], ["--m", "40", "--q", "7", "--p", "5"]):
        _, doc = run_json(capsys, "exponent", "--family", "sp", *argv)
        (val,) = doc["outputs"]
        prod = 1
        for term in val["factored"].split("*"):
            p, _, e = term.partition("^")
            prod *= int(p) ** int(e or 1)
        assert val["expanded"] == prod
    _, doc = run_json(capsys, "exponent", "--family", "alt", "--n", "200")
    (val,) = doc["outputs"]
    assert val["expanded"] is None  # beyond 2^64

import json

import pytest

from loopforest.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_mult_text_and_json(capsys):
    assert run(capsys, "mult", "--lhs", "1", "--rhs", "1")[:2] == (0, "s[2] + s[1,1]")
    code, out, _ = run(capsys, "mult", "--lhs", "h[2]", "--rhs", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "schur"
    assert {tuple(t["partition"]): t["coeff"] for t in data["terms"]} == {(3,): 1, (2, 1): 1}


def test_expand_skew_csv(capsys):
    code, out, _ = run(capsys, "expand-skew", "--shape", "2,1/1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["partition,coeff", "2,1", '"1,1",1']


def test_plethysm(capsys):
    assert run(capsys, "plethysm", "--outer", "h[2]", "--inner", "h[2]")[:2] == (0, "s[4] + s[2,2]")


def test_forest_char_and_dim(capsys):
    code, out, _ = run(capsys, "forest-char", "--forest", "(())", "--loops", "1")
    assert code == 0
    assert out.splitlines()[-1] == "dim 6"
    code, out, _ = run(capsys, "forest-char", "--forest", "", "--sigma", "1,1", "--mode", "paper",
                       "--format", "json")
    assert json.loads(out)["mode"] == "paper"
    code, out, _ = run(capsys, "dim", "--forest", "", "--sigma", "2")
    assert code == 0
    assert out.startswith("1 (displayed formula gives 2)")
    code, out, _ = run(capsys, "dim", "--forest", "()()", "--format", "json")
    assert json.loads(out)["dim"] == 1


def test_sign_census(capsys):
    code, out, _ = run(capsys, "sign-census", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["per_k"] == [4, 2, 1]
    assert data["total"] == data["formula_total"] == 7
    code, out, _ = run(capsys, "sign-census", "--n", "4", "--format", "csv")
    assert out.splitlines()[0] == "k,count,formula"


def test_idem_std(capsys):
    code, out, _ = run(capsys, "idem-std", "--map", "3,0,3")
    assert code == 0
    assert out.splitlines()[0] == "c2+z1"
    code, out2, _ = run(capsys, "idem-std", "--matrix", "0,0,0;0,0,0;1,0,1")
    assert out2 == out
    code, out, _ = run(capsys, "idem-std", "--map", "7,2,0,2,5,2,7", "--format", "json")
    data = json.loads(out)
    assert data["standard_form"] == "c3+c2+c1+z1"


def test_idem_std_rejects_non_idempotent(capsys):
    code, _, err = run(capsys, "idem-std", "--map", "0,0,1")
    assert code == 2
    assert "not idempotent" in err


def test_oracle(capsys):
    assert run(capsys, "oracle", "--map", "2,0", "--what", "orbit")[:2] == (0, "orbit size 2")
    code, out, _ = run(capsys, "oracle", "--map", "2,0", "--what", "stab", "--format", "json")
    assert json.loads(out)["order"] == 1
    code, out, _ = run(capsys, "oracle", "--map", "2,0")
    assert out == "s[2] + s[1,1]"
    code, _, err = run(capsys, "oracle", "--map", "0,0,0", "--cap", "2")
    assert code == 2


def test_foulkes(capsys):
    code, out, _ = run(capsys, "foulkes", "--m", "2", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["all_pass"] is True
    assert data["exceptions"] == [{"lambda": [4, 2], "lhs": 2, "rhs": 3, "verdict": "INFO"}]
    assert "seconds" not in data
    code, out, _ = run(capsys, "foulkes", "--m", "2", "--n", "3", "--format", "json", "--timing")
    assert "seconds" in json.loads(out)
    assert run(capsys, "foulkes", "--m", "3", "--n", "2")[0] == 2


@pytest.mark.parametrize("argv", [
    ["mult", "--lhs", "s[2", "--rhs", "1"],
    ["mult", "--lhs", "2,-1", "--rhs", "1"],
    ["expand-skew", "--shape", "1/2"],
    ["forest-char", "--forest", "(("],
    ["idem-std"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
    capsys.readouterr()


def test_partition_order_is_normalized(capsys):
    assert run(capsys, "mult", "--lhs", "2,3", "--rhs", "1")[1] == run(capsys, "mult", "--lhs", "3,2", "--rhs", "1")[1]


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--criteria", "1,2")
    assert code == 0
    assert out.splitlines()[0].startswith("[PASS] criterion 1")

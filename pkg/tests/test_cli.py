import json
from pathlib import Path

import pytest

from solvpair.cli import main

PAIRS = Path(__file__).resolve().parent.parent / "pairs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write_pair(tmp_path, obj, name="pair.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return path


def test_eval_star(capsys):
    code, out, _ = run(capsys, "eval", PAIRS / "a11.json", "--star", "X1", "X0")
    assert code == 0 and out == "X0*X1 + X0^2\n"


def test_eval_star_t_and_bracket(capsys):
    assert run(capsys, "eval", PAIRS / "a11.json", "--star-t", "X1", "X0")[1] == "X0*X1 + X0^2*t\n"
    assert run(capsys, "eval", PAIRS / "a11.json", "--bracket", "X1", "X0")[1] == "X0^2\n"
    code, out, _ = run(capsys, "eval", PAIRS / "a11.json", "--epsilon", "X1^3", "--json")
    assert json.loads(out) == {"epsilon": "3"}
    assert run(capsys, "eval", PAIRS / "a11.json", "--epsilon", "0")[1] == "-inf\n"


def test_eval_phi_and_log(capsys):
    assert run(capsys, "eval", PAIRS / "a2_unimodular.json", "--phi", "2", "X2")[1] == "X2 + 2*X1 + X0\n"
    assert run(capsys, "eval", PAIRS / "a2_unimodular.json", "--delta-log", "X2")[1] == "X1 - 1/2*X0\n"


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", PAIRS / "a2_unimodular.json", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["exponents"] == [1, 2, 3] and payload["method"] == "matrix"


def test_validate_rejects(capsys, tmp_path):
    bad = write_pair(tmp_path, {"nvars": 2, "delta": {"images": ["0", "X0"]}, "gamma": {"images": ["X0", "X1"]}})
    code, _, err = run(capsys, "validate", bad)
    assert code == 1 and "error:" in err


def test_parse_error_surfaces_position(capsys, tmp_path):
    code, _, err = run(capsys, "eval", PAIRS / "a11.json", "--star", "X0 +", "X1")
    assert code == 1 and "position 4" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "report", tmp_path / "nope.json")
    assert code == 1 and err.startswith("error:")


def test_reduce_twisted(capsys):
    code, out, _ = run(capsys, "reduce", PAIRS / "twisted21.json")
    assert code == 0 and "Y2 = X2 + 5*X0" in out and "jordan type: 2 1" in out


def test_reduce_needs_field_extension(capsys, tmp_path):
    path = write_pair(tmp_path, {"nvars": 2, "delta": {"images": ["0", "0"]},
                                 "gamma": {"images": ["X1", "2*X0"]}})
    code, _, err = run(capsys, "reduce", path)
    assert code == 1 and "needs field extension" in err


def test_report_unimodular_two_blocks(capsys, tmp_path):
    path = write_pair(tmp_path, {"nvars": 4, "jordan": {"blocks": [2, 2], "offsets": ["1/3", "-5/6"]}})
    code, out, _ = run(capsys, "report", path, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["unimodular"] is True and rep["calabi_yau"] is True
    assert rep["trace"] == "1" and rep["nakayama_c"] == "0" and rep["pder_dim"] == 3


def test_report_repeated_eigenvalue_leaves_cy_undetermined(capsys, tmp_path):
    # offsets 1/4, -3/4 give gamma eigenvalues 1/4, 5/4, -3/4, 1/4: trace 1 but not generic
    path = write_pair(tmp_path, {"nvars": 4, "jordan": {"blocks": [2, 2], "offsets": ["1/4", "-3/4"]}})
    code, out, _ = run(capsys, "report", path, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["unimodular"] is True and rep["trace"] == "1"
    assert rep["generic"] is False and rep["calabi_yau"] is None
    assert rep["hypotheses"] == "hypotheses not met"


def test_center_and_pder(capsys):
    code, out, _ = run(capsys, "center", PAIRS / "commutative.json", "--degree", "2", "--json")
    assert json.loads(out)["dim"] == 6
    code, out, _ = run(capsys, "pder", PAIRS / "blocks22.json", "--json")
    assert json.loads(out)["dim"] == 3


def test_normal(capsys, tmp_path):
    path = write_pair(tmp_path, {"nvars": 3, "jordan": {"blocks": [3], "offsets": ["0"]}})
    code, out, _ = run(capsys, "normal", path)
    assert code == 0 and "degree 2, eigenvalue 2: -X1^2 + 2*X0*X2" in out


def test_relations_and_hilbert(capsys):
    code, out, _ = run(capsys, "relations", PAIRS / "blocks22.json", "--json")
    rels = json.loads(out)["relations"]
    assert code == 0 and len(rels) == 6 and all(r["holds"] for r in rels)
    code, out, _ = run(capsys, "hilbert", PAIRS / "blocks22.json", "--json")
    assert code == 0 and [d["rank"] for d in json.loads(out)["degrees"]] == [1, 4, 10, 20, 35]


def test_slice_check(capsys):
    code, out, _ = run(capsys, "slice-check", PAIRS / "a21.json", "--r", "X1", "--samples", "10", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["ore"] and payload["homomorphism"]
    assert [g["eigenvalue"] for g in payload["kernel_generators"]] == ["1", "3"]


def test_slice_check_bad_r(capsys):
    code, _, err = run(capsys, "slice-check", PAIRS / "a21.json", "--r", "X0")
    assert code == 1 and "slice element" in err


def test_selftest_seed(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "7", "--samples", "3")
    assert code == 0 and out.rstrip().endswith("seed 7: all passed")


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("SOLVPAIR_SEED", "11")
    code, out, _ = run(capsys, "selftest", "--samples", "2", "--json")
    assert code == 0 and json.loads(out)["seed"] == 11


@pytest.mark.parametrize("argv", [
    ["report", PAIRS / "blocks22.json", "--json"],
    ["selftest", "--seed", "3", "--samples", "3"],
    ["slice-check", PAIRS / "a21.json", "--r", "X1", "--samples", "5", "--seed", "4"],
])
def test_deterministic_output(capsys, argv):
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first


def test_stdin_pair(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO((PAIRS / "a11.json").read_text()))
    assert run(capsys, "eval", "-", "--star", "X1", "X0")[1] == "X0*X1 + X0^2\n"

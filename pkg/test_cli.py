#!/usr/bin/env python3
"""
Command-line tests: verbs, report formats and the exit-code contract
"""

import io
import json

import pytest

import algebra
import cli
import handlers
from utils import SpecParseError, SpecParser, split_top_level


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--format", "json")
    return code, json.loads(out)


def test_group_info():
    code, data = run_json("group", "info", "2x2")
    assert code == 0
    assert data["order"] == 4
    assert data["involutions"] == 3
    assert data["sum_of_elements"] == [0, 0]
    code, out, _ = run("group", "info", "Z4")
    assert "Sum of all elements: (2,)" in out


def test_pairing_check_builtin_bicharacter():
    code, out, _ = run("pairing", "check", "grassmann")
    assert code == 0
    assert "det = -2" in out
    assert "Minimal: True" in out


def test_pairing_check_cocycle_reports_regular_elements():
    code, data = run_json("pairing", "check", "standard:4,2")
    assert code == 0
    assert data["kind"] == "cocycle"
    assert data["minimal"] is False
    assert sorted(data["regular_elements"]) == [[0, 0], [0, 2], [2, 0], [2, 2]]


def test_pairing_check_invalid_table_is_a_false_verdict(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"group": {"moduli": [2]}, "kind": "bicharacter", "table": [[1, 1], [1, 2]]}))
    code, data = run_json("pairing", "check", str(path))
    assert code == 1
    assert data["valid"] is False


def test_decimal_rendering_is_marked_approximate():
    code, out, _ = run("pairing", "check", "pauli:3", "--decimal")
    assert code == 0
    assert "zeta3" in out
    assert "≈" in out


def test_regular_report_for_a2():
    code, out, _ = run("regular", "paperA2")
    assert code == 1
    assert "det = -2" in out
    assert "Minimal: True" in out
    assert "witness pair: t, t" in out


def test_regular_check_and_matrix():
    code, data = run_json("regular", "check", "twisted:pauli2")
    assert code == 0
    assert data["regular"] is True
    code, data = run_json("regular", "matrix", "twisted:carry:2")
    assert code == 1
    assert data["minimal"] is False


def test_regular_check_undecided_exits_zero():
    code, data = run_json("regular", "check", "grassmann:2", "--state-cap", "1")
    assert code == 0
    assert data["regular"] is None
    assert data["condition_i"]["status"] == "undecided_beyond_cap"


def test_regular_check_grassmann_fails():
    code, data = run_json("regular", "check", "grassmann:3")
    assert code == 1
    assert data["condition_i"]["tuple"] == [[1], [1], [1], [1]]


def test_regular_structure_and_criterion():
    code, data = run_json("regular", "structure", "tensor(twisted:pauli2,local:1,1)")
    assert code == 0
    assert data["holds"] is True
    assert data["k"] == 1
    code, out, _ = run("regular", "structure", "twisted:carry:2")
    assert code == 1
    code, data = run_json("regular", "criterion", "twisted:pauli2")
    assert code == 0
    assert data["hypotheses_hold"] and data["conclusion_holds"]


def test_codim_table_and_json():
    code, data = run_json("codim", "tensor(twisted:carry:2,local:1,1)", "--max-n", "3")
    assert code == 0
    assert [entry["graded"] for entry in data["codimensions"]] == [2, 4, 8]
    code, data = run_json("codim", "tensor(twisted:pauli2,local:1,1)", "--max-n", "2", "--exponent")
    assert [entry["graded"] for entry in data["codimensions"]] == [4, 16]
    assert data["exponent"]["predicted"] == 4


def test_codim_nonzero_tuples_and_ordinary():
    code, data = run_json("codim", "graded:2(local:1,1)", "--max-n", "2", "--tuples", "nonzero", "--ordinary")
    assert code == 0
    second = data["codimensions"][1]
    assert second["graded"] == 1
    assert second["ordinary"] == 1
    assert list(second["per_tuple"]) == ["(0) (0)"]


def test_codim_beyond_environment_cap(monkeypatch):
    monkeypatch.setenv("REGRADE_MAX_N", "2")
    code, _, err = run("codim", "twisted:carry:2", "--max-n", "3")
    assert code == 2
    assert "REGRADE_MAX_N" in err


def test_algebra_validate_radical_and_export(tmp_path):
    path = tmp_path / "m3.json"
    code, _, _ = run("algebra", "export", "pauli:3", "--output", str(path))
    assert code == 0
    assert algebra.algebra_from_json(json.loads(path.read_text())).same_structure(algebra.pauli_matrix_algebra(3))
    code, data = run_json("algebra", "validate", str(path))
    assert code == 0
    assert data["dim"] == 9
    assert data["full_support"] is True
    code, data = run_json("algebra", "radical", "paperB")
    assert code == 0
    assert data["J_dim"] == 2
    assert data["radical_labels"] == ["z", "zt"]


def test_algebra_validate_rejects_non_associative_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "group": {"moduli": []},
        "basis": [{"label": "1", "degree": []}, {"label": "a", "degree": []}, {"label": "b", "degree": []}],
        "unit": [1, 0, 0],
        "products": {"0,0": [[0, 1]], "0,1": [[1, 1]], "1,0": [[1, 1]], "0,2": [[2, 1]], "2,0": [[2, 1]],
                     "1,1": [[2, 1]], "1,2": [[1, 1]]},
    }))
    code, data = run_json("algebra", "validate", str(path))
    assert code == 1
    assert "Associativity" in data["error"]


def test_malformed_json_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"group": {"moduli": [2]},\n "basis": [}')
    code, _, err = run("algebra", "validate", str(path))
    assert code == 2
    assert "JSON error" in err
    assert "line 2" in err


@pytest.mark.parametrize("document, where", [
    ({"group": {"moduli": [2]}, "basis": [1, 2], "unit": [1, 0]}, "basis[0]"),
    ({"group": {"moduli": [2]},
      "basis": [{"label": "1", "degree": [0]}, {"label": "t", "degree": [1]}],
      "unit": [1, 0], "products": {"0,0": [5]}}, "products['0,0']"),
])
def test_malformed_algebra_shapes_exit_two(tmp_path, document, where):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps(document))
    code, _, err = run("algebra", "validate", str(path))
    assert code == 2
    assert f"Malformed {where}" in err
    assert "internal error" not in err


def test_malformed_pairing_table_exits_two(tmp_path):
    path = tmp_path / "table.json"
    path.write_text(json.dumps({"group": {"moduli": [2]}, "kind": "bicharacter", "table": 5}))
    code, _, err = run("pairing", "check", str(path))
    assert code == 2
    assert "Malformed 'table'" in err


def test_unhandled_errors_exit_three(monkeypatch):
    def broken(self, args):
        raise RuntimeError("boom")

    monkeypatch.setattr(handlers.CommandHandlers, "group_info", broken)
    code, _, err = run("group", "info", "Z2")
    assert code == handlers.EXIT_INTERNAL_ERROR == 3
    assert "internal error: RuntimeError: boom" in err


def test_zero_state_cap_is_rejected():
    code, _, err = run("regular", "check", "paperB", "--state-cap", "0")
    assert code == 2
    assert "--state-cap" in err


@pytest.mark.parametrize("spec", [
    "pauli:2", "grassmann:3", "local:2,1", "paperB", "paperA2", "twisted:standard:3",
    "tensor(twisted:pauli2,local:1,1)", "dsum(paperB,paperA2)",
])
def test_exported_algebras_load_back(tmp_path, spec):
    path = tmp_path / "exported.json"
    code, _, _ = run("algebra", "export", spec, "--output", str(path))
    assert code == 0
    loaded = algebra.algebra_from_json(json.loads(path.read_text()))
    assert loaded.same_structure(SpecParser.parse_algebra(spec))


def test_input_errors_exit_two():
    assert run("algebra", "validate", "tensor(pauli:2")[0] == 2
    assert run("algebra", "validate", "missing-file.json")[0] == 2
    assert run("group", "info", "banana")[0] == 2
    assert run("verify", "no-such-suite")[0] == 2
    assert run("regular", "explain", "paperB")[0] == 2


def test_unknown_verbs_and_flags_are_rejected(capsys):
    assert cli.run(["frobnicate"]) == 2
    assert cli.run(["codim", "paperB", "--max-n", "2", "--colour"]) == 2
    assert cli.run(["codim", "paperB", "--tuples", "some"]) == 2


def test_verify_single_suite():
    code, out, _ = run("verify", "miller")
    assert code == 0
    assert "miller" in out
    assert "pass" in out


def test_reports_are_deterministic():
    first = run("regular", "paperB", "--format", "json")
    second = run("regular", "paperB", "--format", "json")
    assert first == second


def test_split_top_level_merges_numeric_arguments():
    parts = [part for part, _ in split_top_level("twisted:carry:2,local:1,1")]
    assert parts == ["twisted:carry:2", "local:1,1"]
    parts = [part for part, _ in split_top_level("tensor(a,b),local:2,1")]
    assert parts == ["tensor(a,b)", "local:2,1"]


def test_spec_parse_errors_carry_positions():
    with pytest.raises(SpecParseError) as info:
        SpecParser.parse_algebra("tensor(pauli:2,bogus)")
    assert info.value.position == 15
    assert "position 15" in str(info.value)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

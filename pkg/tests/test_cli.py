import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from stors.cli import parse_members, run

DATA = Path(__file__).parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def empty_quiver(tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps({"vertices": ["a", "b", "c"], "arrows": []}))
    return str(path)


# ------------------------------------------------------------------ documented examples


def test_stors_count_a4_quiver():
    assert call("stors", "--gen-typea", "1>2<3<4", "--mode", "ext1", "--count") == (0, "7\n", "")


def test_succ_count_empty_quiver(empty_quiver):
    assert call("succ", "--quiver", empty_quiver, "--count") == (0, "8\n", "")


def test_verify_theorem_all_intervals():
    code, out, _ = call("verify-theorem", "--gen-typea", "1>2", "--mode", "zero", "--all-intervals")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True and report["counterexamples"] == []
    assert set(report) == {"checks", "passed", "counterexamples"}


# ------------------------------------------------------------------ commands


def test_validate_and_lint_round_trip(tmp_path):
    code, spec, _ = call("gen-typea", "R L L", "--mode", "ext1")
    assert code == 0
    path = tmp_path / "a4.json"
    path.write_text(spec)
    code, out, _ = call("validate", str(path))
    assert code == 0 and out.startswith("ok: typeA_4_1>2<3<4_ext1")
    assert call("lint", str(path)) == (0, "0 violation(s)\n", "")
    assert call("gen-typea", "1>2<3<4")[1] == spec


def test_lint_broken_spec():
    code, out, _ = call("lint", "--spec", str(DATA / "broken_spec.json"))
    assert code == 1
    assert "negext_contravariant" in out and "W = S1" in out
    code, out, _ = call("lint", str(DATA / "broken_spec.json"), "--json")
    assert code == 1 and json.loads(out)["passed"] is False


def test_stors_listing_and_dot():
    code, out, _ = call("stors", "--dataset", "typeA_2_linear_zero")
    assert code == 0 and len(out.splitlines()) == 5
    code, dot, _ = call("stors", "--dataset", "typeA_2_linear_zero", "--dot")
    assert dot.startswith("digraph") and dot.count("->") == 5
    code, js, _ = call("stors", "--dataset", "typeA_2_linear_zero", "--json")
    assert len(json.loads(js)["pairs"]) == 5


def test_hasse_text():
    code, out, _ = call("hasse", "--gen-typea", "1>2<3<4")
    assert code == 0 and len(out.splitlines()) == 8


def test_heart_phi_psi():
    base = ("--gen-typea", "1>2<3<4", "--i1", "2", "--i2", "2 3 4")
    code, out, _ = call("heart", *base)
    assert code == 0 and out.splitlines()[0] == "heart = {[3,3], [4,4], [3,4]}"
    code, out, _ = call("phi", *base, "--t", "[2,2] [3,3] [2,3]")
    assert (code, out) == (0, "X = {[3,3]}  Y = {[4,4]}\n")
    code, out, _ = call("psi", *base, "--x", '["[3,3]"]')
    assert (code, out) == (0, "T = {[2,2], [3,3], [2,3]}  F = {[1,1], [4,4]}\n")


def test_selectors_by_members():
    code, out, _ = call("heart", "--dataset", "typeA_2_linear_ext1", "--t1", "", "--t2", "[2,2]", "--json")
    assert code == 0 and json.loads(out)["heart"] == ["[2,2]"]


def test_verify_theorem_single_interval():
    code, out, _ = call("verify-theorem", "--gen-typea", "1>2<3<4", "--i1", "2", "--i2", "2 3 4", "--text")
    assert code == 0 and out.endswith("passed\n")


def test_verify_theorem_nakayama():
    code, out, _ = call("verify-theorem", "--dataset", "nakayama_D", "--all-intervals")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_succ():
    code, out, _ = call("verify-succ", "1>2<3<4")
    assert code == 0 and json.loads(out)["passed"]


def test_succ_interval():
    code, out, _ = call("succ-interval", "--gen-typea", "1>2<3<4", "--i1", "2", "--i2", "2,3,4")
    assert code == 0 and out == "{2} -> {}\n{2, 3} -> {3}\n{2, 3, 4} -> {3, 4}\nverified\n"


def test_datasets():
    code, out, _ = call("datasets")
    assert code == 0 and "nakayama_A_e2" in out.split()
    code, out, _ = call("datasets", "nakayama_D")
    assert json.loads(out)["label"] == "nakayama_D"


def test_jobs_flag_same_output():
    a = call("stors", "--gen-typea", "1<2>3<4", "--mode", "zero", "--json")
    b = call("stors", "--gen-typea", "1<2>3<4", "--mode", "zero", "--json", "--jobs", "2")
    assert a == b


# ------------------------------------------------------------------ errors


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (("stors",), "no category given"),
        (("lint", "/does/not/exist.json"), "/does/not/exist.json"),
        (("stors", "--gen-typea", "1>X"), "1>X"),
        (("datasets", "nope"), "nope"),
        (("heart", "--gen-typea", "1>2<3<4", "--i1", "1", "--i2", "1 2"), "not successor-closed"),
        (("heart", "--dataset", "typeA_2_linear_ext1", "--t1", "[1,1]", "--t2", "[2,2]"), "--t1"),
        (("heart", "--dataset", "typeA_2_linear_ext1", "--t1", "[9,9]", "--t2", "[2,2]"), "[9,9]"),
        (("succ-interval", "--gen-typea", "1>2<3<4", "--i1", "2 3", "--i2", "2"), "not nested"),
    ],
)
def test_errors_exit_2_and_name_the_input(argv, fragment):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert fragment in err


def test_bad_spec_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"indecs": ["X"], "hom_dim": [[1]], "negext_dim": [[0]], "conf": {"X": [[["X9"], []]]}}')
    code, _, err = call("validate", str(path))
    assert code == 2 and "unknown IndecId 'X9'" in err


def test_usage_error_exit_code():
    assert call("no-such-command")[0] == 2
    assert call("stors", "--mode", "ext7")[0] == 2


def test_parse_members():
    assert parse_members('["a b", "c"]') == ["a b", "c"]
    assert parse_members("[1,1]; [2,2]") == ["[1,1]", "[2,2]"]
    assert parse_members("[1,1] [2,2]") == ["[1,1]", "[2,2]"]
    assert parse_members("  ") == []


# ------------------------------------------------------------------ process level


def test_module_entry_point_is_byte_stable():
    argv = [sys.executable, "-m", "stors", "hasse", "--gen-typea", "1>2<3<4", "--dot"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"digraph")

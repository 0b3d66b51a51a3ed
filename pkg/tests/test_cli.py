import json
import subprocess
import sys
import time

import pytest

from kmunproj.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, EXIT_RESOURCE, main

from conftest import FIXTURES

JOBS = {
    "skew2.json": ["pfaffian"],
    "skew4_generic.json": ["pfaffian"],
    "koszul4.json": ["koszul"],
    "original_tom.json": ["unproject", "--show-work"],
    "original_tom_matrix.json": ["unproject"],
    "original_jerry.json": ["unproject", "--show-work"],
    "explicit_tom_example.json": ["unproject"],
    "delpezzo_x3_x4.json": ["unproject"],
    "delpezzo_x4_x5.json": ["unproject"],
    "delpezzo_x5_x6.json": ["unproject"],
    "delpezzo_x6_pair.json": ["verify", "equal", "--allow-T-sign-flip"],
    "twisted_cubic_member.json": ["verify", "member"],
    "original_tom_syzygy.json": ["verify", "member"],
    "original_jerry_syzygy.json": ["verify", "member"],
    "original_tom_chain.json": ["verify", "chain"],
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_every_fixture_has_a_job():
    assert {p.name for p in FIXTURES.glob("*.json")} == set(JOBS)


@pytest.mark.parametrize("name", sorted(JOBS))
def test_fixture_runs_within_budget(capsys, name):
    t0 = time.perf_counter()
    code, out, err = run(capsys, *JOBS[name], "--input", str(FIXTURES / name))
    assert code == EXIT_OK, err or out
    assert time.perf_counter() - t0 < 5
    code2, out2, _ = run(capsys, *JOBS[name], "--input", str(FIXTURES / name))
    assert (code2, out2) == (code, out)


def test_pfaffian_skew2(capsys):
    assert run(capsys, "pfaffian", "--input", str(FIXTURES / "skew2.json"))[1] == "a\n"


def test_original_tom_output(capsys):
    code, out, _ = run(capsys, "unproject", "--kind", "tom", "--input", str(FIXTURES / "original_tom.json"))
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 9
    assert lines[5:] == ["-x1*x3 + z1*T", "-x1*x4 + z2*T", "-x2*x3 + z3*T", "-x2*x4 + z4*T"]


def test_json_output(capsys):
    code, out, _ = run(capsys, "unproject", "--json", "--input", str(FIXTURES / "original_tom.json"))
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["g"] == ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]
    assert data["vars"][-1] == "T"


def test_inline_job_and_lex_order(capsys):
    job = json.dumps({"vars": ["x", "y", "z"], "ideal": ["x^2 - y", "x^3 - z"], "polys": ["y^3 - z^2"]})
    code, out, _ = run(capsys, "verify", "member", "--order", "lex", "--input", job)
    assert code == EXIT_OK and "member" in out


def test_non_member_exits_one_with_witness(capsys):
    job = json.dumps({"vars": ["x", "y"], "ideal": ["x"], "polys": ["x*y", "y + 1"]})
    code, out, _ = run(capsys, "verify", "member", "--input", job)
    assert code == EXIT_FAIL
    assert "polys[1]" in out and "y + 1" in out


def test_unequal_ideals_exit_one(capsys):
    job = json.dumps({"vars": ["x"], "left": ["x"], "right": ["x^2"]})
    code, out, _ = run(capsys, "verify", "equal", "--json", "--input", job)
    assert code == EXIT_FAIL
    assert json.loads(out)["witness"] == "x"


def test_failing_chain_map_exits_one(capsys):
    data = json.loads((FIXTURES / "original_tom_chain.json").read_text())
    data["verticals"][0] = {"rows": 1, "cols": 1, "entries": [[0]]}
    code, out, _ = run(capsys, "verify", "chain", "--input", json.dumps(data))
    assert code == EXIT_FAIL and out.rstrip().endswith("FAIL")


@pytest.mark.parametrize("argv, where", [
    (["pfaffian", "--input", '{"vars": ["a"], "matrix": [[0, "a"], ["a", 0]]}'], "matrix"),
    (["det", "--input", '{"vars": ["a"], "matrix": [["a", "b"]]}'], "matrix"),
    (["det", "--input", '{"vars": ["a"], "matrix": [["a y"]]}'], "matrix.entries[0][0]"),
    (["koszul", "--input", '{"vars": ["a"]}'], "need either"),
    (["unproject", "--input", '{"vars": ["a"]}'], "kind"),
    (["unproject", "--kind", "tom", "--input", '{"vars": ["x"], "x": ["x"], "z": []}'], "Tom data"),
    (["pfaffian", "--input", str(FIXTURES / "missing.json")], "missing.json"),
    (["pfaffian", "--input", "{not json"], "invalid JSON"),
])
def test_input_errors_exit_two_with_location(capsys, argv, where):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert where in err


def test_tname_clash_is_an_input_error(capsys):
    code, _, err = run(capsys, "unproject", "--tname", "x1", "--input", str(FIXTURES / "original_tom.json"))
    assert code == EXIT_INPUT and "x1" in err


def test_bad_arguments_exit_two(capsys):
    assert run(capsys, "frobnicate")[0] == EXIT_INPUT
    assert run(capsys, "pfaffian")[0] == EXIT_INPUT


def test_resource_ceiling_exits_three(capsys):
    job = json.dumps({"vars": ["x", "y", "z", "w"],
                      "ideal": ["x^3 - y*z*w", "y^3 - x*z^2", "z^3 - x^2*w", "w^3 - x*y*z"], "polys": ["x"]})
    code, _, err = run(capsys, "verify", "member", "--max-pairs", "3", "--input", job)
    assert code == EXIT_RESOURCE and "resource" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "kmunproj", "unproject", "--show-work", "--input",
           str(FIXTURES / "original_jerry.json")]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a

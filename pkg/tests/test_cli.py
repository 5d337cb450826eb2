import json
import subprocess
import sys

import pytest

from spectop.cli import render_text, run


def call(*argv):
    from io import StringIO
    buf = StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def report(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def test_closure_patch():
    code, r = report("closure", "--ring", "Z", "--set", "progression(1,4)", "--topology", "patch")
    assert code == 0
    assert r["result"]["closure"]["set"] == "progression(1,4)+generic"
    assert r["result"]["closure"]["form"]["generic"] is True
    assert set(r) == {"command", "inputs", "result", "version"}


def test_compare_finite():
    code, r = report("compare", "--ring", "Z", "--set", "{2,3,5}")
    assert code == 0 and r["result"]["equal"] is True
    assert r["result"]["patch"]["set"] == r["result"]["ultrafilter"]["set"] == "{2,3,5}"


def test_hull():
    code, r = report("hull", "--ring", "Z/12")
    res = r["result"]
    assert code == 0 and res["components"] == [2, 3]
    assert res["iota"][7] == [7, [1, 1]]
    assert res["certificate"]["passed"] and res["contraction"]["homeomorphism"]


def test_spec_and_witness_and_limit():
    code, r = report("spec", "--ring", "Z/12")
    assert r["result"]["points"] == ["(2)", "(3)"]
    code, r = report("spec", "--ring", "GF(2)[x]", "--max-n", "3")
    assert r["result"]["first_closed_points"] == ["(x)", "(x+1)", "(x^2+x+1)"]
    code, r = report("witness", "--ring", "Z", "--set", "progression(1,4)")
    assert code == 0 and r["result"]["witness"] == "(0)"
    code, r = report("limit", "--ring", "Z", "--set", "progression(1,4)", "--element", "5",
                     "--element", "0")
    assert r["result"]["limit"] == "(0)"
    assert [m["in_limit"] for m in r["result"]["membership"]] == [False, True]
    code, r = report("limit", "--ring", "Z/12", "--set", "all", "--point", "3")
    assert r["result"]["limit"] == "(3)"


def test_domain_errors_exit_1():
    code, r = report("witness", "--ring", "Z", "--set", "{2,3}")
    assert code == 1 and r["result"]["error"] == "NoWitnessError"
    code, r = report("limit", "--ring", "Z/12", "--set", "all")
    assert code == 1 and r["result"]["error"] == "InvalidDescriptorError"
    code, r = report("hull", "--ring", "Z")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["closure", "--ring", "Z"],
    ["closure", "--ring", "Q", "--set", "all"],
    ["closure", "--ring", "Z", "--set", "progression(1"],
    ["frobnicate"],
    ["verify", "--criteria", "1,x"],
    ["verify", "--criteria", "12"],
    ["closure", "--ring", "Z", "--set", "all", "--topology", "discrete"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out = call(*argv)
    assert code == 2 and out == ""


def test_output_is_stable():
    argv = ["witness", "--ring", "Z", "--set", "progression(1,4)", "--seed", "3"]
    assert call(*argv) == call(*argv)
    assert "elapsed_s" not in report(*argv)[1]
    assert "elapsed_s" in report(*argv, "--timing")[1]


def test_text_format_matches_json():
    code, text = call("compare", "--ring", "Z", "--set", "{2,3,5}", "--format", "text")
    assert code == 0 and "equal: yes" in text
    _, r = report("compare", "--ring", "Z", "--set", "{2,3,5}")
    assert render_text(r) == text.rstrip("\n")


def test_verify_subset():
    code, r = report("verify", "--criteria", "8,9")
    assert code == 0 and r["result"]["all_passed"]
    assert [c["criterion"] for c in r["result"]["criteria"]] == [8, 9]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "spectop", "spec", "--ring", "Z/30"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"]["points"] == ["(2)", "(3)", "(5)"]

import io
import json
import subprocess
import sys

import jsonschema
import pytest

from crstruct.cli import run
from crstruct.report import load_schema


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def records(*argv):
    code, out, _ = call(*argv, "--format", "json")
    return code, json.loads(out)["records"]


def test_verify_group_i():
    code, recs = records("verify", "--group", "I")
    assert code == 0
    assert [(r["check"], r["status"]) for r in recs] == [
        ("closure", "pass"), ("inverse", "pass"), ("assoc", "pass"), ("identity", "pass")
    ]


def test_verify_all_is_six_by_four():
    code, recs = records("verify", "--all")
    assert code == 0
    assert len(recs) == 24
    assert len({r["subject"] for r in recs}) == 6


def test_verify_single_check():
    code, recs = records("verify", "--group", "IV1", "--check", "inverse")
    assert code == 0 and [r["check"] for r in recs] == ["inverse"]


def test_verify_printed_comparison_reports_mismatch():
    code, recs = records("verify", "--group", "III2", "--diff-paper")
    assert code == 1
    failed = {r["details"]["entry"] for r in recs if r["status"] == "fail"}
    assert failed == {"h~", "inverse(5,2)"}


def test_lie_iii2():
    code, out, _ = call("lie", "--group", "III2")
    assert code == 0
    assert "dimension: 18" in out


def test_lie_show_basis():
    code, recs = records("lie", "--group", "I", "--show-basis")
    assert code == 0
    basis = recs[0]["details"]["basis"]
    assert basis["Re(a)"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]


def test_derive_printed_comparison():
    code, recs = records("derive", "--class", "II", "--diff-paper")
    assert code == 0
    errata = [r for r in recs if r["status"] == "erratum"]
    assert [r["check"] for r in errata] == ["printed matrix (4,4)"]
    code, _, _ = call("derive", "--class", "II", "--diff-paper", "--strict-errata")
    assert code == 1


def test_json_is_deterministic_and_valid():
    argv = ("derive", "--class", "IV2", "--diff-paper", "--format", "json")
    _, a, _ = call(*argv)
    _, b, _ = call(*argv)
    assert a == b
    jsonschema.validate(json.loads(a), load_schema())


def test_text_and_json_agree():
    argv = ("verify", "--all", "--seed", "3")
    _, text, _ = call(*argv)
    _, recs = records(*argv)
    heads = [line for line in text.splitlines() if line.startswith("[")]
    assert heads == [f"[{r['status'].upper()}] {r['subject']} {r['check']}" for r in recs]


def test_usage_errors_exit_2(capsys):
    assert call("verify")[0] == 2
    assert call("verify", "--group", "V")[0] == 2
    assert call("bogus")[0] == 2
    assert call("derive", "--class", "I", "--format", "xml")[0] == 2


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def test_classify(files):
    m = files("h.txt", "ambient C2\nphi = x^2 + y^2\n")
    code, recs = records("classify", "--manifold", m, "--point", "0,0,0,0", "1,1,0")
    assert code == 0
    assert [r["details"]["verdict"] for r in recs] == ["ClassI", "ClassI"]
    m3 = files("k.txt", "ambient C3\nphi = x1^2 + y1^2\n")
    code, recs = records("classify", "--manifold", m3, "--point", "0,0,0,0,0")
    assert recs[0]["details"]["verdict"] == "ClassIV2-candidate"


def test_classify_errors(files):
    m = files("h.txt", "ambient C2\nphi = x^2 + y^2\n")
    code, _, err = call("classify", "--manifold", m, "--point", "1,1,0,0")
    assert code == 2 and "phi" in err
    bad = files("bad.txt", "ambient C2\nphi = x * * y\n")
    code, _, err = call("classify", "--manifold", bad, "--point", "0,0,0")
    assert code == 2
    assert f"{bad}:2:" in err
    code, _, err = call("classify", "--manifold", "/nonexistent", "--point", "0,0,0")
    assert code == 2


def test_multiplier(files):
    m = files("h.txt", "ambient C2\nphi = x^2 + y^2\n")
    h = files("map.txt", "z -> (1 + I)*z'\nw -> 2*w'\n")
    code, recs = records("multiplier", "--map", h, "--source", m, "--target", m, "--point", "1,0,0,1")
    assert code == 0
    assert recs[0]["details"]["a"] == "(1+I)"
    assert recs[0]["details"]["residual"] == "0"
    degenerate = files("sq.txt", "z -> z'^2\nw -> w'\n")
    code, recs = records("multiplier", "--map", degenerate, "--source", m, "--target", m, "--point", "0,0,0,0")
    assert code == 1 and recs[0]["status"] == "fail"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "crstruct", "lie", "--group", "I", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["records"][0]["details"]["dimension"] == 4

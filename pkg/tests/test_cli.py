import json
import subprocess
import sys

import pytest

from resolvset.cli import main
from resolvset.graph import parse_edgelist

HC444 = ["hc", "--a", "4", "--b", "4", "--c", "4"]
SP333 = ["sp", "--a", "3", "--b", "3", "--c", "3"]


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_dims_mixed_hc(capsys):
    rc, out, _ = run(capsys, "dims", *HC444, "--variant", "mixed", "--certify")
    doc = json.loads(out)
    assert rc == 0
    assert doc["value"] == 3 and doc["certified"] and doc["refuted_sizes"] == [2]
    assert doc["witness"] == ["p1:1", "p2:1", "q1:7"]
    assert "metadata" not in doc


def test_dims_json_byte_identical(capsys):
    outs = {run(capsys, "dims", *SP333, "--variant", "mixed", "--threads", t)[1] for t in ("1", "3")}
    assert len(outs) == 1


def test_dims_timing_flag(capsys):
    _, out, _ = run(capsys, "dims", *SP333, "--variant", "vertex", "--timing")
    assert "elapsed_seconds" in json.loads(out)["metadata"]


def test_dims_text(capsys):
    rc, out, _ = run(capsys, "dims", *SP333, "--variant", "multiset", "--cap", "6", "--format", "text")
    assert rc == 0
    assert "multiset dimension of SP_3_3_3: 3" in out
    assert "certified: True" in out


def test_dims_not_found_exit(capsys):
    rc, out, _ = run(capsys, "dims", *SP333, "--variant", "mixed", "--cap", "2")
    assert rc == 1
    assert json.loads(out)["value"] == "not found up to cap"


def test_dims_budget_exit(capsys):
    rc, _, err = run(capsys, "dims", *HC444, "--budget", "100")
    assert rc == 3 and "budget" in err


def test_verify_published_set(capsys):
    rc, out, _ = run(capsys, "verify", *HC444, "--variant", "mixed", "--set", "p1:1,r1:1,p2:1", "--independent")
    assert rc == 0
    assert out == "resolving (mixed): true\nindependent: true\n"


def test_verify_failure_reports_pair(capsys):
    rc, out, _ = run(capsys, "verify", *HC444, "--variant", "mixed", "--set", "p1:1,p1:2", "--format", "json")
    doc = json.loads(out)
    assert rc == 1 and doc["resolving"] is False
    assert len(doc["violating_pair"]) == 2


def test_verify_dependent_set(capsys):
    rc, out, _ = run(capsys, "verify", *HC444, "--set", "p1:1,p1:2,r1:1,p2:1", "--independent")
    assert rc == 1 and "independent: false" in out


def test_verify_hexagonal_layout(capsys):
    args = ["hc", "--a", "4", "--b", "5", "--c", "6", "--set", "p1:1,r1:1,p2:1"]
    assert run(capsys, "verify", *args)[0] == 1
    assert run(capsys, "verify", *args, "--layout", "hexagonal")[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["dims", "hc", "--a", "4"],
        ["verify", *HC444],
        ["verify", *HC444, "--set", "p1:1,p1:1"],
        ["verify", *HC444, "--set", "z9:1"],
        ["verify", *HC444, "--set", "999"],
        ["dims", *HC444, "--variant", "partition"],
        ["dims", *HC444, "--threads", "0"],
        ["dims", "file"],
        ["dims", "file", "--input", "/nonexistent/graph.txt"],
        ["generate", "hc", "--a", "1", "--b", "4", "--c", "4"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_generate_roundtrip(capsys, tmp_path):
    path = tmp_path / "sp.txt"
    assert run(capsys, "generate", *SP333, "-o", str(path))[0] == 0
    g = parse_edgelist(path.read_text())
    assert (g.n, g.m) == (30, 36)
    rc, out, _ = run(capsys, "dims", "file", "--input", str(path), "--variant", "vertex")
    assert rc == 0 and json.loads(out)["value"] == 2


def test_generate_disconnected_file(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("4 2\n0 1\n2 3\n")
    assert run(capsys, "dims", "file", "--input", str(path))[0] == 2


def test_generate_json_and_dot(capsys):
    _, out, _ = run(capsys, "generate", *HC444, "--format", "json")
    doc = json.loads(out)
    assert doc["structure"]["ok"] and doc["instance"]["n"] == 72
    _, out, _ = run(capsys, "generate", *SP333, "--format", "dot")
    assert out.count(" -- ") == 36


def test_audit_commands(capsys):
    rc, out, _ = run(capsys, "audit", "hc444")
    assert rc == 0 and json.loads(out)["totals"]["mismatch"] == 0
    rc, out, _ = run(capsys, "audit", "hc", "--a", "4", "--b", "4", "--c", "4", "--format", "text",
                     "--mismatches-only")
    assert rc == 1 and "S:p1s1" in out and "V:p1 " not in out
    rc, out, _ = run(capsys, "audit", "sp", "--a", "3", "--b", "3", "--c", "3")
    assert rc == 1 and json.loads(out)["extras"]["claims_consistent"] is False


def test_codes_csv(capsys):
    rc, out, _ = run(capsys, "codes", *HC444, "--variant", "mixed", "--set", "p1:1,r1:1,p2:1")
    lines = out.splitlines()
    assert rc == 0 and lines[0] == "element_kind,element,c1,c2,c3"
    assert len(lines) == 1 + 72 + 90
    assert "vertex,t2:3,10,14,5" in lines


def test_console_script_byte_identical():
    cmd = [sys.executable, "-m", "resolvset.cli", "dims", *HC444, "--variant", "edge"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd + ["--threads", "2"], capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["value"] == 3

import io
import json
import subprocess
import sys

import pytest

from lapmax import cli, orientation
from lapmax.graph import read_edge_list
from lapmax.orientation import parse_orientation

P3 = "n 3\ne 1 2\ne 2 3\n"
P4 = "n 4\ne 1 2\ne 2 3\ne 3 4\n"
K3 = "n 3\ne 1 2\ne 1 3\ne 2 3\n"
K2 = "n 2\ne 1 2\n"
C5 = "n 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(*argv):
    out = io.StringIO()
    code = cli.main([str(a) for a in argv], out)
    return code, out.getvalue()


def test_analyze_p3(write):
    code, text = run("analyze", write(P3), "--seed", 7)
    assert code == 0
    r = json.loads(text)
    assert r["schema"] == 1 and r["seed"] == 7
    assert abs(r["lambda_max"] - 3.0) <= 1e-7
    assert r["eigenspace_dim"] == 1
    assert sorted(map(sorted, r["canonical_blocks"])) == [[1, 3], [2]]
    assert sorted(map(sorted, (f["vertices"] for f in r["sampled_fibers"]))) == [[1, 3], [2]]
    assert r["transitive"] is True
    assert r["tolerances"]["fiber_tol"] == 1e-6


def test_analyze_arcs_cross_fibers(write):
    r = json.loads(run("analyze", write(P4), "--seed", 3)[1])
    fiber = {v: k for k, f in enumerate(r["sampled_fibers"]) for v in f["vertices"]}
    assert all(fiber[t] < fiber[h] for t, h in r["induced_arcs"])


def test_analyze_k3(write):
    r = json.loads(run("analyze", write(K3))[1])
    assert r["eigenspace_dim"] == 2 and abs(r["lambda_max"] - 3.0) <= 1e-7


def test_analyze_single_vertex(write):
    code, text = run("analyze", write("n 1\n"))
    r = json.loads(text)
    assert code == 0 and r["n"] == 1 and r["induced_arcs"] == []


def test_analyze_is_deterministic(write):
    f = write(P4)
    assert run("analyze", f, "--seed", 5)[1] == run("analyze", f, "--seed", 5)[1]
    assert run("analyze", f, "--seed", 5)[1] != run("analyze", f, "--seed", 6)[1]


def test_floats_have_17_significant_digits():
    assert cli.dumps(0.1) == "0.10000000000000001\n"
    assert json.loads(cli.dumps({"x": 1 / 3}))["x"] == 1 / 3


def test_tolerance_flags_are_echoed(write):
    r = json.loads(run("analyze", write(P3), "--tol-fiber", "1e-5", "--tol-eig", "1e-7")[1])
    assert r["tolerances"]["fiber_tol"] == 1e-5 and r["tolerances"]["eig_group_tol"] == 1e-7


def test_exit_codes(write, capsys):
    assert run("analyze", write("n 3\ne 1 2\ne 1 2\n"))[0] == cli.EXIT_INPUT
    assert "line 3" in capsys.readouterr().err
    assert run("analyze", write("n 4\ne 1 2\ne 3 4\n"))[0] == cli.EXIT_DOMAIN
    assert run("analyze", write(P3), "--tol-fiber", "0")[0] == cli.EXIT_INPUT
    assert run("analyze", "/nonexistent/graph.txt")[0] == cli.EXIT_INPUT
    # A fiber tolerance wider than any eigenvector gap leaves every sample degenerate.
    assert run("analyze", write(P3), "--tol-fiber", "10")[0] == cli.EXIT_NUMERICAL


def test_orient_p4_frequencies(write, tmp_path):
    out_dir = tmp_path / "orients"
    code, text = run("orient", write(P4), "--trials", 10000, "--out-dir", out_dir)
    r = json.loads(text)
    assert code == 0 and r["distinct"] == 2
    assert all(abs(o["frequency"] - 0.5) <= 0.05 for o in r["orientations"])
    files = sorted(out_dir.iterdir())
    assert len(files) == 2
    g = read_edge_list(write(P4, "p4.txt"))
    assert all(orientation.is_transitive(g, parse_orientation(f.read_text(), g)) for f in files)


def test_orient_k3_and_k2(write):
    r = json.loads(run("orient", write(K3), "--trials", 10000)[1])
    assert r["distinct"] == 6 and all(o["count"] > 0 for o in r["orientations"])
    r = json.loads(run("orient", write(K2), "--trials", 100)[1])
    assert r["distinct"] == 2


def test_orient_reports_consistency_errors(write):
    code, text = run("orient", write(C5), "--trials", 3)
    r = json.loads(text)
    assert code == cli.EXIT_DOMAIN
    assert [e["error"] for e in r["errors"]] == ["ConsistencyError"] * 3


@pytest.mark.parametrize("method", ["spectral", "bruteforce", "cone"])
def test_recognize_methods_agree(write, method):
    code, text = run("recognize", write(C5), "--method", method)
    assert code == cli.EXIT_DOMAIN and json.loads(text)["is_comparability"] is False
    code, text = run("recognize", write(P4), "--method", method)
    r = json.loads(text)
    assert code == 0 and r["is_comparability"] and len(r["certificate"]) == 3
    assert run("recognize", write(K3), "--method", method)[0] == 0


def test_recognize_size_limit(write):
    k7 = "n 7\n" + "".join(f"e {i} {j}\n" for i in range(1, 8) for j in range(i + 1, 8))
    assert run("recognize", write(k7), "--method", "bruteforce")[0] == cli.EXIT_DOMAIN


def test_gen(write, tmp_path):
    code, text = run("gen", "--kind", "poset", "--n", 1)
    assert code == 0 and text == "n 1\n"
    a = run("gen", "--kind", "gnp", "--n", 5, "--density", 0.5, "--seed", 1)[1]
    b = run("gen", "--kind", "gnp", "--n", 5, "--density", 0.5, "--seed", 1)[1]
    assert a == b
    g = read_edge_list(write(a, "gnp.txt"))
    assert g.n == 5 and g.is_connected()
    out = tmp_path / "poset.txt"
    assert run("gen", "--kind", "poset", "--n", 7, "--density", 0.4, "--seed", 2, "-o", out)[0] == 0
    assert run("recognize", out, "--method", "bruteforce")[0] == 0
    assert run("gen", "--kind", "gnp", "--n", 5, "--density", 1.5)[0] == cli.EXIT_INPUT


def test_export_dot_with_report(write, tmp_path):
    g = write(P3)
    report = tmp_path / "r.json"
    report.write_text(run("analyze", g, "--seed", 7)[1])
    code, dot = run("export-dot", g, "--report", report)
    assert code == 0
    r = json.loads(report.read_text())
    for t, h in r["induced_arcs"]:
        assert f"{t} -> {h};" in dot
    assert dot.count("fillcolor") == 3
    assert len({line.split("fillcolor=")[1] for line in dot.splitlines() if "fillcolor" in line}) == 2
    assert "\\n" in dot


def test_export_dot_unoriented(write, tmp_path):
    code, dot = run("export-dot", write(P3))
    assert code == 0 and dot.count("dir=none") == 2
    empty = tmp_path / "o.txt"
    empty.write_text("n 2\nu 1 2\n")
    assert run("export-dot", write(K2), "--orientation", empty)[1].count("dir=none") == 1


def test_export_dot_mismatch(write, tmp_path):
    o = tmp_path / "o.txt"
    o.write_text("n 2\na 1 2\n")
    assert run("export-dot", write(P3), "--orientation", o)[0] == cli.EXIT_INPUT
    r = tmp_path / "r.json"
    r.write_text(run("analyze", write(P4, "p4.txt"))[1])
    assert run("export-dot", write(P3), "--report", r)[0] == cli.EXIT_INPUT


def test_verify_passes_small():
    code, text = run("verify", "--suite", "cone", "--count", 5)
    assert code == 0 and json.loads(text)["passed"]


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as info:
        run("verify", "--suite", "nonsense")
    assert info.value.code == cli.EXIT_INPUT


def test_verify_fails_on_corrupted_oracle(monkeypatch):
    monkeypatch.setattr(orientation, "is_transitive", lambda g, o: True)
    code, text = run("verify", "--suite", "all", "--count", 3)
    r = json.loads(text)
    assert code != 0 and not r["passed"]
    failed = [p for s in r["suites"] for p in s["properties"] if not p["passed"]]
    assert failed and "counterexample" in failed[0]


def test_module_entry_point(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(P3)
    proc = subprocess.run([sys.executable, "-m", "lapmax", "analyze", str(f)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["n"] == 3

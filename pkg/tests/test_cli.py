import json
import os
import subprocess
import sys

import pytest

from twisted_bruhat import checks
from twisted_bruhat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "--model", "flip:4", "enumerate")
    assert code == 0
    assert out.splitlines() == ["0\t1234\t2143", "1\t2143\t3412", "2\t3412\t"]


def test_enumerate_json_counts(capsys):
    code, out, _ = run(capsys, "--model", "flip:6", "enumerate", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 15
    code, out, _ = run(capsys, "--model", "diagonal:3", "enumerate")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "enumerate", "--model", "diagonal:3", "--format", "json")
    assert len(json.loads(out)) == 6


def test_enumerate_other_formats(capsys):
    _, out, _ = run(capsys, "--model", "flip:4", "enumerate", "--format", "poset")
    assert "# covers" in out
    _, out, _ = run(capsys, "--model", "flip:4", "enumerate", "--format", "dot")
    assert out.startswith("graph iota")


def test_graph(capsys):
    code, out, _ = run(capsys, "--model", "flip:4", "graph", "--w", "top")
    assert code == 0 and out.count("label=") == 3 and out.count(" -- ") == 3
    code, out, _ = run(capsys, "--model", "flip:4", "graph", "--w", "id")
    assert out.count("label=") == 1 and " -- " not in out
    code, out, _ = run(capsys, "--model", "flip:6", "graph", "--w", "s5s3s4s5s1s2s3s1",
                       "--format", "json")
    degrees = [v["degree"] for v in json.loads(out)["vertices"]]
    assert degrees.count(5) == 2 and set(degrees) == {4, 5}


def test_locus(capsys):
    code, out, _ = run(capsys, "--model", "flip:6", "locus", "--w", "426153")
    data = json.loads(out)
    assert code == 0 and data["singular_points"] == ["123456", "213465"]
    assert data["globally_smooth"] is False


def test_poly(capsys):
    code, out, _ = run(capsys, "--model", "flip:4", "poly", "--kind", "Q", "--u", "id", "--w", "top")
    assert code == 0 and out == "q^2 - q\n"
    _, out, _ = run(capsys, "poly", "--model", "diagonal:4", "--kind", "P",
                    "--u", "id", "--w", "3412", "--format", "sparse")
    assert out == "1 + 1*q\n"
    _, out, _ = run(capsys, "--model", "flip:4", "poly", "--kind", "R", "--u", "id",
                    "--w", "2143", "--format", "json")
    assert json.loads(out)["coefficients"] == {"0": -1, "1": 1}


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--suite", "qsum", "--model", "flip:6")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "check", "--suite", "all", "--model", "flip:4", "--format", "json")
    assert code == 0 and [r["suite"] for r in json.loads(out)] == list(checks.SUITES)


def test_check_failure_exit_code(capsys, monkeypatch):
    def broken(sess):
        res = checks.SuiteResult("qsum", sess.ctx.name)
        res.fail("synthetic counterexample")
        return res
    monkeypatch.setitem(checks._RUNNERS, "qsum", broken)
    code, out, _ = run(capsys, "check", "--suite", "qsum", "--model", "flip:4")
    assert code == 1 and "synthetic counterexample" in out


def test_error_exit_codes(capsys):
    assert run(capsys, "check", "--suite", "bogus")[0] == 2
    assert run(capsys, "--model", "flip:10", "enumerate")[0] == 2
    assert run(capsys, "--model", "flip:5", "enumerate")[0] == 2
    code, _, err = run(capsys, "--model", "flip:4", "graph", "--w", "s2")
    assert code == 3 and "not a twisted identity" in err
    assert run(capsys, "--model", "flip:4", "locus", "--w", "1324")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_capacity_override(capsys, monkeypatch):
    monkeypatch.setenv("TWISTED_MAX_N", "3")
    assert run(capsys, "--model", "flip:4", "enumerate")[0] == 2


def test_singular_example(capsys):
    code, out, _ = run(capsys, "singular-example")
    assert code == 0
    assert "singular points: 123456, 213465" in out and "matches" in out
    _, out, _ = run(capsys, "singular-example", "--format", "json")
    data = json.loads(out)
    assert data["rank_vector"] == [1, 2, 3, 3, 1] and data["word_matches"]


def test_output_file(capsys, tmp_path):
    target = tmp_path / "bg.dot"
    code, out, _ = run(capsys, "--model", "flip:4", "graph", "--w", "top", "-o", str(target))
    assert code == 0 and out == "" and target.read_text().startswith("graph BG")


def test_deterministic_across_processes():
    argv = [sys.executable, "-m", "twisted_bruhat", "--model", "flip:8", "enumerate", "--format", "json"]
    outs = [subprocess.run(argv, capture_output=True, check=True,
                           env={**os.environ, "PYTHONHASHSEED": seed}).stdout
            for seed in ("1", "123")]
    assert outs[0] == outs[1]


def test_exhaustive_check_all(capsys):
    for model in ("flip:6", "diagonal:4"):
        code, out, _ = run(capsys, "check", "--suite", "all", "--model", model,
                           "--check-level", "exhaustive")
        assert code == 0 and out.rstrip().endswith("all checks passed")

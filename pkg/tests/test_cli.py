import json
import subprocess
import sys
from importlib import resources

import pytest

from autolab import cli
from autolab import report as report_mod

CORPUS = resources.files("autolab.corpus")


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def corpus_path(name):
    return str(CORPUS.joinpath(f"{name}.aut"))


def test_analyze_json_example6(capsys):
    code, out, _ = run(["analyze", corpus_path("example6"), "--json"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["weakly_contracting"] is False
    assert d["weakly_contracting_witness"] == [1, 4] and d["weakly_contracting_gcd"] == 3


def test_analyze_text_example3(capsys):
    code, out, _ = run(["analyze", corpus_path("example3")], capsys)
    assert code == 0
    assert "C-reducible; invariant line non-rational; Q-irreducible (by eigenline criterion)" in out


def test_analyze_generated_cerny3_from_stdin(capsys, monkeypatch):
    _, text, _ = run(["gen", "cerny", "3"], capsys)
    code, out, _ = run(["analyze", "-", "--json"], capsys, stdin=text, monkeypatch=monkeypatch)
    d = json.loads(out)
    assert code == 0 and d["c_irreducible"] is True and d["algebra_dimension"] == 4


def test_analyze_flags(capsys):
    _, out, _ = run(["analyze", corpus_path("example8"), "--json", "--max-monoid", "1000", "--no-reset-bfs"], capsys)
    d = json.loads(out)
    assert d["monoid"]["size"] == 144 and d["shortest_reset"] == "skipped"


@pytest.mark.parametrize(
    "family, n, row",
    [("cerny", 4, "b: 1 2 3 1"), ("fold", 4, "b: 1 2 2 1"), ("tail", 5, "b: 1 2 3 1 1")],
)
def test_gen_writes_file(tmp_path, capsys, family, n, row):
    path = tmp_path / f"{family}{n}.aut"
    code, _, _ = run(["gen", family, str(n), "-o", str(path)], capsys)
    assert code == 0 and row in path.read_text().splitlines()
    first = path.read_bytes()
    run(["gen", family, str(n), "-o", str(path)], capsys)
    assert path.read_bytes() == first


def test_gen_bad_parameter(capsys):
    code, _, err = run(["gen", "fold", "5"], capsys)
    assert code == 2 and "even" in err


def test_search_zero_findings(capsys):
    code, out, _ = run(["search", "--pred", "simple-neq-weakly-contracting", "--n", "4", "--k", "2", "--mode", "exhaustive"], capsys)
    assert code == 0 and json.loads(out)["findings"] == 0


def test_search_findings_exit_one_and_persist(tmp_path, capsys):
    out_dir = tmp_path / "found"
    code, out, _ = run(
        ["search", "--pred", "reducible-no-eigenline", "--n", "4", "--k", "2", "--mode", "exhaustive", "--out", str(out_dir)],
        capsys,
    )
    assert code == 1
    assert "finding #2: 2 3 4 1 / 1 1 1 3" in out
    lines = (out_dir / "findings.jsonl").read_text().splitlines()
    assert len(lines) == 4
    assert json.loads(lines[0])["table"] == [[2, 3, 4, 1], [1, 1, 1, 3]]
    assert json.loads((out_dir / "summary.json").read_text())["findings"] == 4


def test_search_guard_is_input_error(capsys):
    code, _, err = run(["search", "--pred", "extremal-not-irreducible", "--n", "7", "--k", "2", "--mode", "exhaustive"], capsys)
    assert code == 2 and "guarded" in err
    code, _, err = run(["search", "--pred", "extremal-not-irreducible", "--n", "7", "--k", "2", "--mode", "random"], capsys)
    assert code == 2 and "seed" in err


def test_search_random_is_reproducible(capsys):
    argv = ["search", "--pred", "irreducible-no-rank2", "--n", "6", "--k", "2", "--mode", "random", "--count", "200", "--seed", "5"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_oracles(tmp_path, capsys):
    c4 = tmp_path / "c4.aut"
    run(["gen", "cerny", "4", "-o", str(c4)], capsys)
    assert run(["oracle", "reset-bfs", str(c4)], capsys)[1].strip() == "9"
    assert run(["oracle", "circulant-rank-elim", "1,-1,1"], capsys)[1].strip() == "1"
    assert run(["oracle", "monoid-size", corpus_path("example3")], capsys)[1].strip() == "6"
    out = run(["oracle", "congruence-closure", corpus_path("example6"), "1", "4"], capsys)[1]
    assert json.loads(out) == [[1, 4], [2, 5], [3, 6]]


def test_oracle_errors(capsys):
    assert run(["oracle", "nope"], capsys)[0] == 2
    assert run(["oracle", "circulant-rank-elim", "1,,2"], capsys)[0] == 2
    assert run(["oracle", "monoid-size"], capsys)[0] == 2


def test_export_dot(capsys):
    code, out, _ = run(["export-dot", corpus_path("example3")], capsys)
    assert code == 0
    assert 'q3 -> q1 [label="a,b"];' in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.aut"
    bad.write_text("states: 3\nletters: a\na: 1 2 7\n")
    code, _, err = run(["analyze", str(bad)], capsys)
    assert code == 2 and "line 3" in err and "target out of range" in err
    code, _, err = run(["analyze", str(tmp_path / "missing.aut")], capsys)
    assert code == 2


def test_invariant_violation_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(report_mod, "consistency_problems", lambda r: ["forced"])
    code, _, err = run(["analyze", corpus_path("example6")], capsys)
    assert code == 3 and "forced" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "autolab", "oracle", "circulant-rank-elim", "1,0,0"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3"

import json

import pytest

from autolab import report as report_mod
from autolab.automaton import Automaton
from autolab.families import cerny, fold, tail
from autolab.report import InconsistentReport, Report, analyze, consistency_problems, to_text

from conftest import permutation_automaton


def test_example6_report(ex6):
    d = analyze(ex6).data
    assert d["schema"] == 1
    assert d["shortest_reset"] == {"length": 2, "word": "bb"}
    assert d["weakly_contracting"] is False
    assert d["weakly_contracting_witness"] == [1, 4] and d["weakly_contracting_gcd"] == 3
    assert d["simple"] is False and d["simple_witness"] == [1, 4]
    assert d["c_irreducible"] is False
    assert d["consistency_problems"] == []
    pc = {tuple(e["pair"]): e["blocks"] for e in d["principal_congruences"]}
    assert pc[(1, 4)] == [[1, 4], [2, 5], [3, 6]]


def test_example3_text(ex3):
    text = to_text(analyze(ex3))
    assert "C-reducible; invariant line non-rational; Q-irreducible (by eigenline criterion)" in text


def test_q_irreducibility_states(ex4_fold, ex8):
    assert analyze(ex4_fold)["q_irreducible"] is False
    assert analyze(ex8)["q_irreducible"] is True
    plane = Automaton(4, ("a", "b"), ((1, 2, 3, 0), (0, 0, 0, 2)))
    d = analyze(plane).data
    assert d["q_irreducible"] == "unknown"
    assert any("dimension >= 2" in note for note in d["notes"])


def test_sufficiency_fields():
    assert analyze(cerny(5))["sufficiency"]["verdict"] == "RYSTOV"
    assert analyze(tail(6))["sufficiency"]["verdict"] == "CONTRACTING+ISOLATED-RANK-2"
    s = analyze(fold(6))["sufficiency"]
    assert s["verdict"] == "NONE" and s["consistent"]


def test_non_circular_report():
    aut = Automaton(3, ("a", "b"), ((0, 0, 1), (2, 2, 2)))
    d = analyze(aut).data
    assert d["circular"] is None
    assert d["weakly_contracting"] == "n/a" and d["contracting"] == "n/a"
    assert d["invariant_lines"] == "n/a" and d["rank_audit"] == "n/a"
    assert d["sufficiency"]["contracting_rank2"] == "n/a"


def test_non_synchronizing_is_labelled():
    d = analyze(permutation_automaton(3)).data
    assert d["synchronizing"] is False and d["shortest_reset"] is None
    assert d["representation"] == "deficiency"
    assert any("not synchronizing" in note for note in d["notes"])


def test_large_automaton_skips_reset_search():
    d = analyze(cerny(25), congruences=False).data
    assert d["shortest_reset"] == "skipped" and d["synchronizing"] is True
    assert d["rank_audit"] == "unknown" and d["rank2_isolated_witness"] == "unknown"
    # Rystov applies without any image-set search
    assert d["sufficiency"]["verdict"] == "RYSTOV" and d["c_irreducible"] is True
    assert "shortest reset word: skipped" in to_text(Report(d))


def test_reset_search_can_be_disabled(ex6):
    assert analyze(ex6, reset_search=False)["shortest_reset"] == "skipped"


def test_monoid_field(ex3, ex8):
    assert analyze(ex3, max_monoid=100)["monoid"] == {"size": 6, "truncated": False}
    assert analyze(ex8, max_monoid=10)["monoid"] == {"size": None, "truncated": True}
    assert "monoid" not in analyze(ex3).data


def test_json_is_deterministic(ex8):
    a = analyze(ex8).to_json()
    b = analyze(ex8).to_json()
    assert a == b and json.loads(a)["algebra_dimension"] == 49


def _base(**over):
    d = {
        "contracting": True,
        "contracting_reaches_distance_one": True,
        "weakly_contracting": True,
        "circular": {"letter": "a"},
        "simple": True,
        "synchronizing": True,
        "c_irreducible": True,
        "invariant_lines": [],
        "sufficiency": {"consistent": True, "verdict": "RYSTOV"},
        "rank_audit": {"violation": False},
    }
    d.update(over)
    return Report(d)


def test_consistency_problems_detects_each_implication():
    assert consistency_problems(_base()) == []
    assert consistency_problems(_base(weakly_contracting=False, simple=False, c_irreducible=False)) == [
        "contracting but not weakly contracting"
    ]
    assert "the two contracting criteria disagree" in consistency_problems(_base(contracting_reaches_distance_one=False))
    assert any("simple and weakly" in p for p in consistency_problems(_base(simple=False)))
    assert "irreducible but not simple" in consistency_problems(_base(simple=False, weakly_contracting=False, contracting=False, contracting_reaches_distance_one=False))
    assert any("invariant line" in p for p in consistency_problems(_base(invariant_lines=[{"k": 1}])))
    assert any("sufficient" in p for p in consistency_problems(_base(sufficiency={"consistent": False, "verdict": "RYSTOV"})))
    assert any("n/2" in p for p in consistency_problems(_base(rank_audit={"violation": True})))


def test_inconsistency_aborts(monkeypatch, ex6):
    monkeypatch.setattr(report_mod, "consistency_problems", lambda r: ["forced"])
    with pytest.raises(InconsistentReport):
        analyze(ex6)
    assert analyze(ex6, check=False)["consistency_problems"] == ["forced"]

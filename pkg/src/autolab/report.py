"""Full property reports, JSON and text rendering, consistency checks."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .automaton import (
    MAX_SUBSET_STATES,
    Automaton,
    enumerate_monoid,
    find_circular_structure,
    is_synchronizing,
    is_weakly_defective,
    letter_ranks,
    max_deficient_rank,
    rank2_isolated_witness,
    shortest_reset_word,
)
from .congruence import is_simple, principal_congruences
from .contraction import is_contracting, is_weakly_contracting
from .cyclotomic import invariant_lines
from .representation import Sufficiency, algebra_dimension, rank_bound_audit

SCHEMA = 1


class InconsistentReport(RuntimeError):
    """Two computed properties contradict a theorem; signals an implementation bug."""


def _pair(p) -> list[int] | None:
    return None if p is None else [p[0] + 1, p[1] + 1]


def _na(x):
    return "n/a" if x is None else x


@dataclass
class Report:
    data: dict

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=False) + "\n"

    def __getitem__(self, key):
        return self.data[key]


def analyze(
    aut: Automaton,
    reset_search: bool = True,
    congruences: bool = True,
    check: bool = True,
    max_monoid: int | None = None,
) -> Report:
    """Every property of ``aut`` in one JSON-ready report.

    With ``check`` the report is validated against the known implications and
    :class:`InconsistentReport` is raised on a contradiction; otherwise the
    problems are only listed under ``consistency_problems``.  ``max_monoid``
    adds the transition monoid size, enumerated up to that many elements.
    """
    cs = find_circular_structure(aut)
    n = aut.n
    sync = is_synchronizing(aut)
    notes = []

    reset = None
    if not reset_search or n > MAX_SUBSET_STATES:
        reset = "skipped"
        if n > MAX_SUBSET_STATES:
            notes.append("shortest reset search skipped: is_synchronizing only")
    elif sync:
        w = shortest_reset_word(aut)
        reset = {"length": len(w), "word": aut.format_word(w)}

    simple, simple_witness = is_simple(aut)
    wc = is_weakly_contracting(aut, cs)
    con = is_contracting(aut, cs)
    dim = algebra_dimension(aut)
    c_irr = dim == (n - 1) ** 2
    wd = is_weakly_defective(aut)

    lines = invariant_lines(aut, cs) if cs is not None else None
    big = n > MAX_SUBSET_STATES
    if big:
        notes.append("image-set searches skipped: rank audit and rank-2 witness unknown")
        audit = None
        witness = None
        contracting_rank2 = "unknown" if con.holds else False
    else:
        audit = rank_bound_audit(aut, cs, lines) if cs is not None else None
        witness = rank2_isolated_witness(aut)
        contracting_rank2 = bool(con.holds) and witness is not None
    suff = Sufficiency(
        rystov=simple and wd,
        contracting_rank2=None if cs is None else contracting_rank2,
        c_irreducible=c_irr,
        synchronizing=sync,
    )

    if c_irr:
        q_irr = True
    elif lines and any(line.rational for line in lines):
        q_irr = False
    elif lines and n - 1 == 2:
        q_irr = True
        notes.append("Q-irreducible by eigenline criterion: every proper subspace is a line and no invariant line is rational")
    else:
        q_irr = "unknown"
    if cs is not None and not c_irr and not lines and n > 2:
        notes.append("C-reducible with no invariant eigenline: every invariant subspace has dimension >= 2")
    if not sync:
        notes.append("not synchronizing: matrices describe the plain deficiency representation, no Rees quotient")

    data = {
        "schema": SCHEMA,
        "automaton": {"n": n, "k": aut.k, "letters": list(aut.letters)},
        "circular": None if cs is None else {
            "letter": aut.letters[cs.letter],
            "relabel": [r + 1 for r in cs.relabel],
        },
        "synchronizing": sync,
        "shortest_reset": reset,
        "letter_ranks": {name: r for name, r in zip(aut.letters, letter_ranks(aut))},
        "weakly_defective": wd,
        "simple": simple,
        "simple_witness": _pair(simple_witness),
        "weakly_contracting": _na(wc.holds),
        "weakly_contracting_witness": _pair(wc.witness),
        "weakly_contracting_gcd": wc.gcd,
        "contracting": _na(con.holds),
        "contracting_witness": _pair(con.witness),
        "contracting_reaches_distance_one": _na(con.reaches_distance_one),
        "representation": "synchronized" if sync else "deficiency",
        "algebra_dimension": dim,
        "c_irreducible": c_irr,
        "q_irreducible": q_irr,
        "invariant_lines": "n/a" if lines is None else [line.to_json() for line in lines],
        "rank_audit": "n/a" if cs is None else "unknown" if big else audit.to_json(),
        "max_deficient_rank": "unknown" if big else max_deficient_rank(aut),
        "rank2_isolated_witness": "unknown" if big else None if witness is None else {
            "word": aut.format_word(witness[0]),
            "state": witness[1] + 1,
        },
        "sufficiency": suff.to_json(),
        "notes": notes,
    }
    if max_monoid is not None:
        mon = enumerate_monoid(aut, max_monoid)
        data["monoid"] = {"size": None if mon.truncated else len(mon), "truncated": mon.truncated}
    if congruences:
        data["principal_congruences"] = [
            {"pair": [p + 1, q + 1], "blocks": part.to_json()}
            for (p, q), part in principal_congruences(aut).items()
        ]
    report = Report(data)
    data["consistency_problems"] = consistency_problems(report)
    if check and data["consistency_problems"]:
        raise InconsistentReport("; ".join(data["consistency_problems"]))
    return report


def consistency_problems(report: Report) -> list[str]:
    d = report.data
    problems = []
    if d["contracting"] is True and d["weakly_contracting"] is not True:
        problems.append("contracting but not weakly contracting")
    if d["contracting"] != "n/a" and d["contracting"] != d["contracting_reaches_distance_one"]:
        problems.append("the two contracting criteria disagree")
    if d["circular"] is not None and d["simple"] != d["weakly_contracting"]:
        problems.append("simple and weakly contracting differ on a circular automaton")
    if d["synchronizing"] and d["c_irreducible"] and not d["simple"]:
        problems.append("irreducible but not simple")
    if isinstance(d["invariant_lines"], list) and d["invariant_lines"] and d["c_irreducible"]:
        problems.append("invariant line found for an irreducible representation")
    if not d["sufficiency"]["consistent"]:
        problems.append(f"sufficient condition {d['sufficiency']['verdict']} holds but representation is reducible")
    if isinstance(d["rank_audit"], dict) and d["rank_audit"]["violation"]:
        problems.append("deficient word of rank above n/2 despite an invariant line")
    return problems


def to_text(report: Report) -> str:
    d = report.data
    a = d["automaton"]
    out = [f"automaton: n={a['n']} k={a['k']} letters={' '.join(a['letters'])}"]
    if d["circular"] is None:
        out.append("circular: no")
    else:
        out.append(f"circular: yes (circulating letter {d['circular']['letter']})")
    out.append(f"synchronizing: {_yn(d['synchronizing'])}")
    reset = d["shortest_reset"]
    if isinstance(reset, dict):
        out.append(f"shortest reset word: {reset['word']} (length {reset['length']})")
    elif reset == "skipped":
        out.append("shortest reset word: skipped")
    out.append(f"weakly defective: {_yn(d['weakly_defective'])}")
    simple = _yn(d["simple"])
    if d["simple_witness"]:
        simple += f" (pair q{d['simple_witness'][0]}, q{d['simple_witness'][1]} generates a proper congruence)"
    out.append(f"simple: {simple}")
    wc = d["weakly_contracting"]
    line = f"weakly contracting: {_yn(wc)}"
    if d["weakly_contracting_witness"]:
        p, q = d["weakly_contracting_witness"]
        line += f" (pair q{p}, q{q}, gcd {d['weakly_contracting_gcd']})"
    out.append(line)
    con = f"contracting: {_yn(d['contracting'])}"
    if d["contracting_witness"]:
        p, q = d["contracting_witness"]
        con += f" (pair q{p}, q{q} never gets closer)"
    out.append(con)
    out.append(f"algebra dimension: {d['algebra_dimension']} of {(a['n'] - 1) ** 2}")
    if "monoid" in d:
        mon = d["monoid"]
        out.append("transition monoid: truncated" if mon["truncated"] else f"transition monoid: {mon['size']} elements")
    lines = d["invariant_lines"]
    if d["c_irreducible"]:
        out.append("C-irreducible; Q-irreducible")
    else:
        parts = ["C-reducible"]
        if isinstance(lines, list) and lines:
            rational = [ln for ln in lines if ln["rational"]]
            parts.append("invariant line rational" if rational else "invariant line non-rational")
        if d["q_irreducible"] is True:
            parts.append("Q-irreducible (by eigenline criterion)")
        elif d["q_irreducible"] is False:
            parts.append("Q-reducible")
        else:
            parts.append("Q-irreducibility undecided")
        out.append("; ".join(parts))
    if isinstance(lines, list):
        for ln in lines:
            out.append(f"  line k={ln['k']}: {ln['vector']}{' (rational)' if ln['rational'] else ''}")
    audit = d["rank_audit"]
    if isinstance(audit, dict) and audit["applicable"]:
        out.append(f"rank audit: max deficient rank {audit['max_deficient_rank']} <= {audit['bound']}")
    w = d["rank2_isolated_witness"]
    if isinstance(w, dict):
        out.append(f"rank-2 word with isolated state: {w['word'] or '(empty)'} isolating q{w['state']}")
    out.append(f"sufficient condition: {d['sufficiency']['verdict']}")
    out.extend(f"note: {n}" for n in d["notes"])
    return "\n".join(out) + "\n"


def _yn(x) -> str:
    if x == "n/a":
        return "n/a"
    return "yes" if x else "no"

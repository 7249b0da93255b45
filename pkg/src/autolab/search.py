"""Exhaustive and seeded random searches over small automata.

Random tables come from SplitMix64 (64-bit state):

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)

Each table entry is ``output mod n``, drawn row by row (letter order), state by
state; in circular mode the first row is the fixed n-cycle and is not drawn.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .automaton import (
    Automaton,
    find_circular_structure,
    image_set_sizes,
    is_synchronizing,
    shortest_reset_length,
)
from .congruence import is_simple
from .contraction import is_weakly_contracting
from .cyclotomic import invariant_lines
from .report import analyze
from .representation import is_c_irreducible, is_c_irreducible_circular

MASK64 = (1 << 64) - 1

PREDICATES = (
    "extremal-not-irreducible",
    "irreducible-no-rank2",
    "reducible-no-eigenline",
    "simple-neq-weakly-contracting",
)
DEFAULT_SPACE = {
    "extremal-not-irreducible": "general",
    "irreducible-no-rank2": "general",
    "reducible-no-eigenline": "circular",
    "simple-neq-weakly-contracting": "circular",
}
EXHAUSTIVE_MAX_N = 5
EXHAUSTIVE_MAX_K = 2


class SearchGuardError(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n


def letter_names(k: int) -> tuple[str, ...]:
    if k <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:k])
    return tuple(f"x{i}" for i in range(k))


def _cycle(n: int) -> tuple[int, ...]:
    return tuple((i + 1) % n for i in range(n))


def _relabel_table(table, perm):
    n = len(perm)
    out = []
    for row in table:
        new = [0] * n
        for q, t in enumerate(row):
            new[perm[q]] = perm[t]
        out.append(tuple(new))
    return tuple(out)


def canonical_form(table, circular: bool):
    """Lexicographically least relabeled table.

    Circular mode relabels by rotations only (the relabelings that keep the
    first row equal to the standard n-cycle); general mode uses all permutations.
    """
    n = len(table[0])
    if circular:
        perms = (tuple((q + s) % n for q in range(n)) for s in range(n))
    else:
        perms = itertools.permutations(range(n))
    return min(_relabel_table(table, p) for p in perms)


def is_canonical(table, circular: bool) -> bool:
    return canonical_form(table, circular) == tuple(tuple(r) for r in table)


def exhaustive_tables(n: int, k: int, circular: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Canonical representatives in lexicographic order."""
    free_rows = k - 1 if circular else k
    rows = list(itertools.product(range(n), repeat=n))
    prefix = (_cycle(n),) if circular else ()
    for combo in itertools.product(rows, repeat=free_rows):
        table = prefix + combo
        if is_canonical(table, circular):
            yield table


def random_tables(n: int, k: int, circular: bool, count: int, seed: int):
    rng = SplitMix64(seed)
    for _ in range(count):
        rows = [_cycle(n)] if circular else []
        for _ in range(k - len(rows)):
            rows.append(tuple(rng.below(n) for _ in range(n)))
        yield tuple(rows)


def automaton_from_table(table) -> Automaton:
    return Automaton(len(table[0]), letter_names(len(table)), table)


def circular_synchronizing_automata(n: int, k: int = 2) -> Iterator[Automaton]:
    """All circular synchronizing automata up to rotation, first letter the n-cycle."""
    for table in exhaustive_tables(n, k, circular=True):
        aut = automaton_from_table(table)
        if is_synchronizing(aut):
            yield aut


# --- predicates ----------------------------------------------------------
# Each returns None when the automaton is outside the predicate's domain,
# False when the expectation holds and True for a finding.

def _c_irreducible(aut: Automaton) -> bool:
    if find_circular_structure(aut) is not None:
        return is_c_irreducible_circular(aut)
    return is_c_irreducible(aut)


def pred_extremal_not_irreducible(aut: Automaton, slack: int = 0):
    n = aut.n
    length = shortest_reset_length(aut)
    if length is None or length < (n - 1) ** 2 - slack:
        return None
    return not _c_irreducible(aut)


def pred_irreducible_no_rank2(aut: Automaton, slack: int = 0):
    if aut.n < 2 or not is_synchronizing(aut):
        return None
    if 2 in image_set_sizes(aut):
        return False
    return _c_irreducible(aut)


def pred_reducible_no_eigenline(aut: Automaton, slack: int = 0):
    cs = find_circular_structure(aut)
    if cs is None or aut.n < 3 or not is_synchronizing(aut):
        return None
    if is_c_irreducible_circular(aut, cs):
        return False
    return not invariant_lines(aut, cs)


def pred_simple_neq_weakly_contracting(aut: Automaton, slack: int = 0):
    cs = find_circular_structure(aut)
    if cs is None:
        return None
    return is_simple(aut)[0] != is_weakly_contracting(aut, cs).holds


PREDICATE_FUNCS: dict[str, Callable] = {
    "extremal-not-irreducible": pred_extremal_not_irreducible,
    "irreducible-no-rank2": pred_irreducible_no_rank2,
    "reducible-no-eigenline": pred_reducible_no_eigenline,
    "simple-neq-weakly-contracting": pred_simple_neq_weakly_contracting,
}


def confirm_finding(pred: str, aut: Automaton) -> bool:
    """Re-check a finding with the Burnside closure instead of the fast path."""
    if pred in ("extremal-not-irreducible", "reducible-no-eigenline"):
        return not is_c_irreducible(aut)
    if pred == "irreducible-no-rank2":
        return is_c_irreducible(aut)
    return True


@dataclass(frozen=True)
class SearchTask:
    pred: str
    n: int
    k: int
    mode: str
    count: int = 0
    seed: int | None = None
    slack: int = 0
    space: str | None = None
    force: bool = False

    def __post_init__(self):
        if self.pred not in PREDICATES:
            raise SearchGuardError(f"unknown predicate {self.pred!r}")
        if self.mode not in ("exhaustive", "random"):
            raise SearchGuardError("mode must be 'exhaustive' or 'random'")
        if self.n < 1 or self.k < 1:
            raise SearchGuardError("n and k must be positive")
        if self.space is not None and self.space not in ("circular", "general"):
            raise SearchGuardError("space must be 'circular' or 'general'")
        if self.mode == "exhaustive" and not self.force:
            if self.n > EXHAUSTIVE_MAX_N or self.k > EXHAUSTIVE_MAX_K:
                raise SearchGuardError(
                    f"exhaustive mode is guarded to n <= {EXHAUSTIVE_MAX_N}, k <= {EXHAUSTIVE_MAX_K}"
                )
        if self.mode == "random":
            if self.seed is None:
                raise SearchGuardError("random mode requires a seed")
            if self.count <= 0:
                raise SearchGuardError("random mode requires a positive count")
        if self.slack < 0:
            raise SearchGuardError("slack must be non-negative")

    @property
    def circular(self) -> bool:
        return (self.space or DEFAULT_SPACE[self.pred]) == "circular"


@dataclass
class Finding:
    index: int
    table: tuple
    report: dict

    def to_json(self) -> dict:
        return {"index": self.index, "table": [[t + 1 for t in row] for row in self.table], "report": self.report}


@dataclass
class SearchResult:
    task: SearchTask
    examined: int = 0
    in_domain: int = 0
    findings: list[Finding] = field(default_factory=list)
    unconfirmed: int = 0

    def summary(self) -> dict:
        t = self.task
        return {
            "schema": 1,
            "predicate": t.pred,
            "n": t.n,
            "k": t.k,
            "mode": t.mode,
            "space": "circular" if t.circular else "general",
            "count": t.count if t.mode == "random" else None,
            "seed": t.seed if t.mode == "random" else None,
            "slack": t.slack,
            "examined": self.examined,
            "in_domain": self.in_domain,
            "findings": len(self.findings),
            "unconfirmed_fast_path_hits": self.unconfirmed,
        }


def _evaluate(args):
    pred, table, slack = args
    aut = automaton_from_table(table)
    return PREDICATE_FUNCS[pred](aut, slack)


def run_search(task: SearchTask, on_finding: Callable[[Finding], None] | None = None, jobs: int = 1) -> SearchResult:
    if task.mode == "exhaustive":
        tables = exhaustive_tables(task.n, task.k, task.circular)
    else:
        tables = random_tables(task.n, task.k, task.circular, task.count, task.seed)
    result = SearchResult(task)
    work = ((task.pred, t, task.slack) for t in tables)
    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.Pool(jobs)
        outcomes = zip(pool.imap(_evaluate, work, chunksize=256), _tables_again(task))
    else:
        outcomes = ((_evaluate(w), w[1]) for w in work)
    try:
        for index, (outcome, table) in enumerate(outcomes):
            result.examined += 1
            if outcome is None:
                continue
            result.in_domain += 1
            if not outcome:
                continue
            aut = automaton_from_table(table)
            if not confirm_finding(task.pred, aut):
                result.unconfirmed += 1
                continue
            finding = Finding(index, table, analyze(aut, congruences=False, check=False).data)
            result.findings.append(finding)
            if on_finding:
                on_finding(finding)
    finally:
        if jobs > 1:
            pool.close()
            pool.join()
    return result


def _tables_again(task: SearchTask):
    if task.mode == "exhaustive":
        return exhaustive_tables(task.n, task.k, task.circular)
    return random_tables(task.n, task.k, task.circular, task.count, task.seed)

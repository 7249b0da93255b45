"""Slow, independent reference computations.

None of these share code with the main algorithms beyond the Automaton type;
they exist to mint and cross-check derived values.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .automaton import Automaton


def reset_bfs(aut: Automaton) -> int | None:
    """Shortest reset length by breadth-first search over image sets (plain frozensets)."""
    start = frozenset(range(aut.n))
    if len(start) == 1:
        return 0
    seen = {start}
    layer = [start]
    depth = 0
    while layer:
        depth += 1
        nxt = []
        for s in layer:
            for row in aut.delta:
                t = frozenset(row[q] for q in s)
                if len(t) == 1:
                    return depth
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        layer = nxt
    return None


def congruence_closure(aut: Automaton, p: int, q: int) -> list[list[int]]:
    """Least congruence containing (p, q), as sorted blocks, by closing a pair set to a fixpoint."""
    rel = {(i, i) for i in range(aut.n)} | {(p, q), (q, p)}
    changed = True
    while changed:
        changed = False
        new = set()
        for (x, y) in rel:
            for row in aut.delta:
                new.add((row[x], row[y]))
        for (x, y) in rel:
            for (y2, z) in rel:
                if y == y2:
                    new.add((x, z))
        new |= {(y, x) for (x, y) in new}
        if not new <= rel:
            rel |= new
            changed = True
    blocks = {}
    for x in range(aut.n):
        blocks.setdefault(min(y for (z, y) in rel if z == x), []).append(x)
    return sorted(sorted(b) for b in blocks.values())


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank by Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def circulant_rank_elim(v: Sequence) -> int:
    """Rank of the explicit n x n circulant built from ``(v, -sum v)``."""
    w = [Fraction(x) for x in v]
    w.append(-sum(w, Fraction(0)))
    n = len(w)
    return matrix_rank([[w[(i - j) % n] for j in range(n)] for i in range(n)])


def monoid_closure(aut: Automaton) -> set[tuple[int, ...]]:
    """Transition monoid as the fixpoint of pairwise composition."""
    elems = {tuple(range(aut.n))} | {tuple(row) for row in aut.delta}
    while True:
        new = {tuple(t[s[q]] for q in range(aut.n)) for s in elems for t in elems}
        if new <= elems:
            return elems
        elems |= new


def monoid_size(aut: Automaton) -> int:
    return len(monoid_closure(aut))


def parse_vector(text: str) -> list[Fraction]:
    """``"1,-1,1/2"`` -> Fractions."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"cannot parse vector {text!r}")
    return [Fraction(p) for p in parts]


ORACLES = {
    "reset-bfs": "shortest reset length by frozenset BFS (argument: .aut file)",
    "congruence-closure": "least congruence of a pair (arguments: .aut file, p, q; 1-based)",
    "circulant-rank-elim": "rank of the circulant of v by elimination (argument: \"v1,v2,...\")",
    "monoid-size": "transition monoid size by composition fixpoint (argument: .aut file)",
}

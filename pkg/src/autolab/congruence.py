"""Congruences of an automaton: principal congruences and simplicity."""
from __future__ import annotations

from collections import deque
from itertools import combinations

from .automaton import Automaton


class Partition:
    """Union-find over ``n`` states with path compression and union by rank."""

    def __init__(self, n: int):
        self.n = n
        self._parent = list(range(n))
        self._rank = [0] * n
        self.count = n

    def find(self, q: int) -> int:
        root = q
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[q] != root:
            self._parent[q], q = root, self._parent[q]
        return root

    def union(self, p: int, q: int) -> bool:
        rp, rq = self.find(p), self.find(q)
        if rp == rq:
            return False
        if self._rank[rp] < self._rank[rq]:
            rp, rq = rq, rp
        self._parent[rq] = rp
        if self._rank[rp] == self._rank[rq]:
            self._rank[rp] += 1
        self.count -= 1
        return True

    def same(self, p: int, q: int) -> bool:
        return self.find(p) == self.find(q)

    def blocks(self) -> list[list[int]]:
        """Sorted list of sorted blocks."""
        groups: dict[int, list[int]] = {}
        for q in range(self.n):
            groups.setdefault(self.find(q), []).append(q)
        return sorted(groups.values())

    def is_universal(self) -> bool:
        return self.count == 1

    def is_diagonal(self) -> bool:
        return self.count == self.n

    def to_json(self) -> list[list[int]]:
        return [[q + 1 for q in b] for b in self.blocks()]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and self.blocks() == other.blocks()

    def __repr__(self):
        return f"Partition({self.to_json()})"


def principal_congruence(aut: Automaton, p: int, q: int) -> Partition:
    """The least congruence identifying ``p`` and ``q``."""
    if p == q:
        raise ValueError("a principal congruence needs two distinct states")
    part = Partition(aut.n)
    part.union(p, q)
    work = deque([(p, q)])
    while work:
        s, t = work.popleft()
        for row in aut.delta:
            s1, t1 = row[s], row[t]
            if part.union(s1, t1):
                work.append((s1, t1))
    return part


def join(aut: Automaton, *parts: Partition) -> Partition:
    """The least congruence containing every given congruence."""
    out = Partition(aut.n)
    work = deque()
    for part in parts:
        for block in part.blocks():
            for q in block[1:]:
                if out.union(block[0], q):
                    work.append((block[0], q))
    while work:
        s, t = work.popleft()
        for row in aut.delta:
            if out.union(row[s], row[t]):
                work.append((row[s], row[t]))
    return out


def is_simple(aut: Automaton) -> tuple[bool, tuple[int, int] | None]:
    """Whether the only congruences are the diagonal and the universal relation.

    Returns ``(True, None)`` or ``(False, pair)`` with the first pair (in
    lexicographic order) generating a proper congruence.
    """
    for p, q in combinations(range(aut.n), 2):
        if not principal_congruence(aut, p, q).is_universal():
            return False, (p, q)
    return True, None


def principal_congruences(aut: Automaton) -> dict[tuple[int, int], Partition]:
    return {(p, q): principal_congruence(aut, p, q) for p, q in combinations(range(aut.n), 2)}


def is_congruence(aut: Automaton, part: Partition) -> bool:
    for block in part.blocks():
        for row in aut.delta:
            if len({part.find(row[q]) for q in block}) > 1:
                return False
    return True

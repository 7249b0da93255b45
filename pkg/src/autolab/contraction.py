"""Contracting and weakly contracting properties of circular automata.

Both are decided on the pair automaton: the orbit of an unordered pair ``{p, q}``
is the set of pairs ``{p.u, q.u}`` with ``p.u != q.u``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .automaton import Automaton, CircularStructure, find_circular_structure

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairOrbit:
    source: Pair
    reachable: frozenset[Pair]
    distances: dict[Pair, int]

    def distance_set(self) -> set[int]:
        return set(self.distances.values())


@dataclass(frozen=True)
class WeakContraction:
    holds: bool | None
    witness: Pair | None = None
    gcd: int | None = None

    @property
    def applicable(self) -> bool:
        return self.holds is not None


@dataclass(frozen=True)
class Contraction:
    holds: bool | None
    witness: Pair | None = None
    reaches_distance_one: bool | None = None

    @property
    def applicable(self) -> bool:
        return self.holds is not None


def _norm(p: int, q: int) -> Pair:
    return (p, q) if p < q else (q, p)


def pair_orbit(aut: Automaton, cs: CircularStructure, p: int, q: int) -> PairOrbit:
    if p == q:
        raise ValueError("pair_orbit needs two distinct states")
    start = _norm(p, q)
    seen = {start}
    queue = deque([start])
    while queue:
        s, t = queue.popleft()
        for row in aut.delta:
            s1, t1 = row[s], row[t]
            if s1 == t1:
                continue
            nxt = _norm(s1, t1)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return PairOrbit(start, frozenset(seen), {pr: cs.distance(*pr) for pr in seen})


def orbit_gcd(orbit: PairOrbit, n: int) -> int:
    """gcd over the orbit of gcd(d, n); 0 for an empty orbit."""
    g = 0
    for pr in sorted(orbit.reachable):
        g = gcd(g, gcd(orbit.distances[pr], n))
    return g


def is_weakly_contracting(aut: Automaton, cs: CircularStructure | None = None) -> WeakContraction:
    cs = cs or find_circular_structure(aut)
    if cs is None:
        return WeakContraction(None)
    for p, q in combinations(range(aut.n), 2):
        g = orbit_gcd(pair_orbit(aut, cs, p, q), aut.n)
        if g != 1:
            return WeakContraction(False, (p, q), g)
    return WeakContraction(True)


def is_contracting(aut: Automaton, cs: CircularStructure | None = None) -> Contraction:
    """Contracting property, decided by two criteria that must agree.

    Strict decrease: every pair at distance > 1 reaches a pair at a smaller
    nonzero distance.  Distance one: every such pair reaches a pair at distance 1.
    """
    cs = cs or find_circular_structure(aut)
    if cs is None:
        return Contraction(None)
    strict_witness = None
    unit_witness = None
    orbits: dict[Pair, PairOrbit] = {}
    for p, q in combinations(range(aut.n), 2):
        d = cs.distance(p, q)
        if d <= 1:
            continue
        orbit = orbits.setdefault((p, q), pair_orbit(aut, cs, p, q))
        ds = orbit.distance_set()
        if strict_witness is None and not any(1 <= e < d for e in ds):
            strict_witness = (p, q)
        if unit_witness is None and 1 not in ds:
            unit_witness = (p, q)
    return Contraction(strict_witness is None, strict_witness, unit_witness is None)

"""The synchronized representation on the augmentation subspace.

Vectors of the (n-1)-dimensional space are written on the basis ``q_i - q_1``
(i = 2..n).  Matrices act on column vectors: the coordinates of ``v . x`` are
``letter_matrix(x) @ v``.  With the right action this makes
``word_matrix(u v) == word_matrix(v) @ word_matrix(u)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .automaton import (
    Automaton,
    CircularStructure,
    canonical_circular,
    find_circular_structure,
    is_synchronizing,
    is_weakly_defective,
    max_deficient_rank,
    rank2_isolated_witness,
)
from .congruence import is_simple
from .contraction import is_contracting
from .cyclotomic import invariant_lines, root_sum_is_zero


def transformation_matrix(n: int, t: Sequence[int]) -> np.ndarray:
    """Matrix of the transformation ``q -> t[q]`` restricted to the augmentation subspace."""
    m = linalg.zeros(n - 1)
    base = t[0]
    for j in range(1, n):
        img = t[j]
        if img != 0:
            m[img - 1, j - 1] += 1
        if base != 0:
            m[base - 1, j - 1] -= 1
    return m


def letter_matrix(aut: Automaton, x: int) -> np.ndarray:
    return transformation_matrix(aut.n, aut.delta[x])


def word_matrix(aut: Automaton, u: Iterable[int]) -> np.ndarray:
    """Ordered product of letter matrices, the last letter leftmost."""
    m = linalg.identity(aut.n - 1)
    for x in u:
        m = letter_matrix(aut, x).dot(m)
    return m


@dataclass(frozen=True)
class AmbientVector:
    """Coordinates on the basis Q (``basis="Q"``, length n) or on ``q_i - q_1`` (``basis="diff"``, length n-1)."""

    coords: tuple
    basis: str

    def __post_init__(self):
        if self.basis not in ("Q", "diff"):
            raise ValueError("basis must be 'Q' or 'diff'")
        object.__setattr__(self, "coords", tuple(self.coords))


def convert_coordinates(v: AmbientVector) -> AmbientVector:
    if v.basis == "diff":
        return AmbientVector((-sum(v.coords),) + v.coords, "Q")
    if sum(v.coords) != 0:
        raise ValueError("vector does not lie in the augmentation subspace (coordinates must sum to 0)")
    return AmbientVector(v.coords[1:], "diff")


@dataclass
class AlgebraBasis:
    """A basis of the matrix algebra spanned by the images of all words."""

    dim: int
    matrices: list = field(default_factory=list)
    echelon: linalg.EchelonBasis | None = None

    def __len__(self):
        return len(self.matrices)

    @property
    def full(self) -> bool:
        return len(self.matrices) == self.dim * self.dim


def algebra_basis(aut: Automaton) -> AlgebraBasis:
    """Close {identity, letters} under left multiplication by letters.

    Insertion order is BFS by word length, letters in declaration order.
    """
    m = aut.n - 1
    basis = AlgebraBasis(m, [], linalg.EchelonBasis(m * m))
    if m == 0:
        return basis
    letters = [letter_matrix(aut, x) for x in range(aut.k)]
    queue = deque()

    def insert(mat):
        if basis.echelon.add(mat.reshape(-1).tolist()):
            basis.matrices.append(mat)
            queue.append(mat)

    insert(linalg.identity(m))
    for mat in letters:
        insert(mat)
    while queue and not basis.full:
        b = queue.popleft()
        for mat in letters:
            insert(mat.dot(b))
            if basis.full:
                break
    return basis


def algebra_dimension(aut: Automaton) -> int:
    return len(algebra_basis(aut))


def is_c_irreducible(aut: Automaton) -> bool:
    """Burnside: irreducible over C iff the generated algebra is all of M_{n-1}."""
    return algebra_basis(aut).full


def eigenbasis_coupling(aut: Automaton, cs: CircularStructure | None = None) -> dict[int, set[int]]:
    """For circular automata: ``k -> {j}`` where some letter sends eigenline k onto a component along eigenline j.

    In the eigenbasis of the circulating matrix the (j, k) entry of a letter
    ``x`` is ``(1/n) sum_i zeta^(j*(i.x) - k*i)`` in canonical coordinates.
    """
    canon = canonical_circular(aut, cs)
    n = canon.n
    edges: dict[int, set[int]] = {k: set() for k in range(1, n)}
    for row in canon.delta:
        for k in range(1, n):
            for j in range(1, n):
                if j == k or j in edges[k]:
                    continue
                counts = [0] * n
                for i, t in enumerate(row):
                    counts[(j * t - k * i) % n] += 1
                if not root_sum_is_zero(counts, n):
                    edges[k].add(j)
    return edges


def is_c_irreducible_circular(aut: Automaton, cs: CircularStructure | None = None) -> bool:
    """Irreducibility of a circular automaton via strong connectivity of the eigenline coupling graph.

    The circulating matrix has distinct eigenvalues, so invariant subspaces are
    spans of eigenvector sets closed under the coupling relation.  Independent of
    the Burnside closure and much faster.
    """
    n = aut.n
    if n <= 2:
        return True
    edges = eigenbasis_coupling(aut, cs)
    reverse: dict[int, set[int]] = {k: set() for k in edges}
    for k, js in edges.items():
        for j in js:
            reverse[j].add(k)
    for graph in (edges, reverse):
        seen = {1}
        stack = [1]
        while stack:
            k = stack.pop()
            for j in graph[k]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != n - 1:
            return False
    return True


@dataclass(frozen=True)
class RankAudit:
    applicable: bool
    max_deficient_rank: int | None
    bound: int
    violation: bool

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "max_deficient_rank": self.max_deficient_rank,
            "bound": self.bound,
            "violation": self.violation,
        }


def rank_bound_audit(aut: Automaton, cs: CircularStructure | None = None, lines=None) -> RankAudit:
    """Check that with an invariant line, every non-permutation word has rank <= n/2."""
    cs = cs or find_circular_structure(aut)
    if cs is None:
        raise ValueError("rank audit requires a circular automaton")
    if lines is None:
        lines = invariant_lines(aut, cs)
    max_def = max_deficient_rank(aut)
    applicable = bool(lines)
    violation = applicable and max_def is not None and max_def > aut.n // 2
    return RankAudit(applicable, max_def, aut.n // 2, violation)


def rystov_precondition(aut: Automaton) -> bool:
    return is_simple(aut)[0] and is_weakly_defective(aut)


RYSTOV = "RYSTOV"
CONTRACTING_RANK2 = "CONTRACTING+ISOLATED-RANK-2"
NO_CONDITION = "NONE"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Sufficiency:
    """Which sufficient condition for irreducibility applies.

    ``contracting_rank2`` is None for non-circular automata and ``"unknown"``
    when the rank-2 witness search was skipped.
    """

    rystov: bool
    contracting_rank2: bool | str | None
    c_irreducible: bool
    synchronizing: bool

    @property
    def verdict(self) -> str:
        if self.rystov:
            return RYSTOV
        if self.contracting_rank2 is True:
            return CONTRACTING_RANK2
        if self.contracting_rank2 == "unknown":
            return UNKNOWN
        return NO_CONDITION

    @property
    def consistent(self) -> bool:
        """Irreducible whenever a sufficient condition applies (synchronizing automata)."""
        if not self.synchronizing:
            return True
        return self.c_irreducible or not (self.rystov or self.contracting_rank2 is True)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "rystov": self.rystov,
            "contracting_rank2": "n/a" if self.contracting_rank2 is None else self.contracting_rank2,
            "consistent": self.consistent,
        }


def theorem_sufficiency_check(aut: Automaton, c_irreducible: bool | None = None) -> Sufficiency:
    cs = find_circular_structure(aut)
    contracting_rank2 = None
    if cs is not None:
        contracting_rank2 = bool(is_contracting(aut, cs).holds) and rank2_isolated_witness(aut) is not None
    if c_irreducible is None:
        c_irreducible = is_c_irreducible(aut)
    return Sufficiency(rystov_precondition(aut), contracting_rank2, c_irreducible, is_synchronizing(aut))

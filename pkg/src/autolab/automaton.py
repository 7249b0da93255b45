"""Complete deterministic automata, word actions and transition monoids.

States are 0-based internally and 1-based in ``.aut`` files.  The action is a
right action: ``q . u`` applies the letters of ``u`` left to right.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]
Transformation = tuple[int, ...]

MAX_SUBSET_STATES = 24


class ParseError(ValueError):
    """Malformed ``.aut`` input.  ``line`` is 1-based, or None for whole-file errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class StateSpaceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Automaton:
    """Complete DFA with ``delta[x][q] == q . x``."""

    n: int
    letters: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "delta", tuple(tuple(int(t) for t in row) for row in self.delta))
        if self.n < 1:
            raise ValueError("an automaton needs at least one state")
        if not self.letters:
            raise ValueError("an automaton needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letter names")
        if len(self.delta) != len(self.letters):
            raise ValueError("one transition row per letter is required")
        for name, row in zip(self.letters, self.delta):
            if len(row) != self.n:
                raise ValueError(f"row for {name!r} has {len(row)} entries, expected {self.n}")
            if any(not 0 <= t < self.n for t in row):
                raise ValueError(f"row for {name!r}: target out of range")

    @property
    def k(self) -> int:
        return len(self.letters)

    def letter_index(self, name: str) -> int:
        return self.letters.index(name)

    def word(self, text: str | Sequence[str]) -> Word:
        """Parse a word given as a string of letter names.

        Single-character alphabets accept ``"bab"``; otherwise names are separated
        by whitespace.  Exponents are allowed: ``"b a^2 b"``, ``"(ba)^2b"``.
        """
        if not isinstance(text, str):
            return tuple(self.letter_index(x) for x in text)
        return _parse_word(self, text)

    def format_word(self, u: Iterable[int]) -> str:
        names = [self.letters[x] for x in u]
        if all(len(x) == 1 for x in self.letters):
            return "".join(names)
        return " ".join(names)

    def relabel(self, perm: Sequence[int]) -> Automaton:
        """Rename state ``q`` to ``perm[q]``."""
        delta = []
        for row in self.delta:
            new = [0] * self.n
            for q, t in enumerate(row):
                new[perm[q]] = perm[t]
            delta.append(tuple(new))
        return Automaton(self.n, self.letters, tuple(delta))


_TOKEN = re.compile(r"\s*(\(|\)|\^\d+|[^\s()^]+)")


def _parse_word(aut: Automaton, text: str) -> Word:
    single = all(len(x) == 1 for x in aut.letters)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word {text!r}")
        tok = m.group(1)
        pos = m.end()
        if single and tok not in "()" and not tok.startswith("^"):
            tokens.extend(tok)
        else:
            tokens.append(tok)

    def parse_seq(i):
        out = []
        while i < len(tokens) and tokens[i] != ")":
            tok = tokens[i]
            if tok == "(":
                inner, i = parse_seq(i + 1)
                if i >= len(tokens):
                    raise ValueError(f"unbalanced parenthesis in {text!r}")
                i += 1
                item = inner
            elif tok.startswith("^"):
                raise ValueError(f"dangling exponent in {text!r}")
            else:
                if tok not in aut.letters:
                    raise ValueError(f"unknown letter {tok!r}")
                item = [aut.letters.index(tok)]
                i += 1
            if i < len(tokens) and tokens[i].startswith("^"):
                item = item * int(tokens[i][1:])
                i += 1
            out.extend(item)
        return out, i

    seq, i = parse_seq(0)
    if i != len(tokens):
        raise ValueError(f"unbalanced parenthesis in {text!r}")
    return tuple(seq)


def parse_automaton(text: str) -> Automaton:
    n = None
    letters = None
    rows: list[tuple[int, ...]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected '<key>: <values>'", lineno)
        key, _, value = line.partition(":")
        key = key.strip()
        parts = value.split()
        if n is None:
            if key != "states":
                raise ParseError("first declaration must be 'states: <n>'", lineno)
            if len(parts) != 1 or not parts[0].isdigit() or int(parts[0]) < 1:
                raise ParseError("'states:' needs one positive integer", lineno)
            n = int(parts[0])
        elif letters is None:
            if key != "letters":
                raise ParseError("second declaration must be 'letters: <name> ...'", lineno)
            if not parts:
                raise ParseError("at least one letter is required", lineno)
            if len(set(parts)) != len(parts):
                dup = next(x for x in parts if parts.count(x) > 1)
                raise ParseError(f"duplicate letter {dup!r}", lineno)
            letters = tuple(parts)
        else:
            if len(rows) >= len(letters):
                raise ParseError(f"unexpected line for {key!r}: all letters already defined", lineno)
            expected = letters[len(rows)]
            if key != expected:
                raise ParseError(f"expected row for letter {expected!r}, got {key!r}", lineno)
            if len(parts) != n:
                raise ParseError(f"wrong row length: {len(parts)} targets, expected {n}", lineno)
            targets = []
            for p in parts:
                if not re.fullmatch(r"[0-9]+", p):
                    raise ParseError(f"invalid target {p!r}", lineno)
                t = int(p)
                if not 1 <= t <= n:
                    raise ParseError(f"target out of range: {t} not in 1..{n}", lineno)
                targets.append(t - 1)
            rows.append(tuple(targets))
    if n is None:
        raise ParseError("missing 'states:' declaration", last_line or None)
    if letters is None:
        raise ParseError("missing 'letters:' declaration", last_line or None)
    if len(rows) != len(letters):
        missing = letters[len(rows)]
        raise ParseError(f"missing row for letter {missing!r}", last_line or None)
    return Automaton(n, letters, tuple(rows))


def format_automaton(aut: Automaton, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"states: {aut.n}")
    lines.append("letters: " + " ".join(aut.letters))
    for name, row in zip(aut.letters, aut.delta):
        lines.append(f"{name}: " + " ".join(str(t + 1) for t in row))
    return "\n".join(lines) + "\n"


def to_dot(aut: Automaton) -> str:
    labels: dict[tuple[int, int], list[str]] = {}
    for name, row in zip(aut.letters, aut.delta):
        for q, t in enumerate(row):
            labels.setdefault((q, t), []).append(name)
    lines = ["digraph automaton {"]
    lines.extend(f"  q{q + 1};" for q in range(aut.n))
    for (q, t), names in sorted(labels.items()):
        lines.append(f'  q{q + 1} -> q{t + 1} [label="{",".join(names)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- word action ---------------------------------------------------------

def act(aut: Automaton, q: int, u: Iterable[int]) -> int:
    for x in u:
        q = aut.delta[x][q]
    return q


def transformation(aut: Automaton, u: Iterable[int]) -> Transformation:
    t = list(range(aut.n))
    for x in u:
        row = aut.delta[x]
        t = [row[s] for s in t]
    return tuple(t)


def image_set(aut: Automaton, u: Iterable[int]) -> frozenset[int]:
    return frozenset(transformation(aut, u))


def rank(aut: Automaton, u: Iterable[int]) -> int:
    return len(image_set(aut, u))


def defect(aut: Automaton, u: Iterable[int]) -> int:
    """``n - rank(u)``, the number of states a word loses."""
    return aut.n - rank(aut, u)


def letter_ranks(aut: Automaton) -> tuple[int, ...]:
    return tuple(len(set(row)) for row in aut.delta)


def is_weakly_defective(aut: Automaton) -> bool:
    return all(r >= aut.n - 1 for r in letter_ranks(aut))


# --- synchronization -----------------------------------------------------

def is_synchronizing(aut: Automaton) -> bool:
    """Every pair of states can be merged (backward search on the pair graph)."""
    n = aut.n
    if n == 1:
        return True
    preimages = [[[] for _ in range(n)] for _ in aut.delta]
    for x, row in enumerate(aut.delta):
        for q, t in enumerate(row):
            preimages[x][t].append(q)
    good = [[p == q for q in range(n)] for p in range(n)]
    queue = deque((p, p) for p in range(n))
    count = 0
    while queue:
        p, q = queue.popleft()
        for pre in preimages:
            for p0 in pre[p]:
                for q0 in pre[q]:
                    if not good[p0][q0]:
                        good[p0][q0] = good[q0][p0] = True
                        count += 1
                        queue.append((p0, q0))
    return count == n * (n - 1) // 2


def _subset_search(aut: Automaton, cap: int | None = None, stop_at_singleton: bool = False):
    """BFS over image sets ``Q.u`` encoded as bitmasks.

    Returns the masks in discovery order and a parent map ``mask -> (prev, letter)``.
    Letters are tried in declaration order, so each witness is the
    lexicographically least among the shortest words.
    """
    if aut.n > MAX_SUBSET_STATES:
        raise StateSpaceTooLarge(f"state-space too large: n={aut.n} exceeds {MAX_SUBSET_STATES}")
    full = (1 << aut.n) - 1
    parent: dict[int, tuple[int | None, int | None]] = {full: (None, None)}
    depth = {full: 0}
    order = []
    queue = deque([full])
    while queue:
        s = queue.popleft()
        order.append(s)
        if stop_at_singleton and s & (s - 1) == 0:
            break
        d = depth[s]
        if cap is not None and d >= cap:
            continue
        for x, row in enumerate(aut.delta):
            t = 0
            m = s
            while m:
                low = m & -m
                t |= 1 << row[low.bit_length() - 1]
                m ^= low
            if t not in parent:
                parent[t] = (s, x)
                depth[t] = d + 1
                queue.append(t)
    return order, parent


def _unwind(parent, s) -> Word:
    word = []
    while parent[s][0] is not None:
        s, x = parent[s]
        word.append(x)
    return tuple(reversed(word))


def _mask_to_set(s: int) -> frozenset[int]:
    return frozenset(i for i in range(s.bit_length()) if s >> i & 1)


def shortest_reset_word(aut: Automaton, cap: int | None = None) -> Word | None:
    """A shortest reset word (lexicographically least among shortest), or None.

    ``cap`` bounds the explored length; None is also returned when no reset word
    of length <= cap exists.
    """
    order, parent = _subset_search(aut, cap, stop_at_singleton=True)
    last = order[-1]
    if last & (last - 1) == 0:
        return _unwind(parent, last)
    return None


def shortest_reset_length(aut: Automaton, cap: int | None = None) -> int | None:
    w = shortest_reset_word(aut, cap)
    return None if w is None else len(w)


def reachable_image_sets(aut: Automaton) -> dict[frozenset[int], Word]:
    """All image sets ``Q.u`` with a shortest witnessing word each."""
    order, parent = _subset_search(aut)
    return {_mask_to_set(s): _unwind(parent, s) for s in order}


def image_set_sizes(aut: Automaton) -> set[int]:
    order, _ = _subset_search(aut)
    return {bin(s).count("1") for s in order}


def max_deficient_rank(aut: Automaton) -> int | None:
    """Largest rank of a non-permutation word, None if every word permutes Q."""
    sizes = image_set_sizes(aut) - {aut.n}
    return max(sizes) if sizes else None


# --- circular structure --------------------------------------------------

@dataclass(frozen=True)
class CircularStructure:
    """A circulating letter and the relabeling that turns it into ``i -> i+1 mod n``.

    ``relabel[q]`` is the canonical index of state ``q``; state 0 stays 0.
    """

    letter: int
    relabel: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.relabel)

    def distance(self, p: int, q: int) -> int:
        """Relative distance ``min{k : p.a^k = q or q.a^k = p}`` for states of the original automaton."""
        n = self.n
        diff = (self.relabel[q] - self.relabel[p]) % n
        return min(diff, n - diff)


def find_circular_structure(aut: Automaton) -> CircularStructure | None:
    """The first letter acting as a single n-cycle, or None."""
    for x, row in enumerate(aut.delta):
        relabel = [-1] * aut.n
        q = 0
        for i in range(aut.n):
            if relabel[q] != -1:
                break
            relabel[q] = i
            q = row[q]
        else:
            if q == 0:
                return CircularStructure(x, tuple(relabel))
    return None


def relative_distance(cs: CircularStructure, p: int, q: int) -> int:
    return cs.distance(p, q)


def canonical_circular(aut: Automaton, cs: CircularStructure | None = None) -> Automaton:
    """The automaton relabeled so that its circulating letter is ``i -> i+1``."""
    cs = cs or find_circular_structure(aut)
    if cs is None:
        raise ValueError("automaton is not circular")
    return aut.relabel(cs.relabel)


# --- transition monoid ---------------------------------------------------

@dataclass(frozen=True)
class Monoid:
    """Transformations reachable from the identity, each with its shortest witness."""

    elements: dict[Transformation, Word]
    truncated: bool

    def __len__(self):
        return len(self.elements)

    def __contains__(self, t):
        return t in self.elements


def enumerate_monoid(aut: Automaton, cap: int = 1_000_000) -> Monoid:
    """BFS over compositions with letter actions.

    Witnesses are the lexicographically least shortest words.  When more than
    ``cap`` elements exist the result is marked truncated.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    ident = tuple(range(aut.n))
    found = {ident: ()}
    queue = deque([ident])
    rows = aut.delta
    while queue:
        t = queue.popleft()
        w = found[t]
        for x, row in enumerate(rows):
            s = tuple([row[q] for q in t])
            if s not in found:
                if len(found) >= cap:
                    return Monoid(found, True)
                found[s] = w + (x,)
                queue.append(s)
    return Monoid(found, False)


def rank2_isolated_witness(aut: Automaton) -> tuple[Word, int] | None:
    """A rank-2 word ``u`` and a state ``i`` whose image no other state shares.

    Searches, for each ``i``, the pairs (``i.u``, ``(Q - {i}).u``) by BFS; this is
    exact for every automaton within the subset-search guard, so the answer is
    never "unknown".  Among all candidates the shortest word wins, ties broken by
    word order then by ``i``.
    """
    if aut.n > MAX_SUBSET_STATES:
        raise StateSpaceTooLarge(f"state-space too large: n={aut.n} exceeds {MAX_SUBSET_STATES}")
    best: tuple[Word, int] | None = None
    full = (1 << aut.n) - 1
    for i in range(aut.n):
        start = (i, full ^ (1 << i))
        parent: dict = {start: None}
        depth = {start: 0}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            if best is not None and depth[node] > len(best[0]):
                break
            q, rest = node
            if rest and not rest >> q & 1 and rest & (rest - 1) == 0:
                word = []
                cur = node
                while parent[cur] is not None:
                    cur, x = parent[cur]
                    word.append(x)
                word = tuple(reversed(word))
                if best is None or (len(word), word) < (len(best[0]), best[0]):
                    best = (word, i)
                break
            for x, row in enumerate(aut.delta):
                t = 0
                m = rest
                while m:
                    low = m & -m
                    t |= 1 << row[low.bit_length() - 1]
                    m ^= low
                nxt = (row[q], t)
                if nxt not in parent:
                    parent[nxt] = (node, x)
                    depth[nxt] = depth[node] + 1
                    queue.append(nxt)
    return best

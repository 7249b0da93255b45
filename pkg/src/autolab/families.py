"""Generators for the named automaton families and the fixed example corpus.

All families are over ``{a, b}`` with ``a`` the circulating letter
``q_i -> q_{i+1 mod n}``; they differ in ``b``:

* ``cerny``: ``b`` fixes every state except ``q_n -> q_1``.
* ``fold`` (n even): ``b`` fixes ``q_1..q_{n/2}`` and sends ``q_i -> q_{n-i+1}`` above.
* ``tail``: ``b`` sends ``q_{n-1}`` and ``q_n`` to ``q_1`` and fixes the rest.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .automaton import Automaton, parse_automaton

FAMILIES = ("cerny", "fold", "tail")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family == "cerny" and self.n < 2:
            raise ValueError("cerny needs n >= 2")
        if self.family == "fold" and (self.n < 4 or self.n % 2):
            raise ValueError("fold needs an even n >= 4")
        if self.family == "tail" and self.n < 5:
            raise ValueError("tail needs n >= 5")


def _cycle(n: int) -> tuple[int, ...]:
    return tuple((i + 1) % n for i in range(n))


def cerny(n: int) -> Automaton:
    FamilySpec("cerny", n)
    b = tuple(range(n - 1)) + (0,)
    return Automaton(n, ("a", "b"), (_cycle(n), b))


def fold(n: int) -> Automaton:
    FamilySpec("fold", n)
    # 1-based: q_i.b = q_i for i <= n/2, q_{n-i+1} otherwise
    b = tuple(i if i < n // 2 else n - 1 - i for i in range(n))
    return Automaton(n, ("a", "b"), (_cycle(n), b))


def tail(n: int) -> Automaton:
    FamilySpec("tail", n)
    b = tuple(range(n - 2)) + (0, 0)
    return Automaton(n, ("a", "b"), (_cycle(n), b))


_GENERATORS = {"cerny": cerny, "fold": fold, "tail": tail}


def generate(spec: FamilySpec | str, n: int | None = None) -> Automaton:
    if isinstance(spec, str):
        spec = FamilySpec(spec, n)
    return _GENERATORS[spec.family](spec.n)


CORPUS_NAMES = ("example6", "example8", "example3", "example4-fold", "example4-irr")


def load_corpus_automaton(name: str) -> Automaton:
    if name not in CORPUS_NAMES:
        raise KeyError(f"unknown corpus entry {name!r}")
    text = resources.files("autolab.corpus").joinpath(f"{name}.aut").read_text(encoding="utf-8")
    return parse_automaton(text)


def manifest() -> dict:
    text = resources.files("autolab.corpus").joinpath("manifest.json").read_text(encoding="utf-8")
    return json.loads(text)


def corpus() -> list[tuple[str, Automaton, dict]]:
    """``(name, automaton, expected)`` for every corpus entry, in a fixed order."""
    expected = manifest()["entries"]
    return [(name, load_corpus_automaton(name), expected[name]["expected"]) for name in CORPUS_NAMES]

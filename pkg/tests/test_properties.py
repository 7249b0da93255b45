"""Property-based checks of the algebraic invariants."""
import itertools
from fractions import Fraction

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from autolab.automaton import (
    Automaton,
    enumerate_monoid,
    find_circular_structure,
    format_automaton,
    image_set,
    parse_automaton,
    rank,
    transformation,
)
from autolab.congruence import is_congruence, principal_congruence
from autolab.contraction import is_contracting, is_weakly_contracting, pair_orbit
from autolab.cyclotomic import CyclotomicNumber, circulant_rank, cyclotomic_polynomial, invariant_lines
from autolab.oracles import circulant_rank_elim, congruence_closure
from autolab.polynomial import Poly, gcd
from autolab.representation import (
    AmbientVector,
    convert_coordinates,
    is_c_irreducible,
    is_c_irreducible_circular,
    word_matrix,
)
from autolab.search import canonical_form

settings.register_profile("autolab", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("autolab")


@st.composite
def automata(draw, min_n=1, max_n=6, max_k=3, circular=False):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_k))
    rows = []
    if circular:
        rows.append(tuple((i + 1) % n for i in range(n)))
    while len(rows) < k:
        rows.append(tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))))
    return Automaton(n, tuple("abc"[:len(rows)]), tuple(rows))


def words(aut, max_size=8):
    return st.lists(st.integers(0, aut.k - 1), max_size=max_size).map(tuple)


# --- core automaton ---------------------------------------------------------------

@given(st.data())
def test_image_of_concatenation(data):
    aut = data.draw(automata())
    u, v = data.draw(words(aut)), data.draw(words(aut))
    qu = image_set(aut, u)
    assert image_set(aut, u + v) == frozenset(transformation(aut, v)[q] for q in qu)
    assert rank(aut, u + v) <= min(rank(aut, u), rank(aut, v))


@given(st.data())
def test_synchronizing_words_form_an_ideal(data):
    aut = data.draw(automata())
    u = data.draw(words(aut, 12))
    assume(rank(aut, u) == 1)
    x, y = data.draw(words(aut)), data.draw(words(aut))
    assert rank(aut, x + u + y) == 1


@given(automata(min_n=2, circular=True))
def test_relative_distance_properties(aut):
    cs = find_circular_structure(aut)
    for p, q in itertools.product(range(aut.n), repeat=2):
        d = cs.distance(p, q)
        assert d == cs.distance(q, p)
        assert (d == 0) == (p == q)
        if p != q:
            assert 1 <= d <= aut.n // 2
        # the definition: least k with p.a^k = q or q.a^k = p
        row = aut.delta[cs.letter]
        def steps(s, t):
            k = 0
            while s != t:
                s = row[s]
                k += 1
            return k
        assert d == min(steps(p, q), steps(q, p))


@given(automata(max_k=2))
def test_circular_structure_matches_naive(aut):
    cs = find_circular_structure(aut)
    def cycles(row):
        seen, q = set(), 0
        while q not in seen:
            seen.add(q)
            q = row[q]
        return len(seen) == aut.n and q == 0
    naive = next((x for x, row in enumerate(aut.delta) if cycles(row)), None)
    assert (cs.letter if cs else None) == naive


@given(automata(max_n=5))
def test_monoid_is_closed(aut):
    mon = enumerate_monoid(aut)
    for t in mon.elements:
        for row in aut.delta:
            assert tuple(row[q] for q in t) in mon


@given(automata())
def test_format_parse_round_trip(aut):
    assert parse_automaton(format_automaton(aut)) == aut


@given(automata(max_n=5, max_k=2), st.permutations(range(5)))
def test_canonical_form_is_relabel_invariant(aut, perm):
    perm = [p for p in perm if p < aut.n]
    relabeled = aut.relabel(perm)
    assert canonical_form(relabeled.delta, circular=False) == canonical_form(aut.delta, circular=False)


# --- congruences and contraction ----------------------------------------------------

@given(st.data())
def test_principal_congruence_least_and_compatible(data):
    aut = data.draw(automata(min_n=2))
    p, q = data.draw(st.lists(st.integers(0, aut.n - 1), min_size=2, max_size=2, unique=True))
    part = principal_congruence(aut, p, q)
    assert part.same(p, q) and is_congruence(aut, part)
    assert part.blocks() == congruence_closure(aut, p, q)


@given(st.data())
def test_pair_orbit_symmetric(data):
    aut = data.draw(automata(min_n=2, circular=True))
    cs = find_circular_structure(aut)
    p, q = data.draw(st.lists(st.integers(0, aut.n - 1), min_size=2, max_size=2, unique=True))
    assert pair_orbit(aut, cs, p, q) == pair_orbit(aut, cs, q, p)


@given(automata(min_n=2, max_n=7, max_k=3, circular=True))
def test_contraction_implications(aut):
    con = is_contracting(aut)
    assert con.holds == con.reaches_distance_one
    if con.holds:
        assert is_weakly_contracting(aut).holds


# --- representation ------------------------------------------------------------------

@given(st.data())
def test_word_matrix_homomorphism(data):
    aut = data.draw(automata(min_n=2, max_n=8))
    u, v = data.draw(words(aut)), data.draw(words(aut))
    assert (word_matrix(aut, u + v) == word_matrix(aut, v).dot(word_matrix(aut, u))).all()


@given(st.data())
def test_zero_matrix_iff_rank_one(data):
    aut = data.draw(automata(min_n=2, max_n=7))
    u = data.draw(words(aut, 14))
    assert (not np.any(word_matrix(aut, u))) == (rank(aut, u) == 1)


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=9), min_size=1, max_size=8))
def test_coordinate_round_trip(coords):
    v = AmbientVector(tuple(coords), "diff")
    q = convert_coordinates(v)
    assert sum(q.coords) == 0 and convert_coordinates(q) == v


@given(automata(min_n=2, max_n=7, max_k=2, circular=True))
def test_fast_path_agrees_with_burnside(aut):
    assert is_c_irreducible_circular(aut) == is_c_irreducible(aut)


@given(automata(min_n=3, max_n=7, max_k=2, circular=True))
def test_invariant_line_implies_reducible(aut):
    if invariant_lines(aut):
        assert not is_c_irreducible(aut)


# --- polynomials and cyclotomic numbers ------------------------------------------------

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(small_fracs, max_size=7).map(Poly)


@given(polys, polys)
def test_division_identity(a, b):
    assume(not b.is_zero())
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly()


@given(polys, polys)
def test_gcd_divides_and_is_monic(a, b):
    assume(not (a.is_zero() and b.is_zero()))
    g = gcd(a, b)
    assert g.lead() == 1
    assert g.divides(a) and g.divides(b)


@given(st.integers(2, 13), st.lists(small_fracs, min_size=1, max_size=12), st.lists(small_fracs, min_size=1, max_size=12))
def test_cyclotomic_field(n, p, q):
    x = CyclotomicNumber(n, p)
    y = CyclotomicNumber(n, q)
    assert x.residue.degree < cyclotomic_polynomial(n).degree
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-6
    if not x.is_zero():
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(st.integers(3, 10).flatmap(
    lambda n: st.lists(st.integers(-3, 3).map(Fraction), min_size=n - 1, max_size=n - 1)
))
def test_circulant_rank_gcd_vs_elimination(v):
    assert circulant_rank(v) == circulant_rank_elim(v)

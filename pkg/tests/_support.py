"""Shared helpers for the test modules."""
from autolab.automaton import (
    enumerate_monoid,
    find_circular_structure,
    is_synchronizing,
    is_weakly_defective,
    max_deficient_rank,
    rank2_isolated_witness,
    shortest_reset_word,
)
from autolab.congruence import is_simple
from autolab.contraction import is_contracting, is_weakly_contracting
from autolab.cyclotomic import invariant_lines
from autolab.representation import algebra_dimension


def _pair(p):
    return None if p is None else [p[0] + 1, p[1] + 1]


def observed(aut, keys):
    """The values of ``keys`` (manifest vocabulary) computed for ``aut``."""
    cs = find_circular_structure(aut)
    out = {}
    for key in keys:
        if key == "synchronizing":
            out[key] = is_synchronizing(aut)
        elif key == "reset_word":
            out[key] = aut.format_word(shortest_reset_word(aut))
        elif key == "simple":
            out[key] = is_simple(aut)[0]
        elif key == "simple_witness":
            out[key] = _pair(is_simple(aut)[1])
        elif key == "weakly_contracting":
            out[key] = is_weakly_contracting(aut, cs).holds
        elif key == "weakly_contracting_witness":
            out[key] = _pair(is_weakly_contracting(aut, cs).witness)
        elif key == "weakly_contracting_gcd":
            out[key] = is_weakly_contracting(aut, cs).gcd
        elif key == "contracting":
            out[key] = is_contracting(aut, cs).holds
        elif key == "weakly_defective":
            out[key] = is_weakly_defective(aut)
        elif key == "c_irreducible":
            out[key] = algebra_dimension(aut) == (aut.n - 1) ** 2
        elif key == "algebra_dimension":
            out[key] = algebra_dimension(aut)
        elif key == "invariant_lines":
            out[key] = [{"k": ln.k, "rational": ln.rational} for ln in invariant_lines(aut, cs)]
        elif key == "max_deficient_rank":
            out[key] = max_deficient_rank(aut)
        elif key == "monoid_size":
            out[key] = len(enumerate_monoid(aut))
        elif key == "rank2_isolated_witness":
            w = rank2_isolated_witness(aut)
            out[key] = None if w is None else {"word": aut.format_word(w[0]), "state": w[1] + 1}
        else:
            raise KeyError(key)
    return out

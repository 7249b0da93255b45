"""
Three parametric families
=========================

Cerny automata reach the (n-1)^2 bound, fold automata carry a rational
invariant line, and tail automata are irreducible without being weakly
defective.
"""

from autolab.automaton import is_weakly_defective, rank2_isolated_witness, shortest_reset_length
from autolab.congruence import is_simple
from autolab.cyclotomic import invariant_lines
from autolab.families import cerny, fold, tail
from autolab.representation import algebra_dimension

rows = [("cerny", n, cerny(n)) for n in range(3, 8)]
rows += [("fold", n, fold(n)) for n in (4, 6, 8)]
rows += [("tail", n, tail(n)) for n in range(5, 8)]

print(f"{'family':6} {'n':>2} {'reset':>5} {'simple':>6} {'wdef':>5} {'rank2':>5} {'dim':>4} lines")
for family, n, aut in rows:
    lines = [ln.k for ln in invariant_lines(aut)]
    print(
        f"{family:6} {n:2d} {shortest_reset_length(aut):5d} {str(is_simple(aut)[0]):>6} "
        f"{str(is_weakly_defective(aut)):>5} {str(rank2_isolated_witness(aut) is not None):>5} "
        f"{algebra_dimension(aut):4d} {lines}"
    )

# the algebra is full, (n-1)^2, exactly when there is no invariant subspace

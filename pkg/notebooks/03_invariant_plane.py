"""
Reducible without an invariant line
===================================

A 4-state circular automaton whose synchronized representation is
reducible although no eigenline of the cycle is invariant.  The invariant
subspace is the plane W spanned by q1 - q3 and q2 - q4.
"""

import numpy as np

from autolab.automaton import Automaton, is_synchronizing, shortest_reset_word
from autolab.cyclotomic import invariant_lines
from autolab.linalg import rank
from autolab.representation import algebra_dimension, is_c_irreducible, letter_matrix

aut = Automaton(4, ("a", "b"), ((1, 2, 3, 0), (0, 0, 0, 2)))
print("synchronizing:", is_synchronizing(aut), "reset word:", aut.format_word(shortest_reset_word(aut)))
print("C-irreducible:", is_c_irreducible(aut), "| algebra dimension:", algebra_dimension(aut), "of 9")
print("invariant eigenlines:", invariant_lines(aut))

# coordinates on the basis q_i - q_1
w1, w2 = np.array([0, -1, 0], dtype=object), np.array([1, 0, -1], dtype=object)
for x, name in enumerate(aut.letters):
    m = letter_matrix(aut, x)
    for w in (w1, w2):
        image = m.dot(w)
        print(f"{name} maps {list(w)} to {list(image)}; stays in W: {rank([w1, w2, image]) == 2}")

# on W, a rotates w1 -> w2 -> -w1 and b sends w2 to w1 and kills w1; their
# products span all of M_2, so W holds no invariant line of its own
restricted = {
    "a": np.array([[0, -1], [1, 0]], dtype=object),
    "b": np.array([[0, 1], [0, 0]], dtype=object),
}
for x, name in enumerate(aut.letters):
    m = letter_matrix(aut, x)
    r = restricted[name]
    assert (m.dot(w1) == r[0, 0] * w1 + r[1, 0] * w2).all()
    assert (m.dot(w2) == r[0, 1] * w1 + r[1, 1] * w2).all()
span = [np.eye(2, dtype=int).astype(object)] + list(restricted.values())
for _ in range(2):
    span += [r.dot(s) for r in restricted.values() for s in span]
print("dimension of the restricted algebra:", rank([s.reshape(-1).tolist() for s in span]), "of 4")

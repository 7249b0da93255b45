"""Cyclotomic fields, circulant ranks and the eigenstructure of the circulating letter.

Elements of Q(zeta_n) are residues modulo the n-th cyclotomic polynomial, so
equality is coefficient equality and zero tests are exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg
from .polynomial import Poly, ext_gcd, format_poly, gcd


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    if n < 1:
        raise ValueError("cyclotomic polynomials are indexed by n >= 1")
    p = Poly.x_pow_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            q, r = p.divmod(cyclotomic_polynomial(d))
            assert r.is_zero()
            p = q
    return p


@lru_cache(maxsize=None)
def _phi_int(n: int) -> tuple[int, ...]:
    return tuple(int(c) for c in cyclotomic_polynomial(n).coeffs)


def root_sum_is_zero(counts: Sequence[int], n: int) -> bool:
    """Whether ``sum_e counts[e] * zeta_n^e`` vanishes (integer counts, exponents mod n)."""
    phi = _phi_int(n)
    deg = len(phi) - 1
    rem = list(counts)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(deg + 1):
                rem[i - deg + j] -= c * phi[j]
    return not any(rem[:deg])


class CyclotomicNumber:
    """An element of Q(zeta_n), stored as a residue polynomial in ``z = zeta_n``."""

    __slots__ = ("order", "residue")

    def __init__(self, order: int, poly: Poly | Sequence = ()):
        if not isinstance(poly, Poly):
            poly = Poly(poly)
        self.order = order
        phi = cyclotomic_polynomial(order)
        self.residue = poly if poly.degree < phi.degree else poly % phi

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> CyclotomicNumber:
        return cls(order, Poly.monomial(power % order))

    @classmethod
    def rational(cls, order: int, value) -> CyclotomicNumber:
        return cls(order, Poly([value]))

    def _coerce(self, other) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError("cyclotomic numbers of different orders")
            return other
        return CyclotomicNumber.rational(self.order, other)

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def is_rational(self) -> bool:
        return self.residue.degree <= 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.residue == other.residue

    def __hash__(self):
        return hash((self.order, self.residue))

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicNumber(self.order, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, -self.residue)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, Poly(c * other for c in self.residue.coeffs))
        other = self._coerce(other)
        return CyclotomicNumber(self.order, self.residue * other.residue)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        g, s, _ = ext_gcd(self.residue, cyclotomic_polynomial(self.order))
        assert g == Poly([1])
        return CyclotomicNumber(self.order, s)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CyclotomicNumber.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi / self.order)
        return complex(sum(float(c) * z**i for i, c in enumerate(self.residue.coeffs)))

    def format(self) -> str:
        return format_poly(self.residue.coeffs, "z")

    def __str__(self):
        return f"{self.format()} (order {self.order})"

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, '{self.format()}')"


@dataclass(frozen=True)
class CyclotomicVector:
    order: int
    components: tuple[CyclotomicNumber, ...]

    def __post_init__(self):
        if any(c.order != self.order for c in self.components):
            raise ValueError("components must share the vector's order")

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def scale(self, c) -> CyclotomicVector:
        return CyclotomicVector(self.order, tuple(x * c for x in self.components))

    def apply(self, matrix) -> CyclotomicVector:
        """``matrix @ self`` for a rational matrix."""
        out = []
        for row in matrix:
            acc = CyclotomicNumber.rational(self.order, 0)
            for a, x in zip(row, self.components):
                if a:
                    acc = acc + x * a
            out.append(acc)
        return CyclotomicVector(self.order, tuple(out))

    def scalar_multiple_of(self, other: CyclotomicVector) -> CyclotomicNumber | None:
        """``c`` with ``self == c * other``, or None; ``other`` must be nonzero."""
        i = next(i for i, x in enumerate(other.components) if not x.is_zero())
        c = self.components[i] / other.components[i]
        if all(a == c * b for a, b in zip(self.components, other.components)):
            return c
        return None

    def normalized(self) -> CyclotomicVector:
        """Scaled so the first nonzero component is 1."""
        i = next(i for i, x in enumerate(self.components) if not x.is_zero())
        return self.scale(self.components[i].inverse())

    def is_rational_line(self) -> bool:
        """Whether the line spanned by this vector has an all-rational spanning vector."""
        return all(c.is_rational() for c in self.normalized().components)

    def format(self) -> str:
        return "[" + ", ".join(c.format() for c in self.components) + f"] (order {self.order})"

    __str__ = format


# --- circulant matrices --------------------------------------------------

def f_polynomial(v: Sequence) -> Poly:
    """``v_1 + v_2 x + ... + v_{n-1} x^{n-2} - (v_1 + ... + v_{n-1}) x^{n-1}``."""
    v = [Fraction(x) for x in v]
    return Poly(v + [-sum(v, Fraction(0))])


def circulant_vector(v: Sequence) -> list[Fraction]:
    v = [Fraction(x) for x in v]
    return v + [-sum(v, Fraction(0))]


def circulant_matrix(v: Sequence) -> np.ndarray:
    """The n x n circulant whose first column is ``(v, -sum(v))``."""
    w = circulant_vector(v)
    n = len(w)
    return linalg.exact_matrix([[w[(i - j) % n] for j in range(n)] for i in range(n)])


def circulant_rank(v: Sequence) -> int:
    """``n - deg gcd(f_v, x^n - 1)``; the zero vector has rank 0."""
    n = len(v) + 1
    f = f_polynomial(v)
    if f.is_zero():
        return 0
    return n - gcd(f, Poly.x_pow_minus_one(n)).degree


# --- the circulating letter ----------------------------------------------

def circulating_matrix(n: int) -> np.ndarray:
    """Matrix of ``i -> i+1 mod n`` on the basis ``q_i - q_1``: first row -1, identity below."""
    if n < 2:
        raise ValueError("the circulating matrix needs n >= 2")
    m = linalg.zeros(n - 1)
    m[0, :] = -1
    for i in range(1, n - 1):
        m[i, i - 1] = 1
    return m


def circulating_char_poly(n: int) -> Poly:
    """``det(A - t I)`` for the circulating matrix, interpolated from n exact evaluations."""
    a = circulating_matrix(n)
    m = n - 1
    points = list(range(n))
    values = []
    for t in points:
        b = a.copy()
        for i in range(m):
            b[i, i] = b[i, i] - t
        values.append(linalg.det(b.tolist()))
    result = Poly()
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = Poly([1])
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def eigenvector(n: int, k: int) -> tuple[CyclotomicNumber, CyclotomicVector]:
    """``(zeta_n^k, v_k)`` with ``v_k = (zeta^{k(n-1)}, zeta^{k(n-2)}, ..., zeta^k)``."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"eigenvector index k={k} out of range 1..{n - 1}")
    lam = CyclotomicNumber.zeta(n, k)
    comps = tuple(CyclotomicNumber.zeta(n, k * (n - 1 - i)) for i in range(n - 1))
    return lam, CyclotomicVector(n, comps)


@dataclass(frozen=True)
class InvariantLine:
    k: int
    eigenvalue: CyclotomicNumber
    vector: CyclotomicVector
    rational: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "eigenvalue": str(self.eigenvalue),
            "vector": self.vector.format(),
            "rational": self.rational,
        }


def invariant_lines(aut, cs=None) -> list[InvariantLine]:
    """Eigenlines of the circulating matrix left invariant by every letter.

    Coordinates are those of the canonical relabeling.  Every one-dimensional
    invariant subspace is one of these lines.  For n <= 2 the eigenline is all
    of the representation space, so no proper line exists and the list is empty.
    """
    from .automaton import canonical_circular
    from .representation import letter_matrix

    canon = canonical_circular(aut, cs)
    n = canon.n
    if n <= 2:
        return []
    mats = [letter_matrix(canon, x) for x in range(canon.k)]
    lines = []
    for k in range(1, n):
        lam, v = eigenvector(n, k)
        if all(_maps_into_line(m, v) for m in mats):
            lines.append(InvariantLine(k, lam, v, v.is_rational_line()))
    return lines


def _maps_into_line(matrix, v: CyclotomicVector) -> bool:
    image = v.apply(matrix)
    return image.is_zero() or image.scalar_multiple_of(v) is not None

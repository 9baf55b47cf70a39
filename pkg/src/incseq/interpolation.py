"""Indicator (Kronecker-delta) polynomials on embedded nondecreasing
sequences, and interpolation of arbitrary functions on them.

The expanded form comes from one shared exact inversion of the
evaluation matrix over the standard monomials of degree <= q-1; for grid
embeddings a factored form (product of q-1 linear polynomials) is built
independently and the two must agree.
"""

from functools import lru_cache

from .combinatorics import Embedding, increasing_sequences
from .field import FieldElement
from .linalg import invert
from .poly import DEGLEX, Polynomial, mono_eval, monomials_up_to_degree, sort_monomials


class FactoredForm:
    """scalar * product of linear polynomials (empty product = 1)."""

    __slots__ = ("n", "scalar", "factors")

    def __init__(self, n: int, scalar: FieldElement, factors):
        self.n = n
        self.scalar = scalar
        self.factors = tuple(factors)

    def expand(self) -> Polynomial:
        result = Polynomial.one(self.scalar.field, self.n)
        for f in self.factors:
            result = result * f
        return result.scale(self.scalar)

    def __repr__(self):
        return f"FactoredForm({self.scalar}, {len(self.factors)} factors)"


class IndicatorPolynomial:
    """The unique degree-(q-1) polynomial that is 1 at one embedded
    sequence and 0 at every other."""

    __slots__ = ("seq", "point", "expanded", "factored")

    def __init__(self, seq, point, expanded: Polynomial, factored: FactoredForm | None):
        self.seq = seq
        self.point = point
        self.expanded = expanded
        self.factored = factored


class Interpolator:
    """Shared exact solve context for one (n, q, embedding)."""

    def __init__(self, n: int, q: int, embedding: Embedding):
        if embedding.q != q:
            raise ValueError(f"embedding covers [{embedding.q}], expected [{q}]")
        self.n = n
        self.q = q
        self.embedding = embedding
        self.field = embedding.field
        self.sequences = increasing_sequences(n, q)
        self.index = {s: i for i, s in enumerate(self.sequences)}
        self.points = [embedding.apply(s) for s in self.sequences]
        self.columns = sort_monomials(monomials_up_to_degree(n, q - 1), DEGLEX)
        self.matrix = [[mono_eval(m, p) for m in self.columns] for p in self.points]
        self.inverse = invert(self.matrix, self.field)

    def _poly_from_coeffs(self, coeffs) -> Polynomial:
        return Polynomial(self.field, self.n, dict(zip(self.columns, coeffs)))

    def indicator(self, seq) -> IndicatorPolynomial:
        seq = tuple(seq)
        idx = self.index.get(seq)
        if idx is None:
            raise ValueError(f"{seq} is not a nondecreasing sequence over [1, {self.q}]")
        expanded = self._poly_from_coeffs(row[idx] for row in self.inverse)
        factored = self._factored(seq) if self.embedding.is_grid else None
        return IndicatorPolynomial(seq, self.points[idx], expanded, factored)

    def _factored(self, seq) -> FactoredForm:
        """Grid recipe: (x_1 - i(t)) below the first entry, (x_n - i(t))
        above the last, and (x_j - x_{j-1} - c) for c = 0..gap-1 at each
        positive gap; scaled by the inverse of the product's value at the
        distinguished point."""
        field, n, q = self.field, self.n, self.q
        var = lambda j: Polynomial.variable(field, n, j)
        const = lambda v: Polynomial.constant(field, n, v)
        factors = []
        for t in range(1, seq[0]):
            factors.append(var(0) - const(self.embedding.images[t - 1]))
        for t in range(seq[-1] + 1, q + 1):
            factors.append(var(n - 1) - const(self.embedding.images[t - 1]))
        for j in range(1, n):
            gap = seq[j] - seq[j - 1]
            for c in range(gap):
                factors.append(var(j) - var(j - 1) - const(field.from_int(c)))
        point = self.embedding.apply(seq)
        value = field.one
        for f in factors:
            value = value * f.evaluate(point)
        if len(factors) != q - 1:
            raise RuntimeError("grid recipe must produce exactly q-1 factors")  # unreachable
        return FactoredForm(n, value.inverse(), factors)

    def interpolate(self, values) -> Polynomial:
        """The unique standard-monomial polynomial matching a full value
        table on the embedded sequences."""
        table = {tuple(s): v for s, v in values.items()}
        vec = []
        for s in self.sequences:
            if s not in table:
                raise ValueError(f"value table is missing sequence {s}")
            vec.append(self.field.element(table[s]))
        coeffs = [sum((row[i] * vec[i] for i in range(len(vec))), self.field.zero)
                  for row in self.inverse]
        return self._poly_from_coeffs(coeffs)


@lru_cache(maxsize=32)
def get_interpolator(n: int, q: int, embedding: Embedding) -> Interpolator:
    """Shared per-(n, q, embedding) context; the exact matrix inversion
    is done once and reused for every indicator and interpolation."""
    return Interpolator(n, q, embedding)


def indicator(seq, n: int, q: int, embedding: Embedding) -> IndicatorPolynomial:
    return get_interpolator(n, q, embedding).indicator(seq)


def interpolate(values, n: int, q: int, embedding: Embedding) -> Polynomial:
    return get_interpolator(n, q, embedding).interpolate(values)

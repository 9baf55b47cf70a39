"""Closed-form Groebner bases and standard monomials for vanishing
ideals of embedded (strictly) increasing sequences and their downsets,
plus Hilbert values and nonvanishing-witness search.

Every basis element is a product of linear factors (x_j - t) attached to
an interval decomposition of [q]; elements are stored factored and
expanded on demand.
"""

import math
from functools import cached_property

from .combinatorics import (
    Decomposition,
    Embedding,
    decompositions,
    difference_vector,
    embedded_points,
    increasing_sequences,
    is_downset,
)
from .poly import DEGLEX, Polynomial, TermOrder, mono_divides, monomials_up_to_degree


def _decomposition_factors(dec: Decomposition, emb: Embedding):
    """Linear factors (variable position, root) of the block polynomial."""
    factors = []
    for j, part in enumerate(dec.parts):
        for t in part:
            factors.append((j, emb.images[t - 1]))
    return tuple(factors)


def _interval_system_factors(g, emb: Embedding):
    """Factors for the blocks attached to a sequence g in the downset
    construction: block 1 is {1..g1-1}, block j is {g_{j-1}..g_j-1}."""
    factors = []
    for t in range(1, g[0]):
        factors.append((0, emb.images[t - 1]))
    for j in range(1, len(g)):
        for t in range(g[j - 1], g[j]):
            factors.append((j, emb.images[t - 1]))
    return tuple(factors)


def expand_factors(field, n, factors) -> Polynomial:
    """Expand a product of linear factors (x_j - t); empty product is 1."""
    result = Polynomial.one(field, n)
    for j, t in factors:
        result = result * (Polynomial.variable(field, n, j) - Polynomial.constant(field, n, t))
    return result


class GroebnerBasis:
    """A constructed basis with its standard monomial set.

    kind is one of full / strict / downset; the polynomials generate the
    vanishing ideal of the corresponding embedded point set.
    """

    __slots__ = ("kind", "n", "q", "embedding", "order", "factored", "standard_monomials",
                 "downset", "__dict__")

    def __init__(self, kind, n, q, embedding, order, factored, standard_monomials, downset=None):
        self.kind = kind
        self.n = n
        self.q = q
        self.embedding = embedding
        self.order = order
        self.factored = tuple(factored)
        self.standard_monomials = frozenset(standard_monomials)
        self.downset = frozenset(downset) if downset is not None else None

    @cached_property
    def polynomials(self) -> tuple[Polynomial, ...]:
        field = self.embedding.field
        return tuple(expand_factors(field, self.n, fs) for fs in self.factored)

    @cached_property
    def points(self) -> tuple:
        """The embedded point set the basis polynomials vanish on."""
        if self.kind == "full":
            return tuple(embedded_points(self.n, self.q, self.embedding))
        if self.kind == "strict":
            return tuple(embedded_points(self.n, self.q, self.embedding, strict=True))
        return tuple(self.embedding.apply(s) for s in sorted(self.downset))

    @property
    def leading_monomials(self) -> tuple:
        return tuple(p.leading_monomial(self.order) for p in self.polynomials)

    def is_reduced(self) -> bool:
        return is_reduced_basis(self.polynomials, self.order)

    def sorted_standard_monomials(self) -> list:
        return sorted(self.standard_monomials, key=self.order.key)


def is_reduced_basis(polys, order: TermOrder) -> bool:
    """Monic, and no monomial of one member divisible by another's
    leading monomial."""
    lms = [p.leading_monomial(order) for p in polys]
    for p, lm in zip(polys, lms):
        if p.terms[lm] != p.field.one:
            return False
        for other in lms:
            if other == lm:
                continue
            if any(mono_divides(other, m) for m in p.terms):
                return False
    return True


def full_basis(n: int, q: int, embedding: Embedding, order: TermOrder = DEGLEX) -> GroebnerBasis:
    """Basis of the ideal of all embedded nondecreasing sequences: one
    block polynomial per good decomposition; standard monomials are
    everything of degree <= q-1."""
    _check_embedding(n, q, embedding)
    factored = [_decomposition_factors(d, embedding) for d in decompositions(n, q, "good")]
    sm = monomials_up_to_degree(n, q - 1)
    return GroebnerBasis("full", n, q, embedding, order, factored, sm)


def strict_basis(n: int, q: int, embedding: Embedding, order: TermOrder = DEGLEX) -> GroebnerBasis:
    """Basis for strictly increasing sequences: one block polynomial per
    super decomposition; standard monomials have degree <= q-n."""
    if q < n:
        raise ValueError(f"strictly increasing sequences need q >= n, got n={n}, q={q}")
    _check_embedding(n, q, embedding)
    factored = [_decomposition_factors(d, embedding) for d in decompositions(n, q, "super")]
    sm = monomials_up_to_degree(n, q - n)
    return GroebnerBasis("strict", n, q, embedding, order, factored, sm)


def downset_basis(n: int, q: int, points, embedding: Embedding, order: TermOrder = DEGLEX,
                  minimize: bool = False) -> GroebnerBasis:
    """Basis for a nonempty downset F of nondecreasing sequences.

    The full-ideal block polynomials are kept verbatim and one interval
    polynomial is added per sequence outside F; standard monomials are
    the difference vectors of F.  With minimize=True, members whose
    leading monomial is divisible by another member's are dropped (the
    construction is not inter-reduced by default).
    """
    downset = frozenset(tuple(p) for p in points)
    if not downset:
        raise ValueError("downset must be nonempty")
    if not is_downset(downset, n, q):
        raise ValueError("point set is not a downset")
    _check_embedding(n, q, embedding)
    factored = [_decomposition_factors(d, embedding) for d in decompositions(n, q, "good")]
    for g in increasing_sequences(n, q):
        if g not in downset:
            factored.append(_interval_system_factors(g, embedding))
    sm = {difference_vector(g) for g in downset}
    if minimize:
        lms = [_factored_leading_monomial(fs, n) for fs in factored]
        factored = [fs for fs, lm in zip(factored, lms)
                    if not any(other != lm and mono_divides(other, lm) for other in lms)]
    return GroebnerBasis("downset", n, q, embedding, order, factored, sm, downset=downset)


def _factored_leading_monomial(factors, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for j, _ in factors:
        counts[j] += 1
    return tuple(counts)


def _check_embedding(n: int, q: int, embedding: Embedding):
    if embedding.q != q:
        raise ValueError(f"embedding covers [{embedding.q}], expected [{q}]")


class HilbertValue:
    """Dimension of the degree-<= s polynomial functions on the point set.

    closed_form is False when s lies beyond the range where the binomial
    formula applies; value is then the saturating standard-monomial count.
    """

    __slots__ = ("value", "closed_form")

    def __init__(self, value: int, closed_form: bool):
        self.value = value
        self.closed_form = closed_form

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, HilbertValue):
            return (self.value, self.closed_form) == (other.value, other.closed_form)
        return NotImplemented

    def __repr__(self):
        return f"HilbertValue({self.value}, closed_form={self.closed_form})"


def hilbert_value(kind: str, n: int, q: int, s: int) -> HilbertValue:
    """binom(n+s, s) within range; the saturated deglex standard-monomial
    count (flagged) beyond it."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if kind == "full":
        smax = q - 1
    elif kind == "strict":
        if q < n:
            raise ValueError(f"strict kind needs q >= n, got n={n}, q={q}")
        smax = q - n
    else:
        raise ValueError(f"unknown kind {kind!r}")
    eff = min(s, smax)
    return HilbertValue(math.comb(n + eff, eff), s <= smax)


def nonvanishing_point(f: Polynomial, kind: str, n: int, q: int, embedding: Embedding):
    """A point of the embedded sequence set where f does not vanish
    (first in enumeration order), or None when f is the zero polynomial.

    Only applicable below the degree bound (q-1 nondecreasing, q-n
    strict), where a witness is guaranteed for nonzero f.
    """
    if kind == "full":
        bound = q - 1
        strict = False
    elif kind == "strict":
        bound = q - n
        strict = True
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if f.is_zero:
        return None
    if f.degree() > bound:
        raise ValueError(f"degree {f.degree()} exceeds the bound {bound} for kind {kind!r}")
    _check_embedding(n, q, embedding)
    for seq in increasing_sequences(n, q, strict):
        point = embedding.apply(seq)
        if not f.evaluate(point).is_zero:
            return point
    raise RuntimeError("no nonvanishing point found for a nonzero polynomial")  # unreachable

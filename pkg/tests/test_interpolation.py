from fractions import Fraction

import pytest

from incseq.combinatorics import Embedding, increasing_sequences
from incseq.field import field_from_string
from incseq.groebner import full_basis
from incseq.interpolation import Interpolator, get_interpolator, indicator, interpolate
from incseq.poly import DEGLEX, Polynomial, reduce_by_basis

Q = field_from_string("rational")


def _vars(field, n):
    return [Polynomial.variable(field, n, i) for i in range(n)]


def test_univariate_lagrange():
    emb = Embedding.grid(Q, 3, 0)  # images 1, 2, 3
    ip = indicator((2,), 1, 3, emb)
    (x,) = _vars(Q, 1)
    c = lambda v: Polynomial.constant(Q, 1, v)
    assert ip.expanded == ((x - c(1)) * (x - c(3))).scale(Fraction(-1, 1))
    assert ip.factored.expand() == ip.expanded
    assert {str(f) for f in ip.factored.factors} == {"x1 - 1", "x1 - 3"}


def test_worked_five_variable_factorization():
    emb = Embedding.grid(Q, 5, 0)
    ip = indicator((1, 2, 2, 4, 4), 5, 5, emb)
    x = _vars(Q, 5)
    c = lambda v: Polynomial.constant(Q, 5, v)
    expected = [x[4] - c(5), x[3] - x[2], x[3] - x[2] - c(1), x[1] - x[0]]
    got = list(ip.factored.factors)
    assert len(got) == 4
    for f in expected:
        assert f in got
    # scalar is the inverse of the product's value at the point
    product = Polynomial.one(Q, 5)
    for f in got:
        product = product * f
    assert ip.factored.scalar == product.evaluate(ip.point).inverse()
    assert ip.factored.expand() == ip.expanded
    assert ip.expanded.degree() == 4


@pytest.mark.parametrize("n,q", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)])
def test_delta_property_and_degree(n, q):
    emb = Embedding.grid(Q, q, 0)
    interp = get_interpolator(n, q, emb)
    for s in interp.sequences:
        ip = interp.indicator(s)
        assert ip.expanded.degree() == q - 1
        assert ip.factored is not None and ip.factored.expand() == ip.expanded
        assert len(ip.factored.factors) == q - 1
        assert all(f.degree() == 1 for f in ip.factored.factors)
        for t in interp.sequences:
            value = ip.expanded.evaluate(interp.points[interp.index[t]])
            assert value == (Q.one if s == t else Q.zero)


def test_delta_property_finite_field_grid():
    gf7 = field_from_string("gf:7")
    emb = Embedding.grid(gf7, 3, -1)
    interp = Interpolator(2, 3, emb)
    for s in interp.sequences:
        ip = interp.indicator(s)
        assert ip.factored is not None and ip.factored.expand() == ip.expanded
        assert ip.expanded.degree() == 2
        for t in interp.sequences:
            value = ip.expanded.evaluate(interp.points[interp.index[t]])
            assert value == (gf7.one if s == t else gf7.zero)


def test_non_grid_embedding_has_no_factored_form():
    emb = Embedding.from_elements(Q, [0, 2, 5])
    interp = Interpolator(2, 3, emb)
    for s in interp.sequences:
        ip = interp.indicator(s)
        assert ip.factored is None
        assert ip.expanded.degree() == 2
        for t in interp.sequences:
            value = ip.expanded.evaluate(interp.points[interp.index[t]])
            assert value == (Q.one if s == t else Q.zero)


def test_expanded_supported_on_standard_monomials():
    emb = Embedding.grid(Q, 3, 0)
    interp = get_interpolator(2, 3, emb)
    for s in interp.sequences:
        assert all(sum(m) <= 2 for m in interp.indicator(s).expanded.terms)


def test_interpolate_constant_and_indicators():
    emb = Embedding.grid(Q, 3, 0)
    interp = get_interpolator(2, 3, emb)
    assert interp.interpolate({s: 1 for s in interp.sequences}) == Polynomial.one(Q, 2)
    target = (1, 2)
    table = {s: (1 if s == target else 0) for s in interp.sequences}
    assert interp.interpolate(table) == interp.indicator(target).expanded


def test_interpolate_coordinate_function():
    emb = Embedding.grid(Q, 3, -1)
    seqs = increasing_sequences(2, 3)
    values = {s: emb.images[s[0] - 1] for s in seqs}
    result = interpolate(values, 2, 3, emb)
    x1 = Polynomial.variable(Q, 2, 0)
    gb = full_basis(2, 3, emb)
    assert reduce_by_basis(result - x1, gb.polynomials, DEGLEX).is_zero
    for s in seqs:
        assert result.evaluate(emb.apply(s)) == values[s]


def test_interpolate_missing_point_rejected():
    emb = Embedding.grid(Q, 3, 0)
    with pytest.raises(ValueError):
        interpolate({(1, 1): 1}, 2, 3, emb)


def test_invalid_sequence_rejected():
    emb = Embedding.grid(Q, 3, 0)
    with pytest.raises(ValueError):
        indicator((2, 1), 2, 3, emb)


def test_q1_edge():
    emb = Embedding.grid(Q, 1, 0)
    ip = indicator((1, 1), 2, 1, emb)
    assert ip.expanded == Polynomial.one(Q, 2)
    assert ip.expanded.degree() == 0
    assert ip.factored is not None and ip.factored.expand() == ip.expanded
    assert len(ip.factored.factors) == 0

"""Brute-force ground truth via evaluation matrices.

Standard monomials, vanishing polynomials, and membership tests computed
directly from point evaluations, independent of any closed form.  Used
to certify the constructions in the groebner, interpolation, and
geometry modules.
"""

import heapq

from .field import Field
from .linalg import eliminate, nullspace_vector
from .poly import DEGLEX, Polynomial, TermOrder, mono_eval, monomials_up_to_degree, sort_monomials


class EvaluationMatrix:
    """Values of a monomial family at a point set: rows are points,
    columns are monomials in ascending term order."""

    __slots__ = ("points", "columns", "rows")

    def __init__(self, points, columns, rows):
        self.points = points
        self.columns = columns
        self.rows = rows


def evaluation_matrix(points, monomials, order: TermOrder = DEGLEX) -> EvaluationMatrix:
    points = list(points)
    columns = sort_monomials(monomials, order)
    rows = [[mono_eval(m, p) for m in columns] for p in points]
    return EvaluationMatrix(tuple(points), tuple(columns), rows)


def standard_monomials(points, order: TermOrder = DEGLEX) -> frozenset:
    """Standard monomials of the vanishing ideal of a finite point set.

    Buchberger-Moller-style scan: walk candidate monomials in ascending
    term order, keep one iff its evaluation vector is independent of the
    kept ones, and extend candidates only from kept monomials (any
    multiple of a rejected monomial is a leading monomial too).  Stops
    after |points| keepers.
    """
    pts = list(dict.fromkeys(points))
    if not pts:
        raise ValueError("point set must be nonempty")
    n = len(pts[0])
    target = len(pts)
    kept = []
    pivot_rows = []  # (pivot index, normalized residual vector)
    start = (0,) * n
    heap = [(order.key(start), start)]
    seen = {start}
    while heap and len(kept) < target:
        _, m = heapq.heappop(heap)
        assert sum(m) <= target, "monomial scan ran past the degree bound"
        vec = eliminate([mono_eval(m, p) for p in pts], pivot_rows)
        pivot = next((i for i, x in enumerate(vec) if not x.is_zero), None)
        if pivot is None:
            continue  # dependent: m is a leading monomial, prune its multiples
        inv = vec[pivot].inverse()
        pivot_rows.append((pivot, [x * inv for x in vec]))
        kept.append(m)
        for i in range(n):
            ext = tuple(e + (1 if j == i else 0) for j, e in enumerate(m))
            if ext not in seen:
                seen.add(ext)
                heapq.heappush(heap, (order.key(ext), ext))
    if len(kept) != target:
        raise RuntimeError("standard monomial scan terminated early")  # unreachable
    return frozenset(kept)


def vanishing_polynomial(points, max_degree: int, order: TermOrder = DEGLEX,
                         field: Field | None = None, n: int | None = None):
    """A nonzero polynomial of degree <= max_degree vanishing on all the
    points, or None if none exists.  Deterministic: first kernel vector
    of the evaluation matrix, normalized to leading coefficient 1.

    The empty set is vanished on by the constant 1; field and n must be
    passed explicitly in that case.
    """
    pts = list(dict.fromkeys(points))
    if not pts:
        if field is None or n is None:
            raise ValueError("empty point set: pass field and n explicitly")
        return Polynomial.one(field, n)
    n = len(pts[0])
    field = pts[0][0].field
    columns = sort_monomials(monomials_up_to_degree(n, max_degree), order)
    rows = [[mono_eval(m, p) for m in columns] for p in pts]
    kernel = nullspace_vector(rows, len(columns), field)
    if kernel is None:
        return None
    f = Polynomial(field, n, dict(zip(columns, kernel)))
    return f.monic(order)


def vanishes_on(f: Polynomial, points) -> bool:
    return all(f.evaluate(p).is_zero for p in points)

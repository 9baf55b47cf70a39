"""Lines, increasing Kakeya and Nikodym sets, hyperplane covers, and the
polynomial-method bound verifiers over finite fields.

Point sets live in F^n for a finite field F of exactly q elements
(Kakeya/Nikodym) or size >= q (covers); points are tuples of field
elements.  Directions and hyperplane normals are canonicalized so the
first nonzero coordinate is 1.
"""

import itertools
import math

from .combinatorics import Embedding, increasing_sequences
from .field import Field, FieldElement
from .oracle import standard_monomials, vanishing_polynomial
from .poly import DEGLEX, Polynomial, monomials_up_to_degree

COVER_POINT_CAP = 10**4
COVER_PLANE_CAP = 10**3
LINE_UNION_CAP = 10**6


class InconsistencyError(RuntimeError):
    """A computation contradicted a proved bound; indicates a bug."""


class CertificateError(ValueError):
    """A supplied certificate failed re-verification."""


class PointSet:
    """Deduplicated finite subset of F^n."""

    __slots__ = ("field", "n", "points")

    def __init__(self, field: Field, n: int, points):
        pts = frozenset(tuple(p) for p in points)
        for p in pts:
            if len(p) != n:
                raise ValueError(f"point {p} has width {len(p)}, expected {n}")
        self.field = field
        self.n = n
        self.points = pts

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return p in self.points

    def __iter__(self):
        return iter(self.sorted_points())

    def sorted_points(self):
        index = {e: i for i, e in enumerate(self.field.elements())}
        return sorted(self.points, key=lambda p: tuple(index[x] for x in p))

    def __repr__(self):
        return f"PointSet(n={self.n}, size={len(self.points)})"


def parse_points(text: str, field: Field, n: int) -> PointSet:
    """One point per line, comma-separated canonical element strings."""
    from .combinatorics import _split_top_level

    points = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = _split_top_level(line)
        if len(parts) != n:
            raise ValueError(f"point {line!r} has {len(parts)} coordinates, expected {n}")
        points.append(tuple(field.parse_element(s) for s in parts))
    return PointSet(field, n, points)


def format_points(ps: PointSet) -> str:
    return "\n".join(",".join(ps.field.format_element(x) for x in p) for p in ps.sorted_points())


def format_point(p) -> str:
    return ",".join(x.field.format_element(x) for x in p)


def canonical_direction(v):
    """Scale so the first nonzero coordinate is 1; rejects the zero vector."""
    pivot = next((i for i, x in enumerate(v) if not x.is_zero), None)
    if pivot is None:
        raise ValueError("zero vector has no direction")
    inv = v[pivot].inverse()
    return pivot, tuple(x * inv for x in v)


class Line:
    """The q-point line {base + t*direction}; direction canonical, base
    normalized to zero in the direction's pivot coordinate."""

    __slots__ = ("field", "base", "direction", "pivot")

    def __init__(self, field: Field, base, direction):
        pivot, direction = canonical_direction(direction)
        t = base[pivot]
        base = tuple(b - t * d for b, d in zip(base, direction))
        self.field = field
        self.base = base
        self.direction = direction
        self.pivot = pivot

    def points(self) -> frozenset:
        return frozenset(tuple(b + t * d for b, d in zip(self.base, self.direction))
                         for t in self.field.elements())

    def punctured(self, at) -> frozenset:
        return self.points() - {tuple(at)}

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return (self.field, self.base, self.direction) == (other.field, other.base, other.direction)

    def __hash__(self):
        return hash((self.field, self.base, self.direction))

    def __repr__(self):
        return f"Line(base={self.base}, direction={self.direction})"


class Hyperplane:
    """{x : normal . x = offset}, with normal and offset scaled so the
    first nonzero normal coordinate is 1."""

    __slots__ = ("normal", "offset")

    def __init__(self, normal, offset: FieldElement):
        pivot = next((i for i, x in enumerate(normal) if not x.is_zero), None)
        if pivot is None:
            raise ValueError("hyperplane normal must be nonzero")
        inv = normal[pivot].inverse()
        self.normal = tuple(x * inv for x in normal)
        self.offset = offset * inv

    @classmethod
    def make(cls, normal, offset):
        return cls(tuple(normal), offset)

    def contains(self, point) -> bool:
        total = self.normal[0].field.zero
        for a, x in zip(self.normal, point):
            if not a.is_zero:
                total = total + a * x
        return total == self.offset

    def __eq__(self, other):
        if not isinstance(other, Hyperplane):
            return NotImplemented
        return (self.normal, self.offset) == (other.normal, other.offset)

    def __hash__(self):
        return hash((self.normal, self.offset))

    def __repr__(self):
        return f"Hyperplane({self.normal} . x = {self.offset})"


def format_hyperplane(h: Hyperplane) -> str:
    f = h.offset.field
    return ",".join(f.format_element(x) for x in h.normal) + ";" + f.format_element(h.offset)


def parse_hyperplanes(text: str, field: Field, n: int) -> list[Hyperplane]:
    """One per line: `<n1>,...,<nn>;<offset>`."""
    from .combinatorics import _split_top_level

    planes = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if ";" not in line:
            raise ValueError(f"hyperplane {line!r} needs `normal;offset`")
        left, right = line.rsplit(";", 1)
        normal = [field.parse_element(s) for s in _split_top_level(left)]
        if len(normal) != n:
            raise ValueError(f"hyperplane {line!r} has {len(normal)} normal coordinates, expected {n}")
        planes.append(Hyperplane.make(tuple(normal), field.parse_element(right)))
    return planes


def _require_ambient(field: Field, q: int):
    if field.size != q:
        raise ValueError(f"ambient field must have exactly q={q} elements, got size {field.size}")


def increasing_directions(n: int, q: int, emb: Embedding) -> list:
    """Canonical representatives of the nonzero embedded nondecreasing
    directions, in first-occurrence enumeration order."""
    seen = set()
    out = []
    for seq in increasing_sequences(n, q):
        v = emb.apply(seq)
        if all(x.is_zero for x in v):
            continue
        _, canon = canonical_direction(v)
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return out


def all_canonical_directions(field: Field, n: int) -> list:
    """Every canonical nonzero direction of F^n, deterministic order."""
    out = []
    elements = field.elements()
    for pivot in range(n):
        prefix = (field.zero,) * pivot + (field.one,)
        tail_len = n - pivot - 1
        stack = [prefix]
        for _ in range(tail_len):
            stack = [t + (e,) for t in stack for e in elements]
        out.extend(stack)
    return out


def transversal(field: Field, n: int, pivot: int):
    """All base points with coordinate `pivot` equal to zero: exactly one
    representative per line in a direction with that pivot."""
    elements = field.elements()
    bases = [()]
    for i in range(n):
        if i == pivot:
            bases = [b + (field.zero,) for b in bases]
        else:
            bases = [b + (e,) for b in bases for e in elements]
    return bases


def line_star(n: int, q: int, field: Field, emb: Embedding) -> PointSet:
    """Union of the lines through the origin in every nonzero embedded
    nondecreasing direction."""
    _require_ambient(field, q)
    if emb.field != field:
        raise ValueError("embedding field differs from the ambient field")
    origin = (field.zero,) * n
    points = {origin}
    for v in increasing_directions(n, q, emb):
        points |= Line(field, origin, v).points()
    return PointSet(field, n, points)


def line_star_size_bound(n: int, q: int) -> int:
    return (q - 1) * (math.comb(q + n - 1, n) - (q - 1)) + 1


class KakeyaCertificate:
    """Per-direction witness lines: direction -> base point."""

    __slots__ = ("threshold", "entries")

    def __init__(self, threshold: int, entries):
        self.threshold = threshold
        self.entries = tuple(entries)

    @property
    def ok(self):
        return True


class KakeyaFailure:
    """First direction with no line meeting the set at the threshold."""

    __slots__ = ("threshold", "direction")

    def __init__(self, threshold: int, direction):
        self.threshold = threshold
        self.direction = direction

    @property
    def ok(self):
        return False


def verify_kakeya(K: PointSet, emb: Embedding, threshold: int):
    """For every canonical nonzero embedded nondecreasing direction, find
    a line meeting K in at least `threshold` points (threshold = q means
    full containment), scanning one base per line."""
    q = emb.q
    _require_ambient(K.field, q)
    if not 1 <= threshold <= q:
        raise ValueError(f"threshold must be in [1, {q}]")
    entries = []
    for v in increasing_directions(K.n, q, emb):
        pivot = next(i for i, x in enumerate(v) if not x.is_zero)
        found = None
        for base in transversal(K.field, K.n, pivot):
            line = Line(K.field, base, v)
            if len(line.points() & K.points) >= threshold:
                found = line.base
                break
        if found is None:
            return KakeyaFailure(threshold, v)
        entries.append((v, found))
    return KakeyaCertificate(threshold, entries)


class NikodymCertificate:
    """Per-point witness directions: embedded point -> direction whose
    punctured line through the point stays inside the set."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    @property
    def ok(self):
        return True


class NikodymFailure:
    __slots__ = ("point",)

    def __init__(self, point):
        self.point = point

    @property
    def ok(self):
        return False


def verify_nikodym(B: PointSet, emb: Embedding):
    """For each embedded nondecreasing point z, find a direction v with
    the punctured line {z + tv : t != 0} inside B."""
    q = emb.q
    _require_ambient(B.field, q)
    directions = all_canonical_directions(B.field, B.n)
    nonzero_ts = [t for t in B.field.elements() if not t.is_zero]
    entries = []
    for seq in increasing_sequences(B.n, q):
        z = emb.apply(seq)
        found = None
        for v in directions:
            if all(tuple(a + t * b for a, b in zip(z, v)) in B.points for t in nonzero_ts):
                found = v
                break
        if found is None:
            return NikodymFailure(z)
        entries.append((z, found))
    return NikodymCertificate(entries)


class BoundPass:
    __slots__ = ("size", "bound")

    def __init__(self, size: int, bound: int):
        if size < bound:
            raise InconsistencyError(f"size {size} below the proved bound {bound}")
        self.size = size
        self.bound = bound

    @property
    def ok(self):
        return True

    def __repr__(self):
        return f"BoundPass(size={self.size}, bound={self.bound})"


class KakeyaBoundCounterexample:
    """Evidence that a too-small set cannot satisfy the line condition:
    a vanishing polynomial whose top part is nonzero at some direction,
    which therefore has no rich line."""

    __slots__ = ("size", "bound", "poly", "witness_direction", "chain_verified")

    def __init__(self, size, bound, poly, witness_direction, chain_verified):
        self.size = size
        self.bound = bound
        self.poly = poly
        self.witness_direction = witness_direction
        self.chain_verified = chain_verified

    @property
    def ok(self):
        return False


def kakeya_lower_bound_check(K: PointSet, directions_set: PointSet, ell: int):
    """Dvir-style dimension bound for sets rich in the directions of a
    set whose standard monomials contain everything of degree <= ell.

    If |K| >= binom(n+ell, n) the bound passes.  Otherwise a nonzero
    polynomial of degree <= ell vanishing on K exists; its top-degree
    homogeneous part cannot vanish on all the directions, and any
    direction where it is nonzero provably has no line meeting K in
    ell+1 points -- that witness is returned after re-verification.
    """
    field, n = K.field, K.n
    q = field.size
    if q is None:
        raise ValueError("bound check needs a finite ambient field")
    if not 0 < ell <= q - 1:
        raise ValueError(f"ell must be in (0, {q - 1}]")
    sm = standard_monomials(directions_set.sorted_points(), DEGLEX)
    required = set(monomials_up_to_degree(n, ell))
    if not required <= sm:
        raise ValueError("direction set does not dominate the degree-<= ell monomials")
    bound = math.comb(n + ell, n)
    if len(K) >= bound:
        return BoundPass(len(K), bound)
    poly = vanishing_polynomial(K.sorted_points(), ell, field=field, n=n)
    if poly is None:
        raise InconsistencyError("no vanishing polynomial despite |K| < column count")
    top = poly.homogeneous_component(poly.degree())
    witness = None
    chain_ok = True
    for v in directions_set.sorted_points():
        if all(x.is_zero for x in v):
            continue
        rich = _has_rich_line(K, v, ell + 1)
        top_zero = top.evaluate(v).is_zero
        if rich and not top_zero:
            chain_ok = False  # cannot happen with exact arithmetic
        if not top_zero and witness is None:
            witness = v
    if witness is None:
        raise InconsistencyError("top-degree part vanished on every direction despite the monomial condition")
    return KakeyaBoundCounterexample(len(K), bound, poly, witness, chain_ok)


def _has_rich_line(K: PointSet, v, threshold: int) -> bool:
    pivot, canon = canonical_direction(v)
    for base in transversal(K.field, K.n, pivot):
        if len(Line(K.field, base, canon).points() & K.points) >= threshold:
            return True
    return False


class NikodymContradictionTrace:
    """Proof chain for an impossible input: a nonzero low-degree
    polynomial forced to vanish on every embedded nondecreasing point."""

    __slots__ = ("size", "bound", "poly", "extended_zeros")

    def __init__(self, size, bound, poly, extended_zeros):
        self.size = size
        self.bound = bound
        self.poly = poly
        self.extended_zeros = tuple(extended_zeros)

    @property
    def ok(self):
        return False


def nikodym_bound_check(B: PointSet, emb: Embedding):
    """Size bound binom(n+q-2, n) for certified increasing Nikodym sets.

    Verification failures raise; a certified set below the bound is
    mathematically impossible, and the proof chain is replayed to emit
    the contradiction trace (any break in the chain means the
    certificate was bad)."""
    cert = verify_nikodym(B, emb)
    if not cert.ok:
        raise CertificateError(f"not an increasing Nikodym set: no punctured line through {cert.point}")
    n, q = B.n, emb.q
    bound = math.comb(n + q - 2, n)
    if len(B) >= bound:
        return BoundPass(len(B), bound)
    return _nikodym_chain(B, emb, cert, bound)


def _nikodym_chain(B: PointSet, emb: Embedding, cert, bound: int):
    n, q = B.n, emb.q
    poly = vanishing_polynomial(B.sorted_points(), q - 2, field=B.field, n=n)
    if poly is None:
        raise InconsistencyError("no vanishing polynomial despite |B| < column count")
    nonzero_ts = [t for t in B.field.elements() if not t.is_zero]
    zeros = []
    for z, v in cert.entries:
        punctured = [tuple(a + t * b for a, b in zip(z, v)) for t in nonzero_ts]
        if not all(p in B.points for p in punctured):
            raise CertificateError(f"certificate line through {z} leaves the set")
        if not all(poly.evaluate(p).is_zero for p in punctured):
            raise CertificateError("vanishing polynomial fails on a certified punctured line")
        if not poly.evaluate(z).is_zero:
            # deg <= q-2 with q-1 roots on the line forces this; failure
            # means the arithmetic or certificate is broken
            raise CertificateError(f"degree argument failed to extend vanishing to {z}")
        zeros.append(z)
    # poly now vanishes on every embedded nondecreasing point, which a
    # nonzero polynomial of degree <= q-1 cannot do
    return NikodymContradictionTrace(len(B), bound, poly, zeros)


class CoverResult:
    __slots__ = ("covered", "uncovered_point", "size", "bound", "excluded_count")

    def __init__(self, covered, uncovered_point, size, bound, excluded_count):
        self.covered = covered
        self.uncovered_point = uncovered_point
        self.size = size
        self.bound = bound
        self.excluded_count = excluded_count

    @property
    def ok(self):
        return self.covered


def cover_verify(planes, n: int, q: int, emb: Embedding, excluded=()) -> CoverResult:
    """Check the planes cover every embedded nondecreasing point outside
    the excluded sequences (at most n of them), and assert the proved
    size bound when they do."""
    excluded = [tuple(s) for s in excluded]
    if len(excluded) > n:
        raise ValueError(f"at most n={n} excluded points allowed, got {len(excluded)}")
    excluded_pts = {emb.apply(s) for s in excluded}
    distinct = list(dict.fromkeys(planes))
    for seq in increasing_sequences(n, q):
        p = emb.apply(seq)
        if p in excluded_pts:
            continue
        if not any(h.contains(p) for h in distinct):
            return CoverResult(False, p, len(distinct), None, len(excluded))
    bound = q - 1 if excluded else q
    if len(distinct) < bound:
        raise InconsistencyError(f"cover of size {len(distinct)} beats the proved bound {bound}")
    return CoverResult(True, None, len(distinct), bound, len(excluded))


def canonical_hyperplanes(field: Field, n: int) -> list[Hyperplane]:
    return [Hyperplane.make(v, off) for v in all_canonical_directions(field, n)
            for off in field.elements()]


class CoverSearchResult:
    __slots__ = ("minimum", "witness", "bound")

    def __init__(self, minimum, witness, bound):
        self.minimum = minimum
        self.witness = tuple(witness)
        self.bound = bound


def cover_search(n: int, q: int, field: Field, emb: Embedding, excluded=()) -> CoverSearchResult:
    """Exact minimum number of affine hyperplanes covering the embedded
    nondecreasing points minus the excluded ones.

    Candidates are the canonical hyperplanes; the answer is found by
    iterative deepening over the cover size below a greedy upper bound,
    searching index-ascending subsets so the first hit is the
    lexicographically least witness.  Coverage masks are bitsets.
    """
    excluded = [tuple(s) for s in excluded]
    if len(excluded) > n:
        raise ValueError(f"at most n={n} excluded points allowed, got {len(excluded)}")
    excluded_pts = {emb.apply(s) for s in excluded}
    targets = [emb.apply(s) for s in increasing_sequences(n, q)
               if emb.apply(s) not in excluded_pts]
    targets = list(dict.fromkeys(targets))
    if len(targets) > COVER_POINT_CAP:
        raise ValueError(f"point count {len(targets)} exceeds the cap {COVER_POINT_CAP}")
    planes = canonical_hyperplanes(field, n)
    if len(planes) > COVER_PLANE_CAP:
        raise ValueError(f"hyperplane count {len(planes)} exceeds the cap {COVER_PLANE_CAP}")
    full = (1 << len(targets)) - 1
    masks = []
    for h in planes:
        m = 0
        for i, p in enumerate(targets):
            if h.contains(p):
                m |= 1 << i
        masks.append(m)
    if not targets:
        return CoverSearchResult(0, [], q - 1 if excluded else q)

    # greedy upper bound
    uncovered = full
    greedy = []
    while uncovered:
        best = max(range(len(masks)), key=lambda i: ((masks[i] & uncovered).bit_count(), -i))
        if not masks[best] & uncovered:
            return CoverSearchResult(None, [], None)  # uncoverable: some point on no plane
        greedy.append(best)
        uncovered &= ~masks[best]

    def dfs(start: int, uncovered: int, slots: int, picks: list):
        if not uncovered:
            return list(picks)
        if slots == 0:
            return None
        # each remaining plane covers at most max_gain new points
        remaining = [i for i in range(start, len(masks)) if masks[i] & uncovered]
        if not remaining:
            return None
        max_gain = max((masks[i] & uncovered).bit_count() for i in remaining)
        if max_gain * slots < uncovered.bit_count():
            return None
        for i in remaining:
            picks.append(i)
            got = dfs(i + 1, uncovered & ~masks[i], slots - 1, picks)
            if got is not None:
                return got
            picks.pop()
        return None

    for size in range(1, len(greedy) + 1):
        got = dfs(0, full, size, [])
        if got is not None:
            return CoverSearchResult(size, [planes[i] for i in got], q - 1 if excluded else q)
    return CoverSearchResult(len(greedy), [planes[i] for i in greedy], q - 1 if excluded else q)


def optimal_kakeya_f3() -> PointSet:
    """The known optimal 10-point increasing Kakeya set in F_3^3: six
    plane points plus three lines through (1,1,2)."""
    from .field import PrimeField

    field = PrimeField(3)
    e = field.element
    base_plane = [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 2), (0, 2, 0), (0, 2, 1)]
    points = {tuple(e(c) for c in p) for p in base_plane}
    for anchor, direction in [((0, 0, 1), (1, 1, 1)),
                              ((0, 0, 0), (1, 1, 2)),
                              ((0, 2, 0), (1, 2, 2))]:
        points |= Line(field, tuple(e(c) for c in anchor), tuple(e(c) for c in direction)).points()
    return PointSet(field, 3, points)


def kakeya_line_union_search(n: int, q: int, field: Field, emb: Embedding):
    """Smallest union of one full line per canonical nondecreasing
    direction (how small constructions are assembled); returns
    (size, PointSet) with the first minimal union in scan order."""
    _require_ambient(field, q)
    directions = increasing_directions(n, q, emb)
    per_direction = []
    total = 1
    for v in directions:
        pivot = next(i for i, x in enumerate(v) if not x.is_zero)
        lines = [Line(field, base, v).points() for base in transversal(field, n, pivot)]
        per_direction.append(lines)
        total *= len(lines)
        if total > LINE_UNION_CAP:
            raise ValueError(f"line-union search space exceeds {LINE_UNION_CAP}")
    best_size = None
    best_union = frozenset()
    for choice in itertools.product(*per_direction):
        union = frozenset().union(*choice) if choice else frozenset()
        if best_size is None or len(union) < best_size:
            best_size = len(union)
            best_union = union
    return best_size, PointSet(field, n, best_union)

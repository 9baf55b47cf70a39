"""Sparse multivariate polynomials over an exact field.

Monomials are exponent tuples of fixed width n.  Supports lex and deglex
term orders, evaluation, leading monomials, and deterministic
multi-divisor normal-form reduction.
"""

from .field import Field, FieldElement


class TermOrder:
    """Total multiplicative monomial order with 1 minimal: lex or deglex."""

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in ("lex", "deglex"):
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind

    def key(self, mono: tuple[int, ...]):
        """Sort key: larger key = larger monomial."""
        if self.kind == "lex":
            return mono
        return (sum(mono), mono)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return self.kind


LEX = TermOrder("lex")
DEGLEX = TermOrder("deglex")


def parse_order(text: str) -> TermOrder:
    return TermOrder(text.strip())


def mono_degree(m: tuple[int, ...]) -> int:
    return sum(m)


def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(b: tuple[int, ...], a: tuple[int, ...]) -> tuple[int, ...]:
    """b / a, assuming a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def mono_eval(m: tuple[int, ...], point) -> FieldElement:
    result = point[0].field.one
    for x, e in zip(point, m):
        if e:
            result = result * x**e
    return result


def mono_to_str(m: tuple[int, ...]) -> str:
    """`x1^2*x3` style, variables 1-indexed; the empty monomial is `1`."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def monomials_up_to_degree(n: int, d: int) -> list[tuple[int, ...]]:
    """All width-n exponent tuples of total degree <= d."""
    result = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            result.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], d, n)
    return result


def sort_monomials(monos, order: TermOrder, reverse: bool = False):
    return sorted(monos, key=order.key, reverse=reverse)


class Polynomial:
    """Sparse polynomial: map from exponent tuple to nonzero coefficient."""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: Field, n: int, terms=None):
        self.field = field
        self.n = n
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError(f"monomial width {len(m)} != {n}")
                if not c.is_zero:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def constant(cls, field, n, value):
        c = field.element(value)
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def one(cls, field, n):
        return cls.constant(field, n, 1)

    @classmethod
    def variable(cls, field, n, i):
        """x_{i+1} for 0-based position i."""
        if not 0 <= i < n:
            raise ValueError(f"variable position {i} out of range for n={n}")
        m = tuple(1 if j == i else 0 for j in range(n))
        return cls(field, n, {m: field.one})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("polynomials over different fields")
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s.is_zero:
                terms.pop(m, None)
            else:
                terms[m] = s
        out = Polynomial.__new__(Polynomial)
        out.field, out.n, out.terms = self.field, self.n, terms
        return out

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.field, out.n = self.field, self.n
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                c = ca * cb
                s = terms.get(m)
                s = c if s is None else s + c
                if s.is_zero:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        out = Polynomial.__new__(Polynomial)
        out.field, out.n, out.terms = self.field, self.n, terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Polynomial":
        c = self.field.element(c)
        if c.is_zero:
            return Polynomial.zero(self.field, self.n)
        out = Polynomial.__new__(Polynomial)
        out.field, out.n = self.field, self.n
        out.terms = {m: t * c for m, t in self.terms.items()}
        return out

    def shift(self, m: tuple[int, ...], c=None) -> "Polynomial":
        """Multiply by the term c * x^m (c defaults to 1)."""
        out = Polynomial.__new__(Polynomial)
        out.field, out.n = self.field, self.n
        if c is None:
            out.terms = {mono_mul(m, mm): cc for mm, cc in self.terms.items()}
        else:
            out.terms = {mono_mul(m, mm): cc * c for mm, cc in self.terms.items()}
        return out

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.terms == other.terms

    def evaluate(self, point) -> FieldElement:
        if len(point) != self.n:
            raise ValueError(f"point width {len(point)} != {self.n}")
        total = self.field.zero
        for m, c in self.terms.items():
            total = total + c * mono_eval(m, point)
        return total

    def leading_monomial(self, order: TermOrder) -> tuple[int, ...]:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder) -> FieldElement:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        return self.scale(lc.inverse())

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(self.field, self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def to_str(self, order: TermOrder = DEGLEX) -> str:
        return format_polynomial(self, order)

    def __repr__(self):
        return self.to_str()

    __str__ = __repr__


def format_polynomial(f: Polynomial, order: TermOrder = DEGLEX) -> str:
    """Term grammar: terms joined by ` + `/` - `, descending in the order."""
    if f.is_zero:
        return "0"
    rational = f.field.char == 0
    pieces = []
    for m in sort_monomials(f.terms, order, reverse=True):
        c = f.terms[m]
        negative = rational and c.value < 0
        mag = -c if negative else c
        mono = mono_to_str(m)
        if mono == "1":
            body = f.field.format_element(mag)
        elif mag == f.field.one:
            body = mono
        else:
            body = f"{f.field.format_element(mag)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def parse_polynomial(text: str, field: Field, n: int) -> Polynomial:
    """Parse the term grammar produced by format_polynomial."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial string")
    if text == "0":
        return Polynomial.zero(field, n)
    chunks = text.replace(" - ", " + -").split(" + ")
    result = Polynomial.zero(field, n)
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty term in {text!r}")
        negate = False
        if chunk.startswith("-") and not chunk.startswith("-["):
            # leading sign on the term (the coefficient may still carry one)
            negate = True
            chunk = chunk[1:].strip()
        exps = [0] * n
        coeff = None
        for factor in chunk.split("*"):
            factor = factor.strip()
            if factor.startswith("x") and factor[1:2].isdigit():
                if "^" in factor:
                    var, exp = factor[1:].split("^", 1)
                    e = int(exp)
                else:
                    var, e = factor[1:], 1
                i = int(var)
                if not 1 <= i <= n:
                    raise ValueError(f"variable x{i} out of range 1..{n}")
                exps[i - 1] += e
            else:
                if coeff is not None:
                    raise ValueError(f"two coefficients in term {chunk!r}")
                coeff = field.parse_element(factor)
        c = field.one if coeff is None else coeff
        if negate:
            c = -c
        result = result + Polynomial(field, n, {tuple(exps): c})
    return result


def reduce_by_basis(f: Polynomial, basis, order: TermOrder) -> Polynomial:
    """Deterministic normal form of f modulo a list of divisors.

    The reducible monomial chosen at each step is the order-largest one
    divisible by some divisor's leading monomial; the divisor used is the
    first such in list order.  The remainder contains no monomial
    divisible by any divisor's leading monomial.
    """
    divisors = []
    for g in basis:
        if g.is_zero:
            raise ValueError("zero polynomial in reduction basis")
        f._check(g)
        divisors.append((g.leading_monomial(order), g.terms[g.leading_monomial(order)], g))
    r = f
    while True:
        target = None
        use = None
        for m in sort_monomials(r.terms, order, reverse=True):
            for lm, lc, g in divisors:
                if mono_divides(lm, m):
                    target, use = m, (lm, lc, g)
                    break
            if target is not None:
                break
        if target is None:
            return r
        lm, lc, g = use
        factor = r.terms[target] / lc
        r = r - g.shift(mono_quotient(target, lm), factor)

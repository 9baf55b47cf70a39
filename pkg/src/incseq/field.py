"""Exact coefficient fields.

Three kinds behind one interface: prime fields GF(p), small extension
fields GF(p^k) with table-based arithmetic, and arbitrary-precision
rationals.  All arithmetic is exact; elements are immutable.
"""

from fractions import Fraction

EXTENSION_SIZE_CAP = 1 << 16

# Built-in moduli (Conway polynomials), coefficients from the constant
# term up, monic.
_BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),      # y^2 + y + 1
    (2, 3): (1, 1, 0, 1),   # y^3 + y + 1
    (3, 2): (2, 2, 1),      # y^2 + 2y + 2
}


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_geq(q: int) -> int:
    p = max(q, 2)
    while not is_prime(p):
        p += 1
    return p


def _polymod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    """Reduce a dense GF(p)[y] polynomial (ascending coeffs) mod monic m."""
    a = [c % p for c in a]
    k = len(m) - 1
    while len(a) > k:
        lead = a.pop()
        if lead:
            for i in range(k):
                a[len(a) - k + i] = (a[len(a) - k + i] - lead * m[i]) % p
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymul_mod(a: list[int], b: list[int], m: tuple[int, ...], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    return _polymod(prod, m, p)


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Exhaustive divisor test: no monic factor of degree 1..k//2."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] != 1:
        return False
    for d in range(1, k // 2 + 1):
        for enc in range(p**d):
            div = []
            e = enc
            for _ in range(d):
                div.append(e % p)
                e //= p
            div.append(1)
            # long division of modulus by div, remainder test
            rem = [c % p for c in modulus]
            while len(rem) > d:
                lead = rem.pop()
                if lead:
                    for i in range(d):
                        rem[len(rem) - d + i] = (rem[len(rem) - d + i] - lead * div[i]) % p
            if not any(rem):
                return False
    if k == 1:
        return True
    # k >= 2: also rule out linear factors when k//2 == 0 is impossible,
    # but degree-1 divisors are covered once k >= 2 since 1 <= k//2.
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Built-in modulus, or the first irreducible in a deterministic scan."""
    if (p, k) in _BUILTIN_MODULI:
        return _BUILTIN_MODULI[(p, k)]
    for enc in range(p**k):
        coeffs = []
        e = enc
        for _ in range(k):
            coeffs.append(e % p)
            e //= p
        coeffs.reverse()  # scan high-degree coefficients as most significant
        cand = tuple(coeffs) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldSpec:
    """Description of a field: prime(p), extension(p, k, modulus), or rational."""

    __slots__ = ("kind", "p", "k", "modulus")

    def __init__(self, kind, p=None, k=1, modulus=None):
        self.kind = kind
        self.p = p
        self.k = k
        self.modulus = modulus

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p=p)

    @classmethod
    def extension(cls, p: int, k: int, modulus=None) -> "FieldSpec":
        return cls("extension", p=p, k=k, modulus=tuple(modulus) if modulus else None)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.kind, self.p, self.k, self.modulus) == (other.kind, other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.kind, self.p, self.k, self.modulus))

    def __repr__(self):
        if self.kind == "prime":
            return f"FieldSpec.prime({self.p})"
        if self.kind == "extension":
            return f"FieldSpec.extension({self.p}, {self.k}, {self.modulus})"
        return "FieldSpec.rational()"


def parse_field_spec(text: str) -> FieldSpec:
    """Parse `gf:p`, `gf:p^k`, or `rational`."""
    text = text.strip()
    if text == "rational":
        return FieldSpec.rational()
    if text.startswith("gf:"):
        body = text[3:]
        if "^" in body:
            p_str, k_str = body.split("^", 1)
            return FieldSpec.extension(int(p_str), int(k_str))
        return FieldSpec.prime(int(body))
    raise ValueError(f"bad field spec {text!r}: expected gf:p, gf:p^k, or rational")


class FieldElement:
    """Immutable element of a Field; payload is canonical for its kind."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other
        if isinstance(other, int) or (isinstance(other, Fraction) and self.field.char == 0):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(o.value, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(o.value)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(o.value, self.field._inv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == self.field.zero.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return self.field.format_element(self)

    __str__ = __repr__


class Field:
    """Field handle: exact arithmetic, canonical element forms, printing."""

    spec: FieldSpec
    char: int
    size: int | None  # None = infinite

    def element(self, value) -> FieldElement:
        return FieldElement(self, self._canon(value))

    def from_int(self, m: int) -> FieldElement:
        """The image of the integer m, i.e. m copies of 1."""
        return self.element(m)

    def elements(self) -> list[FieldElement]:
        """All field elements exactly once, in canonical order."""
        raise ValueError("cannot enumerate an infinite field")

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.spec = FieldSpec.prime(p)
        self.p = p
        self.char = p
        self.size = p
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    def _canon(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value.value
        return int(value) % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.p)]

    def format_element(self, x: FieldElement) -> str:
        return str(x.value)

    def parse_element(self, s: str) -> FieldElement:
        return self.element(int(s.strip()))

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField(Field):
    """GF(p^k) via log/exp tables over a multiplicative generator.

    Elements are coefficient tuples of length k over GF(p), constant
    term first; the modulus is monic irreducible of degree k.
    """

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2:
            raise ValueError("extension degree must be >= 2")
        if p**k > EXTENSION_SIZE_CAP:
            raise ValueError(f"p^k = {p ** k} exceeds the table cap {EXTENSION_SIZE_CAP}")
        modulus = tuple(modulus) if modulus is not None else default_modulus(p, k)
        if len(modulus) != k + 1 or modulus[-1] % p != 1:
            raise ValueError("modulus must be monic of degree k")
        modulus = tuple(c % p for c in modulus)
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.spec = FieldSpec.extension(p, k, modulus)
        self.p = p
        self.k = k
        self.modulus = modulus
        self.char = p
        self.size = p**k
        self.zero = FieldElement(self, (0,) * k)
        one = (1,) + (0,) * (k - 1)
        self.one = FieldElement(self, one)
        self._build_tables()

    def _pad(self, coeffs) -> tuple[int, ...]:
        coeffs = list(coeffs)[: self.k]
        return tuple((coeffs + [0] * self.k)[: self.k])

    def _build_tables(self):
        p, size = self.p, self.size
        one = self.one.value
        for enc in range(1, size):
            cand = self._tuple_from_index(enc)
            powers = []  # g^1, g^2, ..., ending with g^ord = 1
            x = one
            while True:
                x = self._pad(_polymul_mod(list(x), list(cand), self.modulus, p))
                powers.append(x)
                if x == one:
                    break
            if len(powers) == size - 1:
                self._exp = [one] + powers[:-1]  # exp[i] = g^i, i = 0..size-2
                break
        else:
            raise ValueError("no multiplicative generator found (modulus not irreducible?)")
        self._log = {t: i for i, t in enumerate(self._exp)}

    def _tuple_from_index(self, idx: int) -> tuple[int, ...]:
        coeffs = []
        for _ in range(self.k):
            coeffs.append(idx % self.p)
            idx //= self.p
        return tuple(coeffs)

    def _canon(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value.value
        if isinstance(value, int):
            return self._pad([value % self.p])
        return tuple(int(c) % self.p for c in value)

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        if not any(a) or not any(b):
            return self.zero.value
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.size - 1)]

    def elements(self):
        return [FieldElement(self, self._tuple_from_index(i)) for i in range(self.size)]

    def format_element(self, x: FieldElement) -> str:
        return "[" + ",".join(str(c) for c in x.value) + "]"

    def parse_element(self, s: str) -> FieldElement:
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"bad GF({self.p}^{self.k}) element {s!r}: expected [c0,...,c{self.k - 1}]")
        parts = [c for c in s[1:-1].split(",") if c.strip() != ""]
        if len(parts) != self.k:
            raise ValueError(f"element {s!r} must have exactly {self.k} coefficients")
        return self.element(tuple(int(c) for c in parts))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


class RationalField(Field):
    def __init__(self):
        self.spec = FieldSpec.rational()
        self.char = 0
        self.size = None
        self.zero = FieldElement(self, Fraction(0))
        self.one = FieldElement(self, Fraction(1))

    def _canon(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value.value
        return Fraction(value)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def format_element(self, x: FieldElement) -> str:
        return str(x.value)

    def parse_element(self, s: str) -> FieldElement:
        return self.element(Fraction(s.strip()))

    def __repr__(self):
        return "QQ"


def field_make(spec: FieldSpec) -> Field:
    """Build a field handle from a validated spec."""
    if spec.kind == "prime":
        return PrimeField(spec.p)
    if spec.kind == "extension":
        return ExtensionField(spec.p, spec.k, spec.modulus)
    if spec.kind == "rational":
        return RationalField()
    raise ValueError(f"unknown field kind {spec.kind!r}")


def field_from_string(text: str) -> Field:
    return field_make(parse_field_spec(text))

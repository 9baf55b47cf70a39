import random
from fractions import Fraction

import pytest

from incseq.field import (
    EXTENSION_SIZE_CAP,
    ExtensionField,
    FieldSpec,
    PrimeField,
    RationalField,
    default_modulus,
    field_from_string,
    field_make,
    is_irreducible,
    is_prime,
    parse_field_spec,
    smallest_prime_geq,
)


def test_gf3_arithmetic():
    f = field_make(FieldSpec.prime(3))
    assert (f.element(1) + f.element(2)).is_zero
    assert f.element(2) * f.element(2) == f.element(1)
    assert (-f.element(1)) == f.element(2)


def test_rational_arithmetic():
    f = field_make(FieldSpec.rational())
    assert (f.element(Fraction(1, 2)) + f.element(Fraction(1, 3))).value == Fraction(5, 6)
    assert f.element(Fraction(-3, 4)).inverse().value == Fraction(-4, 3)


def test_gf4_generator_square():
    f = field_make(FieldSpec.extension(2, 2))
    g = f.element((0, 1))
    assert g * g == g + f.one


def test_enumeration():
    assert [e.value for e in field_from_string("gf:2").elements()] == [0, 1]
    assert [e.value for e in field_from_string("gf:3").elements()] == [0, 1, 2]
    els = field_from_string("gf:2^2").elements()
    assert len(set(els)) == 4
    for a in els:
        for b in els:
            assert a + b in els and a * b in els


def test_rational_not_enumerable():
    with pytest.raises(ValueError):
        RationalField().elements()


@pytest.mark.parametrize("spec", ["gf:2", "gf:3", "gf:2^2", "gf:5", "gf:7", "gf:2^3", "gf:3^2", "gf:2^4", "gf:5^2", "gf:3^3"])
def test_field_axioms_exhaustive(spec):
    f = field_from_string(spec)
    els = f.elements()
    assert len(set(els)) == f.size
    for a in els:
        assert a + f.zero == a and a * f.one == a
        if not a.is_zero:
            assert a * a.inverse() == f.one
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("spec", ["gf:7^2", "gf:2^6", "gf:3^4", "gf:2^8"])
def test_field_axioms_sampled(spec):
    f = field_from_string(spec)
    els = f.elements()
    assert len(set(els)) == f.size
    for a in els:
        if not a.is_zero:
            assert a * a.inverse() == f.one
    rng = random.Random(7)
    for _ in range(2000):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a


def test_extension_char_and_frobenius():
    f = field_from_string("gf:2^3")
    for a in f.elements():
        assert (a + a).is_zero


def test_rational_no_overflow_property():
    f = RationalField()
    rng = random.Random(0)
    for _ in range(1000):
        a = f.element(Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**12)))
        b = f.element(Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**12)))
        assert (a + b) - b == a
        if not b.is_zero:
            assert (a / b) * b == a


def test_primality_and_errors():
    assert is_prime(2) and is_prime(65537) and not is_prime(1) and not is_prime(91)
    assert smallest_prime_geq(1) == 2 and smallest_prime_geq(4) == 5 and smallest_prime_geq(5) == 5
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        ExtensionField(4, 2)
    with pytest.raises(ValueError):
        ExtensionField(2, 2, (0, 0, 1))  # y^2, reducible
    with pytest.raises(ValueError):
        ExtensionField(2, 17)  # 2^17 over table cap
    assert 2**16 == EXTENSION_SIZE_CAP


def test_builtin_moduli():
    assert field_from_string("gf:2^2").modulus == (1, 1, 1)
    assert field_from_string("gf:2^3").modulus == (1, 1, 0, 1)
    assert field_from_string("gf:3^2").modulus == (2, 2, 1)


def test_modulus_override():
    default = ExtensionField(3, 2)
    override = ExtensionField(3, 2, (1, 0, 1))  # y^2 + 1, irreducible over GF(3)
    assert override.modulus != default.modulus
    els = override.elements()
    for a in els:
        if not a.is_zero:
            assert a * a.inverse() == override.one


def test_irreducibility_checker():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)  # y^2 + 1 = (y+1)^2 over GF(2)
    # degree-4 reducible with no roots: (y^2+y+1)^2 = y^4+y^2+1 over GF(2)
    assert not is_irreducible((1, 0, 1, 0, 1), 2)
    assert is_irreducible(default_modulus(2, 4), 2)


def test_spec_string_roundtrip():
    for text in ["gf:3", "gf:2^2", "rational"]:
        spec = parse_field_spec(text)
        assert field_make(spec).spec.kind == spec.kind
    with pytest.raises(ValueError):
        parse_field_spec("float:64")


def test_element_formatting():
    gf3 = field_from_string("gf:3")
    assert gf3.format_element(gf3.element(5)) == "2"
    assert gf3.parse_element("2") == gf3.element(2)
    gf4 = field_from_string("gf:2^2")
    g = gf4.element((1, 0))
    assert gf4.format_element(g) == "[1,0]"
    assert gf4.parse_element("[1,0]") == g
    with pytest.raises(ValueError):
        gf4.parse_element("[1]")
    q = field_from_string("rational")
    assert q.format_element(q.element(Fraction(-3, 4))) == "-3/4"
    assert q.parse_element("-3/4").value == Fraction(-3, 4)


def test_cross_field_mixing_rejected():
    a = field_from_string("gf:3").element(1)
    b = field_from_string("gf:5").element(1)
    with pytest.raises(ValueError):
        _ = a + b


def test_zero_inverse_rejected():
    for spec in ["gf:3", "gf:2^2", "rational"]:
        f = field_from_string(spec)
        with pytest.raises(ZeroDivisionError):
            f.zero.inverse()

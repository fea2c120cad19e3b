from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from hopfexp.scalars import CF, GF, QQ, Cyc, FieldError, FieldSpec, cyclotomic_polynomial

CONDUCTORS = [3, 4, 5, 8, 12]


def rationals():
    return st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6).map(mpq)


def field_elements(F):
    if F.kind == "rationals":
        return rationals()
    if F.kind == "prime":
        return st.integers(0, F.n - 1).map(F)
    phi = F.degree
    return st.lists(rationals(), min_size=phi, max_size=phi).map(lambda c: Cyc(tuple(c), F.n))


FIELDS = [QQ, GF(2), GF(3), GF(7), GF(101)] + [CF(n) for n in CONDUCTORS]


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(field_elements(F)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + F.zero == a and a * F.one == a
    assert a - a == F.zero
    if a:
        assert a * (F.one / a) == F.one
        assert (a / a) == F.one


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(data=st.data())
def test_text_roundtrip(F, data):
    a = data.draw(field_elements(F))
    assert F.parse(F.format(a)) == a


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 16])
def test_zeta_has_exact_order(n):
    F = CF(n)
    z = F.primitive_root_of_unity(n)
    assert z**n == F.one
    assert all(z**k != F.one for k in range(1, n))


@pytest.mark.parametrize("n,coeffs", [
    (1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)), (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


def test_cyclotomic_products():
    F = CF(4)
    i = F.zeta()
    assert i * i == F(-1)
    assert (1 + i) * (1 - i) == F(2)
    assert F.one / (1 + i) == (1 - i) / 2
    w = CF(3).zeta()
    assert w * w + w + 1 == CF(3).zero
    assert F.format(1 + i) == "z + 1"
    assert CF(3).format(w * w) == "-z - 1"


def test_odd_conductor_gives_even_roots():
    F = CF(3)
    z6 = F.primitive_root_of_unity(6)
    assert z6**6 == F.one and z6**3 == F(-1) and z6**2 != F.one


def test_prime_field_roots():
    F = GF(7)
    z = F.primitive_root_of_unity(3)
    assert z**3 == F.one and z != F.one
    with pytest.raises(FieldError):
        F.primitive_root_of_unity(4)
    with pytest.raises(FieldError):
        GF(2).primitive_root_of_unity(2)


def test_formats():
    assert QQ.format(QQ(Fraction(-5, 3))) == "-5/3"
    assert GF(5).format(GF(5)(-1)) == "4 mod 5"
    assert GF(5).parse("3/2") == GF(5)(4)
    assert CF(5).parse("1/2*z^3 - z") == CF(5).zeta() ** 3 / 2 - CF(5).zeta()


@pytest.mark.parametrize("text", ["1/0", "abc", "1//2", "z^"])
def test_malformed_rationals(text):
    with pytest.raises((FieldError, ValueError, ZeroDivisionError)):
        QQ.parse(text)


def test_field_spec_validation():
    with pytest.raises(FieldError):
        GF(9)
    with pytest.raises(FieldError):
        FieldSpec("reals")
    with pytest.raises(FieldError):
        GF(3).parse("1 mod 5")
    for F in FIELDS:
        assert FieldSpec.from_dict(F.to_dict()) == F
        assert FieldSpec.from_string(str(F)) == F


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldError):
        GF(3)(1) + GF(5)(1)
    with pytest.raises(FieldError):
        CF(3).zeta() + CF(4).zeta()


def test_embedding():
    i4 = CF(4).zeta()
    z8 = CF(8).zeta()
    assert CF(8).embed(i4, CF(4)) == z8**2
    assert CF(8).embed(QQ(Fraction(1, 2)), QQ) == CF(8).one / 2
    with pytest.raises(FieldError):
        CF(4).embed(CF(3).zeta(), CF(3))

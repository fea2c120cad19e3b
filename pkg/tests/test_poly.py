from itertools import product

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfexp.poly import (
    Finite,
    NoneUpTo,
    Poly,
    PolynomialError,
    char_p_order,
    factor_fp,
    format_poly,
    is_squarefree,
    order_mod_poly,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
)
from hopfexp.scalars import CF, GF, QQ


def P(F, *coeffs):
    return Poly(F, list(coeffs))


def small_polys(F, max_degree=5):
    if F.kind == "prime":
        coef = st.integers(0, F.n - 1)
    else:
        coef = st.integers(-4, 4)
    return st.lists(coef, min_size=1, max_size=max_degree + 1).map(lambda c: Poly(F, c)).filter(bool)


def monic_factor_lists(F):
    return st.lists(st.tuples(small_polys(F, 2).filter(lambda f: f.degree >= 1), st.integers(1, 3)),
                    min_size=1, max_size=3)


@pytest.mark.parametrize("F", [QQ, GF(2), GF(3), GF(5)], ids=str)
@given(data=st.data())
def test_squarefree_decomposition_reconstructs(F, data):
    parts = data.draw(monic_factor_lists(F))
    f = Poly(F, [1])
    for g, e in parts:
        f = f * g**e
    dec = squarefree_decomposition(f)
    g = Poly(F, [1])
    for h, e in dec:
        assert h.is_monic() and h.degree >= 1
        g = g * h**e
    assert g == f.monic()
    for (a, _), (b, _) in product(dec, dec):
        if a is not b:
            assert poly_gcd(a, b).degree == 0
    s = squarefree_part(f)
    assert is_squarefree(s)
    assert s.divides(f.monic())
    # every irreducible factor of f divides the squarefree part: f | s^k for k = deg f
    assert f.divides(s ** max(f.degree, 1))


def test_squarefree_examples():
    x = Poly.x(QQ)
    assert squarefree_part(x * x) == x
    assert squarefree_part((x - 1) ** 2 * (x + 1)) == (x - 1) * (x + 1)
    assert not is_squarefree((x - 1) ** 2)
    # characteristic p: x^3 - 1 = (x - 1)^3 over F_3
    y = Poly.x(GF(3))
    assert squarefree_decomposition(y**3 - 1) == [(y - 1, 3)]
    assert squarefree_decomposition(y**6 + 2 * y**3 + 1) == [(y + 1, 6)]


def _monic_polys(F, degree):
    for tail in product(range(F.n), repeat=degree):
        yield Poly(F, list(tail) + [1])


def _irreducible_brute(f):
    F = f.field
    for k in range(1, f.degree // 2 + 1):
        for g in _monic_polys(F, k):
            if g.divides(f):
                return False
    return True


@pytest.mark.parametrize("p", [2, 3, 5])
@given(data=st.data())
def test_factor_fp_against_brute_force(p, data):
    F = GF(p)
    f = data.draw(small_polys(F, 6).filter(lambda f: f.degree >= 1)).monic()
    facs = factor_fp(f, seed=data.draw(st.integers(0, 5)))
    g = Poly(F, [1])
    for h, e in facs:
        assert h.is_monic()
        assert _irreducible_brute(h)
        g = g * h**e
    assert g == f


def test_factor_fp_seed_independent():
    F = GF(3)
    x = Poly.x(F)
    f = (x**2 + 1) * (x**2 + x + 2) * (x + 1) ** 2
    results = {tuple((h.c, e) for h, e in factor_fp(f, seed=s)) for s in range(6)}
    assert len(results) == 1


def _order_brute(m, cap):
    x = Poly.x(m.field)
    one = Poly(m.field, [1]) % m
    cur = one
    for n in range(1, cap + 1):
        cur = cur * x % m
        if cur == one:
            return n
    return None


@given(parts=st.lists(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 10, 12]), min_size=1, max_size=3, unique=True))
def test_order_mod_poly_products_of_cyclotomics(parts):
    from hopfexp.scalars import cyclotomic_polynomial

    m = Poly(QQ, [1])
    for k in parts:
        m = m * Poly(QQ, list(cyclotomic_polynomial(k)))
    expected = _order_brute(m, 200)
    assert order_mod_poly(m, 200) == Finite(expected)
    assert order_mod_poly(m, 200, divisor_hint=120 * 7) == Finite(expected)
    assert order_mod_poly(m, 200, prescreen=101) == Finite(expected)


@pytest.mark.parametrize("p", [3, 5, 7])
@settings(max_examples=25)
@given(data=st.data())
def test_order_mod_poly_fp_against_brute_force(p, data):
    F = GF(p)
    m = data.draw(small_polys(F, 4).filter(lambda f: f.degree >= 1 and f.c[0])).monic()
    cap = p**m.degree  # x generates a unit group of order < p^deg m
    expected = _order_brute(m, cap)
    assert expected is not None
    assert order_mod_poly(m, cap) == Finite(expected)
    a, b, n = char_p_order(m, seed=data.draw(st.integers(0, 3)))
    assert n == a * p**b
    assert n == expected
    assert a % p != 0


def test_order_examples():
    x = Poly.x(QQ)
    assert order_mod_poly(x - 1, 10) == Finite(1)
    assert order_mod_poly(x + 1, 10) == Finite(2)
    assert order_mod_poly(x - 2, 50) == NoneUpTo(50)
    assert order_mod_poly((x - 1) ** 2, 50) == NoneUpTo(50)
    # a hint that m does not divide x^B - 1 falls back to the sweep
    assert order_mod_poly(x**2 + x + 1, 10, divisor_hint=4) == Finite(3)
    with pytest.raises(PolynomialError):
        order_mod_poly(x * (x - 1), 10)
    with pytest.raises(PolynomialError):
        order_mod_poly(2 * x - 1, 10)


def test_char_p_order_examples():
    F = GF(3)
    x = Poly.x(F)
    assert char_p_order((x - 1) ** 2) == (1, 1, 3)
    assert char_p_order((x + 1) ** 2) == (2, 1, 6)
    assert char_p_order((x**2 + 1) * (x - 1) ** 4) == (4, 2, 36)
    with pytest.raises(PolynomialError):
        char_p_order(Poly.x(QQ) - 1)


def test_cyclotomic_coefficients():
    F = CF(3)
    w = F.zeta()
    x = Poly.x(F)
    m = (x - w) * (x - w * w)
    assert m == x**2 + x + 1
    assert order_mod_poly(x - w, 10) == Finite(3)


@pytest.mark.parametrize("coeffs,text", [
    ((1, 0, -2, 0, 1), "x^4 - 2*x^2 + 1"),
    ((mpq(-1, 2), 3, mpq(-5, 3)), "-5/3*x^2 + 3*x - 1/2"),
    ((0, 1), "x"),
    ((-1,), "-1"),
    ((), "0"),
])
def test_format_poly(coeffs, text):
    assert format_poly(Poly(QQ, list(coeffs))) == text


def test_format_poly_cyclotomic_coefficients():
    F = CF(4)
    z = F.zeta()
    assert format_poly(Poly(F, [z, z + 1, 1])) == "x^2 + (z + 1)*x + z"


@given(a=small_polys(QQ), b=small_polys(QQ))
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree

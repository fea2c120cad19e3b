import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfexp.catalog import group_algebra, preset, sweedler
from hopfexp.double import (
    DoubleError,
    build_double,
    central_element_z,
    determinant_lemma_check,
    epsilon_slices,
    iterated_coproduct_identity,
    verify_drinfeld_identities,
    verify_quasitriangular,
)
from hopfexp.exponent import double_of
from hopfexp.groups import cyclic, symmetric3
from hopfexp.hopf import HopfError, element_order, is_commutative, verify_hopf
from hopfexp.linalg import determinant
from hopfexp.scalars import QQ


@pytest.mark.parametrize("G", [cyclic(2), symmetric3()], ids=lambda G: G.name)
def test_group_doubles_pass_everything(G):
    D = build_double(group_algebra(G))
    assert D.algebra.dim == G.order**2
    assert all(r.passed for r in D.reports.values())
    assert determinant_lemma_check(D).passed


def test_double_of_group_matches_closed_form():
    """(delta_a (x) g)(delta_b (x) h) = [a = g b g^-1] delta_a (x) g h."""
    G = symmetric3()
    n = G.order
    D = build_double(group_algebra(G)).algebra
    t = G.table
    for a in range(n):
        for g in range(n):
            for b in range(n):
                for h in range(n):
                    conj = t[t[g][b]][G.inverse(g)]
                    expected = {a * n + t[g][h]: QQ.one} if conj == a else {}
                    assert D.mul({a * n + g: QQ.one}, {b * n + h: QQ.one}) == expected


def test_group_double_drinfeld_element():
    """u = sum_g delta_{g^-1} (x) g for D(k[G])."""
    G = symmetric3()
    n = G.order
    D = build_double(group_algebra(G))
    assert D.u == {G.inverse(g) * n + g: QQ.one for g in range(n)}
    assert element_order(D.algebra, D.u, 100) == 6


def test_sweedler_double():
    H = sweedler(QQ)
    D = build_double(H)
    A = D.algebra
    assert A.dim == 16
    assert any(A.S({x: QQ.one}, 2) != {x: QQ.one} for x in range(16))
    rep = verify_drinfeld_identities(D)
    assert rep.passed and rep.checks["S^2(x)=u x u^-1"].passed
    assert not is_commutative(A)


def test_s3_double_u_is_central():
    D = build_double(group_algebra(symmetric3()))
    A = D.algebra
    assert verify_drinfeld_identities(D).checks["Delta(u)=(u x u)(R21 R)^-1"].passed
    for x in range(A.dim):
        e = {x: QQ.one}
        assert A.mul(D.u, e) == A.mul(e, D.u)


@pytest.mark.parametrize("name", ["s3", "sweedler_q", "taft3", "d4_twisted"])
def test_z_is_central_and_grouplike_part(name):
    H = preset(name).algebra
    D = double_of(H)
    z, g = central_element_z(D)
    A = D.algebra
    for x in range(A.dim):
        assert A.mul(z, {x: A.field.one}) == A.mul({x: A.field.one}, z)
    k = element_order(A, g, H.dim)
    assert k is not None and H.dim % k == 0


def test_determinants():
    D2 = build_double(group_algebra(cyclic(2)))
    det = determinant(D2.u_matrix)
    assert det in (QQ(1), QQ(-1))
    assert det**16 == 1
    Ds3 = double_of(preset("s3").algebra)
    assert determinant(Ds3.u_matrix) ** 36 == 1
    Dsw = double_of(preset("sweedler_q").algebra)
    assert determinant(Dsw.u_matrix) ** 16 == 1
    assert determinant_lemma_check(Dsw).passed


def test_epsilon_slices_of_u():
    H = preset("sweedler_q").algebra
    D = double_of(H)
    star, h = epsilon_slices(D)
    assert h == H.one
    assert star == {i: c for i, c in enumerate(H.counit) if c}


@pytest.mark.parametrize("name", ["z2", "sweedler_q"])
@pytest.mark.parametrize("n", [2, 3])
def test_iterated_coproduct_of_r(name, n):
    D = double_of(preset(name).algebra)
    assert iterated_coproduct_identity(D, n) == {}


def test_forged_r_matrix_fails():
    D = double_of(preset("sweedler_q").algebra)
    one = D.algebra.field.one
    assert not verify_quasitriangular(D, {(0, 0): one}).passed


@given(data=st.data())
def test_u_implements_squared_antipode(data):
    D = double_of(preset("sweedler_q").algebra)
    A = D.algebra
    a = data.draw(st.dictionaries(st.integers(0, A.dim - 1), st.integers(-3, 3).map(QQ), max_size=5))
    a = {k: c for k, c in a.items() if c}
    assert A.mul(D.u, a) == A.mul(A.S(a, 2), D.u)
    uinv = D.u_inverse
    assert A.mul(A.mul(D.u, a), uinv) == A.S(a, 2)


def test_verification_of_doubles_is_exact():
    D = double_of(preset("taft3").algebra)
    assert verify_hopf(D.algebra).passed
    assert verify_quasitriangular(D).passed


def test_double_error_is_a_hopf_error():
    assert issubclass(DoubleError, HopfError)

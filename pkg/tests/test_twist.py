import pytest

from hopfexp.catalog import D4_BICHAR, D4_SUBGROUP, group_algebra, preset, sweedler
from hopfexp.double import build_double, verify_quasitriangular
from hopfexp.exponent import compute_exponent
from hopfexp.groups import cyclic, dihedral4, klein, quaternion8
from hopfexp.hopf import HopfError, same_structure, tensor_mul, tensor_of, verify_hopf
from hopfexp.linalg import vsub
from hopfexp.scalars import CF, QQ
from hopfexp.twist import (
    TwistError,
    abelian_grouplikes,
    apply_twist,
    bicharacter_twist,
    character_idempotents,
    gauge_transform,
    make_twist,
    parse_bichar,
    tensor_inverse,
    twist_r_matrix,
    verify_twist,
)


def gens(H, *labels):
    return [H.element({l: 1}) for l in labels]


def trivial_J(H):
    return tensor_of(H.unit, H.unit)


def test_trivial_twist():
    H = group_algebra(dihedral4())
    J = trivial_J(H)
    assert verify_twist(H, J).passed
    assert same_structure(apply_twist(H, J), H)


def test_trivial_bicharacter_gives_trivial_twist():
    H = group_algebra(klein())
    tw = bicharacter_twist(H, gens(H, "a", "b"), [[1] * 4 for _ in range(4)])
    assert tw.J == trivial_J(H)


def test_perturbed_twists_fail_named_checks():
    H = group_algebra(cyclic(3))
    one = QQ.one
    # 1 (x) 1 + (1 - g) (x) (1 - g): counital but not a cocycle
    J = {(0, 0): QQ(2), (0, 1): -one, (1, 0): -one, (1, 1): one}
    assert verify_twist(H, J).failures == ["(Delta x I)(J) J12=(I x Delta)(J) J23"]
    assert verify_twist(H, {(0, 0): QQ(2)}).failures == ["counital"]
    # 1 (x) 1 - g (x) g is not invertible (g (x) g has order 3)
    rep = verify_twist(H, {(0, 0): one, (1, 1): -one})
    assert "J_invertible" in rep.failures
    with pytest.raises(TwistError):
        make_twist(H, J)
    with pytest.raises(TwistError):
        tensor_inverse(H, {(0, 0): one, (1, 1): -one})


def test_tensor_inverse():
    H = preset("sweedler_q").algebra
    x, g = H.index("x"), H.index("g")
    X = {(0, 0): QQ.one, (x, g): QQ(3)}
    Y = tensor_inverse(H, X)
    assert tensor_mul((H, H), X, Y) == trivial_J(H) == tensor_mul((H, H), Y, X)


def test_abelian_twist_leaves_coproduct_unchanged():
    H = group_algebra(klein())
    tw = bicharacter_twist(H, gens(H, "a", "b"), parse_bichar(D4_BICHAR))
    K = apply_twist(H, tw)
    assert K.comult == H.comult


def test_d4_twist_changes_coproduct_but_not_exponent():
    H = group_algebra(dihedral4())
    tw = bicharacter_twist(H, gens(H, *D4_SUBGROUP), parse_bichar(D4_BICHAR))
    K = apply_twist(H, tw)
    assert K.comult != H.comult
    assert verify_hopf(K).passed
    assert compute_exponent(K, "u").value == compute_exponent(H, "u").value == 4


def test_q8_bicharacter_twists_are_trivial():
    # the only order-2 grouplike is central, so J commutes with every Delta(x)
    H = group_algebra(quaternion8())
    tw = bicharacter_twist(H, gens(H, "i^2"), parse_bichar("1,1;1,-1"))
    assert tw.J != trivial_J(H)
    assert apply_twist(H, tw).comult == H.comult


def test_gauge_transform_is_a_twist():
    H = group_algebra(quaternion8())
    base = bicharacter_twist(H, gens(H, "i^2"), parse_bichar("1,1;1,-1"))
    a = H.element({"e": 1, "i": "1/3", "i^3": "-1/3"})
    J = gauge_transform(H, base.J, a)
    assert verify_twist(H, J).passed
    K = apply_twist(H, J)
    assert K.comult != H.comult
    with pytest.raises(TwistError):
        gauge_transform(H, base.J, H.element({"e": 2}))
    with pytest.raises(TwistError):
        gauge_transform(H, base.J, H.element({"e": "1/2", "i^2": "1/2"}))


def test_character_idempotents_are_orthogonal():
    H = group_algebra(cyclic(4), CF(4))
    A = abelian_grouplikes(H, gens(H, "g"))
    idem = character_idempotents(H, A)
    total = {}
    for i, e in enumerate(idem):
        for j, f in enumerate(idem):
            assert H.mul(e, f) == (e if i == j else {})
        for k, c in e.items():
            total[k] = total.get(k, 0) + c
    assert {k: c for k, c in total.items() if c} == H.one


def test_bicharacter_errors():
    H = group_algebra(quaternion8())
    with pytest.raises(TwistError, match="do not commute"):
        abelian_grouplikes(H, gens(H, "i", "j"))
    with pytest.raises(TwistError, match="not grouplike"):
        abelian_grouplikes(H, [H.element({"i": 1, "j": 1})])
    D = group_algebra(dihedral4())
    with pytest.raises(TwistError, match="independent"):
        abelian_grouplikes(D, gens(D, "r^2", "r^2"))
    with pytest.raises(TwistError, match="2x2"):
        bicharacter_twist(H, gens(H, "i^2"), [[1]])
    with pytest.raises(TwistError, match="multiplicative"):
        bicharacter_twist(H, gens(H, "i^2"), [[1, 1], [1, 2]])
    Z3 = group_algebra(cyclic(3))
    with pytest.raises(TwistError, match="roots of unity"):
        bicharacter_twist(Z3, gens(Z3, "g"), [[1] * 3] * 3)
    with pytest.raises(TwistError):
        abelian_grouplikes(H, [])


def test_twist_r_matrix_with_trivial_twist():
    D = build_double(group_algebra(cyclic(2)))
    A = D.algebra
    assert twist_r_matrix(A, D.r_matrix, trivial_J(A)) == D.r_matrix
    with pytest.raises(TwistError):
        twist_r_matrix(A, {(0, 0, 0): QQ.one}, trivial_J(A))


def _double_twist(name):
    D = build_double(preset(name).algebra)
    A = D.algebra
    g = D.embed_H[1]
    chi = vsub(D.embed_Hstar[0], D.embed_Hstar[1])
    tw = bicharacter_twist(A, [g, chi], parse_bichar(D4_BICHAR))
    return D, tw


def test_twisted_r_matrix_is_conjugate():
    """R21^J R^J = J^-1 R21 R J, so both monodromies have the same order."""
    D, tw = _double_twist("z2")
    A = D.algebra
    RJ = twist_r_matrix(A, D.r_matrix, tw)
    RJ21 = {(b, a): c for (a, b), c in RJ.items()}
    lhs = tensor_mul((A, A), RJ21, RJ)
    rhs = tensor_mul((A, A), tensor_mul((A, A), tw.J_inverse, D.monodromy), tw.J)
    assert lhs == rhs


def test_twisted_r_matrix_is_quasitriangular():
    D, tw = _double_twist("z2")
    K = apply_twist(D.algebra, tw)
    RJ = twist_r_matrix(D.algebra, D.r_matrix, tw)
    assert RJ != D.r_matrix
    assert verify_quasitriangular(K, RJ).passed


def test_twisted_group_algebra_is_triangular():
    """k[G] with R = 1 (x) 1 twists to k[G]^J with R^J = J21^-1 J."""
    H = group_algebra(dihedral4())
    tw = bicharacter_twist(H, gens(H, *D4_SUBGROUP), parse_bichar(D4_BICHAR))
    K = apply_twist(H, tw)
    assert K.comult != H.comult
    RJ = twist_r_matrix(H, trivial_J(H), tw)
    assert RJ != trivial_J(H)
    assert verify_quasitriangular(K, RJ).passed
    # J itself conjugates Delta^J back to Delta != Delta^J
    assert not verify_quasitriangular(K, tw.J).passed


def test_twist_of_non_group_algebra_requires_grouplikes():
    H = sweedler(QQ)
    with pytest.raises(TwistError):
        bicharacter_twist(H, [H.element({"x": 1})], [[1, 1], [1, -1]])
    assert issubclass(TwistError, HopfError)

"""Constructors for the small example Hopf algebras and the named presets."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import SimpleNamespace

from .groups import GroupError, GroupTable, check_group, cyclic, dihedral4, klein, quaternion8, symmetric3
from .hopf import HopfAlgebra, HopfError, dual, make_hopf, tensor_mul, tensor_product
from .scalars import CF, GF, QQ, FieldError, FieldSpec

INFINITE = "infinite"


def group_algebra(mult_table, field_: FieldSpec = QQ, labels=None, name: str = "") -> HopfAlgebra:
    """k[G]: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    if isinstance(mult_table, GroupTable):
        labels = labels or mult_table.labels
        name = name or f"k[{mult_table.name}]"
        mult_table = mult_table.table
    try:
        ident = check_group(mult_table)
    except GroupError as exc:
        raise HopfError(f"not a group table: {exc}") from None
    n = len(mult_table)
    labels = tuple(labels or (str(i) for i in range(n)))
    one = field_.one
    mult = {(a, b): {mult_table[a][b]: one} for a in range(n) for b in range(n)}
    comult = tuple({(g, g): one} for g in range(n))
    antipode = tuple({mult_table[g].index(ident): one} for g in range(n))
    grouplikes = tuple({g: one} for g in range(n))
    semisimple = field_.characteristic == 0 or n % field_.characteristic != 0
    return make_hopf(field_, labels, mult, {ident: one}, comult, [one] * n, antipode,
                     grouplikes=grouplikes, flags={"semisimple": semisimple, "cosemisimple": True}, name=name)


def dual_group_algebra(G, field_: FieldSpec = QQ) -> HopfAlgebra:
    """k^G = k[G]^*, in the basis of point evaluations delta_g."""
    H = dual(group_algebra(G, field_))
    table = G.table if isinstance(G, GroupTable) else G
    n = len(table)
    semisimple = field_.characteristic == 0 or n % field_.characteristic != 0
    H.flags = {"semisimple": True, "cosemisimple": semisimple}
    H.labels = tuple(f"d({l})" for l in (G.labels if isinstance(G, GroupTable) else map(str, range(n))))
    H.name = f"k^{G.name}" if isinstance(G, GroupTable) else "k^G"
    return H


def _monomial_label(i: int, j: int) -> str:
    g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
    x = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
    return (g + x) or "1"


def taft_algebra(n: int, field_: FieldSpec, q=None, name: str = "") -> HopfAlgebra:
    """Taft algebra: g^n = 1, x^n = 0, x g = q g x, Delta(x) = x (x) 1 + g (x) x.

    Basis g^i x^j has index i*n + j.
    """
    if n < 2:
        raise HopfError("Taft algebras need n >= 2")
    if q is None:
        q = field_.primitive_root_of_unity(n)
    q = field_(q)
    if any(q**k == 1 for k in range(1, n)) or q**n != 1:
        raise FieldError(f"{field_.format(q)} is not a primitive {n}-th root of unity")
    one = field_.one

    def idx(i, j):
        return (i % n) * n + j

    mult = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d < n:
                        mult[(idx(a, b), idx(c, d))] = {idx(a + c, b + d): q ** (b * c)}
    proto = SimpleNamespace(mult=mult)
    g2 = {(idx(1, 0), idx(1, 0)): one}
    x2 = {(idx(0, 1), idx(0, 0)): one, (idx(1, 0), idx(0, 1)): one}
    one2 = {(0, 0): one}
    comult = []
    for a in range(n):
        ga = one2
        for _ in range(a):
            ga = tensor_mul((proto, proto), ga, g2)
        for b in range(n):
            xb = ga
            for _ in range(b):
                xb = tensor_mul((proto, proto), xb, x2)
            comult.append(xb)
    # comult list is indexed a*n + b, matching idx(a, b)
    counit = [one if j == 0 else field_.zero for i in range(n) for j in range(n)]
    labels = tuple(_monomial_label(i, j) for i in range(n) for j in range(n))
    grouplikes = tuple({idx(i, 0): one} for i in range(n))
    return make_hopf(field_, labels, mult, {0: one}, comult, counit,
                     grouplikes=grouplikes, flags={"semisimple": False, "cosemisimple": False},
                     name=name or f"T{n * n}")


def sweedler(field_: FieldSpec = QQ) -> HopfAlgebra:
    return taft_algebra(2, field_, name=f"H4/{field_}")


# ---------------------------------------------------------------- presets


@dataclass(frozen=True)
class Expectation:
    """Known answers for a preset; ``exponent`` is an int or INFINITE."""

    exponent: object = None
    semisimple: bool | None = None
    cosemisimple: bool | None = None
    group_exponent: int | None = None
    source: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: HopfAlgebra
    expected: Expectation
    params: dict = field(default_factory=dict)
    family: str = ""


D4_SUBGROUP = ("r^2", "s")
# characters of Z2 x Z2 in lexicographic order (0,0),(0,1),(1,0),(1,1); b(a, c) = (-1)^(a_1 c_2)
D4_BICHAR = "1,1,1,1;1,1,1,1;1,-1,1,-1;1,-1,1,-1"
Q8_SUBGROUP = ("i^2",)
Q8_BICHAR = "1,1;1,-1"
# invertible, counit 1, not central: moves the (otherwise invariant) Q8 twist off Delta
Q8_GAUGE = {"e": 1, "i": "1/3", "i^3": "-1/3"}

_GROUPS = {
    "trivial": lambda: cyclic(1),
    **{f"z{n}": (lambda n=n: cyclic(n)) for n in range(2, 9)},
    "klein": klein,
    "s3": symmetric3,
    "d4": dihedral4,
    "q8": quaternion8,
}


def _group_entry(name: str) -> CatalogEntry:
    G = _GROUPS[name]()
    H = group_algebra(G, QQ, name="k" if name == "trivial" else "")
    e = G.exponent()
    return CatalogEntry(
        name, H,
        Expectation(e, True, True, e, {"exponent": "group exponent from the multiplication table"}),
        {"group": G.name, "field": "Q"}, "groups",
    )


def _twisted_entry(name: str) -> CatalogEntry:
    from .twist import bicharacter_twist, gauge_transform, apply_twist, make_twist, parse_bichar

    if name == "d4_twisted":
        G = dihedral4()
        H = group_algebra(G, QQ)
        gens = [H.element({l: 1}) for l in D4_SUBGROUP]
        tw = bicharacter_twist(H, gens, parse_bichar(D4_BICHAR))
        params = {"parent": "d4", "subgroup": ",".join(D4_SUBGROUP), "bichar": D4_BICHAR}
    else:
        G = quaternion8()
        H = group_algebra(G, QQ)
        gens = [H.element({l: 1}) for l in Q8_SUBGROUP]
        base = bicharacter_twist(H, gens, parse_bichar(Q8_BICHAR))
        J = gauge_transform(H, base.J, H.element(Q8_GAUGE))
        tw = make_twist(H, J, "gauge transform of a bicharacter twist")
        params = {"parent": "q8", "subgroup": ",".join(Q8_SUBGROUP), "bichar": Q8_BICHAR,
                  "gauge": ", ".join(f"{v}*{k}" for k, v in Q8_GAUGE.items())}
    K = apply_twist(H, tw)
    K.name = name
    e = G.exponent()
    exp = Expectation(e, True, True, e, {"exponent": "twisting preserves the exponent; untwisted group exponent"})
    return CatalogEntry(name, K, exp, params, "twists")


def _build(name: str) -> CatalogEntry:
    if name in _GROUPS:
        return _group_entry(name)
    if name == "s3_dual":
        G = symmetric3()
        return CatalogEntry(name, dual_group_algebra(G, QQ),
                            Expectation(6, True, True, 6, {"exponent": "dual has the exponent of S3"}),
                            {"group": "S3", "field": "Q"}, "duals")
    if name == "sweedler_q":
        return CatalogEntry(name, sweedler(QQ),
                            Expectation(INFINITE, False, False, None, {"exponent": "nontrivial skew-primitive x"}),
                            {"n": 2, "field": "Q"}, "pointed")
    if name in ("sweedler_f3", "sweedler_f5"):
        p = int(name[-1])
        H = sweedler(GF(p))
        # computed by the direct Sweedler-power search (see tests/test_exponent.py)
        return CatalogEntry(name, H,
                            Expectation(2 * p, False, False, None, {"exponent": "direct Sweedler-power search"}),
                            {"n": 2, "field": f"F_{p}"}, "pointed")
    if name == "taft3":
        return CatalogEntry(name, taft_algebra(3, CF(3), name="T9"),
                            Expectation(INFINITE, False, False, None, {"exponent": "nontrivial skew-primitive x"}),
                            {"n": 3, "field": "Q(zeta_3)"}, "pointed")
    if name in ("d4_twisted", "q8_twisted"):
        return _twisted_entry(name)
    if name == "z2_tensor_z3":
        H = tensor_product(group_algebra(cyclic(2)), group_algebra(cyclic(3)))
        H.name = name
        return CatalogEntry(name, H, Expectation(6, True, True, None, {"exponent": "lcm of the factors, 2 and 3"}),
                            {"factors": "z2,z3", "field": "Q"}, "products")
    if name == "sweedler_tensor_z2":
        F = GF(3)
        H = tensor_product(sweedler(F), group_algebra(cyclic(2), F))
        H.name = name
        return CatalogEntry(name, H, Expectation(6, False, False, None, {"exponent": "lcm of the factors, 6 and 2"}),
                            {"factors": "sweedler_f3,z2", "field": "F_3"}, "products")
    raise KeyError(name)


PRESET_NAMES = (
    "trivial", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "klein", "s3", "d4", "q8", "s3_dual",
    "sweedler_q", "sweedler_f3", "sweedler_f5", "taft3", "d4_twisted", "q8_twisted",
    "z2_tensor_z3", "sweedler_tensor_z2",
)


def preset_names() -> tuple:
    return PRESET_NAMES


@lru_cache(maxsize=None)
def preset(name: str) -> CatalogEntry:
    """Build and verify a named preset; raises KeyError for unknown names."""
    if name not in PRESET_NAMES:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")
    from .hopf import verify_hopf

    entry = _build(name)
    rep = verify_hopf(entry.algebra)
    if not rep.passed:
        raise HopfError(f"preset {name} fails {', '.join(rep.failures)}")
    return entry

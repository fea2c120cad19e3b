"""Drinfeld twists J in H (x) H and the twisted Hopf algebras H^J.

Conventions: J satisfies (Delta x I)(J) J_12 = (I x Delta)(J) J_23 and
(eps x I)(J) = (I x eps)(J) = 1; the twisted coproduct is J^-1 Delta(x) J and
the twisted R-matrix is J_21^-1 R J.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .hopf import (
    AxiomReport,
    HopfAlgebra,
    HopfError,
    _Residuals,
    apply_comult_leg,
    apply_counit_leg,
    element_order,
    embed_legs_unit,
    is_grouplike,
    make_hopf,
    permute_legs,
    tensor_mul,
    tensor_of,
    verify_hopf,
)
from .linalg import InconsistentSystem, Matrix, linear_solve, vsub
from .scalars import FieldError


class TwistError(HopfError):
    pass


@dataclass(eq=False)
class Twist:
    parent: HopfAlgebra
    J: dict
    J_inverse: dict
    description: str = ""


def _left_tensor_matrix(H: HopfAlgebra, X: dict) -> Matrix:
    """Left multiplication by X on H (x) H, basis (a, b) -> a*d + b."""
    d = H.dim
    one = H.field.one
    cols = []
    for a in range(d):
        for b in range(d):
            prod_ = tensor_mul((H, H), X, {(a, b): one})
            cols.append({i * d + j: c for (i, j), c in prod_.items()})
    return Matrix.from_columns(H.field, d * d, cols)


def tensor_inverse(H: HopfAlgebra, X: dict) -> dict:
    """Two-sided inverse of X in H (x) H; raises TwistError if X is not invertible."""
    d = H.dim
    one2 = tensor_of(H.unit, H.unit)
    rhs = [H.field.zero] * (d * d)
    for (a, b), c in one2.items():
        rhs[a * d + b] = c
    try:
        sol = linear_solve(_left_tensor_matrix(H, X), rhs)
    except InconsistentSystem:
        raise TwistError("tensor is not invertible") from None
    Y = {divmod(k, d): c for k, c in enumerate(sol) if c}
    if tensor_mul((H, H), Y, X) != one2:
        raise TwistError("tensor has a right inverse that is not a left inverse")
    return Y


def verify_twist(H: HopfAlgebra, J: dict) -> AxiomReport:
    """Cocycle, counit and invertibility conditions for J."""
    rep = AxiomReport(subject=H.name)
    res = _Residuals()
    try:
        tensor_inverse(H, J)
    except TwistError as exc:
        res.put("J", str(exc))
    rep.record("J_invertible", res)

    J12 = embed_legs_unit(J, (0, 1), 3, H.unit)
    J23 = embed_legs_unit(J, (1, 2), 3, H.unit)
    lhs = tensor_mul((H, H, H), apply_comult_leg(H, J, 0), J12)
    rhs = tensor_mul((H, H, H), apply_comult_leg(H, J, 1), J23)
    res = _Residuals()
    res.put("lhs-rhs", vsub(lhs, rhs))
    rep.record("(Delta x I)(J) J12=(I x Delta)(J) J23", res)

    unit1 = {(i,): c for i, c in H.unit.items()}
    res = _Residuals()
    res.put("(eps x I)(J)-1", vsub(apply_counit_leg(H, J, 0), unit1))
    res.put("(I x eps)(J)-1", vsub(apply_counit_leg(H, J, 1), unit1))
    rep.record("counital", res)
    return rep


def make_twist(H: HopfAlgebra, J: dict, description: str = "") -> Twist:
    rep = verify_twist(H, J)
    if not rep.passed:
        raise TwistError(f"not a twist: failed {', '.join(rep.failures)}")
    return Twist(H, dict(J), tensor_inverse(H, J), description)


def apply_twist(H: HopfAlgebra, J) -> HopfAlgebra:
    """H^J: same algebra, coproduct J^-1 Delta(x) J, antipode solved afresh."""
    tw = J if isinstance(J, Twist) else make_twist(H, J)
    if tw.parent is not H:
        tw = make_twist(H, tw.J, tw.description)
    comult = tuple(tensor_mul((H, H), tensor_mul((H, H), tw.J_inverse, D), tw.J) for D in H.comult)
    grouplikes = tuple(g for g in H.grouplikes if tensor_mul((H, H), tensor_mul((H, H), tw.J_inverse, tensor_of(g, g)), tw.J) == tensor_of(g, g))
    K = make_hopf(H.field, H.labels, H.mult, H.unit, comult, H.counit,
                  grouplikes=grouplikes, flags=dict(H.flags), name=f"{H.name}^J" if H.name else "")
    rep = verify_hopf(K)
    if not rep.passed:
        raise TwistError(f"twisted algebra fails {', '.join(rep.failures)}")
    return K


def twist_r_matrix(A: HopfAlgebra, R: dict, J, J_inverse: dict | None = None) -> dict:
    """R^J = J_21^-1 R J in A (x) A."""
    if isinstance(J, Twist):
        J, J_inverse = J.J, J.J_inverse
    if any(len(k) != 2 for k in R) or any(len(k) != 2 for k in J):
        raise TwistError("R and J must both be 2-tensors")
    if any(max(k) >= A.dim for k in list(R) + list(J)):
        raise TwistError("tensor indices exceed the algebra dimension")
    if J_inverse is None:
        J_inverse = tensor_inverse(A, J)
    J21inv = permute_legs(J_inverse, (1, 0))
    return tensor_mul((A, A), tensor_mul((A, A), J21inv, R), J)


def gauge_transform(H: HopfAlgebra, J: dict, a: dict) -> dict:
    """Delta(a) J (a^-1 x a^-1) for invertible a with eps(a) = 1.

    The result is again a twist and H^J' is isomorphic to H^J via conjugation by a.
    """
    if H.eps(a) != H.field.one:
        raise TwistError("gauge element must have counit 1")
    L = H.left_mult_matrix(a)
    try:
        ainv_vec = linear_solve(L, [H.unit.get(i, H.field.zero) for i in range(H.dim)])
    except InconsistentSystem:
        raise TwistError("gauge element is not invertible") from None
    ainv = {i: c for i, c in enumerate(ainv_vec) if c}
    return tensor_mul((H, H), tensor_mul((H, H), H.comul(a), J), tensor_of(ainv, ainv))


# ---------------------------------------------------------------- bicharacter twists


@dataclass(frozen=True)
class AbelianGrouplikes:
    """Pairwise-commuting grouplikes g_1..g_r generating a product of cyclic groups."""

    generators: tuple
    orders: tuple

    @property
    def order(self) -> int:
        return prod(self.orders)

    def characters(self) -> list[tuple]:
        """Characters chi_c with chi_c(g_i) = zeta_{n_i}^{c_i}, lexicographic in c."""
        return list(product(*(range(n) for n in self.orders)))


def abelian_grouplikes(H: HopfAlgebra, generators) -> AbelianGrouplikes:
    gens = tuple(dict(g) for g in generators)
    if not gens:
        raise TwistError("need at least one grouplike generator")
    for g in gens:
        if not is_grouplike(H, g):
            raise TwistError("generator is not grouplike")
    for g in gens:
        for h in gens:
            if H.mul(g, h) != H.mul(h, g):
                raise TwistError("grouplike generators do not commute")
    orders = []
    for g in gens:
        n = element_order(H, g, H.dim)
        if n is None:
            raise TwistError("grouplike of order exceeding the dimension")
        orders.append(n)
    A = AbelianGrouplikes(gens, tuple(orders))
    # the generators must give a direct product decomposition
    seen = set()
    for exps in A.characters():
        key = tuple(sorted(_group_word(H, A, exps).items()))
        seen.add(key)
    if len(seen) != A.order:
        raise TwistError("generators are not independent (subgroup is not their direct product)")
    return A


def _group_word(H: HopfAlgebra, A: AbelianGrouplikes, exps) -> dict:
    out = H.one
    for g, e in zip(A.generators, exps):
        out = H.mul(out, H.power(g, e))
    return out


def character_idempotents(H: HopfAlgebra, A: AbelianGrouplikes) -> list[dict]:
    """e_chi = |A|^-1 sum_a chi(a)^-1 a, in the order of A.characters()."""
    F = H.field
    roots = []
    for n in A.orders:
        try:
            roots.append(F.primitive_root_of_unity(n))
        except FieldError as exc:
            raise TwistError(f"field lacks roots of unity for the character group: {exc}") from None
    if F.characteristic and A.order % F.characteristic == 0:
        raise TwistError("group order divisible by the characteristic; characters do not split")
    words = [(exps, _group_word(H, A, exps)) for exps in A.characters()]
    scale = F.one / F(A.order)
    idem = []
    for chi in A.characters():
        e: dict = {}
        for exps, w in words:
            val = F.one
            for z, c, a, n in zip(roots, chi, exps, A.orders):
                val = val * z ** ((-c * a) % n)
            for k, x in w.items():
                s = e.get(k, F.zero) + val * x * scale
                if s:
                    e[k] = s
                else:
                    e.pop(k, None)
        idem.append(e)
    return idem


def check_bicharacter(F, A: AbelianGrouplikes, table) -> None:
    chars = A.characters()
    n = len(chars)
    if len(table) != n or any(len(r) != n for r in table):
        raise TwistError(f"bicharacter table must be {n}x{n}")
    pos = {c: i for i, c in enumerate(chars)}

    def mul(c1, c2):
        return tuple((x + y) % m for x, y, m in zip(c1, c2, A.orders))

    for a in chars:
        for b in chars:
            for c in chars:
                if table[pos[mul(a, b)]][pos[c]] != table[pos[a]][pos[c]] * table[pos[b]][pos[c]]:
                    raise TwistError("table is not multiplicative in the first argument")
                if table[pos[c]][pos[mul(a, b)]] != table[pos[c]][pos[a]] * table[pos[c]][pos[b]]:
                    raise TwistError("table is not multiplicative in the second argument")


def bicharacter_twist(H: HopfAlgebra, grouplikes, bichar) -> Twist:
    """J = sum_{chi, psi} b(chi, psi) e_chi (x) e_psi.

    ``bichar`` is a square table indexed by characters in lexicographic order
    of their exponent vectors (see :meth:`AbelianGrouplikes.characters`).
    """
    F = H.field
    A = abelian_grouplikes(H, grouplikes)
    table = [[F.parse(x) if isinstance(x, str) else F(x) for x in row] for row in bichar]
    check_bicharacter(F, A, table)
    idem = character_idempotents(H, A)
    J: dict = {}
    for i, ei in enumerate(idem):
        for j, ej in enumerate(idem):
            b = table[i][j]
            if not b:
                continue
            for k, c in tensor_of(ei, ej).items():
                s = J.get(k, F.zero) + b * c
                if s:
                    J[k] = s
                else:
                    J.pop(k, None)
    return make_twist(H, J, description=f"bicharacter on a subgroup of order {A.order}")


def parse_bichar(text: str) -> list[list[str]]:
    """'1,1;1,-1' -> [['1','1'],['1','-1']]."""
    return [[x.strip() for x in row.split(",")] for row in text.strip().split(";")]

"""The Drinfeld double D(H) = H^{*cop} (x) H with its R-matrix and Drinfeld element.

Basis: e_i^* (x) e_j has index i*d + j (the H^* index is major).  The cross
relation is

    (p (x) h)(q (x) l) = sum p (h_(1) -> q <- S^-1(h_(3))) (x) h_(2) l,

with (a -> q <- b)(x) = q(b x a).  The antipode is not transcribed: the antipodes
of the two factors are solved as convolution inverses and extended
anti-multiplicatively, and the axioms are re-verified on the result.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .hopf import (
    AxiomReport,
    HopfAlgebra,
    HopfError,
    _Residuals,
    apply_comult_leg,
    apply_map_leg,
    coopposite,
    dual,
    embed_legs_unit,
    is_grouplike,
    make_hopf,
    permute_legs,
    tensor_mul,
    tensor_of,
    verify_hopf,
)
from .linalg import Matrix, determinant, linear_solve, InconsistentSystem, vadd, vsub


class DoubleError(HopfError):
    pass


@dataclass(eq=False)
class DrinfeldDouble:
    algebra: HopfAlgebra
    base: HopfAlgebra
    embed_H: tuple  # images of e_j
    embed_Hstar: tuple  # images of e_i^*
    r_matrix: dict  # over (D index, D index)
    u: dict
    reports: dict = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.base.dim

    @cached_property
    def u_matrix(self) -> Matrix:
        return self.algebra.left_mult_matrix(self.u)

    @cached_property
    def u_inverse(self) -> dict:
        D = self.algebra
        try:
            x = linear_solve(self.u_matrix, [D.unit.get(i, D.field.zero) for i in range(D.dim)])
        except InconsistentSystem:
            raise DoubleError("Drinfeld element is not invertible") from None
        return {i: a for i, a in enumerate(x) if a}

    @cached_property
    def r21(self) -> dict:
        return permute_legs(self.r_matrix, (1, 0))

    @cached_property
    def monodromy(self) -> dict:
        """R_21 R in D (x) D."""
        D = self.algebra
        return tensor_mul((D, D), self.r21, self.r_matrix)


def _triple_coproduct(H: HopfAlgebra, j: int) -> dict:
    return apply_comult_leg(H, H.comult[j], 0)


def build_double(H: HopfAlgebra, verify: bool = True) -> DrinfeldDouble:
    """Construct D(H); with ``verify`` every postcondition check must pass."""
    d = H.dim
    F = H.field
    one = F.one
    Hd = dual(H)
    Hsc = coopposite(Hd)  # H^{*cop}
    Sinv = H.antipode_inverse

    def idx(i, j):
        return i * d + j

    # S^-1(e_c) e_m e_a, needed for every (a, c) occurring in a triple coproduct
    cache: dict = {}

    def sandwich(c, a):
        key = (c, a)
        if key not in cache:
            left = Sinv[c]
            cache[key] = [H.mul(H.mul(left, {m: one}), {a: one}) for m in range(d)]
        return cache[key]

    # cross[(j, k)] = (1 (x) e_j)(e_k^* (x) 1) as {(m, b): coef}
    cross: dict = {}
    for j in range(d):
        for (a, b, c), coef in _triple_coproduct(H, j).items():
            sw = sandwich(c, a)
            for m in range(d):
                for k, x in sw[m].items():
                    bucket = cross.setdefault((j, k), {})
                    key = (m, b)
                    s = bucket.get(key)
                    s = coef * x if s is None else s + coef * x
                    if s:
                        bucket[key] = s
                    else:
                        del bucket[key]

    mult: dict = {}
    for i in range(d):
        for j in range(d):
            for k in range(d):
                X = cross.get((j, k))
                if not X:
                    continue
                for l in range(d):
                    acc: dict = {}
                    for (m, b), x in X.items():
                        p = Hd.mult.get((i, m))
                        h = H.mult.get((b, l))
                        if not p or not h:
                            continue
                        for pi, pc in p.items():
                            for hj, hc in h.items():
                                key = idx(pi, hj)
                                s = acc.get(key)
                                t = x * pc * hc
                                s = t if s is None else s + t
                                if s:
                                    acc[key] = s
                                else:
                                    del acc[key]
                    if acc:
                        mult[(idx(i, j), idx(k, l))] = acc

    unit = {idx(i, t): c * u for i, c in Hd.unit.items() for t, u in H.unit.items()}
    counit = [Hd.counit[i] * H.counit[j] for i in range(d) for j in range(d)]
    comult = []
    for i in range(d):
        for j in range(d):
            Dij: dict = {}
            for (p1, p2), x in Hsc.comult[i].items():
                for (h1, h2), y in H.comult[j].items():
                    key = (idx(p1, h1), idx(p2, h2))
                    Dij[key] = Dij.get(key, F.zero) + x * y
            comult.append({k: v for k, v in Dij.items() if v})

    embed_H = tuple({idx(i, j): c for i, c in Hd.unit.items()} for j in range(d))
    embed_Hstar = tuple({idx(i, t): c for t, c in H.unit.items()} for i in range(d))

    labels = tuple(f"{H.labels[i]}*|{H.labels[j]}" for i in range(d) for j in range(d))
    # antipode of H^{*cop}, solved as a convolution inverse
    S_sc = make_hopf(F, Hsc.labels, Hsc.mult, Hsc.unit, Hsc.comult, Hsc.counit).antipode
    partial = HopfAlgebra(F, labels, mult, unit, tuple(comult), tuple(counit), tuple({} for _ in range(d * d)))

    def emb_H(v):
        out: dict = {}
        for j, c in v.items():
            vadd(out, embed_H[j], c)
        return out

    def emb_Hs(v):
        out: dict = {}
        for i, c in v.items():
            vadd(out, embed_Hstar[i], c)
        return out

    antipode = []
    for i in range(d):
        Sp = emb_Hs(S_sc[i])
        for j in range(d):
            antipode.append(partial.mul(emb_H(H.antipode[j]), Sp))

    flags = {}
    if H.flags.get("semisimple") and H.flags.get("cosemisimple"):
        flags = {"semisimple": True, "cosemisimple": True}
    grouplikes = tuple(
        partial.mul(emb_Hs(a), emb_H(g)) for a in (Hd.grouplikes or (Hd.one,)) for g in (H.grouplikes or (H.one,))
    ) if H.grouplikes else ()
    algebra = HopfAlgebra(F, labels, mult, unit, tuple(comult), tuple(counit), tuple(antipode),
                          grouplikes=grouplikes, flags=flags, name=f"D({H.name})" if H.name else "")

    R = {}
    for i in range(d):
        for a, x in embed_H[i].items():
            for b, y in embed_Hstar[i].items():
                R[(a, b)] = R.get((a, b), F.zero) + x * y
    R = {k: v for k, v in R.items() if v}

    u: dict = {}
    for i in range(d):
        # S(h_i^*) h_i
        vadd(u, algebra.mul(algebra.S(embed_Hstar[i]), embed_H[i]))

    D = DrinfeldDouble(algebra, H, embed_H, embed_Hstar, R, u)
    if verify:
        reports = {
            "hopf": verify_hopf(algebra),
            "quasitriangular": verify_quasitriangular(D),
            "drinfeld": verify_drinfeld_identities(D),
        }
        D.reports = reports
        bad = [f"{k}:{','.join(r.failures)}" for k, r in reports.items() if not r.passed]
        if bad:
            raise DoubleError(f"double of {H.name or 'H'} failed verification: {'; '.join(bad)}")
    return D


def drinfeld_element(D: DrinfeldDouble) -> dict:
    return dict(D.u)


# ---------------------------------------------------------------- verification


def _algebra_and_r(D, R):
    if isinstance(D, DrinfeldDouble):
        return D.algebra, D.r_matrix if R is None else R
    if R is None:
        raise DoubleError("an R-matrix is required for a plain Hopf algebra")
    return D, R


def r_inverse(D, R: dict | None = None) -> dict:
    """(S (x) I)(R), the inverse of R in any quasitriangular Hopf algebra."""
    A, R = _algebra_and_r(D, R)
    return apply_map_leg(A.antipode, R, 0)


def verify_quasitriangular(D, r_matrix: dict | None = None) -> AxiomReport:
    """Quasitriangularity of (A, R); D is a DrinfeldDouble or a HopfAlgebra with ``r_matrix``."""
    A, R = _algebra_and_r(D, r_matrix)
    one2 = tensor_of(A.unit, A.unit)
    rep = AxiomReport(subject=A.name)

    Rinv = r_inverse(A, R)
    res = _Residuals()
    res.put("R*Rinv", vsub(tensor_mul((A, A), R, Rinv), one2))
    res.put("Rinv*R", vsub(tensor_mul((A, A), Rinv, R), one2))
    rep.record("R_invertible", res, "inverse exhibited as (S x I)(R)")

    res = _Residuals()
    for x in range(A.dim):
        Dx = A.comult[x]
        lhs = tensor_mul((A, A), R, Dx)
        rhs = tensor_mul((A, A), permute_legs(Dx, (1, 0)), R)
        res.put(x, vsub(lhs, rhs))
    rep.record("R_Delta_Rinv=Delta_cop", res)

    R13 = embed_legs_unit(R, (0, 2), 3, A.unit)
    R23 = embed_legs_unit(R, (1, 2), 3, A.unit)
    R12 = embed_legs_unit(R, (0, 1), 3, A.unit)
    res = _Residuals()
    res.put("lhs-rhs", vsub(apply_comult_leg(A, R, 0), tensor_mul((A, A, A), R13, R23)))
    rep.record("(Delta x I)(R)=R13 R23", res)
    res = _Residuals()
    res.put("lhs-rhs", vsub(apply_comult_leg(A, R, 1), tensor_mul((A, A, A), R13, R12)))
    rep.record("(I x Delta)(R)=R13 R12", res)
    return rep


def verify_drinfeld_identities(D: DrinfeldDouble) -> AxiomReport:
    A = D.algebra
    H = D.base
    F = A.field
    u = D.u
    rep = AxiomReport(subject=A.name)

    res = _Residuals()
    for x in range(A.dim):
        e = {x: F.one}
        # S^2(x) = u x u^-1  <=>  S^2(x) u = u x
        res.put(x, vsub(A.mul(A.S(e, 2), u), A.mul(u, e)))
    rep.record("S^2(x)=u x u^-1", res)

    res = _Residuals()
    try:
        D.u_inverse
    except DoubleError:
        res.put("u", "singular")
    rep.record("u_invertible", res)

    res = _Residuals()
    lhs = tensor_mul((A, A), A.comul(u), D.monodromy)
    res.put("Delta(u) R21 R - u(x)u", vsub(lhs, tensor_of(u, u)))
    rep.record("Delta(u)=(u x u)(R21 R)^-1", res)

    res = _Residuals()
    if A.eps(u) != F.one:
        res.put("eps(u)", {0: A.eps(u) - F.one})
    star_slice, h_slice = epsilon_slices(D)
    res.put("m(I x eps)(u)", vsub(star_slice, dual_unit(H)))
    res.put("m(eps x I)(u)", vsub(h_slice, dict(H.unit)))
    rep.record("epsilon_slices", res)
    return rep


def dual_unit(H: HopfAlgebra) -> dict:
    return {i: c for i, c in enumerate(H.counit) if c}


def epsilon_slices(D: DrinfeldDouble, x: dict | None = None) -> tuple[dict, dict]:
    """View x (default u) in H^* (x) H and apply I (x) eps and eps (x) I."""
    H = D.base
    d = D.d
    x = D.u if x is None else x
    star: dict = {}
    h: dict = {}
    for k, c in x.items():
        i, j = divmod(k, d)
        e = H.counit[j]
        if e:
            vadd(star, {i: c * e})
        ev = H.unit.get(i)
        if ev:
            vadd(h, {j: c * ev})
    return star, h


def central_element_z(D: DrinfeldDouble) -> tuple[dict, dict]:
    """z = u S(u) and g = u^-2 z; raises if z is not central or g not grouplike."""
    A = D.algebra
    z = A.mul(D.u, A.S(D.u))
    for x in range(A.dim):
        e = {x: A.field.one}
        if A.mul(z, e) != A.mul(e, z):
            raise DoubleError(f"z does not commute with basis element {A.labels[x]}")
    uinv = D.u_inverse
    g = A.mul(A.mul(uinv, uinv), z)
    if not is_grouplike(A, g):
        raise DoubleError("u^-2 z is not grouplike")
    return z, g


def r_operator_matrix(D: DrinfeldDouble) -> Matrix:
    """Matrix of R = sum e_i (x) e_i^* acting on H (x) H^* by left multiplication."""
    H = D.base
    d = H.dim
    Hd = dual(H)
    F = H.field
    cols = [dict() for _ in range(d * d)]
    for i in range(d):
        LH = H.left_regular[i]
        LS = Hd.left_regular[i]
        for a in range(d):
            for b in range(d):
                col = cols[a * d + b]
                for (x, y), c in tensor_of(LH[a], LS[b]).items():
                    vadd(col, {x * d + y: c})
    return Matrix.from_columns(F, d * d, cols)


def determinant_lemma_check(D: DrinfeldDouble) -> AxiomReport:
    """Regular-module determinant identities: det(R)^d = 1 and det(u)^(d^2) = 1."""
    d = D.d
    F = D.algebra.field
    rep = AxiomReport(subject=D.algebra.name)
    det_r = determinant(r_operator_matrix(D))
    rep.record("det(R|H(x)H*)^d=1", {} if det_r**d == F.one else {"det": det_r}, f"det = {F.format(det_r)}")
    det_u = determinant(D.u_matrix)
    rep.record("det(u|D(H))^(d^2)=1", {} if det_u ** (d * d) == F.one else {"det": det_u}, f"det = {F.format(det_u)}")
    return rep


def iterated_coproduct_identity(D: DrinfeldDouble, n: int) -> dict:
    """Residual of (Delta_n x I)(R) = R_{1,n+1} ... R_{n,n+1}; empty when it holds."""
    A = D.algebra
    R = D.r_matrix
    lhs = {k: c for k, c in R.items()}
    for _ in range(1, n):
        lhs = apply_comult_leg(A, lhs, 0)
    algs = (A,) * (n + 1)
    rhs = None
    for m in range(n):
        Rm = embed_legs_unit(R, (m, n), n + 1, A.unit)
        rhs = Rm if rhs is None else tensor_mul(algs, rhs, Rm)
    return vsub(lhs, rhs)

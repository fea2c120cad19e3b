"""Finite-dimensional Hopf algebras given by structure constants.

Elements are sparse coefficient dicts ``{basis index: scalar}``; k-fold tensors
are dicts keyed by index tuples.  Structure tensors are stored sparsely:

* ``mult[(i, j)]``: the element e_i * e_j
* ``comult[i]``: Delta(e_i) as ``{(j, k): c}``
* ``antipode[j]``: S(e_j)

A :class:`HopfAlgebra` is treated as immutable once built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .linalg import Echelon, InconsistentSystem, Matrix, SingularMatrix, inverse, solve_sparse, vadd, vscale, vsub
from .scalars import FieldError, FieldSpec


class HopfError(ValueError):
    pass


# ---------------------------------------------------------------- the type


@dataclass(eq=False)
class HopfAlgebra:
    field: FieldSpec
    labels: tuple
    mult: dict
    unit: dict
    comult: tuple
    counit: tuple
    antipode: tuple
    grouplikes: tuple = ()
    flags: dict = field(default_factory=dict)
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def one(self) -> dict:
        return dict(self.unit)

    def basis(self, i: int) -> dict:
        return {i: self.field.one}

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise HopfError(f"no basis element labelled {label!r}") from None

    def element(self, coeffs: dict) -> dict:
        """Element from {index or label: number}."""
        out = {}
        for k, a in coeffs.items():
            i = self.index(k) if isinstance(k, str) else k
            a = self.field(a)
            if a:
                out[i] = a
        return out

    # -- products

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        mult = self.mult
        for i, x in a.items():
            for j, y in b.items():
                v = mult.get((i, j))
                if v:
                    vadd(out, v, x * y)
        return out

    def comul(self, a: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            vadd(out, self.comult[i], x)
        return out

    def eps(self, a: dict):
        s = self.field.zero
        for i, x in a.items():
            c = self.counit[i]
            if c:
                s = s + c * x
        return s

    def power(self, a: dict, k: int) -> dict:
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # -- antipode

    @cached_property
    def antipode_inverse(self) -> tuple:
        M = Matrix.from_columns(self.field, self.dim, list(self.antipode))
        try:
            inv = inverse(M)
        except SingularMatrix:
            raise HopfError("antipode is not invertible") from None
        return tuple(inv.columns())

    def antipode_power_columns(self, k: int) -> tuple:
        """Columns of S^k (k may be negative)."""
        return self._antipode_powers(k)

    def _antipode_powers(self, k):
        cache = self.__dict__.setdefault("_spow", {})
        if k in cache:
            return cache[k]
        if k == 0:
            cols = tuple({i: self.field.one} for i in range(self.dim))
        else:
            step = self.antipode if k > 0 else self.antipode_inverse
            prev = self._antipode_powers(k - 1 if k > 0 else k + 1)
            cols = tuple(apply_columns(step, c) for c in prev)
        cache[k] = cols
        return cols

    def S(self, a: dict, k: int = 1) -> dict:
        return apply_columns(self._antipode_powers(k), a)

    # -- regular representation

    @cached_property
    def left_regular(self) -> tuple:
        """L[i] = columns of left multiplication by e_i."""
        d = self.dim
        out = []
        for i in range(d):
            out.append(tuple(dict(self.mult.get((i, j), {})) for j in range(d)))
        return tuple(out)

    def left_mult_matrix(self, a: dict) -> Matrix:
        d = self.dim
        cols = [{} for _ in range(d)]
        for i, x in a.items():
            for j, col in enumerate(self.left_regular[i]):
                vadd(cols[j], col, x)
        return Matrix.from_columns(self.field, d, cols)

    def __repr__(self):
        return f"HopfAlgebra({self.name or '?'}, dim={self.dim}, field={self.field})"


def apply_columns(cols, v: dict) -> dict:
    out: dict = {}
    for j, a in v.items():
        vadd(out, cols[j], a)
    return out


def make_hopf(field_, labels, mult, unit, comult, counit, antipode=None, **meta) -> HopfAlgebra:
    """Assemble a HopfAlgebra, solving for the antipode when none is given."""
    d = len(labels)
    mult = {k: v for k, v in mult.items() if v}
    comult = tuple(comult)
    counit = tuple(field_(c) for c in counit)
    if len(comult) != d or len(counit) != d:
        raise HopfError("structure tensor sizes disagree with the basis")
    if antipode is None:
        antipode = solve_antipode(field_, d, mult, unit, comult, counit)
    return HopfAlgebra(field_, tuple(labels), mult, dict(unit), comult, counit, tuple(antipode), **meta)


def solve_antipode(field_, d, mult, unit, comult, counit) -> tuple:
    """S as the convolution inverse of the identity: sum S(x1) x2 = eps(x) 1.

    Unknown S[m][j] (coefficient of e_m in S(e_j)) is variable m*d + j.
    """
    equations = []
    for i in range(d):
        rows: dict = {}
        for (j, k), c in comult[i].items():
            for m in range(d):
                v = mult.get((m, k))
                if not v:
                    continue
                var = m * d + j
                for t, a in v.items():
                    row = rows.setdefault(t, {})
                    s = row.get(var)
                    s = a * c if s is None else s + a * c
                    if s:
                        row[var] = s
                    else:
                        del row[var]
        for t in range(d):
            rhs = counit[i] * unit.get(t, field_.zero)
            coeffs = rows.get(t, {})
            if coeffs or rhs:
                equations.append((coeffs, rhs))
    try:
        sol, nullity = solve_sparse(equations, d * d, field_)
    except InconsistentSystem:
        raise HopfError("no antipode: the identity has no convolution inverse") from None
    if nullity:
        raise HopfError("antipode equations do not determine S uniquely")
    cols = [{} for _ in range(d)]
    for var, a in sol.items():
        m, j = divmod(var, d)
        cols[j][m] = a
    return tuple(cols)


# ---------------------------------------------------------------- tensors


def tensor_mul(algs, X: dict, Y: dict) -> dict:
    """Product in A_1 (x) ... (x) A_k of tensors keyed by index tuples."""
    if len(algs) == 2 and hasattr(algs[1], "mul"):
        return _tensor_mul2(algs[0], algs[1], X, Y)
    out: dict = {}
    for kx, cx in X.items():
        for ky, cy in Y.items():
            legs = []
            for alg, i, j in zip(algs, kx, ky):
                v = alg.mult.get((i, j))
                if not v:
                    break
                legs.append(v.items())
            else:
                c0 = cx * cy
                for combo in product(*legs):
                    key = tuple(t[0] for t in combo)
                    c = c0
                    for t in combo:
                        c = c * t[1]
                    s = out.get(key)
                    s = c if s is None else s + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
    return out


def _rows(X: dict) -> dict:
    rows: dict = {}
    for (a, b), c in X.items():
        rows.setdefault(a, {})[b] = c
    return rows


def _tensor_mul2(A1, A2, X: dict, Y: dict) -> dict:
    """Two-leg product grouped by first-leg indices: sum_{a,c} e_a e_c (x) X_a Y_c."""
    out: dict = {}
    if not X or not Y:
        return out
    rx, ry = _rows(X), _rows(Y)
    mult1 = A1.mult
    for a, xa in rx.items():
        for c, yc in ry.items():
            m1 = mult1.get((a, c))
            if not m1:
                continue
            w = A2.mul(xa, yc)
            if not w:
                continue
            for p, u in m1.items():
                for q, v in w.items():
                    key = (p, q)
                    t = u * v
                    s = out.get(key)
                    out[key] = t if s is None else s + t
    return {k: v for k, v in out.items() if v}


def tensor_of(*vectors) -> dict:
    """Outer product of sparse vectors."""
    out = {}
    for combo in product(*(v.items() for v in vectors)):
        c = combo[0][1]
        for t in combo[1:]:
            c = c * t[1]
        if c:
            out[tuple(t[0] for t in combo)] = c
    return out


def tensor_one(*algs) -> dict:
    return tensor_of(*(a.unit for a in algs))


def apply_comult_leg(H: HopfAlgebra, X: dict, leg: int) -> dict:
    out: dict = {}
    for key, c in X.items():
        for (a, b), x in H.comult[key[leg]].items():
            nk = key[:leg] + (a, b) + key[leg + 1 :]
            s = out.get(nk)
            s = c * x if s is None else s + c * x
            if s:
                out[nk] = s
            else:
                del out[nk]
    return out


def apply_counit_leg(H: HopfAlgebra, X: dict, leg: int) -> dict:
    out: dict = {}
    for key, c in X.items():
        e = H.counit[key[leg]]
        if e:
            nk = key[:leg] + key[leg + 1 :]
            s = out.get(nk)
            s = c * e if s is None else s + c * e
            if s:
                out[nk] = s
            else:
                del out[nk]
    return out


def apply_map_leg(cols, X: dict, leg: int) -> dict:
    out: dict = {}
    for key, c in X.items():
        for t, x in cols[key[leg]].items():
            nk = key[:leg] + (t,) + key[leg + 1 :]
            s = out.get(nk)
            s = c * x if s is None else s + c * x
            if s:
                out[nk] = s
            else:
                del out[nk]
    return out


def permute_legs(X: dict, perm) -> dict:
    """New tensor whose leg r is old leg perm[r]."""
    return {tuple(k[p] for p in perm): c for k, c in X.items()}


def embed_legs_unit(X: dict, positions, n: int, unit: dict) -> dict:
    out: dict = {}
    others = [p for p in range(n) if p not in positions]
    for k, c in X.items():
        for combo in product(*(unit.items() for _ in others)):
            key = [None] * n
            for p, i in zip(positions, k):
                key[p] = i
            coef = c
            for p, (i, u) in zip(others, combo):
                key[p] = i
                coef = coef * u
            tk = tuple(key)
            s = out.get(tk)
            s = coef if s is None else s + coef
            if s:
                out[tk] = s
            else:
                del out[tk]
    return out


def tensor_sub(X: dict, Y: dict) -> dict:
    return vsub(X, Y)


# ---------------------------------------------------------------- verification


@dataclass
class AxiomCheck:
    passed: bool
    residuals: dict = field(default_factory=dict)
    note: str = ""


@dataclass
class AxiomReport:
    checks: dict = field(default_factory=dict)
    subject: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, c in self.checks.items() if not c.passed]

    def record(self, name, residuals: dict, note=""):
        self.checks[name] = AxiomCheck(not residuals, residuals, note)

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'}  {k}" + (f"  ({c.note})" if c.note else "") for k, c in self.checks.items()]

    def __str__(self):
        return "\n".join(self.lines())


_MAX_RESIDUALS = 16


class _Residuals(dict):
    def put(self, key, value):
        if value and len(self) < _MAX_RESIDUALS:
            self[key] = value
        elif value:
            self.setdefault("...", "more")


def algebra_generators(H: HopfAlgebra) -> list[int]:
    """Greedy basis indices whose left-normed products with 1 span H."""
    gens: list[int] = []
    span = _left_closure(H, gens)
    for i in range(H.dim):
        if len(span) == H.dim:
            break
        if {i: H.field.one} in span:
            continue
        gens.append(i)
        span = _left_closure(H, gens)
    return gens


def _left_closure(H, gens) -> Echelon:
    span = Echelon()
    span.add(H.one)
    queue = [H.one]
    while queue:
        w = queue.pop()
        for s in gens:
            p = H.mul({s: H.field.one}, w)
            if p and p not in span:
                span.add(p)
                queue.append(p)
    return span


FULL_CHECK_DIM = 16


def verify_hopf(H: HopfAlgebra, full: bool | None = None) -> AxiomReport:
    """Check every Hopf algebra axiom exactly.

    For dim > FULL_CHECK_DIM (unless ``full``) associativity and
    multiplicativity of Delta and eps are checked as (s x) y = s (x y) and
    Delta(s x) = Delta(s) Delta(x) for s in an algebra generating set and all
    basis x, y.  Given the unit axioms this is equivalent: the set of a with
    (a x) y = a (x y) for all x, y is a subspace containing 1 and closed under
    left multiplication by generators, hence everything.
    """
    d = H.dim
    F = H.field
    one = F.one
    rep = AxiomReport(subject=H.name)
    if full is None:
        full = d <= FULL_CHECK_DIM
    if full:
        left = list(range(d))
        note = "all basis triples"
    else:
        gens = algebra_generators(H)
        if len(_left_closure(H, gens)) != d:
            rep.record("generation", {"span": "generators do not span"})
            return rep
        left = gens
        note = f"generating set {[H.labels[g] for g in gens]}"

    # unit
    res = _Residuals()
    for i in range(d):
        e = {i: one}
        res.put(("1*", i), vsub(H.mul(H.unit, e), e))
        res.put(("*1", i), vsub(H.mul(e, H.unit), e))
    rep.record("unit", res)

    # associativity
    res = _Residuals()
    for i in left:
        for j in range(d):
            ij = H.mult.get((i, j), {})
            for k in range(d):
                lhs = H.mul(ij, {k: one})
                rhs = H.mul({i: one}, H.mult.get((j, k), {}))
                res.put((i, j, k), vsub(lhs, rhs))
    rep.record("associativity", res, note)

    # coassociativity and counit
    res = _Residuals()
    res_c = _Residuals()
    for i in range(d):
        D = H.comult[i]
        res.put(i, vsub(apply_comult_leg(H, D, 0), apply_comult_leg(H, D, 1)))
        e = {(i,): one}
        res_c.put(("e*", i), vsub(apply_counit_leg(H, D, 0), e))
        res_c.put(("*e", i), vsub(apply_counit_leg(H, D, 1), e))
    rep.record("coassociativity", res)
    rep.record("counit", res_c)

    # bialgebra compatibility
    res = _Residuals()
    res.put("Delta(1)", vsub(H.comul(H.unit), tensor_of(H.unit, H.unit)))
    if H.eps(H.unit) != one:
        res.put("eps(1)", {0: H.eps(H.unit) - one})
    for i in left:
        for j in range(d):
            ij = H.mult.get((i, j), {})
            lhs = H.comul(ij)
            rhs = tensor_mul((H, H), H.comult[i], H.comult[j])
            res.put(("Delta", i, j), vsub(lhs, rhs))
            e = H.eps(ij) - H.counit[i] * H.counit[j]
            if e:
                res.put(("eps", i, j), {0: e})
    rep.record("bialgebra", res, note)

    # antipode
    res = _Residuals()
    for i in range(d):
        lhs = {}
        rhs = {}
        for (a, b), c in H.comult[i].items():
            vadd(lhs, H.mul(H.antipode[a], {b: one}), c)
            vadd(rhs, H.mul({a: one}, H.antipode[b]), c)
        target = vscale(H.unit, H.counit[i])
        res.put(("S*I", i), vsub(lhs, target))
        res.put(("I*S", i), vsub(rhs, target))
    rep.record("antipode", res)

    try:
        H.antipode_inverse
        rep.record("antipode_invertible", {})
    except HopfError:
        rep.record("antipode_invertible", {"S": "singular"})
    return rep


# ---------------------------------------------------------------- constructions


def dual(H: HopfAlgebra) -> HopfAlgebra:
    """H* in the dual basis: product is Delta transposed, coproduct is mult transposed."""
    d = H.dim
    F = H.field
    mult: dict = {}
    for k in range(d):
        for (i, j), c in H.comult[k].items():
            mult.setdefault((i, j), {})[k] = c
    comult = [dict() for _ in range(d)]
    for (i, j), v in H.mult.items():
        for k, c in v.items():
            comult[k][(i, j)] = c
    unit = {i: c for i, c in enumerate(H.counit) if c}
    counit = tuple(H.unit.get(i, F.zero) for i in range(d))
    antipode = [dict() for _ in range(d)]
    for j, col in enumerate(H.antipode):
        for i, c in col.items():
            antipode[i][j] = c
    labels = tuple(_dual_label(l) for l in H.labels)
    flags = {}
    if "semisimple" in H.flags:
        flags["cosemisimple"] = H.flags["semisimple"]
    if "cosemisimple" in H.flags:
        flags["semisimple"] = H.flags["cosemisimple"]
    return HopfAlgebra(F, labels, mult, unit, tuple(comult), counit, tuple(antipode), flags=flags,
                       name=f"dual({H.name})" if H.name else "")


def _dual_label(l: str) -> str:
    return l[:-1] if l.endswith("*") else l + "*"


def opposite(H: HopfAlgebra) -> HopfAlgebra:
    mult = {(j, i): dict(v) for (i, j), v in H.mult.items()}
    return HopfAlgebra(H.field, H.labels, mult, dict(H.unit), H.comult, H.counit, H.antipode_inverse,
                       grouplikes=H.grouplikes, flags=dict(H.flags), name=f"op({H.name})" if H.name else "")


def coopposite(H: HopfAlgebra) -> HopfAlgebra:
    comult = tuple({(b, a): c for (a, b), c in D.items()} for D in H.comult)
    return HopfAlgebra(H.field, H.labels, dict(H.mult), dict(H.unit), comult, H.counit, H.antipode_inverse,
                       grouplikes=H.grouplikes, flags=dict(H.flags), name=f"cop({H.name})" if H.name else "")


def tensor_product(H1: HopfAlgebra, H2: HopfAlgebra) -> HopfAlgebra:
    if H1.field != H2.field:
        raise HopfError(f"field mismatch: {H1.field} vs {H2.field}")
    d2 = H2.dim

    def idx(a, b):
        return a * d2 + b

    mult = {}
    for (i1, j1), v1 in H1.mult.items():
        for (i2, j2), v2 in H2.mult.items():
            mult[(idx(i1, i2), idx(j1, j2))] = {idx(a, b): c for (a, b), c in tensor_of(v1, v2).items()}
    unit = {idx(a, b): c for (a, b), c in tensor_of(H1.unit, H2.unit).items()}
    comult = []
    counit = []
    antipode = []
    for a in range(H1.dim):
        for b in range(d2):
            D = {}
            for (a1, a2), x in H1.comult[a].items():
                for (b1, b2), y in H2.comult[b].items():
                    D[(idx(a1, b1), idx(a2, b2))] = x * y
            comult.append(D)
            counit.append(H1.counit[a] * H2.counit[b])
            antipode.append({idx(p, q): c for (p, q), c in tensor_of(H1.antipode[a], H2.antipode[b]).items()})
    labels = tuple(f"{l1}|{l2}" for l1 in H1.labels for l2 in H2.labels)
    grouplikes = tuple(
        {idx(p, q): c for (p, q), c in tensor_of(g, h).items()}
        for g in (H1.grouplikes or (H1.one,))
        for h in (H2.grouplikes or (H2.one,))
    ) if (H1.grouplikes or H2.grouplikes) else ()
    flags = {}
    for key in ("semisimple", "cosemisimple"):
        if key in H1.flags and key in H2.flags:
            flags[key] = H1.flags[key] and H2.flags[key]
    name = f"{H1.name}*{H2.name}" if H1.name and H2.name else ""
    return HopfAlgebra(H1.field, labels, mult, unit, tuple(comult), tuple(counit), tuple(antipode),
                       grouplikes=grouplikes, flags=flags, name=name)


def base_change(H: HopfAlgebra, target: FieldSpec) -> HopfAlgebra:
    if not target.contains(H.field):
        raise FieldError(f"unsupported extension {H.field} -> {target}")
    src = H.field

    def vec(v):
        return {k: target.embed(c, src) for k, c in v.items()}

    return HopfAlgebra(
        target,
        H.labels,
        {k: vec(v) for k, v in H.mult.items()},
        vec(H.unit),
        tuple(vec(D) for D in H.comult),
        tuple(target.embed(c, src) for c in H.counit),
        tuple(vec(c) for c in H.antipode),
        grouplikes=tuple(vec(g) for g in H.grouplikes),
        flags=dict(H.flags),
        name=H.name,
    )


def is_commutative(H: HopfAlgebra) -> bool:
    return all(H.mult.get((i, j), {}) == H.mult.get((j, i), {}) for i in range(H.dim) for j in range(i))


def is_cocommutative(H: HopfAlgebra) -> bool:
    return all(D == {(b, a): c for (a, b), c in D.items()} for D in H.comult)


def same_structure(H: HopfAlgebra, K: HopfAlgebra) -> bool:
    """Scalar-for-scalar equality of all structure tensors."""
    return (
        H.field == K.field
        and H.dim == K.dim
        and H.mult == K.mult
        and H.unit == K.unit
        and H.comult == K.comult
        and tuple(H.counit) == tuple(K.counit)
        and tuple(H.antipode) == tuple(K.antipode)
    )


# ---------------------------------------------------------------- Sweedler powers


def sweedler_power_columns(H: HopfAlgebra, n_max: int):
    """Yield (n, columns of f_n) for n = 1..n_max.

    f_1 = I and f_n(x) = sum f_{n-1}(x_(1)) S^{-2(n-1)}(x_(2)); by
    coassociativity this is m_n (I (x) S^-2 (x) ... (x) S^(-2n+2)) Delta_n.
    """
    d = H.dim
    one = H.field.one
    cols = tuple({i: one} for i in range(d))
    yield 1, cols
    for n in range(2, n_max + 1):
        twist = H._antipode_powers(-2 * (n - 1))
        new = []
        for i in range(d):
            acc: dict = {}
            for (j, k), c in H.comult[i].items():
                vadd(acc, H.mul(cols[j], twist[k]), c)
            new.append(acc)
        cols = tuple(new)
        yield n, cols


def sweedler_power_map(H: HopfAlgebra, n: int) -> Matrix:
    if n < 1:
        raise HopfError("n must be positive")
    for k, cols in sweedler_power_columns(H, n):
        if k == n:
            return Matrix.from_columns(H.field, H.dim, list(cols))
    raise AssertionError


def counit_unit_columns(H: HopfAlgebra) -> tuple:
    """Columns of x -> eps(x) 1."""
    return tuple(vscale(H.unit, c) if c else {} for c in H.counit)


def counit_unit_matrix(H: HopfAlgebra) -> Matrix:
    return Matrix.from_columns(H.field, H.dim, list(counit_unit_columns(H)))


# ---------------------------------------------------------------- integrals, grouplikes


def sparse_kernel(rows: list[dict], n: int, field_) -> list[dict]:
    """Kernel basis of the sparse row system, one vector per free column (reduced form)."""
    ech = Echelon()
    for r in rows:
        if r:
            ech.add(r)
    # fully reduce (rows normalized with pivot = min key)
    pivots = sorted(ech.rows)
    reduced = {}
    for p in reversed(pivots):
        row = dict(ech.rows[p][0])
        for q in list(row):
            if q != p and q in reduced:
                vadd(row, reduced[q], -row[q])
        reduced[p] = row
    free = [c for c in range(n) if c not in reduced]
    basis = []
    for f in free:
        v = {f: field_.one}
        for p, row in reduced.items():
            a = row.get(f)
            if a:
                v[p] = -a
        basis.append(v)
    return basis


def find_integral(H: HopfAlgebra) -> dict:
    """A nonzero left integral: h * L = eps(h) L for all h."""
    d = H.dim
    rows = []
    for h in range(d):
        # row t of (L_h - eps(h) I)
        mat: dict = {}
        for j, col in enumerate(H.left_regular[h]):
            for t, a in col.items():
                mat.setdefault(t, {})[j] = a
        e = H.counit[h]
        if e:
            for t in range(d):
                r = mat.setdefault(t, {})
                s = r.get(t, H.field.zero) - e
                if s:
                    r[t] = s
                else:
                    r.pop(t, None)
        rows.extend(mat.values())
    ker = sparse_kernel(rows, d, H.field)
    if len(ker) != 1:
        raise HopfError(f"space of left integrals has dimension {len(ker)}, expected 1")
    return ker[0]


def is_semisimple(H: HopfAlgebra) -> bool:
    """Maschke criterion: eps(integral) != 0."""
    return bool(H.eps(find_integral(H)))


def is_cosemisimple(H: HopfAlgebra) -> bool:
    return is_semisimple(dual(H))


def is_grouplike(H: HopfAlgebra, g: dict) -> bool:
    return H.eps(g) == H.field.one and H.comul(g) == tensor_of(g, g)


def element_order(H: HopfAlgebra, g: dict, cap: int) -> int | None:
    """Least m <= cap with g^m = 1."""
    cur = g
    one = H.one
    for m in range(1, cap + 1):
        if cur == one:
            return m
        cur = H.mul(cur, g)
    return None


def powers_span(H: HopfAlgebra, g: dict) -> Echelon:
    """Span of 1, g, g^2, ... (the subalgebra k[g])."""
    span = Echelon()
    cur = H.one
    while cur and cur not in span:
        span.add(cur)
        cur = H.mul(cur, g)
    return span


@dataclass
class SkewPrimitiveSpace:
    basis: list
    nontrivial: bool
    witness: dict | None


def skew_primitive_space(H: HopfAlgebra, g: dict) -> SkewPrimitiveSpace:
    """{x : Delta(x) = x (x) 1 + g (x) x}, flagged nontrivial iff it leaves k[g]."""
    if not is_grouplike(H, g):
        raise HopfError("skew-primitive space requested for a non-grouplike element")
    d = H.dim
    one = H.field.one
    # column i: Delta(e_i) - e_i (x) 1 - g (x) e_i ; keys (a, b) -> a*d + b
    rows: dict = {}
    for i in range(d):
        col = dict(H.comult[i])
        col = vsub(col, tensor_of({i: one}, H.unit))
        col = vsub(col, tensor_of(g, {i: one}))
        for (a, b), c in col.items():
            rows.setdefault(a * d + b, {})[i] = c
    basis = sparse_kernel(list(rows.values()), d, H.field)
    kg = powers_span(H, g)
    witness = next((x for x in basis if x not in kg), None)
    return SkewPrimitiveSpace(basis, witness is not None, witness)


def format_element(H: HopfAlgebra, v: dict) -> str:
    """Human-readable linear combination of basis labels, e.g. 'x - gx'."""
    if not v:
        return "0"
    F = H.field
    parts = []
    for i in sorted(v):
        c, label = v[i], H.labels[i]
        if c == F.one:
            parts.append(label)
        elif c == -F.one:
            parts.append(f"-{label}")
        else:
            text = F.format(c)
            compound = any(ch in text[1:] for ch in " +-*")
            parts.append(f"({text})*{label}" if compound else f"{text}*{label}")
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out

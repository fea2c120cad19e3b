"""The exponent of a Hopf algebra, by five routes, with replayable certificates.

Routes (all must agree whenever they return a finite value):

* ``direct``   least n with f_n = eps * 1, f_n the n-th Sweedler power map of H
* ``u``        multiplicative order of the Drinfeld element u of D(H)
* ``rproduct`` least n with R (I x S^2)(R) ... (I x S^(2n-2))(R) = 1 (x) 1 in D(H)^(x)2
* ``r21r``     multiplicative order of R_21 R in D(H)^(x)2
* ``decide``   u-route with infinity certificates (char 0) or the a * p^b
               decomposition (char p)

Orders of elements are read off their minimal polynomial m: a^n = 1 exactly
when m divides x^n - 1.  In characteristic 0 such an m is squarefree, so a
repeated factor proves the order infinite.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd

from .double import DrinfeldDouble, build_double, central_element_z
from .hopf import (
    HopfAlgebra,
    HopfError,
    apply_map_leg,
    counit_unit_columns,
    element_order,
    format_element,
    is_cosemisimple,
    is_grouplike,
    is_semisimple,
    permute_legs,
    powers_span,
    skew_primitive_space,
    sweedler_power_columns,
    tensor_mul,
    tensor_of,
)
from .linalg import Echelon, element_minimal_polynomial
from .poly import (
    Finite,
    Poly,
    char_p_order,
    divisors,
    format_poly,
    order_mod_poly,
    poly_gcd,
    prime_factors,
    squarefree_part,
    is_squarefree,
    x_power_is_one,
)
from .scalars import FieldSpec, cyclotomic_polynomial

FINITE, INFINITE, UNKNOWN = "finite", "infinite", "unknown"
METHODS = ("direct", "u", "rproduct", "r21r")
DEFAULT_CAP = 4096


class ExponentError(RuntimeError):
    """Contradictory evidence: a theorem-level inconsistency, never expected."""


# ---------------------------------------------------------------- certificates


def _poly_to_list(f: Poly) -> list[str]:
    return [f.field.format(c) for c in f.c]


def _poly_from_list(F: FieldSpec, coeffs) -> Poly:
    return Poly(F, [F.parse(c) for c in coeffs])


def _vec_to_dict(F: FieldSpec, v: dict) -> dict:
    return {str(i): F.format(c) for i, c in sorted(v.items())}


def _vec_from_dict(F: FieldSpec, d: dict) -> dict:
    return {int(i): F.parse(c) for i, c in d.items()}


@dataclass
class OrderCertificate:
    """Minimal polynomial of ``element`` and the order it implies.

    ``order`` is None when no order was found (``cap`` then records the search
    bound) or when the polynomial is not squarefree in characteristic 0.
    """

    element: str
    minimal_polynomial: Poly
    squarefree: bool
    order: int | None
    cap: int | None = None
    char_p: tuple | None = None
    kind: str = "order"

    def describe(self) -> str:
        m = format_poly(self.minimal_polynomial)
        tail = f"order {self.order}" if self.order else (f"no order <= {self.cap}" if self.cap else "infinite order")
        if self.char_p:
            a, b = self.char_p
            tail += f" = {a}*p^{b}"
        return f"{self.element}: minimal polynomial {m} ({'squarefree' if self.squarefree else 'not squarefree'}), {tail}"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "element": self.element,
            "minimal_polynomial": _poly_to_list(self.minimal_polynomial),
            "squarefree": self.squarefree,
            "order": self.order,
            "cap": self.cap,
            "char_p": list(self.char_p) if self.char_p else None,
        }

    @classmethod
    def from_dict(cls, d: dict, F: FieldSpec) -> "OrderCertificate":
        return cls(d["element"], _poly_from_list(F, d["minimal_polynomial"]), d["squarefree"], d["order"],
                   d.get("cap"), tuple(d["char_p"]) if d.get("char_p") else None)


@dataclass
class SkewPrimitiveCertificate:
    """Delta(x) = x (x) 1 + g (x) x with g grouplike and x outside k[g]."""

    g: dict
    x: dict
    kind: str = "skew_primitive"

    def describe(self, H: HopfAlgebra | None = None) -> str:
        if H is None:
            return "nontrivial skew-primitive element"
        return f"skew-primitive {format_element(H, self.x)} with {format_element(H, self.g)}"

    def to_dict(self, F: FieldSpec) -> dict:
        return {"kind": self.kind, "g": _vec_to_dict(F, self.g), "x": _vec_to_dict(F, self.x)}

    @classmethod
    def from_dict(cls, d: dict, F: FieldSpec) -> "SkewPrimitiveCertificate":
        return cls(_vec_from_dict(F, d["g"]), _vec_from_dict(F, d["x"]))


@dataclass
class NonSemisimpleCertificate:
    """m(u) = 0, f^2 | m and (m/f)(u) != 0: u is not semisimple."""

    minimal_polynomial: Poly
    repeated_factor: Poly
    kind: str = "non_semisimple_u"

    def describe(self) -> str:
        return (f"u minimal polynomial not squarefree: {format_poly(self.minimal_polynomial)} "
                f"has repeated factor {format_poly(self.repeated_factor)}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "minimal_polynomial": _poly_to_list(self.minimal_polynomial),
                "repeated_factor": _poly_to_list(self.repeated_factor)}

    @classmethod
    def from_dict(cls, d: dict, F: FieldSpec) -> "NonSemisimpleCertificate":
        return cls(_poly_from_list(F, d["minimal_polynomial"]), _poly_from_list(F, d["repeated_factor"]))


_CERT_TYPES = {"order": OrderCertificate, "skew_primitive": SkewPrimitiveCertificate,
               "non_semisimple_u": NonSemisimpleCertificate}


def certificate_from_dict(d: dict, F: FieldSpec):
    return _CERT_TYPES[d["kind"]].from_dict(d, F)


def _certificate_to_dict(c, F: FieldSpec) -> dict:
    return c.to_dict(F) if isinstance(c, SkewPrimitiveCertificate) else c.to_dict()


# ---------------------------------------------------------------- results


@dataclass
class ExponentResult:
    status: str
    value: int | None
    method: str
    field: FieldSpec
    cap: int | None = None
    certificates: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def is_finite(self) -> bool:
        return self.status == FINITE

    @property
    def is_infinite(self) -> bool:
        return self.status == INFINITE

    def verdict(self) -> str:
        if self.status == FINITE:
            return str(self.value)
        if self.status == INFINITE:
            return "INFINITE"
        return f"UNKNOWN (none <= {self.cap})"

    def same_verdict(self, other: "ExponentResult") -> bool:
        return (self.status, self.value) == (other.status, other.value)

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "status": self.status,
            "value": self.value,
            "method": self.method,
            "field": self.field.to_dict(),
            "cap": self.cap,
            "certificates": [_certificate_to_dict(c, self.field) for c in self.certificates],
            "notes": list(self.notes),
        }
        if timings:
            d["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExponentResult":
        F = FieldSpec.from_dict(d["field"])
        return cls(d["status"], d["value"], d["method"], F, d.get("cap"),
                   [certificate_from_dict(c, F) for c in d.get("certificates", [])],
                   dict(d.get("timings", {})), list(d.get("notes", [])))


@dataclass(frozen=True)
class ExponentConfig:
    """Search parameters shared by all routes.

    ``cap`` None selects :func:`default_cap`.  ``seed`` drives the randomized
    F_p factorization (results do not depend on it).
    """

    cap: int | None = None
    seed: int = 0
    prescreen_prime: int | None = None


class _Clock:
    def __init__(self):
        self.timings: dict = {}
        self._t = time.perf_counter()

    def lap(self, name: str):
        now = time.perf_counter()
        self.timings[name] = self.timings.get(name, 0.0) + now - self._t
        self._t = now


def is_semisimple_cosemisimple(H: HopfAlgebra) -> bool:
    cache = H.__dict__.setdefault("_facts", {})
    if "sscs" not in cache:
        cache["sscs"] = is_semisimple(H) and is_cosemisimple(H)
    return cache["sscs"]


def default_cap(H: HopfAlgebra) -> int:
    """dim^3 when H is semisimple and cosemisimple (the exponent divides it), else 4096."""
    return H.dim**3 if is_semisimple_cosemisimple(H) else DEFAULT_CAP


def double_of(H: HopfAlgebra) -> DrinfeldDouble:
    """D(H), built once per algebra object (unverified; the test suite verifies doubles)."""
    D = H.__dict__.get("_double")
    if D is None:
        D = build_double(H, verify=False)
        H.__dict__["_double"] = D
    return D


def _resolve_cap(H, cap):
    if cap is None:
        return default_cap(H)
    if cap < 1:
        raise ValueError("cap must be positive")
    return cap


# ---------------------------------------------------------------- route 1: Sweedler powers


def exponent_direct(H: HopfAlgebra, cap: int | None = None) -> ExponentResult:
    """First n <= cap with f_n = eps * 1; never certifies INFINITE."""
    cap = _resolve_cap(H, cap)
    clock = _Clock()
    target = counit_unit_columns(H)
    for n, cols in sweedler_power_columns(H, cap):
        if cols == target:
            clock.lap("search")
            return ExponentResult(FINITE, n, "direct", H.field, cap, timings=clock.timings)
    clock.lap("search")
    return ExponentResult(UNKNOWN, None, "direct", H.field, cap, timings=clock.timings)


# ---------------------------------------------------------------- route 2: Drinfeld element


def u_minimal_polynomial(D: DrinfeldDouble) -> Poly:
    A = D.algebra
    cache = D.__dict__.setdefault("_facts", {})
    if "u_minpoly" not in cache:
        cache["u_minpoly"] = element_minimal_polynomial(A.mul, A.one, D.u, A.field, A.dim)
    return cache["u_minpoly"]


def repeated_factor(m: Poly) -> Poly | None:
    """Nonconstant f with f^2 | m, or None if m is squarefree."""
    g = poly_gcd(m, m.derivative())
    if g.degree < 1:
        if m.field.characteristic and m.derivative().is_zero():
            return squarefree_part(m)
        return None
    f = squarefree_part(g)
    return f if (m % (f * f)).is_zero() else None


def evaluate_at_element(A: HopfAlgebra, f: Poly, a: dict) -> dict:
    """f(a) in the algebra A, by Horner's rule."""
    out: dict = {}
    for c in reversed(f.c):
        out = A.mul(out, a) if out else {}
        if c:
            for k, v in A.unit.items():
                s = out.get(k, A.field.zero) + c * v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
    return out


def _confirm_order(A: HopfAlgebra, a: dict, n: int) -> bool:
    """a^n = 1 and a^(n/q) != 1 for every prime q | n."""
    one = A.one
    if A.power(a, n) != one:
        return False
    return all(A.power(a, n // q) != one for q in prime_factors(n))


def _order_from_minpoly(m: Poly, cap: int, hint: int | None, seed: int, prescreen: int | None):
    """(order or None, squarefree, (a, b) or None) for the element with minimal polynomial m."""
    F = m.field
    if F.characteristic:
        a, b, n = char_p_order(m, seed)
        return n, is_squarefree(m), (a, b)
    if not is_squarefree(m):
        return None, False, None
    res = order_mod_poly(m, cap, divisor_hint=hint, prescreen=prescreen)
    return (res.n if isinstance(res, Finite) else None), True, None


def exponent_via_u(H: HopfAlgebra, cap: int | None = None, config: ExponentConfig = ExponentConfig()) -> ExponentResult:
    """Order of u in D(H), read off its minimal polynomial."""
    cap = _resolve_cap(H, cap if cap is not None else config.cap)
    clock = _Clock()
    D = double_of(H)
    clock.lap("double")
    m = u_minimal_polynomial(D)
    clock.lap("minimal_polynomial")
    hint = H.dim**3 if is_semisimple_cosemisimple(H) else None
    n, sqf, ab = _order_from_minpoly(m, cap, hint, config.seed, config.prescreen_prime)
    clock.lap("order")
    cert = OrderCertificate("u", m, sqf, n, cap if (n is None and sqf) else None, ab)
    if n is not None:
        return ExponentResult(FINITE, n, "u", H.field, cap, [cert], clock.timings)
    if not sqf:
        f = repeated_factor(m)
        return ExponentResult(INFINITE, None, "u", H.field, cap, [cert, NonSemisimpleCertificate(m, f)], clock.timings)
    return ExponentResult(UNKNOWN, None, "u", H.field, cap, [cert], clock.timings)


# ---------------------------------------------------------------- routes 3, 4: R-matrix products


def antipode_square_order(A: HopfAlgebra) -> int:
    """Order of S^2 (finite for every finite-dimensional Hopf algebra)."""
    ident = A._antipode_powers(0)
    for k in range(1, 4 * A.dim + 1):
        if A._antipode_powers(2 * k) == ident:
            return k
    raise HopfError("S^2 has no finite order up to 4*dim")


class _PowerTracker:
    """Echelon over the powers w_0 = 1, w_1, w_2, ... of one element.

    Reports that element's minimal polynomial once the powers become dependent.
    """

    def __init__(self, F: FieldSpec):
        self.F = F
        self.ech = Echelon(track=True, one=F.one)
        self.count = 0
        self.minpoly: Poly | None = None

    def feed(self, w: dict) -> Poly | None:
        if self.minpoly is not None:
            return self.minpoly
        flat = w
        rel = self.ech.add(flat)
        k = self.count
        self.count += 1
        if rel is not None:
            coeffs = [self.F.zero] * (k + 1)
            for i, a in rel.items():
                coeffs[i] = a
            self.minpoly = Poly(self.F, coeffs).monic()
        return self.minpoly


def _flatten(X: dict, n: int) -> dict:
    return {a * n + b: c for (a, b), c in X.items()}


def _power_target(m: Poly, cap: int, seed: int):
    """Order implied by the minimal polynomial m: (order or None, squarefree, (a, b) or None)."""
    return _order_from_minpoly(m, cap, None, seed, None)


def exponent_via_r_product(H: HopfAlgebra, cap: int | None = None, config: ExponentConfig = ExponentConfig()) -> ExponentResult:
    """Least n with Q_n = R (I x S^2)(R) ... (I x S^(2n-2))(R) = 1 (x) 1.

    The factors repeat with period r = ord(S^2), so Q_(kr) = (Q_r)^k.  Once the
    minimal polynomial of Q_r is known, the search stops if no power of Q_r up
    to the cap is 1 (every n with Q_n = 1 is a multiple of r, as ord(S^2)
    divides the exponent).
    """
    cap = _resolve_cap(H, cap if cap is not None else config.cap)
    clock = _Clock()
    D = double_of(H)
    A = D.algebra
    F = A.field
    R = D.r_matrix
    r = antipode_square_order(A)
    factors = [apply_map_leg(A._antipode_powers(2 * k), R, 1) for k in range(r)]
    one2 = tensor_of(A.unit, A.unit)
    clock.lap("setup")
    algs = (A, A)
    tracker = _PowerTracker(F)
    tracker.feed(_flatten(one2, A.dim))
    Q = R
    stop = cap
    cert = None
    for n in range(1, cap + 1):
        if n > 1:
            Q = tensor_mul(algs, Q, factors[(n - 1) % r])
        if Q == one2:
            clock.lap("search")
            res = ExponentResult(FINITE, n, "rproduct", F, cap, timings=clock.timings)
            if cert is not None:
                res.certificates.append(cert)
            res.notes.append(f"S^2 has order {r}")
            return res
        if n % r == 0 and tracker.minpoly is None:
            mu = tracker.feed(_flatten(Q, A.dim))
            if mu is not None:
                k, sqf, ab = _power_target(mu, max(cap // r, 1), config.seed)
                cert = OrderCertificate(f"Q_{r}", mu, sqf, k, cap // r if (k is None and sqf) else None, ab)
                stop = min(cap, k * r) if k else n
        if n >= stop:
            break
    clock.lap("search")
    res = ExponentResult(UNKNOWN, None, "rproduct", F, cap, [cert] if cert else [], clock.timings)
    res.notes.append(f"S^2 has order {r}; no power of Q_{r} up to the cap is 1")
    return res


def exponent_via_r21r(H: HopfAlgebra, cap: int | None = None, config: ExponentConfig = ExponentConfig()) -> ExponentResult:
    """Order of M = R_21 R, powering by sparse multiplications w -> w R_21 R."""
    cap = _resolve_cap(H, cap if cap is not None else config.cap)
    clock = _Clock()
    D = double_of(H)
    A = D.algebra
    F = A.field
    R = D.r_matrix
    R21 = permute_legs(R, (1, 0))
    one2 = tensor_of(A.unit, A.unit)
    algs = (A, A)
    tracker = _PowerTracker(F)
    tracker.feed(_flatten(one2, A.dim))
    clock.lap("setup")
    w = one2
    stop = cap
    cert = None
    n = 0
    while n < stop:
        n += 1
        w = tensor_mul(algs, tensor_mul(algs, w, R21), R)
        if w == one2:
            clock.lap("search")
            return ExponentResult(FINITE, n, "r21r", F, cap, [cert] if cert else [], clock.timings)
        if tracker.minpoly is None:
            mu = tracker.feed(_flatten(w, A.dim))
            if mu is not None:
                k, sqf, ab = _power_target(mu, cap, config.seed)
                cert = OrderCertificate("R21 R", mu, sqf, k, None if (k or not sqf) else cap, ab)
                if k:
                    stop = k  # exact order; keep powering to confirm it
                elif not sqf:
                    clock.lap("search")
                    return ExponentResult(INFINITE, None, "r21r", F, cap, [cert], clock.timings)
                else:
                    break
    clock.lap("search")
    if cert is not None and cert.order:
        raise ExponentError(f"R21 R has minimal polynomial of order {cert.order} but the power is not 1")
    return ExponentResult(UNKNOWN, None, "r21r", F, cap, [cert] if cert else [], clock.timings)


# ---------------------------------------------------------------- decision procedure


def find_skew_primitive(H: HopfAlgebra) -> SkewPrimitiveCertificate | None:
    """Nontrivial (1, g)-skew-primitive for some known grouplike g, if any."""
    for g in H.grouplikes:
        space = skew_primitive_space(H, g)
        if space.nontrivial:
            return SkewPrimitiveCertificate(dict(g), space.witness)
    return None


def decide_exponent(H: HopfAlgebra, cap: int | None = None, config: ExponentConfig = ExponentConfig()) -> ExponentResult:
    """Finite / Infinite / Unknown with certificates.

    Characteristic 0: a nontrivial skew-primitive or a non-squarefree minimal
    polynomial of u proves the exponent infinite (both are collected);
    otherwise the order of u is searched, over divisors of dim^3 when H is
    semisimple and cosemisimple.  Characteristic p: the order of u is always
    a * p^b, read off a factorization over F_p and confirmed by powering.
    """
    cap = _resolve_cap(H, cap if cap is not None else config.cap)
    clock = _Clock()
    F = H.field
    certs: list = []
    skew = None
    if F.characteristic == 0:
        skew = find_skew_primitive(H)
        clock.lap("skew_primitive")
        if skew is not None:
            certs.append(skew)
    D = double_of(H)
    clock.lap("double")
    m = u_minimal_polynomial(D)
    clock.lap("minimal_polynomial")
    A = D.algebra

    if F.characteristic:
        a, b, n = char_p_order(m, config.seed)
        clock.lap("order")
        if not _confirm_order(A, D.u, n):
            raise ExponentError(f"u^{n} = 1 predicted by the minimal polynomial but not confirmed by powering")
        clock.lap("confirm")
        cert = OrderCertificate("u", m, is_squarefree(m), n, None, (a, b))
        return ExponentResult(FINITE, n, "decide", F, cap, [cert], clock.timings)

    f = repeated_factor(m)
    if f is not None:
        certs.append(NonSemisimpleCertificate(m, f))
        certs.append(OrderCertificate("u", m, False, None))
        return ExponentResult(INFINITE, None, "decide", F, cap, certs, clock.timings)

    hint = H.dim**3 if is_semisimple_cosemisimple(H) else None
    res = order_mod_poly(m, cap, divisor_hint=hint, prescreen=config.prescreen_prime)
    clock.lap("order")
    if isinstance(res, Finite):
        n = res.n
        if skew is not None:
            raise ExponentError(f"u has order {n} although H has a nontrivial skew-primitive element")
        if not _confirm_order(A, D.u, n):
            raise ExponentError(f"u^{n} = 1 predicted by the minimal polynomial but not confirmed by powering")
        clock.lap("confirm")
        return ExponentResult(FINITE, n, "decide", F, cap, [OrderCertificate("u", m, True, n)], clock.timings)
    certs.append(OrderCertificate("u", m, True, None, cap))
    if skew is not None:
        return ExponentResult(INFINITE, None, "decide", F, cap, certs, clock.timings)
    return ExponentResult(UNKNOWN, None, "decide", F, cap, certs, clock.timings)


ROUTES = {
    "direct": lambda H, cap, cfg: exponent_direct(H, cap),
    "u": exponent_via_u,
    "rproduct": exponent_via_r_product,
    "r21r": exponent_via_r21r,
    "decide": decide_exponent,
}


def compute_exponent(H: HopfAlgebra, method: str = "decide", cap: int | None = None,
                     config: ExponentConfig = ExponentConfig()) -> ExponentResult:
    try:
        route = ROUTES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(ROUTES)}") from None
    return route(H, cap if cap is not None else config.cap, config)


@dataclass
class CrossCheck:
    results: dict

    @property
    def finite_values(self) -> set:
        return {r.value for r in self.results.values() if r.is_finite}

    @property
    def agree(self) -> bool:
        """No two routes contradict: at most one finite value, and no finite next to infinite."""
        vals = self.finite_values
        infinite = any(r.is_infinite for r in self.results.values())
        return len(vals) <= 1 and not (vals and infinite)

    @property
    def unanimous(self) -> bool:
        """Every route returned the same verdict."""
        rs = list(self.results.values())
        return all(r.same_verdict(rs[0]) for r in rs)


def cross_check(H: HopfAlgebra, cap: int | None = None, config: ExponentConfig = ExponentConfig(),
                methods=METHODS + ("decide",)) -> CrossCheck:
    return CrossCheck({m: compute_exponent(H, m, cap, config) for m in methods})


# ---------------------------------------------------------------- replay


def replay_skew_primitive(H: HopfAlgebra, cert: SkewPrimitiveCertificate) -> bool:
    g, x = cert.g, cert.x
    if not is_grouplike(H, g):
        return False
    if H.comul(x) != _skew_rhs(H, g, x):
        return False
    return x not in powers_span(H, g)


def _skew_rhs(H, g, x):
    out = tensor_of(x, H.unit)
    for k, c in tensor_of(g, x).items():
        s = out.get(k, H.field.zero) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def replay_non_semisimple(H: HopfAlgebra, cert: NonSemisimpleCertificate) -> bool:
    """Recheck from H alone: f nonconstant, f^2 | m, m(u) = 0, (m/f)(u) != 0."""
    m, f = cert.minimal_polynomial, cert.repeated_factor
    if H.field.characteristic != 0 or f.degree < 1 or not (m % (f * f)).is_zero():
        return False
    D = build_double(H, verify=False)
    if evaluate_at_element(D.algebra, m, D.u):
        return False
    return bool(evaluate_at_element(D.algebra, m // f, D.u))


def _is_minimal_polynomial(A: HopfAlgebra, m: Poly, a: dict) -> bool:
    """m(a) = 0 and 1, a, ..., a^(deg m - 1) are linearly independent."""
    if not m.is_monic() or evaluate_at_element(A, m, a):
        return False
    ech = Echelon()
    cur = A.one
    for _ in range(m.degree):
        if ech.add(cur) is not None:
            return False
        cur = A.mul(cur, a)
    return True


def replay_order(H: HopfAlgebra, cert: OrderCertificate) -> bool:
    """Recheck a u-certificate from H: the minimal polynomial, its squarefreeness and the claimed order."""
    if cert.element != "u":
        return False
    m = cert.minimal_polynomial
    if cert.squarefree != is_squarefree(m):
        return False
    D = build_double(H, verify=False)
    if not _is_minimal_polynomial(D.algebra, m, D.u):
        return False
    p = H.field.characteristic
    if cert.order:
        if cert.char_p:
            a, b = cert.char_p
            if a * p**b != cert.order:
                return False
        return _confirm_order(D.algebra, D.u, cert.order)
    if not cert.squarefree:
        # no repeated factor can divide x^n - 1 in characteristic 0
        return p == 0
    return cert.cap is not None and not isinstance(order_mod_poly(m, cert.cap), Finite)


def replay(H: HopfAlgebra, cert) -> bool:
    if isinstance(cert, SkewPrimitiveCertificate):
        return replay_skew_primitive(H, cert)
    if isinstance(cert, NonSemisimpleCertificate):
        return replay_non_semisimple(H, cert)
    return replay_order(H, cert)


# ---------------------------------------------------------------- spectrum of u


@dataclass
class SpectrumReport:
    minimal_polynomial: Poly
    squarefree: bool
    squarefree_part: Poly
    eigenvalue_order_lcm: int | None  # least N with sqf(m) | x^N - 1
    bound: int  # 2 d^3
    eigenvalue_orders: list  # k such that sqf(m) shares a factor with Phi_k
    z_central: bool
    z_minimal_polynomial: Poly | None
    z_bound_ok: bool  # sqf(minpoly(z)) | x^(d^3) - 1
    grouplike_order: int | None  # order of u^-2 z
    dimension: int
    notes: list = field(default_factory=list)

    @property
    def bound_ok(self) -> bool:
        return self.eigenvalue_order_lcm is not None and self.eigenvalue_order_lcm <= self.bound

    @property
    def grouplike_order_divides_dim(self) -> bool:
        return self.grouplike_order is not None and self.dimension % self.grouplike_order == 0

    @property
    def consistent(self) -> bool:
        return self.bound_ok and self.z_central and self.z_bound_ok and self.grouplike_order_divides_dim

    def lines(self) -> list[str]:
        yes = {True: "yes", False: "NO"}
        out = [
            f"u minimal polynomial: {format_poly(self.minimal_polynomial)}",
            f"u semisimple (squarefree minimal polynomial): {yes[self.squarefree]}",
            f"squarefree part: {format_poly(self.squarefree_part)}",
            f"eigenvalues are roots of unity of order dividing N = {self.eigenvalue_order_lcm} "
            f"(bound 2*d^3 = {self.bound}): {yes[self.bound_ok]}",
            f"eigenvalue orders present: {', '.join(map(str, self.eigenvalue_orders)) or 'none found'}",
            f"z = u S(u) central: {yes[self.z_central]}",
        ]
        if self.z_minimal_polynomial is not None:
            out.append(f"z minimal polynomial: {format_poly(self.z_minimal_polynomial)}; "
                       f"squarefree part divides x^(d^3) - 1: {yes[self.z_bound_ok]}")
        out.append(f"u^-2 z grouplike of order {self.grouplike_order} dividing d = {self.dimension}: "
                   f"{yes[self.grouplike_order_divides_dim]}")
        out.extend(self.notes)
        return out

    def to_dict(self) -> dict:
        return {
            "minimal_polynomial": _poly_to_list(self.minimal_polynomial),
            "squarefree": self.squarefree,
            "squarefree_part": _poly_to_list(self.squarefree_part),
            "eigenvalue_order_lcm": self.eigenvalue_order_lcm,
            "bound": self.bound,
            "bound_ok": self.bound_ok,
            "eigenvalue_orders": list(self.eigenvalue_orders),
            "z_central": self.z_central,
            "z_minimal_polynomial": _poly_to_list(self.z_minimal_polynomial) if self.z_minimal_polynomial else None,
            "z_bound_ok": self.z_bound_ok,
            "grouplike_order": self.grouplike_order,
            "dimension": self.dimension,
            "notes": list(self.notes),
        }


def classify_u_spectrum(H: HopfAlgebra) -> SpectrumReport:
    """Spectral facts about u on the regular D(H)-module."""
    d = H.dim
    D = double_of(H)
    A = D.algebra
    F = A.field
    m = u_minimal_polynomial(D)
    s = squarefree_part(m)
    bound = 2 * d**3
    res = order_mod_poly(s, bound)
    N = res.n if isinstance(res, Finite) else None
    orders = []
    if N is not None:
        for k in divisors(N):
            if F.characteristic and k % F.characteristic == 0:
                continue
            phi = Poly(F, list(cyclotomic_polynomial(k)))
            if poly_gcd(s, phi).degree >= 1:
                orders.append(k)
    notes = []
    if not is_squarefree(m):
        notes.append("u is not semisimple")
    elif F.characteristic == 0:
        notes.append("u is semisimple; whether this forces a finite exponent in general is open and not used")
    try:
        z, g = central_element_z(D)
        central = True
    except HopfError as exc:
        central, z, g = False, None, None
        notes.append(str(exc))
    zmin = None
    z_ok = False
    g_order = None
    if z is not None:
        zmin = element_minimal_polynomial(A.mul, A.one, z, F, A.dim)
        z_ok = x_power_is_one(squarefree_part(zmin), d**3)
        g_order = element_order(A, g, d)
    return SpectrumReport(m, is_squarefree(m), s, N, bound, orders, central, zmin, z_ok, g_order, d, notes)


def lcm_of(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out

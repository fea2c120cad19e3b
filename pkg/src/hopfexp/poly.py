"""Univariate polynomials over an exact field.

Coefficients are stored lowest degree first.  Besides the ring operations this
module provides what the order computations need: squarefree decomposition
(characteristic 0 and p), factorization over F_p (distinct- and equal-degree)
and the multiplicative order of ``x`` modulo a polynomial.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import lcm

from .scalars import FieldSpec, Fp


class PolynomialError(ValueError):
    pass


class Poly:
    __slots__ = ("field", "c")

    def __init__(self, field: FieldSpec, coeffs):
        self.field = field
        c = [field(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def _raw(cls, field, coeffs):
        obj = cls.__new__(cls)
        obj.field = field
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        obj.c = tuple(c)
        return obj

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field, a):
        return cls(field, [a])

    @classmethod
    def monomial(cls, field, k, a=1):
        return cls(field, [0] * k + [a])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lead(self):
        return self.c[-1] if self.c else self.field.zero

    def is_zero(self):
        return not self.c

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.c == other.c
        if isinstance(other, int):
            return self == Poly(self.field, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.c))

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise PolynomialError("field mismatch")
            return other
        return Poly(self.field, [other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.c), len(o.c))
        z = self.field.zero
        a = self.c + (z,) * (n - len(self.c))
        b = o.c + (z,) * (n - len(o.c))
        return Poly._raw(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.c or not o.c:
            return Poly._raw(self.field, [])
        out = [self.field.zero] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly(self.field, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        if len(rem) < len(o.c):
            return Poly._raw(self.field, []), self
        inv_lead = 1 / o.c[-1]
        q = [self.field.zero] * (len(rem) - len(o.c) + 1)
        dl = len(o.c) - 1
        for k in range(len(rem) - len(o.c), -1, -1):
            coef = rem[k + dl] * inv_lead
            q[k] = coef
            if coef:
                for i, b in enumerate(o.c):
                    if b:
                        rem[k + i] = rem[k + i] - coef * b
        return Poly._raw(self.field, q), Poly._raw(self.field, rem[:dl])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return not (other % self)

    def monic(self) -> "Poly":
        if not self.c:
            return self
        inv = 1 / self.c[-1]
        return Poly._raw(self.field, [a * inv for a in self.c])

    def derivative(self) -> "Poly":
        return Poly._raw(self.field, [a * k for k, a in enumerate(self.c)][1:])

    def __call__(self, x):
        acc = self.field.zero
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def format_poly(f: Poly, var: str = "x") -> str:
    if not f.c:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        a = f.c[k]
        if not a:
            continue
        s = f.field.format(a)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(s if f.field.kind != "cyclotomic" or _atomic(s) else f"({s})")
        elif a == 1:
            parts.append(mono)
        elif a == -1 and f.field.kind != "prime":
            parts.append("-" + mono)
        elif _atomic(s):
            parts.append(f"{s}*{mono}")
        else:
            parts.append(f"({s})*{mono}")
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out


def _atomic(s: str) -> bool:
    """A scalar text with at most a leading sign and no internal operators or spaces."""
    return not any(ch in s[1:] for ch in " +-*")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly(a.field, [])
    return (a * b // poly_gcd(a, b)).monic()


def powmod(base: Poly, k: int, m: Poly) -> Poly:
    result = Poly(base.field, [1]) % m
    base = base % m
    while k:
        if k & 1:
            result = result * base % m
        base = base * base % m
        k >>= 1
    return result


# ---------------------------------------------------------------- squarefree


def _pth_root(f: Poly) -> Poly:
    """g with g(x)^p = f(x) for f in F_p[x^p] (Frobenius is the identity on F_p)."""
    p = f.field.characteristic
    return Poly._raw(f.field, [f.c[i] for i in range(0, len(f.c), p)])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree factors with multiplicities: f = lead * prod(g_i ** e_i).

    Factors are pairwise coprime and nonconstant.  In characteristic p this
    handles f'(x) = 0, i.e. f(x) = g(x^p).
    """
    if not f:
        raise PolynomialError("zero polynomial has no squarefree decomposition")
    f = f.monic()
    p = f.field.characteristic
    if p == 0:
        return _yun(f)
    return _sqf_char_p(f, p)


def _yun(f: Poly):
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        if a.degree > 0:
            out.append((a.monic(), i))
        d = c - b.derivative()
        i += 1
    return out


def _sqf_char_p(f: Poly, p: int):
    result: dict[int, Poly] = {}

    def add(g, e):
        g = g.monic()
        if g.degree <= 0:
            return
        if e in result:
            result[e] = (result[e] * g).monic()
        else:
            result[e] = g

    i = 1
    w_deriv = f.derivative()
    if not w_deriv:
        for g, e in _sqf_char_p(_pth_root(f), p):
            add(g, e * p)
    else:
        c = poly_gcd(f, w_deriv)
        w = f // c
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            add(z, i)
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            for g, e in _sqf_char_p(_pth_root(c), p):
                add(g, e * p)
    return [(g, e) for e, g in sorted(result.items())]


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f."""
    out = Poly(f.field, [1])
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out.monic()


def is_squarefree(f: Poly) -> bool:
    return all(e == 1 for _, e in squarefree_decomposition(f))


# ---------------------------------------------------------------- F_p factoring


def distinct_degree_factorization(f: Poly) -> list[tuple[Poly, int]]:
    """For squarefree monic f over F_p: pairs (product of all degree-k irreducibles, k)."""
    p = f.field.characteristic
    x = Poly.x(f.field)
    out = []
    h = x
    k = 0
    g = f
    while g.degree >= 2 * (k + 1):
        k += 1
        h = powmod(h, p, g)
        d = poly_gcd(g, h - x)
        if d.degree > 0:
            out.append((d, k))
            g = g // d
            h = h % g
    if g.degree > 0:
        out.append((g.monic(), g.degree))
    return out


def equal_degree_factorization(f: Poly, k: int, rng: random.Random) -> list[Poly]:
    """Split a squarefree monic f whose irreducible factors all have degree k."""
    if f.degree == k:
        return [f.monic()]
    p = f.field.characteristic
    field = f.field
    while True:
        a = Poly(field, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree <= 0:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(k-1))
            t = a
            b = a
            for _ in range(k - 1):
                b = b * b % f
                t = t + b
            d = poly_gcd(f, t)
        else:
            e = (p**k - 1) // 2
            d = poly_gcd(f, powmod(a, e, f) - 1)
        if 0 < d.degree < f.degree:
            return equal_degree_factorization(d, k, rng) + equal_degree_factorization(
                f // d, k, rng
            )


def factor_fp(f: Poly, seed: int = 0) -> list[tuple[Poly, int]]:
    """Irreducible factorization over F_p as sorted (monic factor, multiplicity) pairs."""
    if f.field.kind != "prime":
        raise PolynomialError("factorization is only implemented over prime fields")
    rng = random.Random(seed)
    out = []
    for g, e in squarefree_decomposition(f):
        for block, k in distinct_degree_factorization(g):
            for h in equal_degree_factorization(block, k, rng):
                out.append((h, e))
    out.sort(key=lambda t: (t[0].degree, [a.v for a in t[0].c], t[1]))
    return out


# ---------------------------------------------------------------- orders


@dataclass(frozen=True)
class Finite:
    n: int


@dataclass(frozen=True)
class NoneUpTo:
    cap: int


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def x_power_is_one(m: Poly, n: int) -> bool:
    return powmod(Poly.x(m.field), n, m) == Poly(m.field, [1]) % m


def _reduce_to_order(m: Poly, n: int) -> int:
    """Smallest divisor N of n with x^N = 1 mod m, given x^n = 1 mod m."""
    for q in prime_factors(n):
        while n % q == 0 and x_power_is_one(m, n // q):
            n //= q
    return n


def order_mod_poly(m: Poly, cap: int, divisor_hint: int | None = None, prescreen=None):
    """Least N >= 1 with x^N = 1 (mod m), or NoneUpTo(cap).

    With ``divisor_hint`` B: if m divides x^B - 1 only divisors of B are
    considered (the answer then is exact whatever ``cap`` is); otherwise the
    plain sweep runs.  ``prescreen`` is an optional prime used to reject
    candidates cheaply over F_prescreen before the exact confirmation; it is
    ignored unless m has rational coefficients.
    """
    if not m.is_monic():
        raise PolynomialError("order_mod_poly needs a monic modulus")
    if not m.c[0]:
        raise PolynomialError("x is not invertible modulo m (m(0) = 0)")
    one = Poly(m.field, [1])
    if m.degree == 0:
        return Finite(1)
    if divisor_hint is not None and divisor_hint >= 1 and x_power_is_one(m, divisor_hint):
        return Finite(_reduce_to_order(m, divisor_hint))
    screen = _modular_image(m, prescreen) if prescreen else None
    x = Poly.x(m.field)
    cur = one % m
    scur = Poly(screen.field, [1]) % screen if screen is not None else None
    sx = Poly.x(screen.field) if screen is not None else None
    for n in range(1, cap + 1):
        if screen is not None:
            scur = scur * sx % screen
            if scur != Poly(screen.field, [1]) % screen:
                continue
            if x_power_is_one(m, n):
                return Finite(n)
            continue
        cur = cur * x % m
        if cur == one:
            return Finite(n)
    return NoneUpTo(cap)


def _modular_image(m: Poly, p: int) -> Poly | None:
    if m.field.kind != "rationals":
        return None
    F = FieldSpec("prime", p)
    coeffs = []
    for a in m.c:
        if a.denominator % p == 0:
            return None
        coeffs.append(Fp(int(a.numerator), p) / Fp(int(a.denominator), p))
    return Poly._raw(F, coeffs)


def order_of_x_mod_irreducible(f: Poly) -> int:
    """Order of x in (F_p[x]/f)^* for irreducible monic f with f(0) != 0."""
    p = f.field.characteristic
    group_order = p**f.degree - 1
    return _reduce_to_order(f, group_order)


def char_p_order(m: Poly, seed: int = 0) -> tuple[int, int, int]:
    """Order of x modulo m over F_p as (a, b, a * p**b).

    a is the lcm of the orders of x modulo the irreducible factors of m and b
    the least integer with p**b >= the largest multiplicity.
    """
    p = m.field.characteristic
    if p == 0:
        raise PolynomialError("char_p_order needs a prime field")
    if not m.c[0]:
        raise PolynomialError("x is not invertible modulo m")
    a = 1
    top = 1
    for f, e in factor_fp(m, seed):
        a = lcm(a, order_of_x_mod_irreducible(f))
        top = max(top, e)
    b = 0
    while p**b < top:
        b += 1
    return a, b, a * p**b


__all__ = [
    "Finite",
    "NoneUpTo",
    "Poly",
    "PolynomialError",
    "char_p_order",
    "distinct_degree_factorization",
    "divisors",
    "factor_fp",
    "format_poly",
    "is_squarefree",
    "order_mod_poly",
    "order_of_x_mod_irreducible",
    "poly_gcd",
    "poly_lcm",
    "powmod",
    "prime_factors",
    "squarefree_decomposition",
    "squarefree_part",
    "x_power_is_one",
]

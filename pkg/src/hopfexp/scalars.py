"""Exact scalar fields: the rationals, cyclotomic fields Q(zeta_n) and prime fields F_p.

Rational scalars are ``gmpy2.mpq`` values.  Prime-field and cyclotomic scalars
are small immutable classes supporting the usual arithmetic operators, so the
rest of the package can be written once against ``+ - * /`` and ``== 0``.

Text encoding (used by all serialization):

* rationals: ``"a/b"`` or ``"a"``
* cyclotomic: a polynomial in ``z`` such as ``"1/2*z^3 - z"``
* prime field: ``"r mod p"``
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import is_prime, mpq

MAX_CONDUCTOR = 64


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------- F_p


class Fp:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"


# ---------------------------------------------------------------- Q(zeta_n)


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials (low degree first) by a monic divisor."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise FieldError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_int(num, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_table(n: int):
    """Rows expressing zeta^k, 0 <= k < 2*phi(n) - 1, in the power basis."""
    phi_poly = cyclotomic_polynomial(n)
    phi = len(phi_poly) - 1
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(max(2 * phi - 1, 1)):
        rows.append(tuple(cur))
        # multiply by zeta
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(phi):
                nxt[i] -= top * phi_poly[i]
        cur = nxt
    return tuple(rows)


class Cyc:
    """Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""

    __slots__ = ("c", "n")

    def __init__(self, coeffs, n):
        self.c = tuple(coeffs)
        self.n = n

    @staticmethod
    def _from_rational(x, n):
        phi = len(cyclotomic_polynomial(n)) - 1
        return Cyc((mpq(x),) + (mpq(0),) * (phi - 1), n)

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.n != self.n:
                raise FieldError(f"mixing Q(zeta_{self.n}) and Q(zeta_{other.n})")
            return other
        if isinstance(other, int) or type(other) is type(mpq(0)):
            return Cyc._from_rational(other, self.n)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(tuple(a + b for a, b in zip(self.c, o.c)), self.n)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(tuple(a - b for a, b in zip(self.c, o.c)), self.n)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Cyc(tuple(-a for a in self.c), self.n)

    def __mul__(self, other):
        if isinstance(other, int) or type(other) is type(mpq(0)):
            return Cyc(tuple(a * other for a in self.c), self.n)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        phi = len(self.c)
        prod = [mpq(0)] * (2 * phi - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        table = _reduction_table(self.n)
        out = prod[:phi]
        for k in range(phi, 2 * phi - 1):
            ck = prod[k]
            if ck:
                row = table[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += ck * row[i]
        return Cyc(out, self.n)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("0 has no inverse")
        # extended Euclid of (self as polynomial, Phi_n) over Q
        f = _trim([mpq(x) for x in cyclotomic_polynomial(self.n)])
        g = _trim(list(self.c))
        # invariant: r_i = s_i * g (mod f)
        r0, r1 = f, g
        s0, s1 = [mpq(0)], [mpq(1)]
        while any(r1):
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # Phi_n is irreducible, so the gcd r0 is a nonzero constant
        inv = [x / r0[0] for x in s0]
        phi = len(self.c)
        # reduce modulo Phi_n
        _, rem = _qpoly_divmod(inv, f)
        rem = rem + [mpq(0)] * (phi - len(rem))
        return Cyc(rem[:phi], self.n)

    def __truediv__(self, other):
        if isinstance(other, int) or type(other) is type(mpq(0)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyc(tuple(a / other for a in self.c), self.n)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc._from_rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldError:
            return False
        if o is NotImplemented:
            return False
        return self.c == o.c

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return format_cyclotomic(self)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [mpq(0)]


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [mpq(0)] * (n - len(a))
    b = b + [mpq(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _qpoly_mul(a, b):
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _qpoly_divmod(a, b):
    a = list(a)
    b = _trim(b)
    if len(a) < len(b):
        return [mpq(0)], _trim(a)
    q = [mpq(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    return _trim(q), _trim(a[: len(b) - 1] or [mpq(0)])


# ---------------------------------------------------------------- fields


@dataclass(frozen=True)
class FieldSpec:
    """A base field: ``kind`` is ``"rationals"``, ``"cyclotomic"`` or ``"prime"``.

    ``n`` is the conductor for cyclotomic fields and the prime for prime fields.
    """

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            object.__setattr__(self, "n", 0)
        elif self.kind == "cyclotomic":
            if not 1 <= self.n <= MAX_CONDUCTOR:
                raise FieldError(f"cyclotomic conductor must be in [1, {MAX_CONDUCTOR}]")
        elif self.kind == "prime":
            if self.n < 2 or not is_prime(self.n):
                raise FieldError(f"{self.n} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return self.n if self.kind == "prime" else 0

    @property
    def degree(self) -> int:
        """Degree over the prime field."""
        if self.kind == "cyclotomic":
            return len(cyclotomic_polynomial(self.n)) - 1
        return 1

    def __str__(self):
        if self.kind == "rationals":
            return "Q"
        if self.kind == "cyclotomic":
            return f"Q(zeta_{self.n})"
        return f"F_{self.n}"

    # -- element construction

    def __call__(self, x):
        """Coerce an int, rational or same-field scalar into this field."""
        if self.kind == "rationals":
            if isinstance(x, (Fp, Cyc)):
                raise FieldError(f"cannot coerce {x!r} into Q")
            return mpq(x)
        if self.kind == "prime":
            if isinstance(x, Fp):
                if x.p != self.n:
                    raise FieldError("prime mismatch")
                return x
            if isinstance(x, Cyc):
                raise FieldError("cannot coerce cyclotomic into F_p")
            x = mpq(x)
            return Fp(int(x.numerator), self.n) / Fp(int(x.denominator), self.n)
        if isinstance(x, Cyc):
            if x.n != self.n:
                raise FieldError("conductor mismatch")
            return x
        if isinstance(x, Fp):
            raise FieldError("cannot coerce F_p into a cyclotomic field")
        return Cyc._from_rational(x, self.n)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def zeta(self):
        """The generator zeta_n of a cyclotomic field."""
        if self.kind != "cyclotomic":
            raise FieldError(f"{self} has no distinguished zeta")
        phi = self.degree
        if phi == 1:
            # Q(zeta_1) = Q(zeta_2) = Q; zeta is 1 or -1
            return self(1 if self.n == 1 else -1)
        c = [mpq(0)] * phi
        c[1] = mpq(1)
        return Cyc(c, self.n)

    def primitive_root_of_unity(self, m: int):
        """A primitive m-th root of unity in this field, or FieldError."""
        if m < 1:
            raise FieldError("order must be positive")
        if m == 1:
            return self.one
        if m == 2:
            if self.characteristic == 2:
                raise FieldError("no primitive square root of unity in characteristic 2")
            return -self.one
        if self.kind == "cyclotomic":
            n = self.n
            if n % m == 0:
                return self.zeta() ** (n // m)
            if n % 2 == 1 and (2 * n) % m == 0:
                # Q(zeta_n) = Q(zeta_2n) for odd n, with zeta_2n = -zeta_n^((n+1)/2)
                z2n = -(self.zeta() ** ((n + 1) // 2))
                return z2n ** (2 * n // m)
            raise FieldError(f"{self} has no primitive {m}-th root of unity")
        if self.kind == "prime":
            p = self.n
            if (p - 1) % m:
                raise FieldError(f"{self} has no primitive {m}-th root of unity")
            primes = _prime_factors(p - 1)
            for g in range(2, p):
                if all(pow(g, (p - 1) // q, p) != 1 for q in primes):
                    return Fp(pow(g, (p - 1) // m, p), p)
        raise FieldError(f"{self} has no primitive {m}-th root of unity")

    def contains(self, other: "FieldSpec") -> bool:
        """True if ``other`` embeds canonically into this field."""
        if other == self:
            return True
        if other.kind == "rationals":
            return self.kind in ("rationals", "cyclotomic")
        if other.kind == "cyclotomic" and self.kind == "cyclotomic":
            return self.n % other.n == 0 or other.degree == 1
        return False

    def embed(self, x, source: "FieldSpec"):
        """Map a scalar of ``source`` into this field along the canonical embedding."""
        if not self.contains(source):
            raise FieldError(f"unsupported extension {source} -> {self}")
        if source == self:
            return x
        if source.kind == "rationals" or source.degree == 1:
            if isinstance(x, Cyc):
                x = x.c[0]
            return self(x)
        # Q(zeta_m) -> Q(zeta_n), m | n: zeta_m = zeta_n^(n/m)
        step = self.zeta() ** (self.n // source.n)
        out = self.zero
        power = self.one
        for c in x.c:
            if c:
                out = out + power * c
            power = power * step
        return out

    # -- text encoding

    def format(self, x) -> str:
        if self.kind == "rationals":
            return _format_q(mpq(x))
        if self.kind == "prime":
            return f"{self(x).v} mod {self.n}"
        return format_cyclotomic(self(x))

    def parse(self, text: str):
        text = text.strip()
        if self.kind == "rationals":
            return _parse_q(text)
        if self.kind == "prime":
            m = re.fullmatch(r"(-?\d+)\s*mod\s*(\d+)", text)
            if m:
                if int(m.group(2)) != self.n:
                    raise FieldError(f"scalar {text!r} is not in F_{self.n}")
                return Fp(int(m.group(1)), self.n)
            return self(_parse_q(text))
        return parse_cyclotomic(text, self.n)

    def to_dict(self):
        if self.kind == "rationals":
            return {"kind": "rationals"}
        if self.kind == "cyclotomic":
            return {"kind": "cyclotomic", "n": self.n}
        return {"kind": "prime", "p": self.n}

    @classmethod
    def from_dict(cls, d):
        kind = d["kind"]
        if kind == "rationals":
            return cls("rationals")
        if kind == "cyclotomic":
            return cls("cyclotomic", int(d["n"]))
        if kind == "prime":
            return cls("prime", int(d["p"]))
        raise FieldError(f"unknown field kind {kind!r}")

    @classmethod
    def from_string(cls, s: str) -> "FieldSpec":
        """Parse ``Q``, ``Q(zeta_n)``/``cyc:n`` or ``F_p``/``Fp``."""
        s = s.strip()
        if s in ("Q", "QQ", "rationals"):
            return cls("rationals")
        m = re.fullmatch(r"(?:Q\(zeta_(\d+)\)|cyc:?(\d+))", s)
        if m:
            return cls("cyclotomic", int(m.group(1) or m.group(2)))
        m = re.fullmatch(r"(?:F_?|GF)\(?(\d+)\)?", s)
        if m:
            return cls("prime", int(m.group(1)))
        raise FieldError(f"cannot parse field {s!r}")


QQ = FieldSpec("rationals")


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


def CF(n: int) -> FieldSpec:
    return FieldSpec("cyclotomic", n)


def _prime_factors(n: int) -> list[int]:
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


def _format_q(x) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_Q_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+))?\s*")


def _parse_q(text: str):
    m = _Q_RE.fullmatch(text)
    if not m:
        raise FieldError(f"malformed rational {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise FieldError(f"zero denominator in {text!r}")
    return mpq(int(m.group(1)), den)


def format_cyclotomic(x: Cyc) -> str:
    terms = []
    for k in range(len(x.c) - 1, -1, -1):
        c = x.c[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _format_q(a)
        else:
            mono = "z" if k == 1 else f"z^{k}"
            body = mono if a == 1 else f"{_format_q(a)}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(r"(\d+(?:/\d+)?)?\s*\*?\s*(z(?:\^(\d+))?)?")


def parse_cyclotomic(text: str, n: int) -> Cyc:
    field = FieldSpec("cyclotomic", n)
    s = text.replace(" ", "")
    if not s:
        raise FieldError("empty scalar")
    if s[0] not in "+-":
        s = "+" + s
    parts = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in parts) != s:
        raise FieldError(f"malformed cyclotomic scalar {text!r}")
    acc = field.zero
    z = None
    for sign, body in parts:
        m = _TERM_RE.fullmatch(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise FieldError(f"malformed term {body!r} in {text!r}")
        coef = _parse_q(m.group(1)) if m.group(1) else mpq(1)
        if m.group(1) and m.group(2) and "*" not in body and not body[len(m.group(1)):].startswith("z"):
            raise FieldError(f"malformed term {body!r}")
        k = 0
        if m.group(2):
            k = int(m.group(3)) if m.group(3) else 1
        if k:
            if z is None:
                z = _raw_zeta(n)
            term = (z ** k) * coef
        else:
            term = field(coef)
        acc = acc + term if sign == "+" else acc - term
    return acc


def _raw_zeta(n: int) -> Cyc:
    phi = len(cyclotomic_polynomial(n)) - 1
    if phi == 1:
        return Cyc((mpq(1 if n == 1 else -1),), n)
    c = [mpq(0)] * phi
    c[1] = mpq(1)
    return Cyc(c, n)

"""Exact linear algebra: elimination, kernels, determinants, minimal polynomials.

Dense matrices are :class:`Matrix` objects (row tuples of field scalars).
Most of the heavy lifting elsewhere in the package happens on sparse vectors,
``dict[int, scalar]`` with no stored zeros, via :class:`Echelon`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, poly_lcm
from .scalars import FieldSpec


class LinearAlgebraError(ValueError):
    pass


class InconsistentSystem(LinearAlgebraError):
    pass


class SingularMatrix(LinearAlgebraError):
    pass


# ---------------------------------------------------------------- sparse vectors


def vadd(acc: dict, v: dict, c=None) -> dict:
    """acc += c * v in place (c=None means 1); zeros are dropped."""
    if c is None:
        for k, a in v.items():
            s = acc.get(k)
            if s is None:
                acc[k] = a
            else:
                s = s + a
                if s:
                    acc[k] = s
                else:
                    del acc[k]
    else:
        for k, a in v.items():
            t = a * c
            s = acc.get(k)
            if s is None:
                if t:
                    acc[k] = t
            else:
                s = s + t
                if s:
                    acc[k] = s
                else:
                    del acc[k]
    return acc


def vscale(v: dict, c) -> dict:
    out = {}
    for k, a in v.items():
        t = a * c
        if t:
            out[k] = t
    return out


def vsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, x in b.items():
        s = out.get(k)
        s = -x if s is None else s - x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Incrementally maintained echelon basis of sparse vectors.

    Each stored row is normalized to pivot coefficient 1 and its pivot is its
    smallest key.  With ``track=True`` each row also carries the combination of
    inserted vectors it equals, which is how linear dependencies are reported.
    """

    def __init__(self, track: bool = False, one=1):
        self.rows: dict = {}  # pivot -> (row, combo)
        self.track = track
        self.one = one
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, combo: dict | None = None):
        v = dict(v)
        combo = dict(combo) if combo is not None else None
        rows = self.rows
        while v:
            hit = None
            for k in sorted(v):
                if k in rows:
                    hit = k
                    break
            if hit is None:
                break
            c = v[hit]
            row, rcombo = rows[hit]
            vadd(v, row, -c)
            if combo is not None:
                vadd(combo, rcombo, -c)
        return v, combo

    def add(self, v: dict):
        """Insert v; returns None if independent, else the dependency combo."""
        idx = self.count
        self.count += 1
        combo = {idx: self.one} if self.track else None
        r, combo = self.reduce(v, combo)
        if not r:
            return combo if self.track else {}
        pivot = min(r)
        inv = 1 / r[pivot]
        r = vscale(r, inv)
        if combo is not None:
            combo = vscale(combo, inv)
        self.rows[pivot] = (r, combo)
        return None

    def __contains__(self, v: dict) -> bool:
        r, _ = self.reduce(v)
        return not r


# ---------------------------------------------------------------- dense matrices


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: tuple

    @classmethod
    def from_rows(cls, field, rows):
        rows = tuple(tuple(field(a) for a in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise LinearAlgebraError("ragged rows")
        return cls(field, rows)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field, n, m=None):
        m = n if m is None else m
        z = field.zero
        return cls(field, tuple((z,) * m for _ in range(n)))

    @classmethod
    def from_columns(cls, field, n, columns):
        """Build an n x len(columns) matrix from sparse column dicts."""
        z = field.zero
        rows = [[z] * len(columns) for _ in range(n)]
        for j, col in enumerate(columns):
            for i, a in col.items():
                rows[i][j] = a
        return cls(field, tuple(tuple(r) for r in rows))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def columns(self) -> list[dict]:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a:
                    cols[j][i] = a
        return cols

    def transpose(self):
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else ())

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise LinearAlgebraError("shape mismatch")
        ocols = other.columns()
        z = self.field.zero
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for col in ocols:
                s = z
                for k, a in nz:
                    b = col.get(k)
                    if b is not None:
                        s = s + a * b
                row.append(s)
            out.append(tuple(row))
        return Matrix(self.field, tuple(out))

    def apply(self, v: dict) -> dict:
        """Matrix times a sparse column vector."""
        out: dict = {}
        for i, r in enumerate(self.rows):
            s = None
            for j, a in v.items():
                b = r[j]
                if b:
                    s = b * a if s is None else s + b * a
            if s:
                out[i] = s
        return out

    def __add__(self, other):
        return Matrix(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return Matrix(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, c):
        return Matrix(self.field, tuple(tuple(a * c for a in r) for r in self.rows))

    def is_zero(self):
        return not any(a for r in self.rows for a in r)

    def __pow__(self, k):
        if self.nrows != self.ncols:
            raise LinearAlgebraError("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def evaluate_poly_at_matrix(f: Poly, M: Matrix) -> Matrix:
    n = M.nrows
    acc = Matrix.zeros(M.field, n)
    ident = Matrix.identity(M.field, n)
    for a in reversed(f.c):
        acc = acc @ M + ident.scale(a)
    return acc


# ---------------------------------------------------------------- elimination


def rref(M: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (rows as lists) and pivot columns."""
    rows = [list(r) for r in M.rows]
    ncols = M.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: Matrix) -> list[tuple]:
    """Basis of {v : M v = 0}, one vector per free column, in reduced echelon form."""
    rows, pivots = rref(M)
    n = M.ncols
    free = [c for c in range(n) if c not in set(pivots)]
    z, o = M.field.zero, M.field.one
    basis = []
    for f in free:
        v = [z] * n
        v[f] = o
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def linear_solve(A: Matrix, b) -> tuple:
    """One solution x of A x = b (free variables set to zero).

    Raises InconsistentSystem when no solution exists; use kernel_basis(A)
    for the rest of the solution set.
    """
    b = [A.field(x) for x in b]
    if len(b) != A.nrows:
        raise LinearAlgebraError("shape mismatch")
    aug = Matrix(A.field, tuple(tuple(r) + (bi,) for r, bi in zip(A.rows, b)))
    rows, pivots = rref(aug)
    n = A.ncols
    if n in pivots:
        raise InconsistentSystem("system has no solution")
    x = [A.field.zero] * n
    for row, p in zip(rows, pivots):
        x[p] = row[n]
    return tuple(x)


def solve_sparse(equations: list[tuple[dict, object]], nvars: int, field: FieldSpec):
    """Solve sparse equations (coefficients dict, rhs); returns (solution dict, nullity).

    Free variables are set to zero.  Raises InconsistentSystem.
    """
    rows: dict = {}  # pivot -> (row dict, rhs)
    for coeffs, rhs in equations:
        v = dict(coeffs)
        r = rhs
        while v:
            hit = next((k for k in sorted(v) if k in rows), None)
            if hit is None:
                break
            c = v[hit]
            prow, prhs = rows[hit]
            vadd(v, prow, -c)
            r = r - c * prhs
        if not v:
            if r:
                raise InconsistentSystem("sparse system has no solution")
            continue
        p = min(v)
        inv = 1 / v[p]
        rows[p] = (vscale(v, inv), r * inv)
    # back substitution, highest pivot first
    sol: dict = {}
    for p in sorted(rows, reverse=True):
        row, r = rows[p]
        s = r
        for k, a in row.items():
            if k != p and k in sol:
                s = s - a * sol[k]
        if s:
            sol[p] = s
    return sol, nvars - len(rows)


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if n != M.ncols:
        raise LinearAlgebraError("inverse of a non-square matrix")
    ident = Matrix.identity(M.field, n)
    aug = Matrix(M.field, tuple(r + s for r, s in zip(M.rows, ident.rows)))
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    return Matrix(M.field, tuple(tuple(r[n:]) for r in rows))


def determinant(M: Matrix):
    """Fraction-free (Bareiss) determinant."""
    n = M.nrows
    if n != M.ncols:
        raise LinearAlgebraError("determinant of a non-square matrix")
    if n == 0:
        return M.field.one
    a = [list(r) for r in M.rows]
    sign = 1
    prev = M.field.one
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return M.field.zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
            row_i[k] = M.field.zero
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


# ---------------------------------------------------------------- minimal polynomials


def _relation_to_poly(field, combo: dict, degree: int) -> Poly:
    coeffs = [field.zero] * (degree + 1)
    for k, a in combo.items():
        coeffs[k] = a
    return Poly(field, coeffs).monic()


def local_minimal_polynomial(apply, v: dict, field: FieldSpec, max_degree: int) -> tuple[Poly, list[dict]]:
    """Least monic p with p(M) v = 0, where ``apply`` computes M times a sparse vector.

    Also returns the Krylov vectors v, Mv, ..., M^(deg-1) v.
    """
    ech = Echelon(track=True, one=field.one)
    krylov = []
    w = v
    for k in range(max_degree + 1):
        rel = ech.add(w)
        if rel is not None:
            return _relation_to_poly(field, rel, k), krylov
        krylov.append(w)
        w = apply(w)
    raise LinearAlgebraError("Krylov sequence exceeded the dimension bound")


def minimal_polynomial(M: Matrix) -> Poly:
    """Monic minimal polynomial of a square matrix by iterated Krylov spaces.

    The result is the lcm of the local minimal polynomials of the standard
    basis vectors; vectors already inside the invariant subspace spanned so
    far are skipped because their local polynomial divides the running lcm.
    """
    n = M.nrows
    if n != M.ncols:
        raise LinearAlgebraError("minimal polynomial of a non-square matrix")
    cols = M.columns()
    return minimal_polynomial_of_operator(lambda v: _apply_columns(cols, v), n, M.field)


def _apply_columns(cols, v):
    out: dict = {}
    for j, a in v.items():
        vadd(out, cols[j], a)
    return out


def minimal_polynomial_of_operator(apply, n: int, field: FieldSpec, start: list[dict] | None = None) -> Poly:
    """Minimal polynomial of the linear operator ``apply`` on field^n.

    ``start`` lists vectors tried first (e.g. a cyclic vector), before the
    standard basis; the answer does not depend on it.
    """
    span = Echelon()
    m = Poly(field, [1])
    candidates = list(start or []) + [{j: field.one} for j in range(n)]
    for v in candidates:
        if len(span) == n:
            break
        if not v or v in span:
            continue
        local, krylov = local_minimal_polynomial(apply, v, field, n)
        m = poly_lcm(m, local)
        for w in krylov:
            if w not in span:
                span.add(w)
    return m


def element_minimal_polynomial(mul, one: dict, a: dict, field: FieldSpec, max_degree: int) -> Poly:
    """Minimal polynomial of an algebra element from its powers 1, a, a^2, ...

    p(a) = 0 in the algebra iff p(L_a) = 0, because L_a^k applied to 1 is a^k;
    so no regular-representation matrix is needed.
    """
    p, _ = local_minimal_polynomial(lambda w: mul(a, w), one, field, max_degree)
    return p

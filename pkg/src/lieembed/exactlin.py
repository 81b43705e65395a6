"""Exact scalars (Q and one quadratic extension Q(sqrt d)) and linear algebra.

Rational numbers are plain ``fractions.Fraction``.  Irrational values are
``ExactScalar`` instances ``a + b*sqrt(d)`` with ``b != 0`` and ``d`` a
squarefree integer (possibly negative); arithmetic that lands back in Q
returns a ``Fraction`` again, so rationality is visible in the type.
Matrices and polynomials are generic over both scalar kinds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional, Sequence, Union

from .errors import ExtensionDegreeTooHigh

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce an int, string like ``-3/4``, or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a rational: {x!r}")


def format_rat(x: Fraction) -> str:
    """Serialize as ``p/q`` with the denominator omitted when 1."""
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (d, k) with n = d*k**2 and d squarefree (sign kept on d)."""
    if n == 0:
        return 0, 1
    sign = 1 if n > 0 else -1
    n = abs(n)
    d, k = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return sign * d * n, k


@dataclass(frozen=True)
class ExactScalar:
    """Irrational element a + b*sqrt(d) of Q(sqrt d); b is never zero.

    Construction goes through :func:`make_scalar`, which demotes b == 0 to a
    plain Fraction; that keeps the "all nonrational scalars share one d"
    bookkeeping local to actual surds.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if self.b == 0:
            raise ValueError("rational values are represented as Fraction")

    @property
    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.a, -self.b, self.d)

    def __bool__(self) -> bool:
        return True  # b != 0 means the value is irrational, hence nonzero

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, self.d)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.a + other, self.b, self.d)
        if isinstance(other, ExactScalar):
            if other.d != self.d:
                raise ExtensionDegreeTooHigh(
                    f"mixing sqrt({self.d}) with sqrt({other.d})")
            return make_scalar(self.a + other.a, self.b + other.b, self.d)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return ExactScalar(self.a * other, self.b * other, self.d)
        if isinstance(other, ExactScalar):
            if other.d != self.d:
                raise ExtensionDegreeTooHigh(
                    f"mixing sqrt({self.d}) with sqrt({other.d})")
            return make_scalar(
                self.a * other.a + self.b * other.b * self.d,
                self.a * other.b + self.b * other.a,
                self.d,
            )
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * self.d
        # norm != 0 because d is squarefree and not a perfect square
        return ExactScalar(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.a / other, self.b / other, self.d)
        if isinstance(other, ExactScalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def real_sign(self) -> int:
        """Sign of the value as a real number; requires d > 0."""
        if self.d < 0:
            raise ValueError("not a real number")
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        lhs, rhs = a * a, b * b * self.d  # compare |a| with |b|sqrt(d)
        if b > 0:  # a < 0: positive iff b^2 d > a^2
            return 1 if rhs > lhs else -1
        return 1 if lhs > rhs else -1

    def sort_key(self):
        return (self.a, self.b)

    def __repr__(self):
        return f"({format_rat(self.a)}+{format_rat(self.b)}*sqrt({self.d}))"


Scalar = Union[Fraction, ExactScalar]


def make_scalar(a, b=0, d: int = 0) -> Scalar:
    """Canonical scalar a + b*sqrt(d): Fraction when b = 0, surd otherwise."""
    a, b = rat(a), rat(b)
    if b == 0 or d == 0:
        if b != 0:
            return a  # sqrt(0) contributes nothing
        return a
    d0, k = squarefree_split(d)
    if d0 == 1:
        return a + b * k
    return ExactScalar(a, b * k, d0)


def conj(x: Scalar) -> Scalar:
    return x.conjugate if isinstance(x, ExactScalar) else x


def scalar_parts(x: Scalar) -> tuple[Fraction, Fraction, int]:
    if isinstance(x, ExactScalar):
        return x.a, x.b, x.d
    return rat(x), ZERO, 0


def scalar_d(x: Scalar) -> int:
    return x.d if isinstance(x, ExactScalar) else 0


def scalar_sort_key(x: Scalar):
    a, b, _ = scalar_parts(x)
    return (a, b)


def is_complex_positive(x: Scalar) -> bool:
    """Positivity of a + b*sqrt(d): Re > 0, or Re = 0 and Im > 0."""
    a, b, d = scalar_parts(x)
    if d < 0:
        return a > 0 or (a == 0 and b > 0)
    if b == 0:
        return a > 0
    return x.real_sign() > 0


def scalar_to_json(x: Scalar) -> dict:
    a, b, d = scalar_parts(x)
    return {"a": format_rat(a), "b": format_rat(b), "d": d}


def scalar_from_json(obj) -> Scalar:
    return make_scalar(rat(obj["a"]), rat(obj["b"]), obj["d"])


# ----------------------------------------------------------------------------
# vectors


Vector = tuple

def vec(entries) -> Vector:
    return tuple(rat(x) if isinstance(x, (int, str)) else x for x in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return all(not x for x in u)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_real_imag(u: Vector) -> tuple[Vector, Vector]:
    """Split a Q(sqrt d) vector into rational (a-part, b-part) vectors."""
    re, im = [], []
    for x in u:
        a, b, _ = scalar_parts(x)
        re.append(a)
        im.append(b)
    return tuple(re), tuple(im)


# ----------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix over Fraction / ExactScalar entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        data = tuple(tuple(rat(x) if isinstance(x, (int, str)) else x
                           for x in row) for row in entries)
        self.entries = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, cols: Sequence[Vector]) -> "Matrix":
        n = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.entries))) if self.rows else Matrix([[]])

    def __add__(self, other):
        return Matrix([vec_add(r, s) for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return Matrix([vec_sub(r, s) for r, s in zip(self.entries, other.entries)])

    def scale(self, c) -> "Matrix":
        return Matrix([[c * x for x in row] for row in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.entries))
        return Matrix([[_dot(row, col) for col in bt] for row in self.entries])

    def apply(self, v: Vector) -> Vector:
        return tuple(_dot(row, v) for row in self.entries)

    def trace(self):
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.entries)

    def is_symmetric(self) -> bool:
        return self.entries == self.transpose().entries

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def _dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def _rref_rows(rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot_columns)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv = (ONE / pv) if isinstance(pv, Fraction) else pv.inverse()
            rows[r] = [inv * x for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form: (reduced, rank, pivot_columns)."""
    rows, pivots = _rref_rows([list(r) for r in m.entries])
    return Matrix(rows), len(pivots), pivots


def row_space_basis(vectors: Iterable[Vector], width: int) -> tuple[Vector, ...]:
    """Canonical RREF basis of the span of the given row vectors."""
    rows = [list(v) for v in vectors if not vec_is_zero(v)]
    if not rows:
        return ()
    reduced, pivots = _rref_rows(rows)
    return tuple(tuple(r) for r in reduced[: len(pivots)])


def kernel(m: Matrix) -> list[Vector]:
    """Canonical RREF basis of the null space of m."""
    reduced, rank, pivots = rref(m)
    n = m.cols
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced.entries[r][f]
        basis.append(tuple(v))
    return list(row_space_basis(basis, n))


def solve_linear(m: Matrix, rhs: Vector) -> Optional[Vector]:
    """Particular solution of m x = rhs (free variables 0), or None."""
    aug = Matrix([list(row) + [b] for row, b in zip(m.entries, rhs)])
    reduced, rank, pivots = rref(aug)
    if m.cols in pivots:  # pivot in the augmented column: inconsistent
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.entries[r][m.cols]
    return tuple(x)


def determinant(m: Matrix):
    """Exact determinant by fraction-free-style Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    a = [list(r) for r in m.entries]
    n = m.rows
    det = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c]), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        pv = a[c][c]
        det = det * pv
        inv = (ONE / pv) if isinstance(pv, Fraction) else pv.inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def symmetric_signature(m: Matrix) -> tuple[int, int, int]:
    """Signature (n_pos, n_neg, n_zero) of a symmetric rational matrix.

    Exact congruence diagonalization; no eigenvalues involved.
    """
    n = m.rows
    a = [list(r) for r in m.entries]
    pos = neg = zero = 0
    for i in range(n):
        if not a[i][i]:
            j = next((j for j in range(i + 1, n) if a[j][j]), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if a[i][j]), None)
                if j is None:
                    zero += 1
                    continue
                a[i] = [x + y for x, y in zip(a[i], a[j])]
                for row in a:
                    row[i] = row[i] + row[j]
        p = a[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if a[i][j]:
                f = a[i][j] / p
                a[j] = [x - f * y for x, y in zip(a[j], a[i])]
        for j in range(i + 1, n):
            a[j][i] = ZERO
            a[i][j] = ZERO
    return pos, neg, zero


# ----------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [rat(c) if isinstance(c, (int, str)) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly([])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dq = other.degree, self.degree - other.degree
        if dq < 0:
            return Poly([]), Poly(rem)
        lead = other.lead
        inv = (ONE / lead) if isinstance(lead, Fraction) else lead.inverse()
        quo = [ZERO] * (dq + 1)
        for k in range(dq, -1, -1):
            if len(rem) < dn + k + 1 or not rem[dn + k]:
                continue
            f = rem[dn + k] * inv
            quo[k] = f
            for i, c in enumerate(other.coeffs):
                rem[i + k] = rem[i + k] - f * c
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.lead
        inv = (ONE / lead) if isinstance(lead, Fraction) else lead.inverse()
        return Poly([c * inv for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_scalar(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: Matrix) -> Matrix:
        n = m.rows
        acc = Matrix.zero(n, n)
        for c in reversed(self.coeffs):
            acc = (acc @ m) + Matrix.identity(n).scale(c)
        return acc

    def compose_mod(self, arg: "Poly", mod: "Poly") -> "Poly":
        """self(arg) reduced modulo mod."""
        acc = Poly([])
        for c in reversed(self.coeffs):
            acc = (acc * arg + Poly([c])) % mod
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly([])
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def poly_ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly([])
    t0, t1 = Poly([]), Poly([1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.lead
    inv = (ONE / lead) if isinstance(lead, Fraction) else lead.inverse()
    return r0.monic(), s0 * inv, t0 * inv


def squarefree_part(p: Poly) -> Poly:
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return p.exact_div(g).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = prod f_i^i with the f_i squarefree, coprime."""
    p = p.monic()
    out = []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(p, 1)]
    w = p.exact_div(g)
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, g)
        f = w.exact_div(y)
        if f.degree > 0:
            out.append((f.monic(), i))
        w, g = y, g.exact_div(y)
        i += 1
    return out


# --- characteristic polynomial -----------------------------------------------


class _IntPoly:
    """Minimal integer polynomial helper for the fraction-free path."""

    __slots__ = ("c",)

    def __init__(self, c):
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    def is_zero(self):
        return not self.c

    def mul(self, other):
        a, b = self.c, other.c
        if not a or not b:
            return _IntPoly([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return _IntPoly(out)

    def sub(self, other):
        a, b = list(self.c), other.c
        if len(a) < len(b):
            a += [0] * (len(b) - len(a))
        for i, cb in enumerate(b):
            a[i] -= cb
        return _IntPoly(a)

    def exact_div(self, other):
        a, b = list(self.c), other.c
        if not a:
            return _IntPoly([])
        dq = len(a) - len(b)
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            q, r = divmod(a[len(b) - 1 + k], b[-1])
            assert r == 0, "fraction-free division must be exact"
            quo[k] = q
            if q:
                for i, cb in enumerate(b):
                    a[i + k] -= q * cb
        assert all(x == 0 for x in a), "fraction-free division must be exact"
        return _IntPoly(quo)


def _char_poly_bareiss_int(scaled: list[list[int]]) -> list[int]:
    """char poly of an integer matrix via fraction-free (Bareiss) elimination
    of t*I - M over Z[t]."""
    n = len(scaled)
    a = [[_IntPoly([-scaled[i][j]] if i != j else [-scaled[i][j], 1])
          for j in range(n)] for i in range(n)]
    prev = _IntPoly([1])
    sign = 1
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                # impossible for tI - M: it would force a zero determinant
                raise ArithmeticError("characteristic matrix went singular")
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k].mul(a[i][j]).sub(a[i][k].mul(a[k][j]))
                a[i][j] = num.exact_div(prev)
            a[i][k] = _IntPoly([])
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return [sign * c for c in det.c]


def char_poly(m: Matrix) -> Poly:
    """Monic characteristic polynomial det(tI - m), fraction-free."""
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    n = m.rows
    if n == 0:
        return Poly([1])
    if all(isinstance(x, Fraction) for row in m.entries for x in row):
        lcm = 1
        for row in m.entries:
            for x in row:
                lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        scaled = [[int(x * lcm) for x in row] for row in m.entries]
        coeffs = _char_poly_bareiss_int(scaled)
        # char_M(t) = L^-n * char_{L M}(L t)
        return Poly([Fraction(c * lcm ** k, lcm ** n) for k, c in enumerate(coeffs)])
    return _char_poly_generic(m)


def _char_poly_generic(m: Matrix) -> Poly:
    """Bareiss over Poly entries for matrices with extension scalars."""
    n = m.rows
    a = [[Poly([-m.entries[i][j], 1]) if i == j else Poly([-m.entries[i][j]])
          for j in range(n)] for i in range(n)]
    prev = Poly([1])
    sign = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                raise ArithmeticError("characteristic matrix went singular")
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = Poly([])
        prev = a[k][k]
    return (a[n - 1][n - 1] * sign).monic()


def min_poly(m: Matrix) -> Poly:
    """Minimal polynomial via Krylov annihilators of the standard basis."""
    n = m.rows
    result = Poly([1])
    for start in range(n):
        if result.degree >= 1:
            # skip vectors already annihilated
            if _annihilates(result, m, start):
                continue
        ann = _cyclic_annihilator(m, start)
        result = poly_lcm(result, ann)
        if result.degree == n:
            break
    return result


def _annihilates(p: Poly, m: Matrix, idx: int) -> bool:
    # Horner over vectors: acc = p(m) e_idx
    e = unit_vector(m.rows, idx)
    acc = tuple([ZERO] * m.rows)
    for c in reversed(p.coeffs):
        acc = m.apply(acc)
        acc = tuple(x + c * ei for x, ei in zip(acc, e))
    return all(not x for x in acc)


def _cyclic_annihilator(m: Matrix, idx: int) -> Poly:
    n = m.rows
    v = unit_vector(n, idx)
    rows: list[list] = []      # RREF rows of the Krylov vectors
    combos: list[list] = []    # poly coefficients of each RREF row
    powers = [v]
    k = 0
    while True:
        w = powers[-1]
        work = list(w)
        combo = [ZERO] * (k + 1)
        combo[k] = ONE
        for row, rc in zip(rows, combos):
            p = next((c for c in range(n) if row[c]), None)
            if p is not None and work[p]:
                f = work[p]
                work = [x - f * y for x, y in zip(work, row)]
                combo = [a - f * b for a, b in
                         zip(combo, rc + [ZERO] * (len(combo) - len(rc)))]
        if all(not x for x in work):
            return Poly(combo).monic()
        pivot = next(c for c in range(n) if work[c])
        pv = work[pivot]
        inv = (ONE / pv) if isinstance(pv, Fraction) else pv.inverse()
        rows.append([inv * x for x in work])
        combos.append([inv * x for x in combo])
        powers.append(m.apply(w))
        k += 1


# --- factorization over the scalar tower -------------------------------------


def _int_clear(p: Poly) -> list[int]:
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    g = 0
    ints = [int(c * lcm) for c in p.coeffs]
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints] if g else ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots (without multiplicity), by divisor search."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = []
    coeffs = _int_clear(p)
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k:
        roots.append(ZERO)
        coeffs = coeffs[k:]
    if len(coeffs) > 1:
        a0, an = coeffs[0], coeffs[-1]
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if p.eval_scalar(cand) == 0 and cand not in roots:
                        roots.append(cand)
    return roots


def _sqrt_rational(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _quadratic_roots(p_coef: Fraction, q_coef: Fraction) -> tuple[Scalar, Scalar]:
    """Roots of t^2 + p t + q over the tower."""
    disc = p_coef * p_coef - 4 * q_coef
    r = _sqrt_rational(disc) if disc >= 0 else None
    if r is not None:
        return (-p_coef + r) / 2, (-p_coef - r) / 2
    # disc = (m/n): sqrt = sqrt(m n)/n
    m_, n_ = disc.numerator, disc.denominator
    d, k = squarefree_split(m_ * n_)
    half_b = Fraction(k, 2 * n_)
    return (make_scalar(-p_coef / 2, half_b, d),
            make_scalar(-p_coef / 2, -half_b, d))


def _split_quartic(p: Poly) -> Optional[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """Split a monic rational quartic into two rational quadratics
    (t^2 + p1 t + q1)(t^2 + p2 t + q2) via the resolvent cubic."""
    e, c, b, a, lead = (list(p.coeffs) + [ZERO] * 5)[:5]
    assert lead == 1
    resolvent = Poly([-(a * a * e - 4 * b * e + c * c), a * c - 4 * e, -b, 1])
    for y0 in rational_roots(resolvent):
        disc = a * a - 4 * b + 4 * y0
        r = _sqrt_rational(disc)
        if r is None:
            continue
        p1, p2 = (a + r) / 2, (a - r) / 2
        if p1 != p2:
            # solve q1 + q2 = y0, p1*q2 + p2*q1 = c
            q2 = (c - p2 * y0) / (p1 - p2)
            q1 = y0 - q2
        else:
            dq = _sqrt_rational(y0 * y0 - 4 * e)
            if dq is None:
                continue
            q1, q2 = (y0 + dq) / 2, (y0 - dq) / 2
        f1 = Poly([q1, p1, 1])
        f2 = Poly([q2, p2, 1])
        if (f1 * f2) == p:
            return (p1, q1), (p2, q2)
    return None


def _factor_squarefree(p: Poly) -> list[Scalar]:
    """Roots of a monic squarefree rational polynomial, all lying in Q or a
    quadratic extension; raises ExtensionDegreeTooHigh otherwise."""
    roots: list[Scalar] = []
    p = p.monic()
    for r in rational_roots(p):
        roots.append(r)
        p = p.exact_div(Poly([-r, 1]))
    while p.degree > 0:
        if p.degree == 2:
            r1, r2 = _quadratic_roots(p.coeffs[1], p.coeffs[0])
            roots.extend([r1, r2])
            break
        if p.degree == 4:
            split = _split_quartic(p)
            if split is None:
                raise ExtensionDegreeTooHigh(
                    "quartic does not split into rational quadratics")
            for pq in split:
                roots.extend(_quadratic_roots(pq[0], pq[1]))
            break
        if p.degree % 2 == 0 and all(not c for c in p.coeffs[1::2]):
            # even polynomial h(t^2): peel rational roots of h
            h = Poly(p.coeffs[0::2])
            hr = rational_roots(h)
            if not hr:
                raise ExtensionDegreeTooHigh(
                    f"irreducible factor of degree {p.degree}")
            for s in hr:
                h = h.exact_div(Poly([-s, 1]))
                roots.extend(_quadratic_roots(ZERO, -s))
            if h.degree > 0:
                # re-expand the unsplit part back in t and keep going
                rem = [ZERO] * (2 * h.degree + 1)
                for i, cc in enumerate(h.coeffs):
                    rem[2 * i] = cc
                p = Poly(rem)
                if p.degree not in (2, 4):
                    raise ExtensionDegreeTooHigh(
                        f"irreducible factor of degree {p.degree}")
                continue
            break
        raise ExtensionDegreeTooHigh(
            f"irreducible factor of degree {p.degree} (odd, no rational root)")
    return roots


def factor_roots(p: Poly, single_extension: bool = True) -> list[tuple[Scalar, int]]:
    """Full factorization of a rational polynomial into roots with
    multiplicities over Q or quadratic extensions.

    With ``single_extension`` every irrational root must share one
    squarefree d; otherwise multiple quadratic fields may appear side by
    side (useful for sign-pattern classification only).
    """
    out: list[tuple[Scalar, int]] = []
    for f, mult in squarefree_decomposition(p):
        for root in _factor_squarefree(f):
            out.append((root, mult))
    if single_extension:
        ds = {scalar_d(r) for r, _ in out if scalar_d(r) != 0}
        if len(ds) > 1:
            raise ExtensionDegreeTooHigh(
                f"roots need two distinct quadratic extensions: {sorted(ds)}")
    out.sort(key=lambda rm: scalar_sort_key(rm[0]))
    return out


def eigenvalues(m: Matrix) -> list[tuple[Scalar, int]]:
    """Eigenvalues with multiplicities over Q or one quadratic extension."""
    return factor_roots(char_poly(m), single_extension=True)


# --- simultaneous eigenspaces -------------------------------------------------


def eigenspace(m: Matrix, lam: Scalar) -> list[Vector]:
    """Kernel basis of (m - lam*I), over the extension if lam is irrational."""
    n = m.rows
    shifted = Matrix([[m.entries[i][j] - (lam if i == j else 0)
                       for j in range(n)] for i in range(n)])
    return kernel(shifted)

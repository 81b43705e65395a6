"""Lie algebras by structure constants and the basic structural operations.

Elements are coordinate tuples in the algebra basis; subspaces carry a
canonical row-reduced basis so equality of subspaces is structural
equality of their rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import CenterObstruction, NotASubalgebra, NotATorus
from .exactlin import (Matrix, Poly, Vector, ZERO, ONE, factor_roots,
                       format_rat, kernel, min_poly, poly_ext_gcd, poly_gcd,
                       rat, row_space_basis, scalar_parts, solve_linear,
                       squarefree_part, symmetric_signature, unit_vector,
                       vec_add, vec_is_zero, vec_scale, vec_sub)

NILPOTENT = "nilpotent"
REAL_SEMISIMPLE = "real_semisimple"
COMPACT_SEMISIMPLE = "compact_semisimple"
MIXED_SEMISIMPLE = "mixed_semisimple"
GENERAL = "general"


class LieAlgebra:
    """Finite-dimensional real Lie algebra given by structure constants.

    ``brackets`` maps (i, j) with i < j to {k: c} for
    [b_i, b_j] = sum_k c * b_k; antisymmetry is implied by storage and the
    Jacobi identity is verified on construction.
    """

    def __init__(self, dim: int, basis_names: Sequence[str],
                 brackets: Mapping[tuple[int, int], Mapping[int, Fraction]],
                 name: str = "", validate: bool = True):
        if len(basis_names) != dim:
            raise ValueError("basis name count != dim")
        self.dim = dim
        self.basis_names = tuple(basis_names)
        self.name = name
        table = {}
        for (i, j), comp in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bad bracket index pair {(i, j)}")
            comp = {k: rat(c) for k, c in comp.items() if rat(c) != 0}
            if comp:
                table[(i, j)] = comp
        self.brackets = table
        self._ad_basis: Optional[list[Matrix]] = None
        self._killing: Optional[Matrix] = None
        self._center_dim: Optional[int] = None
        if validate:
            self._check_jacobi()

    # -- construction helpers

    def index_of(self, name: str) -> int:
        return self.basis_names.index(name)

    def element(self, coords: Mapping[str, object] | Sequence) -> Vector:
        """Element from a name->coefficient mapping or a coordinate list."""
        if isinstance(coords, Mapping):
            v = [ZERO] * self.dim
            for name, c in coords.items():
                v[self.index_of(name)] = rat(c)
            return tuple(v)
        v = [rat(c) if isinstance(c, (int, str)) else c for c in coords]
        if len(v) != self.dim:
            raise ValueError("coordinate length != dim")
        return tuple(v)

    def basis_vector(self, name_or_index) -> Vector:
        i = name_or_index if isinstance(name_or_index, int) else self.index_of(name_or_index)
        return unit_vector(self.dim, i)

    def format_element(self, v: Vector) -> str:
        parts = []
        for c, name in zip(v, self.basis_names):
            if not c:
                continue
            a, b, d = scalar_parts(c)
            if b == 0 and a == 1:
                parts.append(f"+{name}")
            elif b == 0 and a == -1:
                parts.append(f"-{name}")
            elif b == 0:
                parts.append(f"{'+' if a > 0 else '-'}{format_rat(abs(a))}*{name}")
            else:
                parts.append(f"+({c!r})*{name}")
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    # -- core operations

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out[k] + xi * yj * c
        return tuple(out)

    def ad(self, x: Vector) -> Matrix:
        cols = [self.bracket(x, unit_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    def ad_basis(self) -> list[Matrix]:
        if self._ad_basis is None:
            self._ad_basis = [self.ad(unit_vector(self.dim, i)) for i in range(self.dim)]
        return self._ad_basis

    def killing_matrix(self) -> Matrix:
        if self._killing is None:
            ads = self.ad_basis()
            n = self.dim
            entries = [[ZERO] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    t = ZERO
                    a, b = ads[i].entries, ads[j].entries
                    for r in range(n):
                        for s in range(n):
                            if a[r][s] and b[s][r]:
                                t = t + a[r][s] * b[s][r]
                    entries[i][j] = entries[j][i] = t
            self._killing = Matrix(entries)
        return self._killing

    def killing(self, x: Vector, y: Vector):
        K = self.killing_matrix()
        return sum((xi * kj for xi, kj in zip(x, K.apply(y)) if xi and kj), ZERO)

    def center_dim(self) -> int:
        """Dimension of the center (kernel of the adjoint map)."""
        if self._center_dim is None:
            cols = [tuple(c for row in a.entries for c in row)
                    for a in self.ad_basis()]
            self._center_dim = len(kernel(Matrix.from_columns(cols)))
        return self._center_dim

    def _check_jacobi(self):
        n = self.dim
        for i in range(n):
            ei = unit_vector(n, i)
            for j in range(i + 1, n):
                ej = unit_vector(n, j)
                bij = self.bracket(ei, ej)
                for k in range(j + 1, n):
                    ek = unit_vector(n, k)
                    total = vec_add(
                        vec_add(self.bracket(ei, self.bracket(ej, ek)),
                                self.bracket(ej, self.bracket(ek, ei))),
                        self.bracket(ek, bij))
                    if not vec_is_zero(total):
                        raise ValueError(
                            f"Jacobi identity fails on basis triple "
                            f"({self.basis_names[i]}, {self.basis_names[j]}, "
                            f"{self.basis_names[k]})")

    # -- (de)serialization

    def to_json(self) -> dict:
        out = []
        for (i, j), comp in sorted(self.brackets.items()):
            out.append({"i": i, "j": j,
                        "c": {str(k): format_rat(c) for k, c in sorted(comp.items())}})
        return {"dim": self.dim, "basis": list(self.basis_names), "brackets": out}

    @classmethod
    def from_json(cls, obj, name: str = "") -> "LieAlgebra":
        brackets = {}
        for entry in obj.get("brackets", []):
            comp = {int(k): rat(c) for k, c in entry["c"].items()}
            brackets[(entry["i"], entry["j"])] = comp
        return cls(obj["dim"], obj["basis"], brackets, name=name)

    def __repr__(self):
        return f"LieAlgebra({self.name or 'dim=%d' % self.dim})"


class Subspace:
    """Linear subspace of a LieAlgebra with canonical RREF basis rows."""

    __slots__ = ("algebra", "rows", "pivots")

    def __init__(self, algebra: LieAlgebra, vectors: Iterable[Vector]):
        self.algebra = algebra
        self.rows = row_space_basis(vectors, algebra.dim)
        self.pivots = tuple(next(c for c, x in enumerate(r) if x) for r in self.rows)

    @classmethod
    def full(cls, algebra: LieAlgebra) -> "Subspace":
        return cls(algebra, [unit_vector(algebra.dim, i) for i in range(algebra.dim)])

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> "Subspace":
        return cls(algebra, [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.algebra is other.algebra
                and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after elimination against the basis rows."""
        work = list(v)
        for row, p in zip(self.rows, self.pivots):
            if work[p]:
                f = work[p]
                work = [x - f * y for x, y in zip(work, row)]
        return tuple(work)

    def contains(self, v: Vector) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def coords_of(self, v: Vector) -> Optional[Vector]:
        """Coordinates of v in the basis rows, or None if outside."""
        coords = []
        work = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = work[p]
            coords.append(f)
            if f:
                work = [x - f * y for x, y in zip(work, row)]
        if not vec_is_zero(tuple(work)):
            return None
        return tuple(coords)

    def from_coords(self, coords: Sequence) -> Vector:
        out = tuple([ZERO] * self.algebra.dim)
        for c, row in zip(coords, self.rows):
            if c:
                out = vec_add(out, vec_scale(c, row))
        return out

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.algebra, self.rows + other.rows)

    def with_vectors(self, vectors: Iterable[Vector]) -> "Subspace":
        return Subspace(self.algebra, self.rows + tuple(vectors))

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.rows or not other.rows:
            return Subspace.zero(self.algebra)
        # x = a . self.rows = b . other.rows: kernel of [self^T | -other^T]
        cols = [tuple(r) for r in self.rows] + [vec_scale(-1, r) for r in other.rows]
        m = Matrix.from_columns(cols)
        vecs = []
        for k in kernel(m):
            coeffs = k[: self.dim]
            vecs.append(self.from_coords(coeffs))
        return Subspace(self.algebra, vecs)

    def complement_in(self, larger: "Subspace") -> "Subspace":
        """Canonical complement: rows of ``larger`` whose pivot is not ours."""
        if not larger.contains_subspace(self):
            raise ValueError("complement_in requires containment")
        mine = set(self.pivots)
        return Subspace(self.algebra,
                        [r for r, p in zip(larger.rows, larger.pivots) if p not in mine])

    def is_subalgebra(self) -> bool:
        for i, r in enumerate(self.rows):
            for s in self.rows[i + 1:]:
                if not self.contains(self.algebra.bracket(r, s)):
                    return False
        return True

    def is_abelian(self) -> bool:
        for i, r in enumerate(self.rows):
            for s in self.rows[i + 1:]:
                if not vec_is_zero(self.algebra.bracket(r, s)):
                    return False
        return True

    def restrict(self, m: Matrix) -> Matrix:
        """Matrix of an endomorphism that maps this subspace into itself,
        in the basis rows."""
        cols = []
        for r in self.rows:
            c = self.coords_of(m.apply(r))
            if c is None:
                raise ValueError("subspace is not invariant")
            cols.append(c)
        return Matrix.from_columns(cols)

    def as_subalgebra(self) -> LieAlgebra:
        """This subspace as an abstract algebra in its own RREF basis."""
        k = self.dim
        brackets = {}
        for i in range(k):
            for j in range(i + 1, k):
                w = self.algebra.bracket(self.rows[i], self.rows[j])
                coords = self.coords_of(w)
                if coords is None:
                    raise NotASubalgebra("bracket leaves the subspace")
                comp = {t: c for t, c in enumerate(coords) if c}
                if comp:
                    brackets[(i, j)] = comp
        names = [f"s{t + 1}" for t in range(k)]
        return LieAlgebra(k, names, brackets, name=f"sub({self.dim})", validate=False)

    def to_json(self) -> list:
        from .exactlin import scalar_to_json
        return [[format_rat(x) if isinstance(x, Fraction) else scalar_to_json(x)
                 for x in row] for row in self.rows]

    def __repr__(self):
        names = ", ".join(self.algebra.format_element(r) for r in self.rows)
        return f"<{names}>" if names else "<0>"


# ----------------------------------------------------------------------------
# structural operations


def bracket(L: LieAlgebra, x: Vector, y: Vector) -> Vector:
    return L.bracket(x, y)


def ad(L: LieAlgebra, x: Vector) -> Matrix:
    return L.ad(x)


def killing_form(L: LieAlgebra) -> Matrix:
    return L.killing_matrix()


def span(L: LieAlgebra, vectors: Iterable[Vector]) -> Subspace:
    return Subspace(L, vectors)


def killing_signature(obj) -> tuple[int, int, int]:
    """Signature (n_pos, n_neg, n_zero) of the Killing form of an algebra
    or of a subspace viewed as an algebra in its own right."""
    if isinstance(obj, Subspace):
        if obj.dim == 0:
            return (0, 0, 0)
        return killing_signature(obj.as_subalgebra())
    return symmetric_signature(obj.killing_matrix())


def is_negative_definite(sub: Subspace) -> bool:
    pos, neg, zero = killing_signature(sub)
    return pos == 0 and zero == 0


def restricted_killing_signature(sub: Subspace) -> tuple[int, int, int]:
    """Signature of the ambient Killing form restricted to the subspace
    (this, not the subalgebra's own form, decides compactness when the
    subalgebra has a center)."""
    if sub.dim == 0:
        return (0, 0, 0)
    rows = [[sub.algebra.killing(r, s) for s in sub.rows] for r in sub.rows]
    return symmetric_signature(Matrix(rows))


def derived_algebra(sub: Subspace) -> Subspace:
    if not sub.is_subalgebra():
        raise NotASubalgebra("derived algebra of a non-closed subspace")
    vecs = []
    for i, r in enumerate(sub.rows):
        for s in sub.rows[i + 1:]:
            vecs.append(sub.algebra.bracket(r, s))
    return Subspace(sub.algebra, vecs)


def centralizer(L: LieAlgebra, sub: Subspace,
                within: Optional[Subspace] = None) -> Subspace:
    """{x : [x, s] = 0 for all s in sub}, optionally intersected down to
    ``within`` (computed there directly)."""
    if within is None:
        within = Subspace.full(L)
    if sub.dim == 0 or within.dim == 0:
        return within
    # unknown x = c . within.rows; conditions [s, x] = 0 for basis s
    rows_out = []
    for s in sub.rows:
        m = L.ad(s)
        cols = [m.apply(r) for r in within.rows]
        rows_out.extend(Matrix.from_columns(cols).entries)
    vecs = [within.from_coords(k) for k in kernel(Matrix(rows_out))]
    return Subspace(L, vecs)


def normalizer(L: LieAlgebra, sub: Subspace) -> Subspace:
    """{x : [x, s] in sub for all s in sub}."""
    if sub.dim == 0:
        return Subspace.full(L)
    rows_out = []
    for s in sub.rows:
        m = L.ad(s)
        # residual of [x, s] modulo sub must vanish; [x,s] = -ad(s) x
        cols = [sub.reduce(m.apply(unit_vector(L.dim, j))) for j in range(L.dim)]
        rows_out.extend(Matrix.from_columns(cols).entries)
    vecs = list(kernel(Matrix(rows_out)))
    return Subspace(L, vecs)


def center(sub: Subspace) -> Subspace:
    """Centralizer of sub inside sub."""
    return centralizer(sub.algebra, sub, within=sub)


def is_solvable(sub: Subspace) -> bool:
    current = sub
    for _ in range(sub.algebra.dim + 1):
        if current.dim == 0:
            return True
        nxt = derived_algebra(current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return False


def radical(obj) -> Subspace:
    """Maximal solvable ideal, via Killing-orthogonality to the derived
    algebra (Cartan's criterion), verified solvable."""
    if isinstance(obj, LieAlgebra):
        sub = Subspace.full(obj)
    else:
        sub = obj
    L = sub.algebra
    if sub.dim == 0:
        return sub
    inner = sub.as_subalgebra()
    der_rows = []
    k = sub.dim
    for i in range(k):
        for j in range(i + 1, k):
            w = inner.bracket(unit_vector(k, i), unit_vector(k, j))
            if not vec_is_zero(w):
                der_rows.append(w)
    der = row_space_basis(der_rows, k)
    if not der:
        return sub  # abelian: the whole thing
    K = inner.killing_matrix()
    rows = [K.apply(d) for d in der]
    rad_coords = kernel(Matrix(rows))
    result = Subspace(L, [sub.from_coords(c) for c in rad_coords])
    if not is_solvable(result):
        raise NotASubalgebra("Killing-orthogonal complement is not solvable")
    return result


@dataclass(frozen=True)
class LeviDecomposition:
    radical: Subspace
    levi: Subspace


def levi_decomposition(sub: Subspace) -> LeviDecomposition:
    """Levi decomposition by iterative lifting of a canonical complement
    across the derived series of the radical (a linear solve per stage)."""
    L = sub.algebra
    rad = radical(sub)
    if rad.dim == 0:
        return LeviDecomposition(rad, sub)
    if rad.dim == sub.dim:
        return LeviDecomposition(rad, Subspace.zero(L))
    comp = rad.complement_in(sub)
    xs = [tuple(r) for r in comp.rows]
    s_dim = len(xs)

    # structure constants of sub/rad in the images of xs: solve against the
    # combined (complement | radical) basis once
    basis_cols = Matrix.from_columns([tuple(r) for r in comp.rows] +
                                     [tuple(r) for r in rad.rows])
    c_table = {}
    for i in range(s_dim):
        for j in range(i + 1, s_dim):
            sol = solve_linear(basis_cols, L.bracket(xs[i], xs[j]))
            assert sol is not None
            c_table[(i, j)] = sol[:s_dim]

    # derived series of the radical
    series = [rad]
    while series[-1].dim > 0:
        series.append(derived_algebra(series[-1]))
        if series[-1].dim == series[-2].dim:
            raise NotASubalgebra("radical is not solvable")

    # lift stage by stage: after stage m, brackets close modulo series[m+1];
    # corrections r_i live in series[m], and [r_i, r_j] drops into series[m+1]
    for stage in range(len(series) - 1):
        Rj, Rj1 = series[stage], series[stage + 1]
        if Rj.dim == 0:
            break
        r_basis = [tuple(r) for r in Rj.rows]
        nr = len(r_basis)
        n_unknowns = s_dim * nr
        rows_eq: list[list] = []
        rhs: list = []
        w_red = [Rj1.reduce(w) for w in r_basis]
        for i in range(s_dim):
            for j in range(i + 1, s_dim):
                defect = L.bracket(xs[i], xs[j])
                for k, c in enumerate(c_table[(i, j)]):
                    if c:
                        defect = vec_sub(defect, vec_scale(c, xs[k]))
                defect_mod = Rj1.reduce(defect)
                # defect + [x_i, r_j] - [x_j, r_i] - sum_k c_ij^k r_k = 0
                # with r_i = sum_a t[i,a] w_a, modulo Rj1
                col_j = [Rj1.reduce(L.bracket(xs[i], w)) for w in r_basis]
                col_i = [Rj1.reduce(vec_scale(-1, L.bracket(xs[j], w)))
                         for w in r_basis]
                for row_idx in range(L.dim):
                    eq = [ZERO] * n_unknowns
                    for a in range(nr):
                        if col_i[a][row_idx]:
                            eq[i * nr + a] = eq[i * nr + a] + col_i[a][row_idx]
                        if col_j[a][row_idx]:
                            eq[j * nr + a] = eq[j * nr + a] + col_j[a][row_idx]
                        if w_red[a][row_idx]:
                            for k, c in enumerate(c_table[(i, j)]):
                                if c:
                                    eq[k * nr + a] = eq[k * nr + a] - c * w_red[a][row_idx]
                    if defect_mod[row_idx] or any(eq):
                        rows_eq.append(eq)
                        rhs.append(-defect_mod[row_idx])
        if rows_eq:
            sol = solve_linear(Matrix(rows_eq), tuple(rhs))
            assert sol is not None, "Levi lifting system must be solvable"
            for i in range(s_dim):
                corr = tuple([ZERO] * L.dim)
                for a, w in enumerate(r_basis):
                    t = sol[i * nr + a]
                    if t:
                        corr = vec_add(corr, vec_scale(t, w))
                xs[i] = vec_add(xs[i], corr)
    levi = Subspace(L, xs)
    assert levi.dim == s_dim and levi.is_subalgebra()
    return LeviDecomposition(rad, levi)


@dataclass(frozen=True)
class JordanPair:
    semisimple: Vector
    nilpotent: Vector
    center_obstructed: bool = False


def _semisimple_poly(m: Matrix) -> Poly:
    """Polynomial p with p(m) the semisimple part of m (Newton iteration in
    Q[t]/(minpoly))."""
    mp = min_poly(m)
    g = squarefree_part(mp)
    if g == mp:
        return Poly.x()
    x = Poly.x() % mp
    for _ in range(mp.degree + 1):
        gx = g.compose_mod(x, mp)
        if gx.is_zero():
            break
        gpx = g.derivative().compose_mod(x, mp)
        gcd_, u, _ = poly_ext_gcd(gpx, mp)
        assert gcd_.degree == 0, "g' must stay invertible mod the min poly"
        inv = u * (ONE / gcd_.coeffs[0])
        x = (x - gx * inv % mp) % mp
    else:
        raise ArithmeticError("Jordan Newton iteration failed to converge")
    return x


def jordan_decomposition(L: LieAlgebra, x: Vector) -> JordanPair:
    """Jordan pair (semisimple, nilpotent) of x pulled back through ad."""
    m = L.ad(x)
    p = _semisimple_poly(m)
    if p == Poly.x():
        s_mat = m
    else:
        s_mat = p.eval_matrix(m)
    # solve sum_i y_i ad(b_i) = s_mat
    ads = L.ad_basis()
    cols = [tuple(c for row in a.entries for c in row) for a in ads]
    target = tuple(c for row in s_mat.entries for c in row)
    sol = solve_linear(Matrix.from_columns(cols), target)
    if sol is None:
        raise CenterObstruction("semisimple part lies outside ad(L)")
    # nontrivial center: the pair is only canonical modulo the center (the
    # RREF-canonical solution is returned and flagged)
    obstructed = L.center_dim() > 0
    semisimple = tuple(sol)
    nilpotent = vec_sub(x, semisimple)
    return JordanPair(semisimple, nilpotent, center_obstructed=obstructed)


def classify_element(L: LieAlgebra, x: Vector) -> str:
    """nilpotent / real_semisimple / compact_semisimple / mixed_semisimple /
    general, from the minimal polynomial of ad(x)."""
    m = L.ad(x)
    mp = min_poly(m)
    if all(not c for c in mp.coeffs[:-1]):
        return NILPOTENT  # minimal polynomial t^k: all eigenvalues zero
    squarefree = poly_gcd(mp, mp.derivative()).degree == 0
    if not squarefree:
        return GENERAL
    roots = factor_roots(mp, single_extension=False)
    all_real = True
    all_imag = True
    for r, _ in roots:
        a, b, d = scalar_parts(r)
        if d < 0:
            all_real = False
            if a != 0:
                all_imag = False
        elif d > 0:
            all_imag = False  # nonzero real irrational value
        else:
            if a != 0:
                all_imag = False
        if not all_real and not all_imag:
            break
    if all_real:
        return REAL_SEMISIMPLE
    if all_imag:
        return COMPACT_SEMISIMPLE
    return MIXED_SEMISIMPLE


def is_ad_nilpotent(L: LieAlgebra, x: Vector) -> bool:
    mp = min_poly(L.ad(x))
    return all(not c for c in mp.coeffs[:-1])


def subalgebra_generated(L: LieAlgebra, vectors: Iterable[Vector]) -> Subspace:
    """Smallest bracket-closed subspace containing the vectors."""
    current = Subspace(L, vectors)
    while True:
        new_vecs = []
        for i, r in enumerate(current.rows):
            for s in current.rows[i + 1:]:
                w = L.bracket(r, s)
                if not current.contains(w):
                    new_vecs.append(w)
        if not new_vecs:
            return current
        current = current.with_vectors(new_vecs)


def _check_torus(L: LieAlgebra, T: Subspace):
    if not T.is_abelian():
        raise NotATorus("subspace is not abelian")
    for r in T.rows:
        mp = min_poly(L.ad(r))
        if poly_gcd(mp, mp.derivative()).degree != 0:
            raise NotATorus(f"element {L.format_element(r)} is not semisimple")


def torus_weights(L: LieAlgebra, T: Subspace,
                  ambient: Optional[Subspace] = None):
    """Joint eigenvalues of ad(t_i) for the ordered basis rows of T acting on
    ambient (default: all of L): list of (weight tuple, Subspace)."""
    from . import rootsys  # local import to avoid a cycle
    basis = list(T.rows)
    return rootsys.joint_eigenspaces(L, basis, ambient)


def torus_split(L: LieAlgebra, T: Subspace) -> tuple[Subspace, Subspace]:
    """Split an algebraic torus into (real_part, compact_part).

    Each joint weight w = a + b*sqrt(d) is a linear functional on T; the
    real part is cut out by Im(w) = 0 and the compact part by Re(w) = 0,
    both linear conditions on torus coordinates.
    """
    _check_torus(L, T)
    if T.dim == 0:
        return T, T
    pairs = torus_weights(L, T)
    real_rows = []     # rows whose kernel is the real part
    compact_rows = []  # rows whose kernel is the compact part
    for weight, _space in pairs:
        a_row = [scalar_parts(w)[0] for w in weight]
        b_row = [scalar_parts(w)[1] for w in weight]
        d = next((scalar_parts(w)[2] for w in weight if scalar_parts(w)[2]), 0)
        if d < 0:
            real_rows.append(b_row)      # imaginary part must vanish
            compact_rows.append(a_row)   # real part must vanish
        elif d > 0:
            compact_rows.append(a_row)   # whole (real) value must vanish
            compact_rows.append(b_row)
        else:
            compact_rows.append(a_row)
    real_part = Subspace(L, [T.from_coords(c) for c in kernel(Matrix(real_rows))]
                         if real_rows else list(T.rows))
    compact_part = Subspace(L, [T.from_coords(c) for c in kernel(Matrix(compact_rows))]
                            if compact_rows else list(T.rows))
    return real_part, compact_part

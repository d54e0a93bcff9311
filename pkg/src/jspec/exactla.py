"""Exact dense linear algebra over K = Q(i, sqrt(d)).

Matrices are immutable row-major arrays of K-scalars and all computation is
exact: determinants by fraction-free Bareiss elimination (with a naive
Leibniz expansion kept as a cross-check oracle), rank and kernels by
Gauss-Jordan reduction, and subspaces canonicalized to reduced column
echelon form so equal subspaces compare equal as values.  The projection
onto a column space is A (A*A)^{-1} A*, which never leaves K.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Optional, Sequence, Union

from jspec.scalar import (
    Automorphism,
    FieldContext,
    FieldElem,
    format_scalar,
    parse_scalar,
)

Scalarish = Union[FieldElem, int, Fraction]
Vector = tuple[FieldElem, ...]


def _as_elem(x: Scalarish, ctx: FieldContext) -> FieldElem:
    if isinstance(x, FieldElem):
        if x.ctx.d != ctx.d:
            raise ValueError(f"entry from d={x.ctx.d} in a d={ctx.d} matrix")
        return x
    if isinstance(x, (int, Fraction)):
        return ctx.elem(x)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


def _find_ctx(entries: Iterable[object]) -> Optional[FieldContext]:
    for x in entries:
        if isinstance(x, FieldElem):
            return x.ctx
    return None


class Matrix:
    """An immutable nrows x ncols matrix over K."""

    __slots__ = ("nrows", "ncols", "rows", "ctx")

    def __init__(self, rows: Sequence[Sequence[Scalarish]],
                 ctx: Optional[FieldContext] = None,
                 ncols: Optional[int] = None):
        rows = [list(r) for r in rows]
        if ctx is None:
            ctx = _find_ctx(x for r in rows for x in r)
        if ctx is None:
            raise ValueError("no FieldElem entries; pass ctx explicitly")
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols={ncols} but rows have width {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        self.rows: tuple[tuple[FieldElem, ...], ...] = tuple(
            tuple(_as_elem(x, ctx) for x in r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols
        self.ctx = ctx

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, n: int, ctx: FieldContext) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                   ctx)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ctx: FieldContext) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ctx, ncols=ncols)

    @classmethod
    def diag(cls, entries: Sequence[Scalarish], ctx: FieldContext) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)]
                    for i in range(n)], ctx)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Scalarish]],
                     ctx: Optional[FieldContext] = None,
                     nrows: Optional[int] = None) -> "Matrix":
        if not cols:
            if nrows is None or ctx is None:
                raise ValueError("empty column list needs nrows and ctx")
            return cls([[] for _ in range(nrows)], ctx, ncols=0)
        return cls(list(zip(*cols)), ctx)

    # -- structure -----------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: tuple[int, int]) -> FieldElem:
        i, j = key
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(self.rows[i][j] for i in range(self.nrows))

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == \
               (other.nrows, other.ncols, other.rows)

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(format_scalar(x) for x in row)
                         for row in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    # -- arithmetic ------------------------------------------------------------

    def _same_shape(self, other: "Matrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} vs "
                f"{other.nrows}x{other.ncols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix([[x + y for x, y in zip(r, s)]
                       for r, s in zip(self.rows, other.rows)],
                      self.ctx, ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix([[x - y for x, y in zip(r, s)]
                       for r, s in zip(self.rows, other.rows)],
                      self.ctx, ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows],
                      self.ctx, ncols=self.ncols)

    def __mul__(self, other: object) -> "Matrix":
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(
                    f"cannot multiply {self.nrows}x{self.ncols} by "
                    f"{other.nrows}x{other.ncols}")
            zero = self.ctx.zero
            out = []
            for i in range(self.nrows):
                row = []
                for j in range(other.ncols):
                    acc = zero
                    for k in range(self.ncols):
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return Matrix(out, self.ctx, ncols=other.ncols)
        if isinstance(other, (FieldElem, int, Fraction)):
            s = _as_elem(other, self.ctx)
            return Matrix([[x * s for x in r] for r in self.rows],
                          self.ctx, ncols=self.ncols)
        return NotImplemented

    def __rmul__(self, other: object) -> "Matrix":
        if isinstance(other, (FieldElem, int, Fraction)):
            return self * other
        return NotImplemented

    def matvec(self, v: Sequence[Scalarish]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != ncols {self.ncols}")
        vv = [_as_elem(x, self.ctx) for x in v]
        return tuple(
            sum((self.rows[i][k] * vv[k] for k in range(self.ncols)),
                self.ctx.zero)
            for i in range(self.nrows))

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)], self.ctx, ncols=self.nrows)

    def conj_transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j].conj() for i in range(self.nrows)]
                       for j in range(self.ncols)], self.ctx, ncols=self.nrows)

    def is_hermitian(self) -> bool:
        return self.is_square and self == self.conj_transpose()

    def trace(self) -> FieldElem:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), self.ctx.zero)

    # -- elimination -----------------------------------------------------------

    def det(self) -> FieldElem:
        """Exact determinant by fraction-free Bareiss elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self.ctx.one
        m = [list(r) for r in self.rows]
        sign = 1
        prev = self.ctx.one
        for k in range(n - 1):
            piv = next((r for r in range(k, n) if m[r][k]), None)
            if piv is None:
                return self.ctx.zero
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            prev = m[k][k]
        last = m[n - 1][n - 1]
        return -last if sign < 0 else last

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        pr = 0
        for col in range(self.ncols):
            if pr == self.nrows:
                break
            piv = next((r for r in range(pr, self.nrows) if rows[r][col]), None)
            if piv is None:
                continue
            rows[pr], rows[piv] = rows[piv], rows[pr]
            inv = rows[pr][col].inv()
            rows[pr] = [x * inv for x in rows[pr]]
            for r in range(self.nrows):
                if r != pr and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[pr])]
            pivots.append(col)
            pr += 1
        return Matrix(rows, self.ctx, ncols=self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "Matrix":
        """Columns spanning the null space, one per free variable."""
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        cols = []
        for f in free:
            v = [self.ctx.zero] * self.ncols
            v[f] = self.ctx.one
            for r, p in enumerate(pivots):
                v[p] = -red.rows[r][f]
            cols.append(tuple(v))
        return Matrix.from_columns(cols, self.ctx, nrows=self.ncols)

    def colspace(self) -> "Subspace":
        return Subspace(self.nrows, self)

    def solve(self, v: Sequence[Scalarish]) -> Optional[Vector]:
        """One exact solution of self * x = v, or None if inconsistent."""
        if len(v) != self.nrows:
            raise ValueError(f"vector length {len(v)} != nrows {self.nrows}")
        vv = [_as_elem(x, self.ctx) for x in v]
        aug = Matrix([list(r) + [vv[i]] for i, r in enumerate(self.rows)],
                     self.ctx, ncols=self.ncols + 1)
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [self.ctx.zero] * self.ncols
        for r, p in enumerate(pivots):
            x[p] = red.rows[r][self.ncols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = hstack(self, Matrix.identity(n, self.ctx))
        red, pivots = aug.rref()
        if pivots != tuple(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([r[n:] for r in red.rows], self.ctx, ncols=n)


class Subspace:
    """A linear subspace of K^n, canonicalized for exact equality.

    Built from any spanning matrix; the stored basis is the reduced column
    echelon form of the span, which is unique per subspace, so two Subspace
    values are equal iff they are the same subspace.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, spanning: Matrix):
        if spanning.nrows != ambient_dim:
            raise ValueError(
                f"spanning matrix has {spanning.nrows} rows, expected "
                f"{ambient_dim}")
        red, _ = spanning.transpose().rref()
        cols = [red.row(i) for i in range(red.nrows) if any(red.row(i))]
        self.ambient_dim = ambient_dim
        self.basis = Matrix.from_columns(cols, spanning.ctx, nrows=ambient_dim)

    @property
    def dim(self) -> int:
        return self.basis.ncols

    @property
    def ctx(self) -> FieldContext:
        return self.basis.ctx

    def contains(self, v: Sequence[Scalarish]) -> bool:
        if self.dim == 0:
            return not any(_as_elem(x, self.ctx) for x in v)
        return self.basis.solve(v) is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of K^{self.ambient_dim})"


# -- module-level operations ---------------------------------------------------


def det_leibniz(m: Matrix) -> FieldElem:
    """Determinant by permutation expansion; oracle for Matrix.det."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    total = m.ctx.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n)
                         if perm[a] > perm[b])
        term = m.ctx.one if inversions % 2 == 0 else -m.ctx.one
        for i in range(n):
            term = term * m.rows[i][perm[i]]
        total = total + term
    return total


def vdot(x: Sequence[Scalarish], y: Sequence[Scalarish],
         ctx: Optional[FieldContext] = None) -> FieldElem:
    """Inner product conj(x) . y, conjugate-linear in the first slot."""
    if len(x) != len(y):
        raise ValueError("vectors of different lengths")
    if ctx is None:
        ctx = _find_ctx(list(x) + list(y))
    if ctx is None:
        raise ValueError("no FieldElem entries; pass ctx explicitly")
    return sum((_as_elem(a, ctx).conj() * _as_elem(b, ctx)
                for a, b in zip(x, y)), ctx.zero)


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    return Matrix([list(r) + list(s) for r, s in zip(a.rows, b.rows)],
                  a.ctx, ncols=a.ncols + b.ncols)


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.ncols:
        raise ValueError("column count mismatch")
    return Matrix([list(r) for r in a.rows] + [list(r) for r in b.rows],
                  a.ctx, ncols=a.ncols)


def projection_onto(a: Matrix) -> Matrix:
    """The matrix of the orthogonal projection onto the column space of a.

    Computed as a (a*a)^{-1} a*, staying inside K.  Columns must be
    independent; an empty column list yields the zero projection.
    """
    if a.ncols == 0:
        return Matrix.zeros(a.nrows, a.nrows, a.ctx)
    if a.rank() != a.ncols:
        raise ValueError("columns are dependent")
    gram = a.conj_transpose() * a
    return a * gram.inverse() * a.conj_transpose()


def gram_schmidt(a: Matrix) -> Matrix:
    """Pairwise-orthogonal columns spanning the column space of a.

    No normalization (norms would leave K); dependent input columns are
    dropped.
    """
    us: list[Vector] = []
    for j in range(a.ncols):
        v = list(a.col(j))
        for u in us:
            coef = vdot(u, v, a.ctx) / vdot(u, u, a.ctx)
            v = [x - coef * y for x, y in zip(v, u)]
        if any(v):
            us.append(tuple(v))
    return Matrix.from_columns(us, a.ctx, nrows=a.nrows)


def automorphism_entrywise(f: Automorphism, m: Matrix) -> Matrix:
    """Apply a field automorphism to every entry."""
    return Matrix([[f(x) for x in row] for row in m.rows],
                  m.ctx, ncols=m.ncols)


# -- text form -------------------------------------------------------------


def matrix_to_json(m: Matrix) -> dict:
    return {"d": m.ctx.d,
            "rows": [[format_scalar(x) for x in row] for row in m.rows]}


def matrix_from_json(obj: object, ctx: Optional[FieldContext] = None) -> Matrix:
    if not isinstance(obj, dict):
        raise ValueError("matrix form must be a JSON object")
    if "rows" not in obj:
        raise ValueError('matrix form needs a "rows" array')
    d = obj.get("d")
    if ctx is None:
        if d is None:
            raise ValueError('matrix form needs a "d" field')
        if not isinstance(d, int):
            raise ValueError('"d" must be an integer')
        ctx = FieldContext(d)
    elif d is not None and d != ctx.d:
        raise ValueError(f'matrix is over d={d}, expected d={ctx.d}')
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError('"rows" must be an array of arrays')
    parsed = []
    for i, row in enumerate(rows):
        out = []
        for j, cell in enumerate(row):
            if not isinstance(cell, str):
                raise ValueError(f"entry ({i},{j}) is not a string")
            out.append(parse_scalar(cell, ctx))
        parsed.append(out)
    return Matrix(parsed, ctx)

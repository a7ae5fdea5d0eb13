"""Exact matrices, subspaces, coordinates, linear maps and duals.

Single-component objects (:class:`Matrix`, :class:`Subspace`,
:class:`LinearMap`) carry the algorithms; the ``N*`` classes are thin
tuples applying them component by component.  Vectors are plain tuples of
:class:`~nlalg.fields.FieldElement` in standard coordinates, and linear
functionals are tuples too, read as coordinate rows in the standard dual
basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import (
    AmbientMismatch,
    FieldMismatch,
    NotABasis,
    ShapeMismatch,
    SingularMatrix,
)
from .fields import FieldDescriptor, FieldElement, NField

Vector = tuple  # tuple[FieldElement, ...]


def bareiss_det(rows: Sequence[Sequence], zero, one, exact_div: Callable):
    """Fraction-free determinant over any integral domain with exact division."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if M[k][k] == zero:
            for i in range(k + 1, n):
                if M[i][k] != zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * pivot - mik * row_k[j], prev)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def _rref_rows(rows: list[list[FieldElement]], ncols: int):
    """In-place reduced row echelon form; returns the pivot column list.

    Pivot choice: leftmost column with a nonzero entry at or below the
    current row, first such row, scaled to 1.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        prow = [x * inv for x in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if not f.is_zero:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


class Matrix:
    """Dense immutable matrix over a single field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldDescriptor, rows: Iterable[Iterable], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if self.rows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ShapeMismatch("ragged matrix rows")
        else:
            self.ncols = ncols or 0

    @classmethod
    def _raw(cls, field, rows, ncols=None):
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = len(m.rows[0]) if m.rows else (ncols or 0)
        return m

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field, m, n=None):
        n = m if n is None else n
        return cls._raw(field, [[field.zero] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, field, cols: Sequence[Sequence], nrows: int | None = None):
        cols = [tuple(field(x) for x in c) for c in cols]
        if not cols:
            return cls._raw(field, [[] for _ in range(nrows or 0)], 0)
        return cls._raw(field, list(zip(*cols)))

    @classmethod
    def diagonal(cls, field, entries):
        entries = [field(e) for e in entries]
        n = len(entries)
        return cls._raw(field, [[entries[i] if i == j else field.zero for j in range(n)]
                                for i in range(n)], n)

    @classmethod
    def block_diagonal(cls, field, blocks: Sequence["Matrix"]):
        n = sum(b.nrows for b in blocks)
        rows = [[field.zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls._raw(field, rows, n)

    # -- shape and access ---------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.field.literal}: [{body}])"

    def to_literal(self):
        return [[str(x) for x in r] for r in self.rows]

    # -- arithmetic -------------------------------------------------------------

    def _check_field(self, other):
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Matrix._raw(self.field, [[a + b for a, b in zip(r, s)]
                                        for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        return Matrix._raw(self.field, [[a - b for a, b in zip(r, s)]
                                        for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return Matrix._raw(self.field, [[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        c = self.field(c)
        return Matrix._raw(self.field, [[a * c for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.shape} * {other.shape}")
        zero = self.field.zero
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if not a.is_zero and not b.is_zero:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix._raw(self.field, out, other.ncols)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int):
        if not self.is_square:
            raise ShapeMismatch("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Matrix.identity(self.field, self.nrows), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    T = property(transpose)

    def trace(self):
        if not self.is_square:
            raise ShapeMismatch("trace of a non-square matrix")
        acc = self.field.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def det(self):
        if not self.is_square:
            raise ShapeMismatch("determinant of a non-square matrix")
        F = self.field
        return bareiss_det(self.rows, F.zero, F.one, lambda a, b: a / b)

    def rref(self) -> tuple["Matrix", list[int]]:
        rows = [list(r) for r in self.rows]
        piv = _rref_rows(rows, self.ncols)
        return Matrix._raw(self.field, rows, self.ncols), piv

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[Vector]:
        """Basis of {v : A v = 0}, one vector per free column."""
        R, piv = self.rref()
        F = self.field
        free = [j for j in range(self.ncols) if j not in piv]
        basis = []
        for fj in free:
            v = [F.zero] * self.ncols
            v[fj] = F.one
            for r, pj in enumerate(piv):
                v[pj] = -R.rows[r][fj]
            basis.append(tuple(v))
        return basis

    def column_space(self) -> list[Vector]:
        return row_space_basis(self.columns(), self.field, self.nrows)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        F = self.field
        rows = [list(r) + [F.one if i == j else F.zero for j in range(n)]
                for i, r in enumerate(self.rows)]
        piv = _rref_rows(rows, n)
        if len(piv) < n:
            raise SingularMatrix("matrix is singular")
        return Matrix._raw(F, [r[n:] for r in rows], n)

    def solve(self, b: Sequence) -> Vector | None:
        """One solution of ``A x = b`` or None when inconsistent."""
        F = self.field
        n = self.ncols
        rows = [list(r) + [F(x)] for r, x in zip(self.rows, b)]
        piv = _rref_rows(rows, n + 1)
        if n in piv:
            return None
        x = [F.zero] * n
        for r, pj in enumerate(piv):
            x[pj] = rows[r][n]
        return tuple(x)

    @property
    def is_zero(self):
        return all(x.is_zero for r in self.rows for x in r)

    @property
    def is_diagonal(self):
        return all(self.rows[i][j].is_zero for i in range(self.nrows)
                   for j in range(self.ncols) if i != j)

    @property
    def is_symmetric(self):
        return self.is_square and self == self.transpose()

    def commutes_with(self, other: "Matrix") -> bool:
        return self * other == other * self

    def submatrix(self, rows, cols) -> "Matrix":
        return Matrix._raw(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))


def row_space_basis(vectors: Sequence[Sequence], field, length: int) -> list[Vector]:
    """Canonical basis of span(vectors): the nonzero rows of their rref."""
    if not vectors:
        return []
    rows = [[field(x) for x in v] for v in vectors]
    piv = _rref_rows(rows, length)
    return [tuple(rows[i]) for i in range(len(piv))]


def hstack(field, mats: Sequence[Matrix]) -> Matrix:
    nrows = mats[0].nrows
    return Matrix._raw(field, [sum((list(m.rows[i]) for m in mats), []) for i in range(nrows)])


def zero_vector(field, n) -> Vector:
    return tuple(field.zero for _ in range(n))


def is_zero_vector(v) -> bool:
    return all(x.is_zero for x in v)


# -- subspaces --------------------------------------------------------------------

class Subspace:
    """Subspace of F^n stored by its canonical (reduced echelon) basis."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field, ambient: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.ambient = ambient
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector of length {len(v)} in F^{ambient}")
        self.basis = tuple(row_space_basis(vectors, field, ambient))

    @classmethod
    def whole(cls, field, n):
        return cls(field, n, Matrix.identity(field, n).rows)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, [])

    @property
    def dim(self):
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        """Basis vectors as columns (reduced column-echelon form)."""
        return Matrix.from_columns(self.field, self.basis, self.ambient)

    def _check(self, other):
        if other.ambient != self.ambient or other.field != self.field:
            raise AmbientMismatch("subspaces of different spaces")

    def contains(self, v) -> bool:
        if len(v) != self.ambient:
            raise AmbientMismatch("vector length")
        return len(row_space_basis(list(self.basis) + [tuple(v)], self.field, self.ambient)) == self.dim

    def __contains__(self, v):
        return self.contains(v)

    def contains_subspace(self, other) -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other):
        self._check(other)
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def intersection(self, other) -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient)
        # A x = B y  <=>  [A | -B] (x, y) = 0
        A = self.basis_matrix()
        B = other.basis_matrix()
        M = hstack(self.field, [A, -B])
        vecs = [A.apply(z[: self.dim]) for z in M.nullspace()]
        return Subspace(self.field, self.ambient, vecs)

    __and__ = intersection

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.field == other.field and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} in {self.field.literal}^{self.ambient})"

    def is_invariant(self, A: Matrix) -> bool:
        return all(self.contains(A.apply(v)) for v in self.basis)

    def annihilator(self) -> "Subspace":
        """Functionals (coordinate rows) vanishing on the subspace."""
        if not self.basis:
            return Subspace.whole(self.field, self.ambient)
        return Subspace(self.field, self.ambient,
                        Matrix._raw(self.field, self.basis).nullspace())


def annihilator(S, field=None, ambient=None) -> Subspace:
    """Annihilator of a subspace or of a finite set of vectors."""
    if isinstance(S, Subspace):
        return S.annihilator()
    return Subspace(field, ambient, S).annihilator()


def double_annihilator(S: Subspace) -> Subspace:
    """(S°)° under the identification V** = V; equals S."""
    return S.annihilator().annihilator()


# -- independence, coordinates, bases --------------------------------------------

@dataclass(frozen=True)
class Independence:
    independent: bool
    witness: Vector | None  # coefficients of a vanishing nontrivial combination


def independence(vectors: Sequence[Sequence], field, length: int) -> Independence:
    if not vectors:
        return Independence(True, None)
    M = Matrix.from_columns(field, vectors, length)
    null = M.nullspace()
    if null:
        return Independence(False, null[0])
    return Independence(True, None)


def _basis_matrix(field, basis: Sequence[Sequence]) -> Matrix:
    B = Matrix.from_columns(field, basis)
    if not B.is_square or B.rank() < B.nrows:
        raise NotABasis("vectors do not form a basis")
    return B


def coordinates(alpha: Sequence, basis: Sequence[Sequence], field) -> Vector:
    """Coordinates of ``alpha`` in the ordered ``basis``."""
    B = _basis_matrix(field, basis)
    if len(alpha) != B.nrows:
        raise ShapeMismatch("vector length does not match basis")
    return B.solve(alpha)


def from_coordinates(coords: Sequence, basis: Sequence[Sequence], field) -> Vector:
    return _basis_matrix(field, basis).apply(coords)


def change_of_basis(B: Sequence[Sequence], C: Sequence[Sequence], field) -> Matrix:
    """``P`` with ``[a]_B = P [a]_C``; column j of P is ``[C_j]_B``."""
    MB = _basis_matrix(field, B)
    MC = _basis_matrix(field, C)
    if MB.shape != MC.shape:
        raise NotABasis("bases of different spaces")
    return MB.inverse() * MC


def standard_basis(field, n) -> list[Vector]:
    return Matrix.identity(field, n).columns()


def unit_matrix_basis(field, m, n) -> list[Matrix]:
    """The unit matrices E^{p,q}, a basis of the m x n matrices."""
    out = []
    for p in range(m):
        for q in range(n):
            rows = [[field.one if (i, j) == (p, q) else field.zero for j in range(n)]
                    for i in range(m)]
            out.append(Matrix._raw(field, rows, n))
    return out


# -- linear maps --------------------------------------------------------------------

class LinearMap:
    """Linear map F^n -> F^m given by its matrix relative to chosen bases.

    ``std`` is the matrix in standard coordinates; ``matrix`` is the matrix
    relative to ``basis_in``/``basis_out`` (``[T a]_out = matrix [a]_in``).
    """

    __slots__ = ("field", "std", "basis_in", "basis_out")

    def __init__(self, matrix: Matrix, basis_in=None, basis_out=None):
        F = matrix.field
        self.field = F
        m, n = matrix.shape
        self.basis_in = tuple(map(tuple, basis_in)) if basis_in else tuple(standard_basis(F, n))
        self.basis_out = tuple(map(tuple, basis_out)) if basis_out else tuple(standard_basis(F, m))
        Bin = _basis_matrix(F, self.basis_in)
        Bout = _basis_matrix(F, self.basis_out)
        if Bin.nrows != n or Bout.nrows != m:
            raise ShapeMismatch("basis dimension does not match the matrix shape")
        self.std = Bout * matrix * Bin.inverse()

    @classmethod
    def identity(cls, field, n):
        return cls(Matrix.identity(field, n))

    @property
    def matrix(self) -> Matrix:
        return self.matrix_in(self.basis_in, self.basis_out)

    def matrix_in(self, basis_in, basis_out) -> Matrix:
        Bin = _basis_matrix(self.field, basis_in)
        Bout = _basis_matrix(self.field, basis_out)
        return Bout.inverse() * self.std * Bin

    @property
    def domain_dim(self):
        return self.std.ncols

    @property
    def codomain_dim(self):
        return self.std.nrows

    def __call__(self, alpha):
        return self.std.apply(alpha)

    apply = __call__

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """``self o inner``."""
        if inner.field != self.field:
            raise FieldMismatch("no linear map exists between spaces over different fields")
        if inner.codomain_dim != self.domain_dim:
            raise ShapeMismatch("codomain of the inner map is not the outer domain")
        out = LinearMap.__new__(LinearMap)
        out.field = self.field
        out.std = self.std * inner.std
        out.basis_in = inner.basis_in
        out.basis_out = self.basis_out
        return out

    def rank(self) -> int:
        return self.std.rank()

    def nullity(self) -> int:
        return self.domain_dim - self.rank()

    def kernel(self) -> Subspace:
        return Subspace(self.field, self.domain_dim, self.std.nullspace())

    def range(self) -> Subspace:
        return Subspace(self.field, self.codomain_dim, self.std.columns())

    def is_invertible(self) -> bool:
        return self.std.is_square and self.rank() == self.domain_dim

    def is_onto(self) -> bool:
        return self.rank() == self.codomain_dim

    def is_nonsingular(self) -> bool:
        return self.nullity() == 0

    def inverse(self) -> "LinearMap":
        if not self.is_invertible():
            raise SingularMatrix("linear map is not invertible")
        out = LinearMap.__new__(LinearMap)
        out.field = self.field
        out.std = self.std.inverse()
        out.basis_in, out.basis_out = self.basis_out, self.basis_in
        return out

    def transpose_map(self) -> "LinearMap":
        """T^t on functionals: (T^t g)(a) = g(T a); matrix is the transpose."""
        out = LinearMap.__new__(LinearMap)
        out.field = self.field
        out.std = self.std.transpose()
        out.basis_in = tuple(standard_basis(self.field, self.codomain_dim))
        out.basis_out = tuple(standard_basis(self.field, self.domain_dim))
        return out

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.std == other.std

    def __hash__(self):
        return hash(self.std)


def evaluate_functional(g: Sequence, alpha: Sequence):
    acc = g[0].field.zero if g else None
    for a, b in zip(g, alpha):
        acc = acc + a * b
    return acc


def functional_dependence(g: Sequence, fs: Sequence[Sequence], field) -> Vector | None:
    """Coefficients ``c`` with ``g = sum c_i f_i``, or None if g is not in the span."""
    n = len(g)
    if not fs:
        return () if is_zero_vector(g) else None
    return Matrix.from_columns(field, fs, n).solve(g)


def kernel_criterion(g: Sequence, fs: Sequence[Sequence], field) -> bool:
    """g lies in span(fs) iff the common null space of the fs is killed by g."""
    n = len(g)
    common = Matrix._raw(field, fs, n).nullspace() if fs else standard_basis(field, n)
    return all(evaluate_functional(g, v).is_zero for v in common)


def hyperspace(g: Sequence, field) -> Subspace:
    """Null space of a functional."""
    return Subspace(field, len(g), Matrix._raw(field, [tuple(g)]).nullspace())


# -- n-level wrappers ----------------------------------------------------------------

class NMatrix:
    """Componentwise tuple of matrices over an n-field."""

    __slots__ = ("nfield", "components")

    def __init__(self, nfield: NField, components: Sequence):
        comps = []
        for F, M in zip(nfield.components, components):
            if isinstance(M, Matrix):
                if M.field != F:
                    raise FieldMismatch(f"component over {M.field} in slot for {F}")
                comps.append(M)
            else:
                comps.append(Matrix(F, M))
        if len(comps) != len(nfield.components):
            raise ShapeMismatch("arity mismatch")
        self.nfield = nfield
        self.components = tuple(comps)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def _map(self, fn):
        return NMatrix(self.nfield, [fn(M) for M in self.components])

    def _zip(self, other, fn):
        if other.nfield != self.nfield:
            raise FieldMismatch("n-matrices over different n-fields")
        return NMatrix(self.nfield, [fn(a, b) for a, b in zip(self.components, other.components)])

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    def transpose(self):
        return self._map(Matrix.transpose)

    def inverse(self):
        return self._map(Matrix.inverse)

    def det(self):
        return tuple(M.det() for M in self.components)

    def rank(self):
        return tuple(M.rank() for M in self.components)

    @property
    def shapes(self):
        return tuple(M.shape for M in self.components)

    def __eq__(self, other):
        return isinstance(other, NMatrix) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return " U ".join(repr(M) for M in self.components)


class NSubspace:
    __slots__ = ("components",)

    def __init__(self, components: Sequence[Subspace]):
        self.components = tuple(components)

    @property
    def dim(self):
        return tuple(W.dim for W in self.components)

    def _zip(self, other, fn):
        if len(other.components) != len(self.components):
            raise AmbientMismatch("arity mismatch")
        return [fn(a, b) for a, b in zip(self.components, other.components)]

    def __add__(self, other):
        return NSubspace(self._zip(other, lambda a, b: a + b))

    def intersection(self, other):
        return NSubspace(self._zip(other, Subspace.intersection))

    def contains(self, alpha) -> bool:
        return all(W.contains(a) for W, a in zip(self.components, alpha))

    def contains_subspace(self, other) -> bool:
        return all(self._zip(other, Subspace.contains_subspace))

    def annihilator(self):
        return NSubspace(W.annihilator() for W in self.components)

    def __eq__(self, other):
        return isinstance(other, NSubspace) and self.components == other.components

    def __hash__(self):
        return hash(self.components)


def subspace_op(W1: NSubspace, W2: NSubspace, op: str):
    if op == "sum":
        return W1 + W2
    if op == "intersection":
        return W1.intersection(W2)
    if op == "contains":
        return W1.contains_subspace(W2)
    if op == "equal":
        return W1 == W2
    raise ValueError(f"unknown subspace op {op!r}")


@dataclass(frozen=True)
class NIndependence:
    kind: str  # "Independent" | "Dependent" | "SemiDependent"
    verdicts: tuple[bool, ...]  # per component, True = independent
    witnesses: tuple  # per component, None or vanishing coefficients


def linear_independence(nfield: NField, sets: Sequence[Sequence[Sequence]]) -> NIndependence:
    """Verdict for an n-set given per component as lists of coordinate vectors."""
    results = []
    for F, vecs in zip(nfield.components, sets):
        length = len(vecs[0]) if vecs else 0
        results.append(independence(vecs, F, length))
    verdicts = tuple(r.independent for r in results)
    if all(verdicts):
        kind = "Independent"
    elif not any(verdicts):
        kind = "Dependent"
    else:
        kind = "SemiDependent"
    return NIndependence(kind, verdicts, tuple(r.witness for r in results))


class NLinearMap:
    """Componentwise linear maps T_1 U ... U T_n."""

    __slots__ = ("nfield", "components")

    def __init__(self, nfield: NField, components: Sequence[LinearMap]):
        for F, T in zip(nfield.components, components):
            if T.field != F:
                raise FieldMismatch("component map over the wrong field")
        self.nfield = nfield
        self.components = tuple(components)

    def __call__(self, alpha):
        return tuple(T(a) for T, a in zip(self.components, alpha))

    def compose(self, inner: "NLinearMap") -> "NLinearMap":
        if inner.nfield != self.nfield:
            raise FieldMismatch("no n-linear map exists across different n-fields")
        return NLinearMap(self.nfield, [a.compose(b) for a, b in zip(self.components, inner.components)])

    def rank_nullity(self):
        return tuple((T.rank(), T.nullity()) for T in self.components)

    def is_invertible(self):
        return all(T.is_invertible() for T in self.components)

    def inverse(self):
        return NLinearMap(self.nfield, [T.inverse() for T in self.components])

    def transpose_map(self):
        return NLinearMap(self.nfield, [T.transpose_map() for T in self.components])


def transform(A: NMatrix, basis_in=None, basis_out=None) -> NLinearMap:
    n = len(A)
    bins = basis_in or [None] * n
    bouts = basis_out or [None] * n
    return NLinearMap(A.nfield, [LinearMap(M, bi, bo) for M, bi, bo in zip(A, bins, bouts)])

"""Inner products, orthogonality, adjoints, spectral resolution, bilinear forms.

Square roots generally leave the field, so nothing here normalizes: norms
are squared norms, Gram-Schmidt output is orthogonal but not orthonormal,
and projection formulas divide by ``||a||^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import (
    CharacteristicTwo,
    DependentInput,
    NotSelfAdjoint,
    NotSymmetric,
    ShapeMismatch,
    SplitFailure,
    UnorderedField,
)
from .fields import FieldDescriptor, FieldElement, sign
from .linalg import Matrix, Subspace, is_zero_vector
from .operators import eigen, poly_at, split_part, charpoly
from .poly import Poly, lagrange_basis


class InnerProductSpace:
    """F^n with inner product (a|b) = a^T G b over an ordered field."""

    def __init__(self, field: FieldDescriptor, n: int, gram: Matrix | None = None):
        if not field.is_ordered:
            raise UnorderedField(f"{field} carries no ordering; positivity cannot hold")
        G = gram if gram is not None else Matrix.identity(field, n)
        if G.shape != (n, n):
            raise ShapeMismatch(f"Gram matrix of shape {G.shape} for dimension {n}")
        if not G.is_symmetric:
            raise NotSymmetric("Gram matrix must be symmetric")
        for k in range(1, n + 1):
            if sign(G.submatrix(range(k), range(k)).det()) <= 0:
                raise ValueError(f"Gram matrix is not positive definite (minor {k})")
        self.field = field
        self.n = n
        self.gram = G

    def inner(self, a: Sequence, b: Sequence) -> FieldElement:
        if len(a) != self.n or len(b) != self.n:
            raise ShapeMismatch("vector length does not match the space")
        Gb = self.gram.apply(b)
        acc = self.field.zero
        for x, y in zip(a, Gb):
            acc = acc + x * y
        return acc

    def norm2(self, a: Sequence) -> FieldElement:
        return self.inner(a, a)

    def __add__(self, other: "InnerProductSpace") -> "InnerProductSpace":
        return InnerProductSpace(self.field, self.n, self.gram + other.gram)

    def scaled(self, c) -> "InnerProductSpace":
        return InnerProductSpace(self.field, self.n, self.gram.scale(c))


def inner(a: Sequence, b: Sequence, space: InnerProductSpace) -> FieldElement:
    return space.inner(a, b)


def _axpy(c, x, y):
    return tuple(yi + c * xi for xi, yi in zip(x, y))


def gram_schmidt(vectors: Sequence[Sequence], space: InnerProductSpace) -> list[tuple]:
    """Orthogonalize without normalizing; raises DependentInput on dependence."""
    out: list[tuple] = []
    norms = []
    for beta in vectors:
        beta = tuple(space.field(x) for x in beta)
        alpha = beta
        for a, na in zip(out, norms):
            alpha = _axpy(-(space.inner(beta, a) / na), a, alpha)
        if is_zero_vector(alpha):
            raise DependentInput("input vectors are linearly dependent")
        out.append(alpha)
        norms.append(space.norm2(alpha))
    return out


def _basis_of(W) -> list:
    return list(W.basis) if isinstance(W, Subspace) else [tuple(v) for v in W]


def best_approx(beta: Sequence, W, space: InnerProductSpace) -> tuple:
    """The unique a in W with beta - a orthogonal to W."""
    F = space.field
    ortho = gram_schmidt(_basis_of(W), space)
    alpha = tuple(F.zero for _ in range(space.n))
    for a in ortho:
        alpha = _axpy(space.inner(beta, a) / space.norm2(a), a, alpha)
    return alpha


def orthogonal_projection(W, space: InnerProductSpace) -> Matrix:
    """Matrix of the orthogonal projection onto W."""
    F = space.field
    cols = [best_approx(e, W, space) for e in Matrix.identity(F, space.n).columns()]
    return Matrix.from_columns(F, cols)


def orth_complement(S, space: InnerProductSpace) -> Subspace:
    """Vectors orthogonal to every vector of S."""
    F = space.field
    vecs = _basis_of(S)
    if not vecs:
        return Subspace.whole(F, space.n)
    rows = Matrix(F, vecs) * space.gram
    return Subspace(F, space.n, rows.nullspace())


# -- adjoints ------------------------------------------------------------------------

def adjoint(A: Matrix, space: InnerProductSpace) -> Matrix:
    """Matrix of T* with (T a|b) = (a|T* b): G^-1 A^T G."""
    if A.shape != (space.n, space.n):
        raise ShapeMismatch("operator does not act on the space")
    G = space.gram
    return G.inverse() * A.transpose() * G


def is_self_adjoint(A: Matrix, space: InnerProductSpace) -> bool:
    return adjoint(A, space) == A


def is_normal(A: Matrix, space: InnerProductSpace) -> bool:
    S = adjoint(A, space)
    return A * S == S * A


def is_orthogonal_matrix(A: Matrix) -> bool:
    return A.is_square and A.transpose() * A == Matrix.identity(A.field, A.nrows)


def is_unitary(A: Matrix, space: InnerProductSpace) -> bool:
    S = adjoint(A, space)
    I = Matrix.identity(A.field, A.nrows)
    return A * S == I and S * A == I


# -- spectral theory -------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralResolution:
    values: tuple[FieldElement, ...]
    projections: tuple[Matrix, ...]
    polys: tuple[Poly, ...]  # projections[j] == polys[j](T)

    def reconstruct(self) -> Matrix:
        out = self.projections[0].scale(0)
        for c, E in zip(self.values, self.projections):
            out = out + E.scale(c)
        return out


def spectral_resolution(A: Matrix, space: InnerProductSpace) -> SpectralResolution:
    if not is_self_adjoint(A, space):
        raise NotSelfAdjoint("operator is not self-adjoint for this inner product")
    _, rest = split_part(charpoly(A))
    if rest.degree > 0:
        raise SplitFailure(None, rest)
    values = tuple(ev.value for ev in eigen(A))
    polys = tuple(lagrange_basis(A.field, values))
    projections = tuple(poly_at(e, A) for e in polys)
    return SpectralResolution(values, projections, polys)


def spectral_function(A: Matrix, value_map: Mapping | Callable, space: InnerProductSpace) -> Matrix:
    """sum f(c_j) E_j, with f given by its values on the spectrum."""
    res = spectral_resolution(A, space)
    f = value_map if callable(value_map) else value_map.__getitem__
    out = Matrix.zeros(A.field, A.nrows)
    for c, E in zip(res.values, res.projections):
        out = out + E.scale(f(c))
    return out


# -- bilinear forms ---------------------------------------------------------------------

class BilinearForm:
    """f(a, b) = a^T M b."""

    def __init__(self, matrix: Matrix):
        if not matrix.is_square:
            raise ShapeMismatch("bilinear form needs a square matrix")
        self.matrix = matrix
        self.field = matrix.field

    @property
    def symmetric(self) -> bool:
        return self.matrix.is_symmetric

    @property
    def n(self):
        return self.matrix.nrows

    def evaluate(self, a, b):
        if len(a) != self.n or len(b) != self.n:
            raise ShapeMismatch("vector length does not match the form")
        Mb = self.matrix.apply(b)
        acc = self.field.zero
        for x, y in zip(a, Mb):
            acc = acc + self.field(x) * y
        return acc

    __call__ = evaluate

    def quadratic_form(self, a):
        return self.evaluate(a, a)

    def rank(self) -> int:
        return self.matrix.rank()

    def nondegenerate(self) -> bool:
        return not self.matrix.det().is_zero

    def matrix_in_basis(self, P: Matrix) -> Matrix:
        """Matrix of the form in the basis given by the columns of P."""
        return P.transpose() * self.matrix * P


def bilinear_ops(f: BilinearForm, op: str, *args):
    if op == "evaluate":
        return f.evaluate(*args)
    if op == "rank":
        return f.rank()
    if op == "nondegenerate":
        return f.nondegenerate()
    if op == "quadratic_form":
        return f.quadratic_form(*args)
    if op == "matrix_in_basis":
        return f.matrix_in_basis(*args)
    raise ValueError(f"unknown bilinear op {op!r}")


def symmetric_diagonalize(M: Matrix) -> tuple[Matrix, Matrix]:
    """Invertible P with P^T M P diagonal.

    Repeatedly picks a non-isotropic vector (via polarization when every
    remaining basis vector is isotropic) and passes to its f-orthogonal
    complement inside the remaining span.
    """
    F = M.field
    if not M.is_symmetric:
        raise NotSymmetric("form matrix is not symmetric")
    if F.characteristic == 2:
        raise CharacteristicTwo("polarization needs 2 to be invertible")
    f = BilinearForm(M)
    current = Matrix.identity(F, M.nrows).columns()
    chosen = []
    while current:
        drop, alpha = None, None
        for i, v in enumerate(current):
            if not f.quadratic_form(v).is_zero:
                drop, alpha = i, v
                break
        if alpha is None:
            for i in range(len(current)):
                for j in range(i + 1, len(current)):
                    if not f.evaluate(current[i], current[j]).is_zero:
                        drop = i
                        alpha = tuple(a + b for a, b in zip(current[i], current[j]))
                        break
                if alpha is not None:
                    break
        if alpha is None:
            chosen.extend(current)  # the form vanishes on what is left
            break
        chosen.append(alpha)
        qa = f.quadratic_form(alpha)
        rest = [v for k, v in enumerate(current) if k != drop]
        current = [_axpy(-(f.evaluate(alpha, v) / qa), alpha, v) for v in rest]
    P = Matrix.from_columns(F, chosen)
    return P, f.matrix_in_basis(P)


def signature(D: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) counts on the diagonal, for ordered fields."""
    if not D.field.is_ordered:
        raise UnorderedField(f"{D.field} carries no ordering")
    signs = [sign(D[i, i]) for i in range(D.nrows)]
    return (signs.count(1), signs.count(-1), signs.count(0))

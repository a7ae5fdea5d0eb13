"""Eigentheory and canonical forms of linear operators.

Functions here take a single square :class:`~nlalg.linalg.Matrix`.  Those
marked componentwise also accept an :class:`NOperator` and then return one
result per component (an :class:`~nlalg.poly.NPoly` for polynomial results,
a tuple otherwise).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    FactorizationIncomplete,
    NeedsFactorization,
    NotADirectSum,
    NotCommuting,
    NotDiagonalizable,
    NotInvariant,
    ShapeMismatch,
    SplitFailure,
)
from .factor import factor, roots_in_field
from .fields import FieldElement, NField
from .linalg import Matrix, NMatrix, Subspace, is_zero_vector, row_space_basis
from .poly import NPoly, Poly, gcd_bezout, poly_divmod


class NOperator:
    """An n-linear operator: a square n-matrix over an n-field."""

    __slots__ = ("matrix",)

    def __init__(self, A):
        if not isinstance(A, NMatrix):
            raise TypeError("NOperator needs an NMatrix")
        for M in A.components:
            if not M.is_square:
                raise ShapeMismatch(f"operator matrix of shape {M.shape} is not square")
        self.matrix = A

    @classmethod
    def from_lists(cls, nfield: NField, components):
        return cls(NMatrix(nfield, components))

    @property
    def nfield(self):
        return self.matrix.nfield

    @property
    def dims(self):
        return tuple(M.nrows for M in self.matrix.components)

    @property
    def components(self):
        return self.matrix.components

    def __iter__(self):
        return iter(self.matrix.components)

    def __len__(self):
        return len(self.matrix.components)

    def __getitem__(self, i):
        return self.matrix.components[i]


def componentwise(wrap=tuple):
    def deco(fn):
        @functools.wraps(fn)
        def inner(T, *args, **kwargs):
            if isinstance(T, NOperator):
                return wrap(fn(A, *args, **kwargs) for A in T.components)
            return fn(T, *args, **kwargs)
        return inner
    return deco


def poly_at(p: Poly, A: Matrix) -> Matrix:
    """Evaluate ``p(A)`` by Horner's rule."""
    F = A.field
    n = A.nrows
    acc = Matrix.zeros(F, n)
    I = Matrix.identity(F, n)
    for c in reversed(p.coeffs):
        acc = acc * A + I.scale(c)
    return acc


def companion(p: Poly) -> Matrix:
    """Companion matrix of monic ``p``: ones below the diagonal, last column -c_i."""
    F = p.field
    k = p.degree
    rows = [[F.zero] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = F.one
    for i in range(k):
        rows[i][k - 1] = -p.coeffs[i]
    return Matrix._raw(F, rows, k)


def jordan_block(c: FieldElement, size: int) -> Matrix:
    F = c.field
    rows = [[F.zero] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = c
        if i > 0:
            rows[i][i - 1] = F.one
    return Matrix._raw(F, rows, size)


def x_minus(A: Matrix) -> list[list[Poly]]:
    """The characteristic matrix xI - A with polynomial entries."""
    F = A.field
    n = A.nrows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            c = -A.rows[i][j]
            row.append(Poly._raw(F, [c, F.one]) if i == j else Poly._raw(F, [c]))
        out.append(row)
    return out


# -- characteristic and minimal polynomials -----------------------------------

@componentwise(NPoly)
def charpoly(A: Matrix) -> Poly:
    """det(xI - A) by fraction-free elimination over F[x]."""
    from .linalg import bareiss_det

    F = A.field
    return bareiss_det(x_minus(A), Poly.zero(F), Poly.one(F), Poly.exquo)


@componentwise(NPoly)
def minpoly_by_powers(A: Matrix) -> Poly:
    """First linear dependency among I, A, A^2, ... ."""
    F = A.field
    n = A.nrows
    # incremental echelon on flattened powers, tracking combinations
    basis: list[tuple[list, int, list]] = []  # (reduced vector, pivot, combination)
    power = Matrix.identity(F, n)
    for k in range(n + 1):
        vec = [x for r in power.rows for x in r]
        comb = [F.zero] * (n + 1)
        comb[k] = F.one
        for bvec, piv, bcomb in basis:
            c = vec[piv]
            if not c.is_zero:
                vec = [a - c * b for a, b in zip(vec, bvec)]
                comb = [a - c * b for a, b in zip(comb, bcomb)]
        piv = next((i for i, x in enumerate(vec) if not x.is_zero), None)
        if piv is None:
            return Poly(F, comb[: k + 1]).monic()
        inv = vec[piv].inverse()
        basis.append(([x * inv for x in vec], piv, [x * inv for x in comb]))
        power = power * A
    raise AssertionError("no dependency among n+1 powers")  # pragma: no cover


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[Poly, ...]  # d_1 | d_2 | ... | d_n, monic
    U: tuple  # rows of polynomials; U (xI - A) V = diag
    V: tuple
    U_inv: tuple

    @property
    def invariant_factors(self) -> tuple[Poly, ...]:
        """Nontrivial diagonal entries, largest first."""
        return tuple(reversed([d for d in self.diagonal if d.degree >= 1]))


def _poly_identity(F, n):
    return [[Poly.one(F) if i == j else Poly.zero(F) for j in range(n)] for i in range(n)]


def smith_form(M: Sequence[Sequence[Poly]], F) -> SmithForm:
    """Smith normal form of a square polynomial matrix with unimodular U, V."""
    n = len(M)
    M = [list(r) for r in M]
    U = _poly_identity(F, n)
    Ui = _poly_identity(F, n)
    V = _poly_identity(F, n)

    def row_addmul(i, t, q):
        # row_i += q * row_t  (and inverse column op on U^-1)
        for A_ in (M, U):
            A_[i] = [a + q * b for a, b in zip(A_[i], A_[t])]
        for r in Ui:
            r[t] = r[t] - q * r[i]

    def col_addmul(j, t, q):
        # col_j += q * col_t
        for A_ in (M, V):
            for r in A_:
                r[j] = r[j] + q * r[t]

    def swap_rows(i, t):
        for A_ in (M, U):
            A_[i], A_[t] = A_[t], A_[i]
        for r in Ui:
            r[i], r[t] = r[t], r[i]

    def swap_cols(j, t):
        for A_ in (M, V):
            for r in A_:
                r[j], r[t] = r[t], r[j]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    e = M[i][j]
                    if e and (best is None or e.degree < best[0]):
                        best = (e.degree, i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            clean = True
            for i in range(t + 1, n):
                if M[i][t]:
                    q, r = poly_divmod(M[i][t], M[t][t])
                    row_addmul(i, t, -q)
                    clean = clean and r.is_zero
            for j in range(t + 1, n):
                if M[t][j]:
                    q, r = poly_divmod(M[t][j], M[t][t])
                    col_addmul(j, t, -q)
                    clean = clean and r.is_zero
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n)
                        if not (M[i][j] % M[t][t]).is_zero), None)
            if bad is None:
                break
            row_addmul(t, bad[0], Poly.one(F))
        if M[t][t]:
            inv = M[t][t].lead.inverse()
            if inv != 1:
                M[t] = [a.scale(inv) for a in M[t]]
                U[t] = [a.scale(inv) for a in U[t]]
                lead = inv.inverse()
                for r in Ui:
                    r[t] = r[t].scale(lead)
    diag = tuple(M[i][i] for i in range(n))
    freeze = lambda A_: tuple(tuple(r) for r in A_)
    return SmithForm(diag, freeze(U), freeze(V), freeze(Ui))


@componentwise()
def snf_invariant_factors(A: Matrix) -> SmithForm:
    return smith_form(x_minus(A), A.field)


@componentwise()
def invariant_factors(A: Matrix) -> tuple[Poly, ...]:
    return snf_invariant_factors(A).invariant_factors


class InternalInconsistency(AssertionError):
    pass


@componentwise(NPoly)
def minpoly(A: Matrix, cross_check: bool = True) -> Poly:
    """Minimal polynomial by power dependency, checked against the SNF head factor."""
    m = minpoly_by_powers(A)
    if cross_check:
        head = invariant_factors(A)[0]
        if head != m:
            raise InternalInconsistency(f"minpoly {m} disagrees with SNF head {head}")
    return m


# -- rational and Jordan forms ----------------------------------------------------

@dataclass(frozen=True)
class RationalForm:
    form: Matrix
    invariant_factors: tuple[Poly, ...]
    transition: Matrix | None = None  # P with P^-1 A P = form


@componentwise()
def rational_form(A: Matrix, with_transition: bool = False) -> RationalForm:
    F = A.field
    snf = snf_invariant_factors(A)
    facs = snf.invariant_factors
    R = Matrix.block_diagonal(F, [companion(p) for p in facs])
    P = None
    if with_transition:
        n = A.nrows
        cols = []
        for j in range(n - 1, -1, -1):
            d = snf.diagonal[j]
            if d.degree < 1:
                continue
            w = [F.zero] * n
            for i in range(n):
                u = snf.U_inv[i][j]
                if u:
                    e = tuple(F.one if k == i else F.zero for k in range(n))
                    contrib = poly_at(u, A).apply(e)
                    w = [a + b for a, b in zip(w, contrib)]
            v = tuple(w)
            for _ in range(d.degree):
                cols.append(v)
                v = A.apply(v)
        P = Matrix.from_columns(F, cols)
    return RationalForm(R, facs, P)


@dataclass(frozen=True)
class JordanForm:
    blocks: tuple[tuple[FieldElement, int], ...]  # (eigenvalue, size)

    def matrix(self, field) -> Matrix:
        return Matrix.block_diagonal(field, [jordan_block(c, k) for c, k in self.blocks])


def split_part(p: Poly):
    """(roots with multiplicity, non-split cofactor) of ``p``."""
    roots = roots_in_field(p)
    rest = p
    for c, m in roots:
        rest = rest.exquo(Poly.linear(p.field, c) ** m)
    return roots, rest.monic()


def jordan_blocks(A: Matrix) -> JordanForm:
    """Jordan blocks of A, or SplitFailure naming the first non-splitting part."""
    blocks = []
    for p in invariant_factors(A):
        roots, rest = split_part(p)
        if rest.degree > 0:
            raise SplitFailure(None, rest)
        blocks.extend((c, m) for c, m in roots)
    blocks.sort(key=lambda b: (b[0].sort_key(), -b[1]))
    return JordanForm(tuple(blocks))


def jordan_form(T):
    """Per component: JordanForm, or a SplitFailure instance (returned, not raised)."""
    if not isinstance(T, NOperator):
        return jordan_blocks(T)
    out = []
    for idx, A in enumerate(T.components, start=1):
        try:
            out.append(jordan_blocks(A))
        except SplitFailure as exc:
            out.append(SplitFailure(idx, exc.factor))
    return tuple(out)


# -- eigenvalues and diagonalization -------------------------------------------------

@dataclass(frozen=True)
class Eigen:
    value: FieldElement
    algebraic_multiplicity: int
    eigenspace: tuple  # basis vectors


@componentwise()
def eigen(A: Matrix) -> tuple[Eigen, ...]:
    F = A.field
    n = A.nrows
    out = []
    for c, mult in roots_in_field(charpoly(A)):
        basis = (A - Matrix.identity(F, n).scale(c)).nullspace()
        out.append(Eigen(c, mult, tuple(basis)))
    return tuple(out)


@dataclass(frozen=True)
class Diagonalization:
    diagonalizable: bool
    P: Matrix | None = None
    D: Matrix | None = None


@componentwise()
def diagonalize(A: Matrix) -> Diagonalization:
    """Verdict from the minimal polynomial; P^-1 A P = D when it holds."""
    F = A.field
    m = minpoly(A, cross_check=False)
    roots, rest = split_part(m)
    if rest.degree > 0 or any(k > 1 for _, k in roots):
        return Diagonalization(False)
    cols, diag = [], []
    for ev in eigen(A):
        cols.extend(ev.eigenspace)
        diag.extend([ev.value] * len(ev.eigenspace))
    P = Matrix.from_columns(F, cols)
    return Diagonalization(True, P, Matrix.diagonal(F, diag))


# -- primary decomposition ------------------------------------------------------------

@dataclass(frozen=True)
class PrimaryComponent:
    prime: Poly
    exponent: int
    basis: tuple  # basis of null(prime(A)^exponent)
    projection: Matrix
    poly: Poly  # h with projection = h(A)


def _bezout_cofactors(fs: Sequence[Poly]) -> list[Poly]:
    """g_i with sum g_i f_i = gcd(fs)."""
    F = fs[0].field
    coeffs = [Poly.one(F)]
    d = fs[0]
    for f in fs[1:]:
        d, u, v = gcd_bezout(d, f)
        coeffs = [c * u for c in coeffs] + [v]
    return coeffs


@componentwise()
def primary_decomposition(A: Matrix) -> tuple[PrimaryComponent, ...]:
    m = minpoly(A, cross_check=False)
    try:
        fz = factor(m, strict=True)
    except FactorizationIncomplete as exc:
        raise NeedsFactorization(f"minimal polynomial {m} is not fully factored") from exc
    pairs = fz.pairs()
    powers = [p ** r for p, r in pairs]
    cofs = [m.exquo(q) for q in powers]
    gs = _bezout_cofactors(cofs)
    out = []
    for (p, r), q, f, g in zip(pairs, powers, cofs, gs):
        h = poly_divmod(f * g, m)[1]
        E = poly_at(h, A)
        W = tuple(row_space_basis(poly_at(q, A).nullspace(), A.field, A.nrows))
        out.append(PrimaryComponent(p, r, W, E, h))
    return tuple(out)


@dataclass(frozen=True)
class DNDecomposition:
    D: Matrix
    N: Matrix
    d_poly: Poly  # D = d_poly(A)
    n_poly: Poly  # N = n_poly(A)


@componentwise()
def dn_decomposition(A: Matrix) -> DNDecomposition:
    F = A.field
    m = minpoly(A, cross_check=False)
    roots, rest = split_part(m)
    if rest.degree > 0:
        raise SplitFailure(None, rest)
    d = Poly.zero(F)
    for comp in primary_decomposition(A):
        c = -comp.prime.coeffs[0]
        d = d + comp.poly.scale(c)
    d = poly_divmod(d, m)[1]
    D = poly_at(d, A)
    return DNDecomposition(D, A - D, d, Poly.x(F) - d)


# -- T-conductors and cyclic subspaces ------------------------------------------------

@dataclass(frozen=True)
class Conductor:
    poly: Poly
    cyclic_basis: tuple  # alpha, A alpha, ..., A^(k-1) alpha (when W = 0)


def conductor(A: Matrix, alpha: Sequence, W: Subspace | None = None) -> Conductor:
    """Monic generator of {g : g(A) alpha in W}; the T-annihilator when W = 0."""
    F = A.field
    n = A.nrows
    W = W if W is not None else Subspace.zero(F, n)
    if not W.is_invariant(A):
        raise NotInvariant("subspace is not invariant under the operator")
    alpha = tuple(F(a) for a in alpha)
    chain = []
    v = alpha
    for k in range(n + 1):
        M = Matrix.from_columns(F, list(W.basis) + chain, n)
        sol = M.solve(v) if M.ncols else (() if is_zero_vector(v) else None)
        if sol is not None:
            coeffs = [-c for c in sol[W.dim:]] + [F.one]
            return Conductor(Poly(F, coeffs), tuple(chain))
        chain.append(v)
        v = A.apply(v)
    raise AssertionError("conductor degree exceeds dimension")  # pragma: no cover


def t_annihilator_conductor(T, alpha, W=None):
    if not isinstance(T, NOperator):
        return conductor(T, alpha, W)
    Ws = W if W is not None else [None] * len(T)
    return tuple(conductor(A, a, w) for A, a, w in zip(T.components, alpha, Ws))


# -- projections and direct sums ------------------------------------------------------

def direct_sum_projections(Ws: Sequence[Subspace], component: int | None = None) -> list[Matrix]:
    """Projections E_i onto W_i along the other summands."""
    if not Ws:
        raise NotADirectSum("empty family", component)
    F, n = Ws[0].field, Ws[0].ambient
    acc = Subspace.zero(F, n)
    for j, W in enumerate(Ws):
        if (acc & W).dim != 0:
            raise NotADirectSum(f"W_{j + 1} meets the sum of the previous subspaces", component)
        acc = acc + W
    if acc.dim != n:
        raise NotADirectSum("subspaces do not span the space", component)
    cols = [v for W in Ws for v in W.basis]
    B = Matrix.from_columns(F, cols)
    Binv = B.inverse()
    out = []
    off = 0
    for W in Ws:
        keep = [F.one if off <= k < off + W.dim else F.zero for k in range(n)]
        out.append(B * Matrix.diagonal(F, keep) * Binv)
        off += W.dim
    return out


def invariance_commute_check(A: Matrix, Es: Sequence[Matrix]) -> list[bool]:
    return [E * A == A * E for E in Es]


# -- simultaneous diagonalization and similarity ------------------------------------

def _restrict(A: Matrix, basis: Sequence) -> Matrix:
    """Matrix of A restricted to the invariant span of ``basis`` in that basis."""
    F = A.field
    B = Matrix.from_columns(F, basis)
    cols = [B.solve(A.apply(v)) for v in basis]
    return Matrix.from_columns(F, cols)


def simultaneous_diagonalize(As: Sequence[Matrix]) -> Matrix:
    """One invertible P with every P^-1 A_k P diagonal."""
    for i in range(len(As)):
        for j in range(i + 1, len(As)):
            if not As[i].commutes_with(As[j]):
                raise NotCommuting(i + 1, j + 1)
    for k, A in enumerate(As):
        if not diagonalize(A).diagonalizable:
            raise NotDiagonalizable(k + 1)
    F = As[0].field
    n = As[0].nrows
    blocks = [Matrix.identity(F, n).columns()]
    for A in As:
        refined = []
        for basis in blocks:
            R = _restrict(A, basis)
            B = Matrix.from_columns(F, basis)
            for ev in eigen(R):
                refined.append([B.apply(v) for v in ev.eigenspace])
        blocks = refined
    return Matrix.from_columns(F, [v for b in blocks for v in b])


def similar(A, B) -> bool:
    if isinstance(A, NOperator):
        if A.dims != B.dims or A.nfield != B.nfield:
            raise ShapeMismatch("operators of different shapes")
        return all(similar(a, b) for a, b in zip(A.components, B.components))
    if A.shape != B.shape or A.field != B.field:
        raise ShapeMismatch("matrices of different shapes")
    return invariant_factors(A) == invariant_factors(B)


# -- canonical report --------------------------------------------------------------------

@dataclass
class CanonicalReport:
    charpoly: Poly
    minpoly: Poly
    invariant_factors: tuple[Poly, ...]
    diagonalization: Diagonalization
    rational: RationalForm
    jordan: JordanForm | SplitFailure
    primary: tuple[PrimaryComponent, ...] | NeedsFactorization
    dn: DNDecomposition | SplitFailure | NeedsFactorization
    warnings: list[str] = field(default_factory=list)


def canonical_report(A: Matrix, component: int | None = None,
                     with_transition: bool = False) -> CanonicalReport:
    cp = charpoly(A)
    mp = minpoly(A)
    inv = invariant_factors(A)
    warnings = []
    try:
        jordan = jordan_blocks(A)
    except SplitFailure as exc:
        jordan = SplitFailure(component, exc.factor)
        warnings.append(f"SplitFailure: {exc.factor}")
    try:
        primary = primary_decomposition(A)
    except NeedsFactorization as exc:
        primary = exc
        warnings.append("FactorizationIncomplete")
    if isinstance(jordan, SplitFailure):
        dn = jordan
    elif isinstance(primary, NeedsFactorization):  # pragma: no cover - split implies factored
        dn = primary
    else:
        dn = dn_decomposition(A)
    return CanonicalReport(cp, mp, inv, diagonalize(A), rational_form(A, with_transition),
                           jordan, primary, dn, warnings)

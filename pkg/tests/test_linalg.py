import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlalg import oracles
from nlalg.corpus import random_invertible
from nlalg.errors import AmbientMismatch, FieldMismatch, NotABasis, ShapeMismatch, SingularMatrix
from nlalg.fields import PrimeField, QuadExt, Rational, validate_nfield
from nlalg.linalg import (
    LinearMap,
    Matrix,
    NMatrix,
    Subspace,
    annihilator,
    change_of_basis,
    coordinates,
    double_annihilator,
    evaluate_functional,
    from_coordinates,
    functional_dependence,
    hyperspace,
    independence,
    kernel_criterion,
    linear_independence,
    standard_basis,
    transform,
    unit_matrix_basis,
)
from tests.strategies import elements, fields, matrices

Q = Rational()
Z2, Z5 = PrimeField(2), PrimeField(5)


def M(rows, F=Q):
    return Matrix(F, rows)


def vec(F, *xs):
    return tuple(F(x) for x in xs)


def test_det_examples():
    A = M([[1, 0, 1], [0, 1, 0], [1, 0, 0]], Z2)
    assert A.det() == Z2(1) == oracles.det(A.rows, Z2)
    assert Matrix.identity(Q, 4).det() == Q(1)
    with pytest.raises(SingularMatrix):
        M([[1, 2], [2, 4]]).inverse()
    with pytest.raises(ShapeMismatch):
        M([[1, 2]]) * M([[1, 2]])


def test_rref_rank_nullspace():
    A = M([[1, 1, 0]])
    assert A.rank() == 1 and len(A.nullspace()) == 2
    for v in A.nullspace():
        assert A.apply(v) == vec(Q, 0)
    Z = Matrix.zeros(Q, 3)
    assert Z.rank() == 0 and len(Z.nullspace()) == 3
    assert Matrix.identity(Q, 3).rank() == 3 and Matrix.identity(Q, 3).nullspace() == []


def test_rref_tie_break():
    R, piv = M([[0, 2, 4], [3, 0, 3], [0, 1, 2]]).rref()
    assert piv == [0, 1]
    assert R == M([[1, 0, 1], [0, 1, 2], [0, 0, 0]])


def test_linear_independence_examples():
    F3 = QuadExt(3)
    nf = validate_nfield([Z2, F3, Z5])
    ind = linear_independence(nf, [[vec(Z2, 1, 0)], [vec(F3, 1, 0), vec(F3, 5, 7)], []])
    assert ind.kind == "Independent"
    dep = linear_independence(nf, [[vec(Z2, 1, 0), vec(Z2, 1, 1), vec(Z2, 0, 1)],
                                   [vec(F3, 1, 2), vec(F3, 2, 5), vec(F3, 5, 4), vec(F3, -1, 0)],
                                   [vec(Z5, 1), vec(Z5, 3)]])
    assert dep.kind == "Dependent"
    vs = [vec(Z2, 1, 0), vec(Z2, 1, 0)]
    semi = linear_independence(nf, [vs, [vec(F3, 1, 0)], [vec(Z5, 1)]])
    assert semi.kind == "SemiDependent" and semi.verdicts == (False, True, True)
    w = semi.witnesses[0]
    assert any(not c.is_zero for c in w)
    assert all(sum((c * v[i] for c, v in zip(w, vs)), Z2.zero).is_zero for i in range(2))


def test_coordinates_and_change_of_basis():
    B = [vec(Q, 1, 1), vec(Q, 0, 1)]
    assert coordinates(vec(Q, 1, 2), B, Q) == vec(Q, 1, 1)
    assert coordinates(vec(Q, 0, 0), B, Q) == vec(Q, 0, 0)
    assert coordinates(vec(Q, 3, 4), standard_basis(Q, 2), Q) == vec(Q, 3, 4)
    assert from_coordinates(vec(Q, 1, 1), B, Q) == vec(Q, 1, 2)
    P = change_of_basis(standard_basis(Q, 2), B, Q)
    assert P == M([[1, 0], [1, 1]])
    assert P.apply(coordinates(vec(Q, 1, 2), B, Q)) == vec(Q, 1, 2)
    assert change_of_basis(B, B, Q) == Matrix.identity(Q, 2)
    with pytest.raises(NotABasis):
        coordinates(vec(Q, 1, 2), [vec(Q, 1, 1), vec(Q, 2, 2)], Q)


def test_subspace_ops():
    e1 = Subspace(Q, 2, [vec(Q, 1, 0)])
    e2 = Subspace(Q, 2, [vec(Q, 0, 1)])
    assert (e1 + e2) == Subspace.whole(Q, 2)
    assert (e1 & e2).dim == 0
    assert (e1 + e1) == e1 == (e1 & e1)
    with pytest.raises(AmbientMismatch):
        e1 + Subspace.zero(Q, 3)


def test_transform_rank_nullity_and_field_mismatch():
    T = LinearMap(M([[1, 1], [1, 1]]))
    assert (T.rank(), T.nullity()) == (1, 1)
    with pytest.raises(FieldMismatch):
        T.compose(LinearMap(M([[1, 0], [0, 1]], Z5)))
    nf = validate_nfield([Q, Z5])
    NT = transform(NMatrix(nf, [M([[1, 1], [1, 1]]), M([[1, 0], [0, 1]], Z5)]))
    assert NT.rank_nullity() == ((1, 1), (2, 0))


def test_linear_map_in_bases():
    B = [vec(Q, 1, 1), vec(Q, 0, 1)]
    T = LinearMap(M([[2, 0], [0, 3]]), B, B)
    a = from_coordinates(vec(Q, 1, 1), B, Q)
    assert coordinates(T(a), B, Q) == vec(Q, 2, 3)
    assert T.matrix == M([[2, 0], [0, 3]])
    assert T.inverse().compose(T) == LinearMap.identity(Q, 2)


def test_annihilator_examples():
    W = Subspace(Q, 3, [vec(Q, 1, 1, 0)])
    ann = W.annihilator()
    assert ann.dim == 2
    for g in ann.basis:
        assert g[0] + g[1] == Q(0)
    assert annihilator(Subspace.zero(Q, 3)) == Subspace.whole(Q, 3)
    assert annihilator(Subspace.whole(Q, 3)).dim == 0


def test_transpose_map_examples():
    assert LinearMap.identity(Q, 2).transpose_map() == LinearMap.identity(Q, 2)
    T = LinearMap(M([[1, 2], [3, 4]]))
    Tt = T.transpose_map()
    assert Tt.std == M([[1, 3], [2, 4]])
    rng = random.Random(7)
    for _ in range(20):
        g = vec(Q, *[rng.randint(-5, 5) for _ in range(2)])
        a = vec(Q, *[rng.randint(-5, 5) for _ in range(2)])
        assert evaluate_functional(Tt(g), a) == evaluate_functional(g, T(a))


def test_functional_dependence_examples():
    fs = [vec(Q, 1, 0, 0), vec(Q, 0, 1, 0)]
    assert functional_dependence(vec(Q, 1, 1, 0), fs, Q) == vec(Q, 1, 1)
    assert functional_dependence(vec(Q, 0, 0, 1), fs, Q) is None
    assert not kernel_criterion(vec(Q, 0, 0, 1), fs, Q)
    f = vec(Z5, 1, 2, 4)
    assert functional_dependence(tuple(Z5(3) * x for x in f), [f], Z5) == vec(Z5, 3)


def test_unit_matrix_basis_independent():
    for F in (Q, Z5):
        basis = unit_matrix_basis(F, 2, 3)
        flat = [tuple(x for r in E.rows for x in r) for E in basis]
        assert len(basis) == 6 and independence(flat, F, 6).independent


# -- properties --------------------------------------------------------------------------

@st.composite
def field_matrix(draw, max_n=5, square=True):
    F = draw(fields)
    m = draw(st.integers(1, max_n))
    n = m if square else draw(st.integers(1, max_n))
    return F, draw(matrices(F, m, n))


@settings(max_examples=80)
@given(field_matrix())
def test_bareiss_equals_permutation_expansion(fm):
    F, A = fm
    assert A.det() == oracles.det(A.rows, F)


@given(field_matrix(square=False), st.data())
def test_rank_properties(fm, data):
    F, A = fm
    B = data.draw(matrices(F, A.ncols, data.draw(st.integers(1, 4))))
    assert A.rank() == A.transpose().rank()
    assert (A * B).rank() <= min(A.rank(), B.rank())
    assert A.rank() + len(A.nullspace()) == A.ncols


@given(fields.flatmap(lambda F: st.tuples(st.just(F), st.integers(1, 4))), st.data())
def test_m_plus_one_vectors_dependent(fn, data):
    F, m = fn
    vecs = [tuple(data.draw(elements(F)) for _ in range(m)) for _ in range(m + 1)]
    assert not independence(vecs, F, m).independent


@given(fields.flatmap(lambda F: st.tuples(st.just(F), st.integers(1, 4))), st.data())
def test_hyperspace_codimension_one(fn, data):
    F, n = fn
    g = tuple(data.draw(elements(F)) for _ in range(n))
    if all(x.is_zero for x in g):
        return
    assert hyperspace(g, F).dim == n - 1


@given(fields.flatmap(lambda F: st.tuples(st.just(F), st.integers(1, 4))), st.data())
def test_change_of_basis_contravariant(fn, data):
    F, n = fn
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    B = random_invertible(F, n, rng).columns()
    C = random_invertible(F, n, rng).columns()
    P = change_of_basis(B, C, F)
    assert P * change_of_basis(C, B, F) == Matrix.identity(F, n)
    a = tuple(data.draw(elements(F)) for _ in range(n))
    assert coordinates(a, B, F) == P.apply(coordinates(a, C, F))


@given(fields.flatmap(lambda F: st.tuples(st.just(F), st.integers(1, 5))), st.data())
def test_annihilator_dimension_and_double(fn, data):
    F, n = fn
    k = data.draw(st.integers(0, n + 1))
    W = Subspace(F, n, [tuple(data.draw(elements(F)) for _ in range(n)) for _ in range(k)])
    assert W.dim + W.annihilator().dim == n
    assert double_annihilator(W) == W

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlalg import oracles
from nlalg.corpus import FIELD_KINDS, CorpusConfig, random_invertible, random_operator
from nlalg.errors import NotADirectSum, NotCommuting, NotDiagonalizable, NotInvariant, SplitFailure
from nlalg.factor import factor, roots_in_field
from nlalg.fields import PrimeField, Rational
from nlalg.linalg import Matrix, Subspace
from nlalg.operators import (
    canonical_report,
    charpoly,
    companion,
    conductor,
    diagonalize,
    direct_sum_projections,
    dn_decomposition,
    eigen,
    invariance_commute_check,
    invariant_factors,
    jordan_block,
    jordan_blocks,
    jordan_form,
    minpoly,
    minpoly_by_powers,
    poly_at,
    primary_decomposition,
    rational_form,
    similar,
    simultaneous_diagonalize,
    smith_form,
    snf_invariant_factors,
    x_minus,
)
from nlalg.poly import Poly, parse_poly
from tests.fixtures import FOUR_FIELD_OPERATOR, THREE_FIELD_OPERATOR, three_field_minpolys

Q = Rational()
Z3, Z5 = PrimeField(3), PrimeField(5)
ROT = Matrix(Q, [[0, -1], [1, 0]])


def P(text, F):
    return parse_poly(text, F)


def M(rows, F=Q):
    return Matrix(F, rows)


def test_charpoly_examples():
    cp = charpoly(FOUR_FIELD_OPERATOR)
    assert str(cp[0]) == "x^3+1" and str(cp[2]) == "x^2+1"
    for A, f in zip(FOUR_FIELD_OPERATOR, cp):
        assert f == Poly(A.field, oracles.charpoly(A.rows, A.field))
    assert charpoly(Matrix.identity(Q, 2)) == P("x^2-2*x+1", Q)


def test_four_field_remaining_components_by_oracle():
    # component 4 is (x+6)^2 (x+1)(x+2)(x+4) over Z_7 by expanding the triangular structure
    F = PrimeField(7)
    want = Poly.one(F)
    for c in (6, 6, 1, 2, 4):
        want = want * P(f"x+{c}", F)
    assert charpoly(FOUR_FIELD_OPERATOR[3]) == want


def test_minpoly_examples():
    mp = minpoly(THREE_FIELD_OPERATOR)
    assert tuple(mp) == three_field_minpolys()
    assert tuple(charpoly(THREE_FIELD_OPERATOR)) == three_field_minpolys()
    assert minpoly(Matrix.zeros(Q, 3)) == P("x", Q)
    q = P("x^4-3*x+2", Q)
    assert minpoly(companion(q)) == q == charpoly(companion(q))


def test_minpoly_matches_oracle_on_finite_components():
    for A in list(FOUR_FIELD_OPERATOR) + list(THREE_FIELD_OPERATOR)[:2]:
        assert minpoly(A) == Poly(A.field, oracles.minpoly(A.rows, A.field))


def test_smith_form_examples():
    q = P("x^3+2*x+5", Q)
    assert invariant_factors(companion(q)) == (q,)
    snf = snf_invariant_factors(companion(q))
    assert snf.diagonal == (Poly.one(Q), Poly.one(Q), q)
    assert invariant_factors(Matrix.identity(Q, 2)) == (P("x-1", Q), P("x-1", Q))
    A = THREE_FIELD_OPERATOR[0]
    facs = invariant_factors(A)
    assert facs[0] == three_field_minpolys()[0]
    prod = Poly.one(A.field)
    for f in facs:
        prod = prod * f
    assert prod == charpoly(A)


def test_smith_form_unimodular_transforms():
    A = THREE_FIELD_OPERATOR[1]
    F = A.field
    snf = smith_form(x_minus(A), F)
    n = A.nrows

    def mul(X, Y):
        return [[sum((X[i][k] * Y[k][j] for k in range(n)), Poly.zero(F)) for j in range(n)] for i in range(n)]

    D = mul(mul(snf.U, x_minus(A)), snf.V)
    for i in range(n):
        for j in range(n):
            assert D[i][j] == (snf.diagonal[i] if i == j else Poly.zero(F))
    I = mul(snf.U, snf.U_inv)
    assert all(I[i][j] == (Poly.one(F) if i == j else Poly.zero(F)) for i in range(n) for j in range(n))


def test_rational_form_examples():
    q = P("x^3-x+7", Q)
    assert rational_form(companion(q)).form == companion(q)
    assert rational_form(Matrix.identity(Q, 2)).form == Matrix.identity(Q, 2)
    assert rational_form(ROT).form == companion(P("x^2+1", Q))
    rf = rational_form(THREE_FIELD_OPERATOR[0], with_transition=True)
    T = rf.transition
    assert T.inverse() * THREE_FIELD_OPERATOR[0] * T == rf.form


def test_companion_convention():
    # ones below the diagonal, last column -c_i
    assert companion(P("x^2+3*x+5", Q)) == M([[0, -5], [1, -3]])


def test_jordan_examples():
    assert jordan_blocks(M([[0, 0], [1, 0]])).blocks == ((Q(0), 2),)
    with pytest.raises(SplitFailure) as e:
        jordan_blocks(ROT)
    assert e.value.factor == P("x^2+1", Q)
    jf = jordan_blocks(THREE_FIELD_OPERATOR[0])
    assert jf.blocks == ((Z3(0), 2), (Z3(1), 2))
    nform = jordan_form(THREE_FIELD_OPERATOR)
    assert isinstance(nform[2], SplitFailure) and nform[2].component == 3


def test_jordan_block_ordering_and_similarity():
    J = Matrix.block_diagonal(Q, [jordan_block(Q(2), 1), jordan_block(Q(-1), 2), jordan_block(Q(2), 3)])
    rng = random.Random(3)
    S = random_invertible(Q, 6, rng)
    A = S * J * S.inverse()
    jf = jordan_blocks(A)
    assert jf.blocks == ((Q(-1), 2), (Q(2), 3), (Q(2), 1))
    assert similar(jf.matrix(Q), A)


def test_eigen_examples():
    ev = eigen(M([[0, 4], [1, 0]], Z5))
    assert [e.value for e in ev] == [Z5(2), Z5(3)]
    ev = eigen(Matrix.identity(Q, 3))
    assert len(ev) == 1 and ev[0].value == Q(1) and len(ev[0].eigenspace) == 3
    assert eigen(ROT) == ()


def test_diagonalize_examples():
    E = M([[1, 1], [0, 0]])
    assert E * E == E and diagonalize(E).diagonalizable
    assert not diagonalize(jordan_block(Q(0), 2)).diagonalizable
    d = diagonalize(M([[0, 4], [1, 0]], Z5))
    assert d.diagonalizable and d.D == Matrix.diagonal(Z5, [Z5(2), Z5(3)])
    assert d.P.inverse() * M([[0, 4], [1, 0]], Z5) * d.P == d.D


def test_primary_examples():
    A = THREE_FIELD_OPERATOR[0]
    comps = primary_decomposition(A)
    E1, E2 = comps[0].projection, comps[1].projection
    assert E1 + E2 == Matrix.identity(Z3, 4) and (E1 * E2).is_zero
    one = primary_decomposition(ROT)
    assert len(one) == 1 and one[0].projection == Matrix.identity(Q, 2)
    D = M([[2, 0, 0], [0, 3, 0], [0, 0, 2]])
    spaces = {str(c.prime): Subspace(Q, 3, c.basis) for c in primary_decomposition(D)}
    for e in eigen(D):
        assert spaces[str(Poly.linear(Q, e.value))] == Subspace(Q, 3, e.eigenspace)


def test_dn_examples():
    J = jordan_block(Q(5), 2)
    dn = dn_decomposition(J)
    assert dn.D == Matrix.identity(Q, 2).scale(5) and dn.N == jordan_block(Q(0), 2)
    D = M([[1, 0], [0, 2]])
    assert dn_decomposition(D).N.is_zero
    N = M([[0, 1, 3], [0, 0, 2], [0, 0, 0]])
    assert dn_decomposition(N).D.is_zero and charpoly(N) == P("x^3", Q)
    with pytest.raises(SplitFailure):
        dn_decomposition(ROT)


def test_conductor_examples():
    q = P("x^3+x+1", Z5)
    C = companion(q)
    e1 = (Z5(1), Z5(0), Z5(0))
    assert conductor(C, e1).poly == q
    ev = eigen(M([[2, 1], [0, 3]]))[0]
    assert conductor(M([[2, 1], [0, 3]]), ev.eigenspace[0]).poly == Poly.linear(Q, ev.value)
    W = Subspace(Q, 2, [(Q(1), Q(0))])
    assert conductor(M([[2, 1], [0, 3]]), (Q(4), Q(0)), W).poly == Poly.one(Q)
    with pytest.raises(NotInvariant):
        conductor(M([[2, 1], [0, 3]]), (Q(1), Q(1)), Subspace(Q, 2, [(Q(0), Q(1))]))


def test_direct_sum_projection_examples():
    e1 = Subspace(Q, 2, [(Q(1), Q(0))])
    e2 = Subspace(Q, 2, [(Q(0), Q(1))])
    E1, E2 = direct_sum_projections([e1, e2])
    assert E1 == M([[1, 0], [0, 0]]) and E2 == M([[0, 0], [0, 1]])
    assert direct_sum_projections([Subspace.whole(Q, 2)]) == [Matrix.identity(Q, 2)]
    with pytest.raises(NotADirectSum):
        direct_sum_projections([e1, e1])
    A = THREE_FIELD_OPERATOR[0]
    Es = direct_sum_projections([Subspace(Z3, 4, c.basis) for c in primary_decomposition(A)])
    assert all(invariance_commute_check(A, Es))


def test_simultaneous_diagonalize_examples():
    A = M([[2, 1], [0, 3]])
    P_ = simultaneous_diagonalize([Matrix.identity(Q, 2), A])
    assert (P_.inverse() * A * P_).is_diagonal
    assert simultaneous_diagonalize([M([[1, 0], [0, 2]]), M([[3, 0], [0, 3]])]) == Matrix.identity(Q, 2)
    with pytest.raises(NotCommuting):
        simultaneous_diagonalize([M([[0, 1], [0, 0]]), M([[0, 0], [1, 0]])])
    with pytest.raises(NotDiagonalizable):
        simultaneous_diagonalize([Matrix.identity(Q, 2), jordan_block(Q(1), 2)])


def test_similar_examples():
    rng = random.Random(11)
    A = M([[1, 2, 0], [0, 1, 0], [3, 0, 2]])
    S = random_invertible(Q, 3, rng)
    assert similar(A, S.inverse() * A * S)
    assert not similar(M([[1, 0], [0, 2]]), Matrix.identity(Q, 2))
    assert similar(A, rational_form(A).form)


def test_canonical_report_collects_warnings():
    rep = canonical_report(ROT, component=1)
    assert isinstance(rep.jordan, SplitFailure) and rep.warnings


def test_stochastic_matrix_has_eigenvalue_one():
    from fractions import Fraction as Fr
    A = M([[Fr(1, 2), Fr(1, 2), 0], [Fr(1, 3), Fr(1, 3), Fr(1, 3)], [0, Fr(1, 4), Fr(3, 4)]])
    assert Q(1) in [e.value for e in eigen(A)]


# -- properties ------------------------------------------------------------------------------

kinds = st.sampled_from(list(FIELD_KINDS))


@st.composite
def operators(draw, shape=None):
    name = draw(kinds)
    F = FIELD_KINDS[name]
    n = draw(st.integers(1, 4))
    rng = random.Random(draw(st.integers(0, 2**32)))
    return random_operator(F, n, rng, CorpusConfig(), shape)


@settings(max_examples=40)
@given(operators())
def test_minpoly_divides_charpoly_same_primes(A):
    cp, mp = charpoly(A), minpoly(A)
    assert mp.divides(cp) and mp == minpoly_by_powers(A)
    primes_c = {str(g) for g, _ in factor(cp).pairs()}
    primes_m = {str(g) for g, _ in factor(mp).pairs()}
    assert primes_c == primes_m


@settings(max_examples=30)
@given(operators(shape="split"))
def test_exponent_identity_and_trace(A):
    cp = charpoly(A)
    fz_m = dict((str(g), r) for g, r in factor(minpoly(A)).pairs())
    for g, d in factor(cp).pairs():
        r = fz_m[str(g)]
        null = len(poly_at(g ** r, A).nullspace())
        assert null == d * g.degree
    tr = A.field.zero
    for c, m in roots_in_field(cp):
        tr = tr + c * m
    assert tr == A.trace()


@settings(max_examples=30)
@given(operators(), st.data())
def test_charpoly_ab_equals_ba(A, data):
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    B = random_operator(A.field, A.nrows, rng, CorpusConfig())
    assert charpoly(A * B) == charpoly(B * A)


@settings(max_examples=30)
@given(operators(), st.data())
def test_similarity_equivalence(A, data):
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    S = random_invertible(A.field, A.nrows, rng)
    T = random_invertible(A.field, A.nrows, rng)
    B = S.inverse() * A * S
    C = T.inverse() * B * T
    assert similar(A, A) and similar(A, B) and similar(B, A) and similar(A, C)

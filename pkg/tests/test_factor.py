import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlalg import oracles
from nlalg.corpus import FIELD_KINDS
from nlalg.errors import FactorizationIncomplete, ZeroPolynomial
from nlalg.factor import factor, is_irreducible, radical, roots_in_field, squarefree_part
from nlalg.fields import PrimeField, QuadExt, Rational
from nlalg.poly import Poly, gcd, parse_poly
from tests.strategies import elements, polys

Q = Rational()
Z2, Z5 = PrimeField(2), PrimeField(5)
finite_fields = st.sampled_from([Z2, PrimeField(3), Z5, FIELD_KINDS["GF(4)"], PrimeField(7)])


def P(text, F):
    return parse_poly(text, F)


def test_examples():
    fz = factor(P("x^3+1", Z2))
    assert fz.pairs() == [(P("x+1", Z2), 1), (P("x^2+x+1", Z2), 1)]
    assert is_irreducible(P("x^2+1", Q))
    F = QuadExt(2)
    assert factor(P("x^2-2", F)).pairs() == [(P("x-sqrt(2)", F), 1), (P("x+sqrt(2)", F), 1)]
    with pytest.raises(ZeroPolynomial):
        factor(Poly.zero(Q))


def test_rational_kronecker_and_multiplicity():
    f = P("x^2+1", Q) ** 2 * P("x^2-x-1", Q) * P("2*x-1", Q) * P("x^3-2", Q)
    fz = factor(f)
    assert fz.complete and fz.expand() == f
    assert sorted((str(g), m) for g, m in fz.pairs()) == sorted(
        [("x^2+1", 2), ("x^2-x-1", 1), ("x-1/2", 1), ("x^3-2", 1)])


def test_rational_high_degree_is_flagged():
    # x^8+x+1? unknown status above degree 6; the engine must not certify blindly
    f = P("x^8+3", Q)
    fz = factor(f)
    assert fz.expand() == f
    if not fz.complete:
        with pytest.raises(FactorizationIncomplete):
            factor(f, strict=True)


def test_quadratic_field_norm_trick():
    F = QuadExt(2)
    f = P("x-1-1*sqrt(2)", F) * P("x+3", F) * P("x^2+1", F)
    fz = factor(f)
    assert fz.complete and fz.expand() == f
    assert [g.degree for g, _ in fz.pairs()].count(1) == 2
    assert roots_in_field(f) == sorted([(F((1, 1)), 1), (F(-3), 1)], key=lambda rm: rm[0].sort_key())


def test_squarefree_and_radical():
    f = P("x+1", Q) ** 3 * P("x-2", Q)
    assert squarefree_part(f) == P("x^2-x-2", Q)
    g = P("x^2+1", Z2) * P("x", Z2)  # (x+1)^2 x
    assert squarefree_part(g) == (g.exquo(gcd(g, g.derivative()))).monic()
    assert radical(g) == P("x^2+x", Z2)


def _oracle_pairs(f):
    unit, facs = oracles.factor(f.coeffs, f.field)
    return unit, [(tuple(g), m) for g, m in facs]


def _engine_pairs(f):
    fz = factor(f)
    return fz.unit, [(tuple(g.coeffs), m) for g, m in fz.pairs()]


def _sk(pairs):
    return sorted(pairs, key=lambda gm: (len(gm[0]), [c.sort_key() for c in reversed(gm[0])], gm[1]))


@settings(max_examples=150)
@given(finite_fields.flatmap(lambda F: polys(F, 7, nonzero=True)))
def test_finite_field_factor_matches_exhaustive(f):
    fz = factor(f)
    assert fz.complete and fz.expand() == f
    u1, p1 = _oracle_pairs(f)
    u2, p2 = _engine_pairs(f)
    assert u1 == u2 and _sk(p1) == _sk(p2)
    for g, _ in fz.pairs():
        assert oracles.factor(g.coeffs, g.field)[1] == [(tuple(g.coeffs), 1)]


@settings(max_examples=150)
@given(finite_fields.flatmap(lambda F: polys(F, 7, nonzero=True)))
def test_finite_field_roots_match_exhaustive(f):
    assert roots_in_field(f) == oracles.roots(f.coeffs, f.field)
    assert sum(m for _, m in roots_in_field(f)) <= f.degree


@settings(max_examples=40)
@given(st.sampled_from([Q, QuadExt(2)]).flatmap(lambda F: st.lists(
    st.tuples(elements(F), st.integers(1, 2)), max_size=3).map(lambda rs: (F, rs))))
def test_char0_roots_of_constructed_products(args):
    F, rs = args
    f = Poly.one(F)
    want = {}
    for c, m in rs:
        f = f * Poly.linear(F, c) ** m
        want[c] = want.get(c, 0) + m
    got = dict(roots_in_field(f * P("x^2+3", F)))
    assert got == want


@given(st.sampled_from(list(FIELD_KINDS.values())).flatmap(lambda F: polys(F, 5, nonzero=True)))
def test_squarefree_part_formula(f):
    if f.degree < 1:
        return
    assert squarefree_part(f) == f.exquo(gcd(f, f.derivative())).monic()

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from nlalg.errors import BothZero, DescriptorMismatch, DivisionByZeroPoly, DuplicateAbscissa, PositiveCharacteristic, ZeroPolynomial
from nlalg.fields import PrimeField, QuadExt, Rational
from nlalg.poly import (
    Poly,
    format_poly,
    gcd,
    gcd_bezout,
    lagrange_basis,
    lagrange_interpolate,
    parse_poly,
    root_multiplicity,
    root_multiplicity_by_derivatives,
    taylor_expand,
    taylor_reconstruct,
    vandermonde,
)
from tests.strategies import elements, fields, ordered_fields, polys

Q = Rational()
Z2, Z3, Z5 = PrimeField(2), PrimeField(3), PrimeField(5)


def P(text, F):
    return parse_poly(text, F)


def test_arith_examples():
    assert P("x+1", Z2) * P("x+1", Z2) == P("x^2+1", Z2)
    assert P("x^2+1", Z5) + P("x+2", Z5) == P("x^2+x+3", Z5)
    F = QuadExt(2)
    assert P("x-sqrt(2)", F) * P("x+sqrt(2)", F) == P("x^2-2", F)
    with pytest.raises(DescriptorMismatch):
        P("x", Z2) + P("x", Z3)


def test_divmod_examples():
    q, r = divmod(P("x^3+1", Z2), P("x+1", Z2))
    assert q == P("x^2+x+1", Z2) and r.is_zero
    assert q * P("x+1", Z2) == P("x^3+1", Z2)
    f = P("x+3", Q)
    q, r = divmod(f, P("x^2", Q))
    assert q.is_zero and r == f
    q, r = divmod(P("2*x^4-x+1/2", Q), Poly.one(Q))
    assert q == P("2*x^4-x+1/2", Q) and r.is_zero
    with pytest.raises(DivisionByZeroPoly):
        divmod(f, Poly.zero(Q))


def test_gcd_examples():
    # (x+2)(x+3) = x^2+1 over Z5
    assert P("x+2", Z5) * P("x+3", Z5) == P("x^2+1", Z5)
    assert gcd(P("x^2+1", Z5), P("x+2", Z5)) == P("x+2", Z5)
    assert gcd(P("3*x^2+3", Z5), Poly.zero(Z5)) == P("x^2+1", Z5)
    assert P("x^3+x^2+1", Z2)(Z2(1)) == Z2(1)
    assert gcd(P("x+1", Z2), P("x^3+x^2+1", Z2)) == Poly.one(Z2)
    with pytest.raises(BothZero):
        gcd_bezout(Poly.zero(Q), Poly.zero(Q))


def test_derivative_examples():
    assert P("x^3+2*x+1", Q).derivative() == P("3*x^2+2", Q)
    assert P("x^2", Z2).derivative().is_zero
    assert P("x^3", Q).derivative(2) == P("6*x", Q)


def test_taylor_examples():
    assert taylor_expand(P("x^2", Q), Q(1)) == [Q(1), Q(2), Q(1)]
    with pytest.raises(PositiveCharacteristic):
        taylor_expand(P("x^2", Z2), Z2(1))
    assert taylor_expand(P("7/3", Q), Q(5)) == [Q(Fraction(7, 3))]


def test_root_multiplicity_examples():
    f = P("x-1", Q) ** 2 * P("x+1", Q)
    assert root_multiplicity(f, Q(1)) == 2 == root_multiplicity_by_derivatives(f, Q(1))
    assert root_multiplicity(f, Q(2)) == 0
    assert root_multiplicity(P("x^4", Z3), Z3(0)) == 4
    with pytest.raises(ZeroPolynomial):
        root_multiplicity(Poly.zero(Q), Q(0))


def test_interpolation_examples():
    assert lagrange_interpolate(Q, [0, 1], [1, 2]) == P("x+1", Q)
    assert lagrange_interpolate(Z3, [0, 1, 2], [0, 1, 2]) == P("x", Z3)
    with pytest.raises(DuplicateAbscissa):
        lagrange_interpolate(Q, [1, 1], [0, 2])


def test_format_parse_roundtrip_examples():
    for text, F in [("x^3+1", Z2), ("x^2-2", QuadExt(2)), ("1/2*x-3", Q), ("0", Q), ("(1+1*sqrt(2))*x+1", QuadExt(2))]:
        f = P(text, F)
        assert P(format_poly(f), F) == f


# -- properties ------------------------------------------------------------------------

@st.composite
def field_with_polys(draw, k=2, F=None, max_degree=5, nonzero=False):
    F = F or draw(fields)
    return F, [draw(polys(F, max_degree, nonzero)) for _ in range(k)]


@given(field_with_polys(nonzero=True))
def test_degree_of_product(fp):
    _, (f, g) = fp
    assert (f * g).degree == f.degree + g.degree


@given(field_with_polys(k=3))
def test_divmod_identity_and_uniqueness(fp):
    F, (f, d, q2) = fp
    assume(not d.is_zero)
    q, r = divmod(f, d)
    assert q * d + r == f and r.degree < d.degree
    # any other representation f = q' d + r' with deg r' < deg d has q' = q
    r2 = f - q2 * d
    if r2.degree < d.degree:
        assert q2 == q and r2 == r


@given(field_with_polys())
def test_gcd_bezout_identity(fp):
    _, (f, g) = fp
    assume(not (f.is_zero and g.is_zero))
    d, u, v = gcd_bezout(f, g)
    assert u * f + v * g == d and d.is_monic
    assert d.divides(f) and d.divides(g)


@given(field_with_polys(k=1, nonzero=True), st.data())
def test_factor_theorem(fp, data):
    F, (f,) = fp
    c = data.draw(elements(F))
    assert P("x", F).__sub__(Poly.const(F, c)).divides(f) == f(c).is_zero


@settings(max_examples=40)
@given(ordered_fields.flatmap(lambda F: st.tuples(st.just(F), polys(F, 8), elements(F))))
def test_taylor_roundtrip(args):
    F, f, c = args
    coeffs = taylor_expand(f, c)
    assert taylor_reconstruct(coeffs, c, F) == f
    for k, a in enumerate(coeffs):
        fact = 1
        for j in range(2, k + 1):
            fact *= j
        assert f.derivative(k)(c) == a * fact


@given(fields.flatmap(lambda F: st.tuples(st.just(F), st.lists(elements(F), min_size=1, max_size=5, unique=True))))
def test_lagrange_and_vandermonde(args):
    F, ts = args
    basis = lagrange_basis(F, ts)
    for i, Pi in enumerate(basis):
        for j, t in enumerate(ts):
            assert Pi(t) == (F.one if i == j else F.zero)
    assert not vandermonde(F, ts).det().is_zero


@given(fields.flatmap(lambda F: st.tuples(st.just(F), polys(F, 4, nonzero=True), elements(F))))
def test_root_multiplicity_derivative_criterion(args):
    F, g, c = args
    for k in range(3):
        f = g * (P("x", F) - Poly.const(F, c)) ** k
        m = root_multiplicity(f, c)
        assert m >= k
        if F.characteristic == 0:
            assert root_multiplicity_by_derivatives(f, c) == m

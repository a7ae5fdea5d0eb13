"""Worked operators used as regression fixtures."""

from nlalg.fields import PrimeField, Rational, validate_nfield
from nlalg.operators import NOperator
from nlalg.poly import Poly

FOUR_FIELD = validate_nfield([PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)])
FOUR_FIELD_OPERATOR = NOperator.from_lists(FOUR_FIELD, [
    [[1, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[2, 1, 0, 1], [1, 1, 0, 0], [0, 2, 2, 1], [0, 0, 0, 1]],
    [[0, 4], [1, 0]],
    [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 4, 6, 0, 1], [0, 0, 0, 5, 0], [0, 0, 0, 0, 3]],
])

THREE_FIELD = validate_nfield([PrimeField(3), PrimeField(5), Rational()])
THREE_FIELD_OPERATOR = NOperator.from_lists(THREE_FIELD, [
    [[1, 1, 0, 0], [-1, -1, 0, 0], [-2, -2, 2, 1], [1, 1, -1, 0]],
    [[3, 1, -1], [2, 2, -1], [2, 2, 0]],
    [[0, -1], [1, 0]],
])


def three_field_minpolys():
    """x^2 (x-1)^2, (x-1)(x-2)^2 and x^2+1 over the respective components."""
    out = []
    for F, build in zip(THREE_FIELD, (
            lambda x, one: x ** 2 * (x - one) ** 2,
            lambda x, one: (x - one) * (x - one * 2) ** 2,
            lambda x, one: x ** 2 + one)):
        out.append(build(Poly.x(F), Poly.one(F)))
    return tuple(out)

"""Exact componentwise linear algebra over n-fields."""

from .fields import (
    ExtField,
    FieldElement,
    NField,
    PrimeField,
    QuadExt,
    Rational,
    classify_characteristic,
    classify_primeness,
    parse_element,
    parse_field,
    validate_nfield,
)
from .linalg import Matrix, Subspace
from .poly import Poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "ExtField", "FieldElement", "Matrix", "NField", "Poly", "PrimeField", "QuadExt", "Rational", "Subspace",
    "classify_characteristic", "classify_primeness", "parse_element", "parse_field", "parse_poly",
    "validate_nfield",
]

"""Exact arithmetic over the supported field kinds, and n-field construction.

Four kinds of computable field are supported:

* ``Rational()`` -- the rationals, elements backed by :class:`fractions.Fraction`
* ``QuadExt(d)`` -- Q(sqrt d) for squarefree ``d`` not in {0, 1}
* ``PrimeField(p)`` -- Z_p
* ``ExtField(p, modulus)`` -- Z_p[t]/(modulus) for a monic irreducible modulus

Descriptors are frozen dataclasses; equality is structural.  Elements are
instances of :class:`FieldElement` and support the usual operators, mixing
freely with Python ints (and Fractions in characteristic zero).
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    ArityTooSmall,
    ContainmentViolation,
    DescriptorMismatch,
    DivisionByZero,
    InvalidField,
    NotInField,
    ParseError,
    UnorderedField,
)

DEFAULT_MAX_FIELD_SIZE = 4096


def max_field_size() -> int:
    raw = os.environ.get("NLALG_MAX_FIELD_SIZE")
    return int(raw) if raw else DEFAULT_MAX_FIELD_SIZE


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


def is_squarefree(n: int) -> bool:
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


# -- raw polynomials over Z_p (int lists, lowest degree first) ---------------
# Used only for the modulus of an extension field and its certification.

def _zp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _zp_rem(f, g, p):
    f = [x % p for x in f]
    _zp_trim(f)
    inv_lead = pow(g[-1], -1, p)
    dg = len(g) - 1
    while len(f) - 1 >= dg:
        q = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - q * gc) % p
        _zp_trim(f)
    return f


def monic_polys_zp(p: int, degree: int) -> Iterator[list[int]]:
    """All monic polynomials of the given degree over Z_p, lexicographic order."""
    for tail in itertools.product(range(p), repeat=degree):
        yield list(reversed(tail)) + [1]


def is_irreducible_zp(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= k/2."""
    m = [c % p for c in modulus]
    _zp_trim(m)
    k = len(m) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for cand in monic_polys_zp(p, d):
            if not _zp_rem(m, cand, p):
                return False
    return True


def smallest_irreducible_zp(p: int, degree: int) -> tuple[int, ...]:
    for cand in monic_polys_zp(p, degree):
        if is_irreducible_zp(cand, p):
            return tuple(cand)
    raise InvalidField(f"no irreducible of degree {degree} over Z_{p}")  # pragma: no cover


# -- descriptors ---------------------------------------------------------------

class FieldDescriptor:
    """Common interface of the four field kinds."""

    characteristic: int
    size: int | None  # None for infinite fields

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise DescriptorMismatch(f"{value.field} element used in {self}")
            return value
        return FieldElement(self, self._coerce(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self._coerce(0))

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self._coerce(1))

    @property
    def is_prime_field(self) -> bool:
        return isinstance(self, (Rational, PrimeField))

    @property
    def is_ordered(self) -> bool:
        return isinstance(self, Rational) or (isinstance(self, QuadExt) and self.d > 0)

    def parse(self, text: str) -> "FieldElement":
        return parse_element(text, self)

    def elements(self) -> Iterator["FieldElement"]:
        raise NotImplementedError(f"{self} is infinite")

    def sign(self, a: "FieldElement") -> int:
        raise UnorderedField(f"{self} has no field ordering")

    def __str__(self):
        return self.literal


@dataclass(frozen=True)
class Rational(FieldDescriptor):
    characteristic: int = field(default=0, init=False, repr=False, compare=False)
    size: None = field(default=None, init=False, repr=False, compare=False)

    @property
    def literal(self):
        return "Q"

    def _coerce(self, v):
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        raise NotInField(f"cannot coerce {v!r} into Q")

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return str(a)

    def _sort_key(self, a):
        return (a.numerator, a.denominator)

    def sign(self, a):
        return (a.value > 0) - (a.value < 0)

    def random_element(self, rng, bound=5):
        return FieldElement(self, Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))


@dataclass(frozen=True)
class QuadExt(FieldDescriptor):
    """Q(sqrt d); payloads are pairs ``(a, b)`` meaning a + b*sqrt(d)."""

    d: int
    characteristic: int = field(default=0, init=False, repr=False, compare=False)
    size: None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.d in (0, 1) or not is_squarefree(self.d):
            raise InvalidField(f"Q(sqrt {self.d}) needs squarefree d not in {{0, 1}}")

    @property
    def literal(self):
        return f"Q(sqrt {self.d})"

    def _coerce(self, v):
        if isinstance(v, (int, Fraction)):
            return (Fraction(v), Fraction(0))
        if isinstance(v, tuple) and len(v) == 2:
            return (Fraction(v[0]), Fraction(v[1]))
        raise NotInField(f"cannot coerce {v!r} into {self.literal}")

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, a, b):
        return (a[0] * b[0] + self.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def _inv(self, a):
        norm = a[0] * a[0] - self.d * a[1] * a[1]
        return (a[0] / norm, -a[1] / norm)

    def _is_zero(self, a):
        return a[0] == 0 and a[1] == 0

    def _format(self, a):
        if a[1] == 0:
            return str(a[0])
        op = "+" if a[1] > 0 else "-"
        return f"{a[0]}{op}{abs(a[1])}*sqrt({self.d})"

    def _sort_key(self, a):
        return (a[0].numerator, a[0].denominator, a[1].numerator, a[1].denominator)

    def sign(self, a):
        if self.d < 0:
            raise UnorderedField(f"{self.literal} is not an ordered field")
        x, y = a.value
        sx, sy = (x > 0) - (x < 0), (y > 0) - (y < 0)
        if sx >= 0 and sy >= 0:
            return 1 if (sx or sy) else 0
        if sx <= 0 and sy <= 0:
            return -1
        # opposite signs: compare x^2 with y^2 d
        lhs, rhs = x * x, y * y * self.d
        return sx if lhs > rhs else sy

    def random_element(self, rng, bound=4):
        return FieldElement(self, (Fraction(rng.randint(-bound, bound), rng.randint(1, 2)),
                                   Fraction(rng.randint(-bound, bound), rng.randint(1, 2))))


@dataclass(frozen=True)
class PrimeField(FieldDescriptor):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidField(f"GF({self.p}): {self.p} is not prime")

    @property
    def characteristic(self):
        return self.p

    @property
    def size(self):
        return self.p

    @property
    def literal(self):
        return f"GF({self.p})"

    def _coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {v} vanishes mod {self.p}")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        raise NotInField(f"cannot coerce {v!r} into {self.literal}")

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return str(a)

    def _sort_key(self, a):
        return a

    def elements(self):
        return (FieldElement(self, k) for k in range(self.p))

    def random_element(self, rng, bound=None):
        return FieldElement(self, rng.randrange(self.p))


@dataclass(frozen=True)
class ExtField(FieldDescriptor):
    """GF(p^k) as Z_p[t]/(modulus); ``modulus`` lists coefficients lowest first."""

    p: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidField(f"{self.p} is not prime")
        m = [c % self.p for c in self.modulus]
        _zp_trim(m)
        if len(m) < 3:
            raise InvalidField("extension modulus must have degree >= 2")
        inv = pow(m[-1], -1, self.p)
        m = tuple(c * inv % self.p for c in m)
        object.__setattr__(self, "modulus", m)
        if self.p ** self.degree > max_field_size():
            raise InvalidField(
                f"GF({self.p}^{self.degree}) exceeds the field size cap {max_field_size()}")
        if not is_irreducible_zp(m, self.p):
            raise InvalidField(f"modulus {format_zp_poly(m, 'x')} is reducible over Z_{self.p}")

    @property
    def degree(self):
        return len(self.modulus) - 1

    @property
    def characteristic(self):
        return self.p

    @property
    def size(self):
        return self.p ** self.degree

    @property
    def literal(self):
        return f"GF({self.p}^{self.degree}; {format_zp_poly(self.modulus, 'x')})"

    def _coerce(self, v):
        k = self.degree
        if isinstance(v, int):
            return (v % self.p,) + (0,) * (k - 1)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {v} vanishes mod {self.p}")
            return self._coerce(v.numerator * pow(v.denominator, -1, self.p))
        if isinstance(v, (tuple, list)):
            c = [x % self.p for x in v]
            if len(c) > k:
                c = _zp_rem(c, list(self.modulus), self.p)
            return tuple(c) + (0,) * (k - len(c))
        raise NotInField(f"cannot coerce {v!r} into {self.literal}")

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        p, k, m = self.p, self.degree, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                shift = top - k
                for i in range(k):
                    prod[shift + i] -= c * m[i]
        return tuple(c % p for c in prod[:k])

    def _inv(self, a):
        result = self._coerce(1)
        base, e = a, self.size - 2
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _is_zero(self, a):
        return not any(a)

    def _format(self, a):
        return format_zp_poly(a, "t")

    def _sort_key(self, a):
        return sum(c * self.p ** i for i, c in enumerate(a))

    def elements(self):
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            yield FieldElement(self, tuple(reversed(coeffs)))

    def random_element(self, rng, bound=None):
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.degree)))


def format_zp_poly(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


# -- elements ------------------------------------------------------------------

class FieldElement:
    """An immutable element of a supported field."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if type(other) is FieldElement:
            if other.field is not self.field and other.field != self.field:
                raise DescriptorMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field._coerce(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def inverse(self):
        if self.field._is_zero(self.value):
            raise DivisionByZero(f"inverse of zero in {self.field}")
        return FieldElement(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.field._is_zero(o):
            raise DivisionByZero(f"division by zero in {self.field}")
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, o) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if type(other) is FieldElement:
            return (other.field is self.field or other.field == self.field) and other.value == self.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field._coerce(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return not self.field._is_zero(self.value)

    @property
    def is_zero(self):
        return self.field._is_zero(self.value)

    def sort_key(self):
        return self.field._sort_key(self.value)

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return f"<{self.field.literal}: {self}>"


def sign(a: FieldElement) -> int:
    """Sign under the field's real ordering; raises UnorderedField otherwise."""
    return a.field.sign(a)


def format_element(a: FieldElement) -> str:
    return str(a)


# -- literal grammar -----------------------------------------------------------

_INT = r"[+-]?\d+"
_RATIONAL_RE = re.compile(rf"^({_INT})(?:/(\d+))?$")
_QUAD_RE = re.compile(r"^(.*?\d)([+-])(\d+(?:/\d+)?)\*sqrt\((-?\d+)\)$")
_FIELD_Q_RE = re.compile(r"^Q\(\s*sqrt\s*\(?\s*(-?\d+)\s*\)?\s*\)$")
_FIELD_GF_RE = re.compile(r"^GF\(\s*(\d+)\s*\)$")
_FIELD_EXT_RE = re.compile(r"^GF\(\s*(\d+)\s*\^\s*(\d+)\s*;\s*(.+)\)$")


def _parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise NotInField(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_zp_poly(text: str, var: str, p: int) -> list[int]:
    """Parse an integer-coefficient polynomial like ``t^2+2*t+1`` reduced mod p."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial literal")
    coeffs: dict[int, int] = {}
    term_re = re.compile(rf"([+-]?)(?:(\d+)\*?)?({var}(?:\^(\d+))?)?")
    pos = 0
    while pos < len(s):
        m = term_re.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"bad polynomial literal {text!r} at offset {pos}")
        sgn = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise ParseError(f"missing operator in {text!r} at offset {pos}")
        c = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            k = 0
        else:
            k = int(m.group(4)) if m.group(4) is not None else 1
        coeffs[k] = coeffs.get(k, 0) + sgn * c
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c % p
    return _zp_trim(out)


def parse_element(text: str, F: FieldDescriptor) -> FieldElement:
    """Parse an element literal for field ``F``.

    >>> parse_element("3/6", Rational())
    <Q: 1/2>
    >>> parse_element("9", PrimeField(7))
    <GF(7): 2>
    """
    s = str(text).strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if isinstance(F, Rational):
        return FieldElement(F, _parse_rational(s))
    if isinstance(F, QuadExt):
        m = _QUAD_RE.match(s)
        if m:
            if int(m.group(4)) != F.d:
                raise NotInField(f"sqrt({m.group(4)}) is not in {F.literal}")
            a = _parse_rational(m.group(1))
            b = _parse_rational(m.group(3))
            return FieldElement(F, (a, b if m.group(2) == "+" else -b))
        m = re.match(r"^([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\((-?\d+)\)$", s)
        if m:
            if int(m.group(3)) != F.d:
                raise NotInField(f"sqrt({m.group(3)}) is not in {F.literal}")
            b = _parse_rational(m.group(2)) if m.group(2) else Fraction(1)
            return FieldElement(F, (Fraction(0), -b if m.group(1) == "-" else b))
        return FieldElement(F, (_parse_rational(s), Fraction(0)))
    if isinstance(F, PrimeField):
        if not re.match(rf"^{_INT}$", s):
            raise ParseError(f"not an integer literal: {text!r}")
        return FieldElement(F, int(s) % F.p)
    if isinstance(F, ExtField):
        return FieldElement(F, F._coerce(parse_zp_poly(s, "t", F.p)))
    raise InvalidField(f"unsupported field {F!r}")  # pragma: no cover


def parse_field(text: str) -> FieldDescriptor:
    """Parse ``Q``, ``Q(sqrt D)``, ``GF(q)`` or ``GF(P^K; m(x))``.

    A bare prime power ``GF(q)`` takes the smallest monic irreducible modulus.
    """
    s = text.strip()
    if s == "Q":
        return Rational()
    m = _FIELD_Q_RE.match(s)
    if m:
        return QuadExt(int(m.group(1)))
    if re.match(r"^Q\(.*sqrt.*,", s):
        raise InvalidField(f"only single quadratic extensions are supported: {text!r}")
    m = _FIELD_GF_RE.match(s)
    if m:
        q = int(m.group(1))
        if is_prime(q):
            return PrimeField(q)
        base = next((p for p in range(2, q + 1) if q % p == 0), q)
        k, r = 0, q
        while r % base == 0:
            r //= base
            k += 1
        if r != 1 or q < 2:
            raise InvalidField(f"GF({q}): {q} is not a prime power")
        if base ** k > max_field_size():
            raise InvalidField(f"GF({q}) exceeds the field size cap {max_field_size()}")
        return ExtField(base, tuple(smallest_irreducible_zp(base, k)))
    m = _FIELD_EXT_RE.match(s)
    if m:
        p, k = int(m.group(1)), int(m.group(2))
        if not is_prime(p):
            raise InvalidField(f"{p} is not prime")
        modulus = parse_zp_poly(m.group(3), "x", p)
        if len(modulus) - 1 != k:
            raise InvalidField(f"modulus degree {len(modulus) - 1} does not match exponent {k}")
        if modulus[-1] != 1:
            raise InvalidField("modulus must be monic")
        return ExtField(p, tuple(modulus))
    raise ParseError(f"unknown field literal {text!r}")


# -- embedding and n-fields ----------------------------------------------------

def embeds(sub: FieldDescriptor, sup: FieldDescriptor) -> bool:
    """Structural embedding test between supported descriptors."""
    if sub == sup:
        return True
    if sub.characteristic != sup.characteristic:
        return False
    if isinstance(sub, Rational):
        return isinstance(sup, QuadExt)
    if isinstance(sub, QuadExt):
        return isinstance(sup, QuadExt) and sub.d == sup.d
    if isinstance(sub, PrimeField):
        return isinstance(sup, ExtField)
    if isinstance(sub, ExtField):
        return isinstance(sup, ExtField) and sup.degree % sub.degree == 0
    return False  # pragma: no cover


@dataclass(frozen=True)
class NField:
    """A validated tuple of pairwise non-embeddable fields."""

    components: tuple[FieldDescriptor, ...]
    witness: tuple[tuple[int, int], ...] = field(default=(), compare=False, repr=False)

    @property
    def n(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __str__(self):
        return " U ".join(F.literal for F in self.components)


def validate_nfield(components: Sequence[FieldDescriptor]) -> NField:
    comps = tuple(components)
    if len(comps) < 2:
        raise ArityTooSmall(f"an n-field needs n >= 2 components, got {len(comps)}")
    checked = []
    for i, j in itertools.combinations(range(len(comps)), 2):
        if embeds(comps[i], comps[j]):
            raise ContainmentViolation(i + 1, j + 1, comps[i], comps[j])
        if embeds(comps[j], comps[i]):
            raise ContainmentViolation(j + 1, i + 1, comps[j], comps[i])
        checked.append((i + 1, j + 1))
    return NField(comps, tuple(checked))


def _components(F) -> tuple[FieldDescriptor, ...]:
    return tuple(F.components) if isinstance(F, NField) else tuple(F)


@dataclass(frozen=True)
class CharacteristicClass:
    kind: str  # "Zero" | "Finite" | "Mixed"
    characteristics: tuple[int, ...]


def classify_characteristic(F) -> CharacteristicClass:
    chars = tuple(c.characteristic for c in _components(F))
    if all(c == 0 for c in chars):
        kind = "Zero"
    elif all(c > 0 for c in chars):
        kind = "Finite"
    else:
        kind = "Mixed"
    return CharacteristicClass(kind, chars)


def prime_subfield(F: FieldDescriptor) -> FieldDescriptor:
    return Rational() if F.characteristic == 0 else PrimeField(F.characteristic)


def proper_subfields(F: FieldDescriptor) -> list[FieldDescriptor]:
    """Proper subfields of ``F`` up to isomorphism, smallest first."""
    if F.is_prime_field:
        return []
    if isinstance(F, QuadExt):
        return [Rational()]
    subs: list[FieldDescriptor] = [PrimeField(F.p)]
    for j in range(2, F.degree):
        if F.degree % j == 0:
            subs.append(ExtField(F.p, smallest_irreducible_zp(F.p, j)))
    return subs


@dataclass(frozen=True)
class PrimenessClass:
    kind: str  # "Prime" | "Semiprime" | "NonPrime"
    proper_subfields: tuple[tuple[FieldDescriptor, ...], ...]
    # (1-based component index, prime subfield) for each non-prime component
    quasi_subfield: tuple[tuple[int, FieldDescriptor], ...]

    @property
    def m(self):
        return len(self.quasi_subfield)


def classify_primeness(F) -> PrimenessClass:
    """Prime / Semiprime / NonPrime, with the quasi m-subfield of prime subfields.

    Accepts a validated :class:`NField` or a bare descriptor tuple, since the
    classification only looks at components one at a time.
    """
    comps = _components(F)
    flags = [c.is_prime_field for c in comps]
    if all(flags):
        kind = "Prime"
    elif any(flags):
        kind = "Semiprime"
    else:
        kind = "NonPrime"
    subs = tuple(tuple(proper_subfields(c)) for c in comps)
    quasi = tuple((i + 1, prime_subfield(c)) for i, c in enumerate(comps) if not flags[i])
    return PrimenessClass(kind, subs, quasi)

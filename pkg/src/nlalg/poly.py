"""Dense univariate polynomials over a supported field, and n-polynomials."""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import (
    BothZero,
    DescriptorMismatch,
    DivisionByZeroPoly,
    DuplicateAbscissa,
    ParseError,
    PositiveCharacteristic,
    ZeroPolynomial,
)
from .fields import FieldDescriptor, FieldElement, parse_element

# degree of the zero polynomial; below every natural number
ZERO_DEGREE = -1


class Poly:
    """Polynomial with coefficients lowest degree first.

    Coefficients are stored trimmed, so ``coeffs[-1]`` is the leading
    coefficient of a nonzero polynomial and the zero polynomial has no
    coefficients at all.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable = ()):
        cs = [c if type(c) is FieldElement and c.field is field else field(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field, cs):
        # cs: list of FieldElements of `field`, possibly untrimmed
        while cs and cs[-1].is_zero:
            cs.pop()
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def x(cls, field):
        return cls._raw(field, [field.zero, field.one])

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @classmethod
    def zero(cls, field):
        return cls._raw(field, [])

    @classmethod
    def one(cls, field):
        return cls._raw(field, [field.one])

    @classmethod
    def linear(cls, field, c):
        """The monic linear polynomial x - c."""
        return cls._raw(field, [-field(c), field.one])

    @classmethod
    def from_roots(cls, field, roots):
        out = cls.one(field)
        for r in roots:
            out = out * cls.linear(field, r)
        return out

    # -- basic properties --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = self.coeffs[-1].inverse()
        return Poly._raw(self.field, [c * inv for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == Poly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field is not self.field and other.field != self.field:
                raise DescriptorMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, FieldElement)) or hasattr(other, "numerator"):
            return Poly.const(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, FieldElement) or isinstance(other, int):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(self.field, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = self.field(c)
        return Poly._raw(self.field, [x * c for x in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.one(self.field), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, d):
        return poly_divmod(self, self._lift(d))

    def __floordiv__(self, d):
        return poly_divmod(self, self._lift(d))[0]

    def __mod__(self, d):
        return poly_divmod(self, self._lift(d))[1]

    def divides(self, f: "Poly") -> bool:
        if self.is_zero:
            return f.is_zero
        return poly_divmod(f, self)[1].is_zero

    def exquo(self, d: "Poly") -> "Poly":
        q, r = poly_divmod(self, d)
        if r:
            raise ValueError(f"{d} does not divide {self}")
        return q

    def __call__(self, c):
        """Evaluate at a field element (Horner)."""
        c = self.field(c)
        acc = self.field.zero
        for a in reversed(self.coeffs):
            acc = acc * c + a
        return acc

    def compose(self, g: "Poly") -> "Poly":
        acc = Poly.zero(self.field)
        for a in reversed(self.coeffs):
            acc = acc * g + Poly.const(self.field, a)
        return acc

    def conjugate(self) -> "Poly":
        """Coefficientwise conjugation a + b sqrt(d) -> a - b sqrt(d) (Q(sqrt d) only)."""
        F = self.field
        return Poly._raw(F, [F((c.value[0], -c.value[1])) for c in self.coeffs])

    def derivative(self, k: int = 1) -> "Poly":
        f = self
        for _ in range(k):
            f = Poly._raw(f.field, [c * i for i, c in enumerate(f.coeffs)][1:])
        return f

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.field.literal}: {self})"


def poly_divmod(f: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with ``f = d*q + r`` and ``deg r < deg d``."""
    if d.is_zero:
        raise DivisionByZeroPoly("division by the zero polynomial")
    F = f.field
    if f.degree < d.degree:
        return Poly.zero(F), f
    rem = list(f.coeffs)
    dc = d.coeffs
    dd = len(dc) - 1
    inv_lead = dc[-1].inverse()
    q = [F.zero] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c.is_zero:
            continue
        c = c * inv_lead
        q[k - dd] = c
        shift = k - dd
        for i in range(dd):
            rem[shift + i] = rem[shift + i] - c * dc[i]
        rem[k] = F.zero
    return Poly._raw(F, q), Poly._raw(F, rem[:dd])


def gcd_bezout(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Monic ``d = gcd(f, g)`` together with ``u, v`` such that ``u f + v g = d``."""
    if f.is_zero and g.is_zero:
        raise BothZero("gcd of two zero polynomials")
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.lead.inverse()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def gcd(f: Poly, g: Poly) -> Poly:
    if f.is_zero and g.is_zero:
        raise BothZero("gcd of two zero polynomials")
    while g:
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def lcm(f: Poly, g: Poly) -> Poly:
    return (f * g).exquo(gcd(f, g)).monic()


def taylor_expand(f: Poly, c) -> list[FieldElement]:
    """Coefficients of ``f`` in powers of ``(x - c)``: ``D^k f(c) / k!``."""
    F = f.field
    if F.characteristic != 0:
        raise PositiveCharacteristic("Taylor expansion needs characteristic zero")
    c = F(c)
    out = []
    g = f
    for k in range(max(f.degree, 0) + 1):
        out.append(g(c) / math.factorial(k))
        g = g.derivative()
    return out


def taylor_reconstruct(coeffs: Sequence[FieldElement], c, field: FieldDescriptor) -> Poly:
    shift = Poly.linear(field, c)
    acc = Poly.zero(field)
    for a in reversed(list(coeffs)):
        acc = acc * shift + Poly.const(field, a)
    return acc


def root_multiplicity(f: Poly, c) -> int:
    """Largest ``r`` with ``(x - c)^r | f``, by repeated synthetic division."""
    if f.is_zero:
        raise ZeroPolynomial("root multiplicity of the zero polynomial")
    lin = Poly.linear(f.field, c)
    r = 0
    while True:
        q, rem = poly_divmod(f, lin)
        if rem:
            return r
        f, r = q, r + 1


def root_multiplicity_by_derivatives(f: Poly, c) -> int:
    """Derivative criterion: first ``r`` with ``D^r f(c) != 0`` (characteristic 0)."""
    if f.is_zero:
        raise ZeroPolynomial("root multiplicity of the zero polynomial")
    if f.field.characteristic != 0:
        raise PositiveCharacteristic("derivative criterion needs characteristic zero")
    r, g = 0, f
    while g(c).is_zero:
        g = g.derivative()
        r += 1
    return r


def lagrange_basis(field: FieldDescriptor, points: Sequence) -> list[Poly]:
    ts = [field(t) for t in points]
    if len(set(ts)) != len(ts):
        raise DuplicateAbscissa("interpolation abscissae must be distinct")
    basis = []
    for i, ti in enumerate(ts):
        num = Poly.one(field)
        den = field.one
        for j, tj in enumerate(ts):
            if j != i:
                num = num * Poly.linear(field, tj)
                den = den * (ti - tj)
        basis.append(num.scale(den.inverse()))
    return basis


def lagrange_interpolate(field: FieldDescriptor, points: Sequence, values: Sequence) -> Poly:
    if len(points) != len(values):
        raise ValueError("points and values differ in length")
    out = Poly.zero(field)
    for P, v in zip(lagrange_basis(field, points), values):
        out = out + P.scale(v)
    return out


def vandermonde(field: FieldDescriptor, points: Sequence):
    """Square matrix with rows ``(1, t, t^2, ..., t^m)``."""
    from .linalg import Matrix

    ts = [field(t) for t in points]
    return Matrix(field, [[t ** k for k in range(len(ts))] for t in ts])


# -- n-polynomials ---------------------------------------------------------------

class NPoly:
    """A tuple of polynomials, one per component field."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Poly]):
        self.components = tuple(components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.components)

    @property
    def is_monic(self) -> bool:
        return all(p.is_monic for p in self.components)

    def _zip(self, other, op):
        if isinstance(other, NPoly):
            if len(other) != len(self):
                raise DescriptorMismatch("n-polynomial arity mismatch")
            return NPoly(op(a, b) for a, b in zip(self.components, other.components))
        return NPoly(op(a, other) for a in self.components)

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    def __divmod__(self, other):
        pairs = [poly_divmod(a, b) for a, b in zip(self.components, other.components)]
        return NPoly(q for q, _ in pairs), NPoly(r for _, r in pairs)

    def __call__(self, scalars):
        return tuple(p(c) for p, c in zip(self.components, scalars))

    def derivative(self, k=1):
        return NPoly(p.derivative(k) for p in self.components)

    def __eq__(self, other):
        return isinstance(other, NPoly) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return " U ".join(f"{{{p}}}" for p in self.components)

    __repr__ = __str__


def n_gcd_bezout(f: NPoly, g: NPoly):
    triples = [gcd_bezout(a, b) for a, b in zip(f, g)]
    return tuple(NPoly(t[k] for t in triples) for k in range(3))


# -- literal grammar ---------------------------------------------------------------

def _needs_parens(text: str) -> bool:
    return any(ch in text[1:] for ch in "+-")


def format_poly(f: Poly, var: str = "x") -> str:
    if f.is_zero:
        return "0"
    F = f.field
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c.is_zero:
            continue
        cs = str(c)
        if k == 0:
            term = f"({cs})" if _needs_parens(cs) else cs
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                term = mono
            elif F.characteristic == 0 and c == -1:
                term = "-" + mono
            else:
                term = f"({cs})*{mono}" if _needs_parens(cs) else f"{cs}*{mono}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def _split_terms(s: str) -> list[tuple[int, str]]:
    terms, depth, start, sign = [], 0, 0, 1
    i = 0
    if s and s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = start = 1
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and s[i - 1] not in "^*/":
            terms.append((sign, s[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    terms.append((sign, s[start:]))
    return terms


_MONO_RE = re.compile(r"^(?:(.+)\*)?x(?:\^(\d+))?$")


def parse_poly(text: str, field: FieldDescriptor) -> Poly:
    """Parse a literal such as ``x^3+2*x+1`` or ``(1+2*sqrt(5))*x-3/4``."""
    s = str(text).replace(" ", "")
    if not s:
        raise ParseError("empty polynomial literal")
    coeffs: dict[int, FieldElement] = {}
    for sgn, term in _split_terms(s):
        if not term:
            raise ParseError(f"empty term in {text!r}")
        m = _MONO_RE.match(term)
        if m and (m.group(1) is None or not m.group(1).endswith("^")):
            k = int(m.group(2)) if m.group(2) else 1
            c = parse_element(m.group(1), field) if m.group(1) else field.one
        else:
            if "x" in term:
                raise ParseError(f"bad term {term!r} in {text!r}")
            k, c = 0, parse_element(term, field)
        if sgn < 0:
            c = -c
        coeffs[k] = coeffs.get(k, field.zero) + c
    top = max(coeffs)
    return Poly(field, [coeffs.get(k, field.zero) for k in range(top + 1)])

"""Factorization into monic irreducibles, per field kind.

Finite fields are handled completely: squarefree decomposition (with p-th
roots), distinct-degree splitting, then equal-degree splitting.  Over Q we
extract rational roots and run a Kronecker search for factors of a
remaining cofactor of degree <= 6; anything larger is reported with a
maybe-reducible flag.  Over Q(sqrt d) every root in the field is found via
the norm f * conj(f), and leftover factors are certified where cheap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import FactorizationIncomplete, ZeroPolynomial
from .fields import ExtField, PrimeField, QuadExt, Rational
from .poly import Poly, gcd, lagrange_interpolate

KRONECKER_MAX_DEGREE = 6
# equal-degree splitting enumerates monic candidates below this many
EXHAUSTIVE_EDF_LIMIT = 20000


@dataclass(frozen=True)
class Factor:
    poly: Poly
    multiplicity: int
    certified: bool = True


@dataclass(frozen=True)
class Factorization:
    unit: object
    factors: tuple[Factor, ...]
    complete: bool = True

    def expand(self) -> Poly:
        if not self.factors:
            return Poly.const(self.unit.field, self.unit)
        F = self.factors[0].poly.field
        out = Poly.const(F, self.unit)
        for fac in self.factors:
            out = out * fac.poly ** fac.multiplicity
        return out

    def pairs(self):
        return [(f.poly, f.multiplicity) for f in self.factors]

    def __str__(self):
        parts = [str(self.unit)] if self.unit != 1 else []
        for f in self.factors:
            s = f"({f.poly})"
            if f.multiplicity > 1:
                s += f"^{f.multiplicity}"
            if not f.certified:
                s += "?"
            parts.append(s)
        return "*".join(parts) if parts else "1"


def _sort_factors(factors):
    def key(fac):
        return (fac.poly.degree, [c.sort_key() for c in reversed(fac.poly.coeffs)], fac.multiplicity)
    merged: dict = {}
    for fac in factors:
        prev = merged.get(fac.poly)
        if prev is None:
            merged[fac.poly] = fac
        else:
            merged[fac.poly] = Factor(fac.poly, prev.multiplicity + fac.multiplicity,
                                      prev.certified and fac.certified)
    return tuple(sorted(merged.values(), key=key))


def factor(f: Poly, strict: bool = False) -> Factorization:
    """Factor ``f`` as unit * product of monic irreducibles.

    With ``strict=True`` an incomplete characteristic-0 result raises
    :class:`FactorizationIncomplete` carrying the partial factorization.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    F = f.field
    unit = f.lead
    g = f.monic()
    if g.degree == 0:
        return Factorization(unit, ())
    if isinstance(F, (PrimeField, ExtField)):
        facs = _factor_finite(g)
    elif isinstance(F, Rational):
        facs = _factor_rational(g)
    elif isinstance(F, QuadExt):
        facs = _factor_quadratic(g)
    else:  # pragma: no cover
        raise TypeError(F)
    facs = _sort_factors(facs)
    result = Factorization(unit, facs, all(x.certified for x in facs))
    if strict and not result.complete:
        raise FactorizationIncomplete(result)
    return result


def squarefree_part(f: Poly) -> Poly:
    """``f / gcd(f, f')`` made monic."""
    if f.is_zero:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    d = f.derivative()
    if d.is_zero:
        return Poly.one(f.field) if f.degree > 0 else f.monic()
    return f.exquo(gcd(f, d)).monic()


def radical(f: Poly) -> Poly:
    """Product of the distinct monic irreducible factors."""
    out = Poly.one(f.field)
    for fac in factor(f).factors:
        out = out * fac.poly
    return out


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    fz = factor(f)
    if len(fz.factors) == 1 and fz.factors[0].multiplicity == 1:
        if not fz.factors[0].certified:
            raise FactorizationIncomplete(fz)
        return True
    return False


def roots_in_field(f: Poly):
    """Roots of ``f`` lying in its field, as sorted ``(root, multiplicity)`` pairs."""
    if f.is_zero:
        raise ZeroPolynomial("roots of the zero polynomial")
    F = f.field
    if isinstance(F, Rational):
        roots = _rational_roots(f.monic())
    elif isinstance(F, QuadExt):
        roots = _quadratic_roots(f.monic())
    else:
        roots = [-fac.poly.coeffs[0] for fac in factor(f).factors if fac.poly.degree == 1]
    out = []
    from .poly import root_multiplicity
    for r in sorted(set(roots), key=lambda e: e.sort_key()):
        out.append((r, root_multiplicity(f, r)))
    return out


# -- squarefree decomposition ---------------------------------------------------

def _pth_root(f: Poly) -> Poly:
    F = f.field
    p = F.characteristic
    e = F.size // p  # a -> a^(q/p) inverts Frobenius
    return Poly(F, [f.coeffs[i] ** e for i in range(0, len(f.coeffs), p)])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree ``(g_i, i)`` with ``f = prod g_i^i`` (f monic)."""
    F = f.field
    if F.characteristic == 0:
        # Yun's algorithm
        out = []
        d = f.derivative()
        a = gcd(f, d)
        b = f.exquo(a)
        c = d.exquo(a)
        i = 1
        while b.degree > 0:
            dd = c - b.derivative()
            g = gcd(b, dd)
            if g.degree > 0:
                out.append((g, i))
            b = b.exquo(g)
            c = dd.exquo(g)
            i += 1
        return out
    p = F.characteristic
    out = []
    d = f.derivative()
    if d.is_zero:
        return [(g, e * p) for g, e in squarefree_decomposition(_pth_root(f))]
    c = gcd(f, d)
    w = f.exquo(c)
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        fac = w.exquo(y)
        if fac.degree > 0:
            out.append((fac, i))
        w, c = y, c.exquo(y)
        i += 1
    if c.degree > 0:
        out.extend((g, e * p) for g, e in squarefree_decomposition(_pth_root(c)))
    return out


# -- finite fields ------------------------------------------------------------------

def _powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split squarefree monic ``f`` into products of irreducibles of equal degree."""
    F = f.field
    q = F.size
    x = Poly.x(F)
    out = []
    h = x
    i = 1
    g = f
    while g.degree >= 2 * i:
        h = _powmod(h, q, g)
        d = gcd(g, h - x)
        if d.degree > 0:
            out.append((d, i))
            g = g.exquo(d)
            h = h % g
        i += 1
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _monic_candidates(F, degree):
    elems = list(F.elements())
    for tail in itertools.product(elems, repeat=degree):
        yield Poly(F, list(reversed(tail)) + [F.one])


def equal_degree(f: Poly, d: int) -> list[Poly]:
    """Split a product of distinct irreducibles of degree ``d`` into those irreducibles."""
    if f.degree == d:
        return [f]
    F = f.field
    if F.size ** d <= EXHAUSTIVE_EDF_LIMIT:
        out = []
        rest = f
        for cand in _monic_candidates(F, d):
            if rest.degree == d:
                break
            if (rest % cand).is_zero:
                out.append(cand)
                rest = rest.exquo(cand)
        out.append(rest)
        return out
    return _berlekamp_split(f)


def _berlekamp_split(f: Poly) -> list[Poly]:
    # deterministic: kernel of (Frobenius - I), then gcd with v - s over all s in F
    from .linalg import Matrix

    F = f.field
    n = f.degree
    q = F.size
    xq = _powmod(Poly.x(F), q, f)
    rows = []
    power = Poly.one(F)
    for _ in range(n):
        rows.append([power.coeff(k) for k in range(n)])
        power = (power * xq) % f
    Q = Matrix(F, rows).transpose()
    kernel = (Q - Matrix.identity(F, n)).nullspace()
    factors = [f]
    for vec in kernel:
        v = Poly(F, vec)
        if v.degree <= 0:
            continue
        new = []
        for g in factors:
            if g.degree <= 1:
                new.append(g)
                continue
            rest = g
            for s in F.elements():
                if rest.degree == 0:
                    break
                h = gcd(rest, v - Poly.const(F, s))
                if 0 < h.degree:
                    new.append(h)
                    rest = rest.exquo(h)
            if rest.degree > 0:
                new.append(rest)
        factors = new
        if len(factors) == len(kernel):
            break
    return factors


def _factor_finite(f: Poly) -> list[Factor]:
    out = []
    for g, mult in squarefree_decomposition(f):
        for part, d in distinct_degree(g):
            for irr in equal_degree(part, d):
                out.append(Factor(irr.monic(), mult))
    return out


# -- rationals ------------------------------------------------------------------------

def _integer_coeffs(f: Poly) -> list[int]:
    """Primitive integer polynomial with the same roots (positive leading coefficient)."""
    fr = [c.value for c in f.coeffs]
    den = 1
    for c in fr:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    primes = {}
    m, k = n, 2
    while k * k <= m:
        while m % k == 0:
            primes[k] = primes.get(k, 0) + 1
            m //= k
        k += 1 if k == 2 else 2
    if m > 1:
        primes[m] = primes.get(m, 0) + 1
    divs = [1]
    for pr, e in primes.items():
        divs = [d * pr ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _int_eval(c: list[int], x) -> int:
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _rational_roots(f: Poly) -> list:
    """All rational roots (without multiplicity) of a nonzero polynomial over Q."""
    F = f.field
    roots = []
    c = _integer_coeffs(f)
    if c[0] == 0:
        roots.append(F.zero)
        while c[0] == 0:
            c = c[1:]
    if len(c) == 1:
        return roots
    for p in _divisors(c[0]):
        for q in _divisors(c[-1]):
            if math.gcd(p, q) != 1:
                continue
            for pp in (p, -p):
                # q^n f(pp/q) in integers
                acc, qk = 0, 1
                for a in reversed(c):
                    acc = acc * pp + a * qk
                    qk *= q
                if acc == 0:
                    roots.append(F(Fraction(pp, q)))
    return roots


def _kronecker_factor(g: Poly, k: int):
    """A monic factor of degree ``k`` of ``g`` (over Q) or None."""
    F = g.field
    c = _integer_coeffs(g)
    lead = c[-1]
    # sample points with small nonzero values keep the divisor search narrow
    samples = []
    for t in sorted(range(-12, 13), key=abs):
        v = _int_eval(c, t)
        if v != 0:
            samples.append((len(_divisors(v)), t, v))
    samples.sort()
    pts = samples[: k + 1]
    if len(pts) < k + 1:
        return None
    choices = []
    for i, (_, t, v) in enumerate(pts):
        ds = _divisors(v)
        # overall sign of a factor is free, so fix it at the first point
        choices.append(ds if i == 0 else ds + [-d for d in ds])
    xs = [t for _, t, _ in pts]
    for vals in itertools.product(*choices):
        h = lagrange_interpolate(F, xs, vals)
        if h.degree != k:
            continue
        hl = h.lead.value
        if any((cc.value / hl * lead).denominator != 1 for cc in h.coeffs):
            continue
        hm = h.monic()
        if (g % hm).is_zero:
            return hm
    return None


def _factor_rational_squarefree(g: Poly) -> list[tuple[Poly, bool]]:
    F = g.field
    out = []
    for r in _rational_roots(g):
        lin = Poly.linear(F, r)
        out.append((lin, True))
        g = g.exquo(lin)
    if g.degree <= 0:
        return out
    if g.degree <= 3:
        return out + [(g.monic(), True)]
    if g.degree > KRONECKER_MAX_DEGREE:
        return out + [(g.monic(), False)]
    stack = [g]
    while stack:
        h = stack.pop()
        found = None
        for k in range(2, h.degree // 2 + 1):
            found = _kronecker_factor(h, k)
            if found is not None:
                break
        if found is None:
            out.append((h.monic(), True))
        else:
            stack.extend([found, h.exquo(found).monic()])
    return out


def _factor_rational(f: Poly) -> list[Factor]:
    out = []
    for g, mult in squarefree_decomposition(f):
        for h, ok in _factor_rational_squarefree(g):
            out.append(Factor(h, mult, ok))
    return out


# -- quadratic extensions -----------------------------------------------------------

def _norm_to_rational(f: Poly) -> Poly:
    """f * conj(f), which has rational coefficients, as a polynomial over Q."""
    N = f * f.conjugate()
    Q = Rational()
    return Poly(Q, [c.value[0] for c in N.coeffs])


def _is_rational_poly(f: Poly) -> bool:
    return all(c.value[1] == 0 for c in f.coeffs)


def _int_divides(c: list[int], q: tuple[int, int, int]) -> bool:
    """Whether C + B x + A x^2 divides the integer polynomial ``c`` over Q."""
    C, B, A = q
    rem = [Fraction(x) for x in c]
    for k in range(len(rem) - 1, 1, -1):
        m = rem[k] / A
        if m:
            rem[k] = Fraction(0)
            rem[k - 1] -= m * B
            rem[k - 2] -= m * C
    return rem[0] == 0 and rem[1] == 0


def _norm_quadratics(N: Poly, d: int) -> list[tuple[Fraction, Fraction]]:
    """All (a, b), b > 0, with x^2 - 2a x + a^2 - b^2 d dividing N over Q.

    Kronecker search restricted to degree 2 and done in integers: a primitive
    integer factor takes divisor values at three sample points, and the
    discriminant of a factor coming from a + b*sqrt(d) times d is a square.
    """
    g = squarefree_part(N)
    for r in _rational_roots(g):
        g = g.exquo(Poly.linear(g.field, r))
    if g.degree < 2:
        return []
    c = _integer_coeffs(g)
    samples = sorted((len(_divisors(v)), abs(t), t, v)
                     for t in range(-12, 13) for v in [_int_eval(c, t)] if v != 0)
    if len(samples) < 3:  # pragma: no cover - a nonzero polynomial vanishes at few points
        return []
    pts, extra = samples[:3], samples[3:8]
    ts = [t for _, _, t, _ in pts]
    # Lagrange basis at ts scaled to integers over the common denominator D
    dens = [(ti - o[0]) * (ti - o[1]) for i, ti in enumerate(ts)
            for o in [[tj for j, tj in enumerate(ts) if j != i]]]
    D = abs(dens[0] * dens[1] * dens[2])
    basis = []
    for i, ti in enumerate(ts):
        o = [tj for j, tj in enumerate(ts) if j != i]
        w = D // dens[i]
        basis.append((o[0] * o[1] * w, -(o[0] + o[1]) * w, w))
    divs = [_divisors(v) for _, _, _, v in pts]
    choices = [divs[0]] + [ds + [-x for x in ds] for ds in divs[1:]]
    found = {}
    for v0, v1, v2 in itertools.product(*choices):
        nums = [v0 * b0 + v1 * b1 + v2 * b2 for b0, b1, b2 in zip(*basis)]
        if any(x % D for x in nums):
            continue
        C, B, A = (x // D for x in nums)
        if A == 0 or C == 0 or c[-1] % A or c[0] % C:
            continue
        s = (B * B - 4 * A * C) * d
        if s <= 0 or math.isqrt(s) ** 2 != s:
            continue
        if any(_int_eval([C, B, A], t) == 0 or v % _int_eval([C, B, A], t) for _, _, t, v in extra):
            continue
        if not _int_divides(c, (C, B, A)):
            continue
        a = Fraction(-B, 2 * A)
        b = Fraction(math.isqrt(s), 2 * abs(A) * abs(d))
        found[(a, b)] = None
    return list(found)


def _quadratic_roots(f: Poly) -> list:
    F = f.field
    N = _norm_to_rational(f)
    cands = [F(r.value) for r in _rational_roots(N)]
    for a, b in _norm_quadratics(N, F.d):
        cands.append(F((a, b)))
        cands.append(F((a, -b)))
    return [r for r in cands if f(r).is_zero]


def _factor_quadratic(f: Poly) -> list[Factor]:
    F = f.field
    out = []
    for g, mult in squarefree_decomposition(f):
        for r in _quadratic_roots(g):
            lin = Poly.linear(F, r)
            out.append(Factor(lin, mult))
            g = g.exquo(lin)
        if g.degree <= 0:
            continue
        if g.degree <= 3:
            out.append(Factor(g.monic(), mult))
            continue
        norm = factor(_norm_to_rational(g))
        if (norm.complete and len(norm.factors) == 1 and norm.factors[0].multiplicity == 1):
            out.append(Factor(g.monic(), mult))
            continue
        if _is_rational_poly(g):
            qg = Poly(Rational(), [c.value[0] for c in g.coeffs])
            for fac in factor(qg).factors:
                lifted = Poly(F, [(c.value, 0) for c in fac.poly.coeffs])
                # degree <= 3 and rootless in F certifies irreducibility
                ok = fac.poly.degree <= 3 and fac.certified
                out.append(Factor(lifted, mult * fac.multiplicity, ok))
            continue
        out.append(Factor(g.monic(), mult, False))
    return out

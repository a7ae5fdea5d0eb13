"""Brute-force reference computations for cross-checking the engine.

Nothing here touches Poly, Matrix or the factorizer; polynomials are plain
lists of field elements (lowest degree first) and matrices are lists of rows.
Only the scalar arithmetic of the field descriptors is shared.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Sequence

from .errors import TooLargeForOracle
from .fields import FieldDescriptor, FieldElement

MAX_DET_SIZE = 5
MAX_TRIAL_DIVISORS = 200_000


def _perm_sign(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


# -- raw polynomial arithmetic ---------------------------------------------------------

def _trim(p: list) -> list:
    while p and p[-1].is_zero:
        p.pop()
    return p


def _padd(a, b, F):
    out = [F.zero] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _trim(out)


def _pmul(a, b, F):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def _pdivmod(a, b, F):
    a = list(a)
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    inv = b[-1].inverse()
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = a[i + k] - c * y
        _trim(a)
    return _trim(q), a


def _horner(p, x, F):
    acc = F.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _monic(p, F):
    inv = p[-1].inverse()
    return [c * inv for c in p]


def _require_finite(F: FieldDescriptor, what: str):
    if F.characteristic == 0:
        raise TooLargeForOracle(f"{what} oracle needs a finite field, got {F}")


# -- determinant ----------------------------------------------------------------------

def _det_generic(rows, zero, mul, add, neg):
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        term = None
        for i in range(n):
            term = rows[i][perm[i]] if term is None else mul(term, rows[i][perm[i]])
        if term is None:
            continue
        total = add(total, term if _perm_sign(perm) > 0 else neg(term))
    return total


def det(rows: Sequence[Sequence], F: FieldDescriptor) -> FieldElement:
    """Leibniz expansion over all permutations."""
    n = len(rows)
    if n > MAX_DET_SIZE:
        raise TooLargeForOracle(f"{n}x{n} exceeds the {MAX_DET_SIZE}x{MAX_DET_SIZE} limit")
    if n == 0:
        return F.one
    rows = [[F(x) for x in r] for r in rows]
    return _det_generic(rows, F.zero, lambda a, b: a * b, lambda a, b: a + b, lambda a: -a)


def charpoly(rows: Sequence[Sequence], F: FieldDescriptor) -> list:
    """det(xI - A) by Leibniz expansion with polynomial entries."""
    n = len(rows)
    if n > MAX_DET_SIZE:
        raise TooLargeForOracle(f"{n}x{n} exceeds the {MAX_DET_SIZE}x{MAX_DET_SIZE} limit")
    entries = [[_trim([-F(rows[i][j])] + ([F.one] if i == j else [])) for j in range(n)] for i in range(n)]
    return _det_generic(
        entries, [],
        lambda a, b: _pmul(a, b, F),
        lambda a, b: _padd(a, b, F),
        lambda a: [-c for c in a],
    )


# -- roots and factors ----------------------------------------------------------------

def roots(coeffs: Sequence, F: FieldDescriptor) -> list[tuple[FieldElement, int]]:
    """Every root with multiplicity, by trying every field element."""
    _require_finite(F, "roots")
    p = _trim([F(c) for c in coeffs])
    if not p:
        raise TooLargeForOracle("the zero polynomial has every element as a root")
    out = []
    for x in sorted(F.elements(), key=lambda e: e.sort_key()):
        m, q = 0, p
        while len(q) > 1 and _horner(q, x, F).is_zero:
            q, _ = _pdivmod(q, [-x, F.one], F)
            m += 1
        if m:
            out.append((x, m))
    return out


def _monic_of_degree(F, d):
    elems = sorted(F.elements(), key=lambda e: e.sort_key())
    for tail in product(elems, repeat=d):
        yield list(reversed(tail)) + [F.one]


def factor(coeffs: Sequence, F: FieldDescriptor) -> tuple[FieldElement, list[tuple[tuple, int]]]:
    """(unit, [(monic irreducible coeffs, multiplicity)]) by trial division.

    The smallest-degree monic divisor found at each step is irreducible.
    """
    _require_finite(F, "factor")
    p = _trim([F(c) for c in coeffs])
    if not p:
        raise TooLargeForOracle("cannot factor the zero polynomial")
    unit = p[-1]
    p = _monic(p, F)
    q = F.size if hasattr(F, "size") else len(list(F.elements()))
    found: dict[tuple, int] = {}
    d = 1
    while len(p) - 1 >= 2 * d:
        if q ** d > MAX_TRIAL_DIVISORS:
            raise TooLargeForOracle(f"{q}^{d} candidate divisors")
        hit = None
        for g in _monic_of_degree(F, d):
            quo, rem = _pdivmod(p, g, F)
            if not rem:
                hit = (g, quo)
                break
        if hit is None:
            d += 1
            continue
        g, p = hit
        found[tuple(g)] = found.get(tuple(g), 0) + 1
    if len(p) > 1:
        found[tuple(p)] = found.get(tuple(p), 0) + 1
    key = lambda gm: (len(gm[0]), [c.sort_key() for c in reversed(gm[0])])
    return unit, sorted(found.items(), key=key)


# -- minimal polynomial ---------------------------------------------------------------

def _mat_mul(A, B, F):
    n, m, k = len(A), len(B[0]), len(B)
    return [[sum((A[i][t] * B[t][j] for t in range(k)), F.zero) for j in range(m)] for i in range(n)]


def _poly_at_matrix(p, A, F):
    n = len(A)
    acc = [[F.zero] * n for _ in range(n)]
    for c in reversed(p):
        acc = _mat_mul(acc, A, F)
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return acc


def minpoly(rows: Sequence[Sequence], F: FieldDescriptor) -> list:
    """Least-degree monic divisor of the characteristic polynomial killing A."""
    _require_finite(F, "minpoly")
    A = [[F(x) for x in r] for r in rows]
    chi = charpoly(A, F)
    _, facs = factor(chi, F)
    candidates = []
    for exps in product(*[range(m + 1) for _, m in facs]):
        d = [F.one]
        for (g, _), e in zip(facs, exps):
            for _ in range(e):
                d = _pmul(d, list(g), F)
        candidates.append(d)
    candidates.sort(key=lambda d: (len(d), [c.sort_key() for c in reversed(d)]))
    for d in candidates:
        if all(x.is_zero for r in _poly_at_matrix(d, A, F) for x in r):
            return d
    raise AssertionError("characteristic polynomial fails to annihilate")  # unreachable


KINDS = ("det", "roots", "factor", "minpoly")

"""Seeded random operators and polynomials for property suites and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import FieldDescriptor, PrimeField, QuadExt, Rational, parse_field
from .linalg import Matrix
from .operators import jordan_block
from .poly import Poly

FIELD_KINDS: dict[str, FieldDescriptor] = {
    "Q": Rational(),
    "Q(sqrt 2)": QuadExt(2),
    "GF(5)": PrimeField(5),
    "GF(4)": parse_field("GF(4)"),
}

OPERATOR_SHAPES = ("dense", "sparse", "split", "scalar-heavy")


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20261018
    per_field: int = 200
    min_size: int = 2
    max_size: int = 5
    fields: tuple[str, ...] = tuple(FIELD_KINDS)
    entry_bound: int = 2
    sparse_density: float = 0.4

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


def small_element(F: FieldDescriptor, rng: random.Random, bound: int):
    """Integers in [-bound, bound] in char 0 (and a+b*sqrt(d) with integer parts); uniform otherwise."""
    if F.characteristic:
        return F.random_element(rng)
    if isinstance(F, QuadExt):
        return F((rng.randint(-bound, bound), rng.randint(-bound, bound)))
    return F(rng.randint(-bound, bound))


def random_matrix(F, m, n, rng, bound=2, density=1.0) -> Matrix:
    return Matrix(F, [[small_element(F, rng, bound) if rng.random() < density else F.zero
                       for _ in range(n)] for _ in range(m)])


def random_invertible(F, n, rng, bound=2) -> Matrix:
    """Unit lower times unit upper triangular, times a permutation: invertible by construction."""
    L = Matrix(F, [[F.one if i == j else (small_element(F, rng, bound) if j < i else F.zero)
                    for j in range(n)] for i in range(n)])
    U = Matrix(F, [[F.one if i == j else (small_element(F, rng, bound) if j > i else F.zero)
                    for j in range(n)] for i in range(n)])
    perm = list(range(n))
    rng.shuffle(perm)
    P = Matrix(F, [[F.one if perm[i] == j else F.zero for j in range(n)] for i in range(n)])
    return P * L * U


def random_split_operator(F, n, rng, bound=2) -> Matrix:
    """Q J Q^-1 for a random Jordan matrix J with eigenvalues from a small pool."""
    pool = [small_element(F, rng, bound) for _ in range(rng.randint(1, 3))]
    blocks, left = [], n
    while left:
        k = rng.randint(1, left)
        blocks.append(jordan_block(rng.choice(pool), k))
        left -= k
    J = Matrix.block_diagonal(F, blocks)
    Q = random_invertible(F, n, rng, bound=1)
    return Q * J * Q.inverse()


def random_operator(F, n, rng, cfg: CorpusConfig, shape: str | None = None) -> Matrix:
    shape = shape or rng.choice(OPERATOR_SHAPES)
    if shape == "dense":
        return random_matrix(F, n, n, rng, cfg.entry_bound)
    if shape == "sparse":
        return random_matrix(F, n, n, rng, cfg.entry_bound, cfg.sparse_density)
    if shape == "split":
        return random_split_operator(F, n, rng, cfg.entry_bound)
    # a scalar matrix plus a low-rank perturbation: repeated eigenvalues, small minpoly
    c = small_element(F, rng, cfg.entry_bound)
    u = random_matrix(F, n, 1, rng, 1)
    v = random_matrix(F, 1, n, rng, 1)
    return Matrix.identity(F, n).scale(c) + u * v


def operator_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[tuple[str, Matrix]]:
    out = []
    for name in cfg.fields:
        F = FIELD_KINDS[name]
        rng = cfg.rng(name)
        sizes = cfg.max_size - cfg.min_size + 1
        for k in range(cfg.per_field):
            # cycle sizes fastest, shapes per full size cycle, so every (size, shape) pair occurs
            n = cfg.min_size + k % sizes
            shape = OPERATOR_SHAPES[(k // sizes) % len(OPERATOR_SHAPES)]
            out.append((name, random_operator(F, n, rng, cfg, shape)))
    return out


def random_poly(F, degree, rng, bound=3, monic=False) -> Poly:
    coeffs = [small_element(F, rng, bound) for _ in range(degree)]
    lead = F.one if monic else small_element(F, rng, bound)
    while lead.is_zero:
        lead = small_element(F, rng, bound)
    return Poly(F, coeffs + [lead])

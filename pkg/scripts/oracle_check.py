"""Cross-check the engine against the brute-force oracles on random inputs.

Determinants on every corpus matrix; roots, factorizations and minimal
polynomials over the finite field kinds. Prints one count line per check.
"""

import argparse

from nlalg import oracles
from nlalg.corpus import FIELD_KINDS, CorpusConfig, operator_corpus, random_poly
from nlalg.factor import factor, roots_in_field
from nlalg.operators import minpoly
from nlalg.poly import Poly


def factor_key(pairs):
    return sorted((tuple(c.sort_key() for c in g), m) for g, m in pairs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--per-field", type=int, default=100)
    ap.add_argument("--polys", type=int, default=300)
    ap.add_argument("--max-degree", type=int, default=7)
    args = ap.parse_args()

    cfg = CorpusConfig(per_field=args.per_field)
    ops = operator_corpus(cfg)
    bad = sum(A.det() != oracles.det(A.rows, A.field) for _, A in ops)
    print(f"det      {len(ops):5d} compared, {bad} discrepancies")

    finite = [(n, A) for n, A in ops if A.field.characteristic]
    bad = sum(minpoly(A) != Poly(A.field, oracles.minpoly(A.rows, A.field)) for _, A in finite)
    print(f"minpoly  {len(finite):5d} compared, {bad} discrepancies")

    rng = cfg.rng("oracle-polys")
    count = bad_roots = bad_factor = 0
    for name, F in FIELD_KINDS.items():
        if not F.characteristic:
            continue
        for _ in range(args.polys):
            f = random_poly(F, rng.randint(1, args.max_degree), rng)
            fz = factor(f)
            unit, facs = oracles.factor(f.coeffs, F)
            bad_factor += fz.unit != unit or factor_key((g.coeffs, m) for g, m in fz.pairs()) != factor_key(facs)
            bad_roots += list(roots_in_field(f)) != oracles.roots(f.coeffs, F)
            count += 1
    print(f"factor   {count:5d} compared, {bad_factor} discrepancies")
    print(f"roots    {count:5d} compared, {bad_roots} discrepancies")


if __name__ == "__main__":
    main()

"""Run the operator pipeline over the seeded corpus and tabulate what comes out.

For each field kind: how many operators split, how many are cyclic (one
invariant factor), how many are diagonalizable, and the distribution of
minimal-polynomial degrees. Every operator is also checked against
Cayley-Hamilton and P^-1 A P = rational form.

    python3 scripts/corpus_sweep.py --per-field 50 --max-size 4
"""

import argparse
import collections
import time

from nlalg.corpus import CorpusConfig, operator_corpus
from nlalg.operators import charpoly, diagonalize, invariant_factors, minpoly, poly_at, rational_form, split_part


def sweep(cfg: CorpusConfig) -> dict:
    stats = collections.defaultdict(collections.Counter)
    for name, A in operator_corpus(cfg):
        s = stats[name]
        s["operators"] += 1
        mp = minpoly(A)
        s[f"deg minpoly = {mp.degree}"] += 1
        s["cyclic"] += len(invariant_factors(A)) == 1
        s["split"] += split_part(charpoly(A))[1].degree == 0
        s["diagonalizable"] += diagonalize(A).diagonalizable
        rf = rational_form(A, with_transition=True)
        s["failures"] += not poly_at(charpoly(A), A).is_zero
        s["failures"] += rf.transition.inverse() * A * rf.transition != rf.form
    return stats


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--per-field", type=int, default=CorpusConfig.per_field)
    ap.add_argument("--max-size", type=int, default=CorpusConfig.max_size)
    args = ap.parse_args()
    cfg = CorpusConfig(seed=args.seed, per_field=args.per_field, max_size=args.max_size)
    t0 = time.perf_counter()
    stats = sweep(cfg)
    for name, s in stats.items():
        print(f"{name}:")
        for key in sorted(s):
            print(f"  {key:20s} {s[key]}")
    print(f"{sum(s['operators'] for s in stats.values())} operators in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

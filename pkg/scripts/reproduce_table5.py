"""Exhaustive edge metric dimension of GP(n,2) next to the published table."""
import argparse
import sys

from gpedim import verify as vh
from gpedim.solver import SolveOptions

ap = argparse.ArgumentParser()
ap.add_argument("--lo", type=int, default=5)
ap.add_argument("--hi", type=int, default=15)
ap.add_argument("--workers", type=int, default=1)
args = ap.parse_args()

rows = vh.reproduce_table5(range(args.lo, args.hi + 1), SolveOptions(parallelism=args.workers))
print(vh.format_table5(rows))
for r in rows:
    if r.solver_basis != r.published_basis:
        print(f"n={r.n}: lexicographically first basis {{{','.join(r.solver_basis)}}}")
sys.exit(0 if all(r.ok for r in rows) else 1)

"""beta, beta_E and beta_E' for small GP(n,k), with the relation between beta_E and beta.

Pass --permute to re-solve a seeded random relabeling of each instance.
"""
import argparse

from gpedim import verify as vh
from gpedim.graph import build_generalized_petersen

ap = argparse.ArgumentParser()
ap.add_argument("--max-n", type=int, default=12)
ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
ap.add_argument("--permute", action="store_true")
ap.add_argument("--seed", type=int, default=vh.HarnessConfig.seed)
args = ap.parse_args()

instances = [(n, k) for k in args.k for n in range(2 * k + 1, args.max_n + 1)]
rows = vh.realization_table(instances)
print(vh.format_realization(rows))

if args.permute:
    for (n, k), row in zip(instances, rows):
        g = build_generalized_petersen(n, k)
        dims = vh.dimensions(vh.random_relabel(g, args.seed))
        same = dims == {"edim": row.beta_E, "mdim": row.beta, "ledim": row.beta_E_line}
        print(f"GP({n},{k}) relabeled: {dims} {'ok' if same else 'MISMATCH'}")

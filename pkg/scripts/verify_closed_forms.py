"""Check every closed-form representation for GP(n,1) and GP(n,2) against BFS.

Usage:
    python scripts/verify_closed_forms.py [--cap 64] [--json out.json]
"""
import argparse
import json
import sys

from gpedim import verify as vh


def main():
    cfg = vh.HarnessConfig()
    ap = argparse.ArgumentParser()
    ap.add_argument("--cap", type=int, default=cfg.formula_cap)
    ap.add_argument("--json", metavar="PATH")
    args = ap.parse_args()

    instances = [(n, 1) for n in range(3, args.cap + 1)] + [(n, 2) for n in range(16, args.cap + 1)]
    reports = [vh.verify_gp_formulas(n, k) for n, k in instances]
    print(vh.format_formula_reports(reports))

    by_source = {}
    for r in reports:
        for m in r.mismatches:
            by_source.setdefault(m.source, set()).add((m.family, m.condition))
    print()
    print(f"{sum(r.passed for r in reports)}/{len(reports)} instances pass")
    for source, cells in sorted(by_source.items()):
        print(f"{source}: {len(cells)} distinct cells disagree with BFS")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=1)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())

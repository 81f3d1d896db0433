"""Certified dimensions of SP(a,b,c) and the status of the stated multiset landmark sets.

Usage: python scripts/sp_multiset_study.py --min 3 --max 5
"""

import argparse
import itertools

from resolvset import audit_sp, build_sp, min_dimension


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=3)
    ap.add_argument("--max", type=int, default=5)
    args = ap.parse_args()

    print(f"{'a,b,c':<8} {'n':>3} {'dim':>3} {'edim':>4} {'mdim':>4} {'msdim':>5}  resolving hypotheses / best match")
    for a, b, c in itertools.product(range(args.min, args.max + 1), repeat=3):
        g = build_sp(a, b, c)
        vals = [min_dimension(g, v).value for v in ("vertex", "edge", "mixed", "multiset")]
        ex = audit_sp(a, b, c).extras
        best = max(ex["hypotheses"].items(), key=lambda kv: kv[1]["match_fraction"])
        print(f"{a},{b},{c:<4} {g.n:>3} {vals[0]:>3} {vals[1]:>4} {vals[2]:>4} {vals[3]:>5}  "
              f"{ex['resolving_hypotheses'] or '-'} / {best[0]} {best[1]['match_fraction']:.2f}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Sweep the property suite over many seeds and report any failures.

Usage: python3 scripts/property_sweep.py [--seeds N] [--trials N]

A wider net than the default single-seed run: each seed draws an
independent stream of scenes, so N seeds at T trials cover N*T
configurations per property.
"""

import argparse
import sys

from exactplane import run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=10, help="number of seeds (default 10)")
    parser.add_argument("--trials", type=int, default=200, help="trials per property (default 200)")
    args = parser.parse_args()

    bad = 0
    for seed in range(args.seeds):
        reports = run_all(seed, args.trials)
        failed = [r for r in reports if not r.ok]
        if failed:
            bad += 1
            print(f"seed {seed}: {len(failed)} properties failed")
            for r in failed:
                for example in r.examples:
                    print(f"  {r.name}: {example}")
        else:
            print(f"seed {seed}: all {len(reports)} properties passed ({args.trials} trials each)")
    if bad:
        print(f"{bad} of {args.seeds} seeds hit failures")
        return 1
    print(f"{args.seeds} seeds clean")
    return 0


if __name__ == "__main__":
    sys.exit(main())

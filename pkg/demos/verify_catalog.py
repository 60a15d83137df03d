"""Check every catalog identity at its default point and print a family summary.

Run with ``python3 demos/verify_catalog.py [seed] [samples]``.
"""
import sys
from collections import Counter

from hurwitz_kit.identities import DEFAULTS, Randomized, check_suite, get


def main(argv):
    seed = int(argv[0]) if argv else 0
    samples = int(argv[1]) if len(argv) > 1 else 0
    strategy = Randomized(seed, samples) if samples else DEFAULTS
    reports = check_suite("all", strategy)
    total, passed = Counter(), Counter()
    for r in reports:
        family = get(r.id).family
        total[family] += 1
        passed[family] += r.passed
    for family in total:
        print(f"{family:14s} {passed[family]:4d} / {total[family]:<4d}")
    worst = max(reports, key=lambda r: r.abs_err)
    print(f"{len(reports)} reports, largest absolute error {worst.abs_err:.2e} ({worst.id})")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

#!/usr/bin/env python3
"""Run every cross-check (closed forms, localization, positivity, axioms)
for a range of degrees and print one line per check."""

import argparse
import sys
import time

from nablaqt.cli import _verify_checks


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()
    failures = 0
    for n in range(1, args.max_n + 1):
        start = time.time()
        for label, passed in _verify_checks(n):
            print(f"n={n} {label}: {'pass' if passed else 'FAIL'}")
            failures += not passed
        print(f"n={n} done in {time.time() - start:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Precompute Macdonald tables and write them to the on-disk cache."""

import argparse
import time

from nablaqt import macdonald
from nablaqt.reporting import RunConfig


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--cache-dir", default=None)
    args = parser.parse_args()
    config = RunConfig(**({"cache_dir": args.cache_dir} if args.cache_dir else {}))
    for n in range(1, args.max_n + 1):
        start = time.time()
        path = macdonald.cache_store(macdonald.macdonald_table(n), config.cache_dir)
        print(f"degree {n}: {path} ({time.time() - start:.2f}s)")


if __name__ == "__main__":
    main()

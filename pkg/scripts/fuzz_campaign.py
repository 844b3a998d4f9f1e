#!/usr/bin/env python3
"""Run the full random-stimulus property campaign (10 seeds x 10k cycles)."""

import argparse
import time

from arbsim.fuzz import run_fuzz
from arbsim.signals import Params


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--cycles", type=int, default=10_000)
    parser.add_argument("--addr-width", type=int, default=4)
    parser.add_argument("--data-width", type=int, default=8)
    parser.add_argument("--reset-storm", action="store_true")
    args = parser.parse_args()

    params = Params(args.addr_width, args.data_width)
    start = time.perf_counter()
    failures = 0
    for seed in range(args.seeds):
        result = run_fuzz(seed, args.cycles, params, reset_storm=args.reset_storm)
        if result.ok:
            print(f"seed {seed}: OK ({args.cycles} cycles)")
        else:
            failures += 1
            v = result.violation
            print(f"seed {seed}: VIOLATION {v.prop} at prefix {v.prefix_len}: {v.detail}")
    elapsed = time.perf_counter() - start
    print(f"{args.seeds} seeds x {args.cycles} cycles in {elapsed:.2f}s, "
          f"{failures} failing seed(s)")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()

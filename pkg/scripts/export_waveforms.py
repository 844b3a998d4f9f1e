#!/usr/bin/env python3
"""Render every builtin scenario to VCD and TSV under out/waves/."""

import argparse
import pathlib

from arbsim import builtin_scenarios, run_scenario, write_table, write_vcd


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="out/waves", help="output directory")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for s in builtin_scenarios():
        trace = run_scenario(s)
        with open(out_dir / f"{s.name}.vcd", "w") as fh:
            write_vcd(trace, fh)
        with open(out_dir / f"{s.name}.tsv", "w") as fh:
            write_table(trace, fh)
        print(f"{s.name}: {len(trace.rows)} cycles -> {out_dir / s.name}.{{vcd,tsv}}")


if __name__ == "__main__":
    main()

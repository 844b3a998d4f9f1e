"""Command-line front end.

Subcommands:

* ``run``: replay one scenario (builtin or file), print its assertion
  report, optionally export VCD/table waveforms.
* ``verify``: replay the whole builtin corpus in unregistered and
  registered output modes and print a per-case pass/fail table.
* ``fuzz``: drive random legal stimulus and check the structural
  invariants every cycle.
* ``list``: show the builtin scenario names.

Exit status is 0 exactly when every evaluated check passes; usage problems
(unknown scenario, unreadable file, bad flag values) exit 2 with a
diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import fnmatch
import sys
from dataclasses import dataclass, replace

from .corpus import builtin_by_name, builtin_scenarios
from .fuzz import run_fuzz
from .scenario import Scenario, ScenarioParseError, parse_scenario
from .signals import Params
from .trace import AssertionReport, check_assertions, run_scenario, write_table, write_vcd


@dataclass(frozen=True)
class RunConfig:
    builtin: str | None = None
    file: str | None = None
    vcd_path: str | None = None
    table_path: str | None = None
    report_path: str | None = None
    registered_override: bool | None = None
    seed: int | None = None
    cycles: int | None = None


def _load_scenario(config: RunConfig) -> Scenario:
    if config.builtin is not None:
        try:
            s = builtin_by_name(config.builtin)
        except KeyError as exc:
            raise SystemExit2(str(exc.args[0]))
    else:
        assert config.file is not None
        try:
            with open(config.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SystemExit2(f"cannot read scenario file: {exc}")
        try:
            s = parse_scenario(text)
        except ScenarioParseError as exc:
            raise SystemExit2(f"{config.file}: {exc}")
    if config.registered_override is not None:
        s = replace(
            s, params=replace(s.params, registered_output=config.registered_override)
        )
    return s


class SystemExit2(Exception):
    """Usage-level failure: message on stderr, exit status 2."""


def _print_report(name: str, report: AssertionReport) -> None:
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        sys.stdout.write(f"{status}  {r.assertion.describe()}  [observed: {r.observed}]\n")
    verdict = "PASS" if report.passed else "FAIL"
    sys.stdout.write(f"{verdict}  {name}: {len(report.results)} assertion(s)\n")


def cmd_run(config: RunConfig) -> int:
    scenario = _load_scenario(config)
    trace = run_scenario(scenario)
    report = check_assertions(trace, scenario)
    if config.vcd_path:
        with open(config.vcd_path, "w", encoding="ascii") as fh:
            write_vcd(trace, fh)
    if config.table_path:
        if config.table_path == "-":
            write_table(trace, sys.stdout)
        else:
            with open(config.table_path, "w", encoding="ascii") as fh:
                write_table(trace, fh)
    _print_report(scenario.name, report)
    return 0 if report.passed else 1


def _verify_lines(name_filter: str | None) -> tuple[list[str], bool]:
    """Run the corpus in both output modes; return report lines and verdict."""
    lines = []
    all_ok = True
    scenarios = builtin_scenarios()
    if name_filter:
        scenarios = [s for s in scenarios if fnmatch.fnmatch(s.name, name_filter)]
    for base in scenarios:
        for registered in (False, True):
            s = replace(base, params=replace(base.params, registered_output=registered))
            mode = "registered" if registered else "unregistered"
            report = check_assertions(run_scenario(s), s)
            status = "PASS" if report.passed else "FAIL"
            all_ok = all_ok and report.passed
            lines.append(f"{base.name}\t{mode}\t{status}\t{len(report.results)}")
    return lines, all_ok


def cmd_verify_all(name_filter: str | None = None, report_path: str | None = None) -> int:
    lines, all_ok = _verify_lines(name_filter)
    if not lines:
        print(f"no scenarios match filter {name_filter!r}", file=sys.stderr)
        return 2
    header = "scenario\tmode\tstatus\tassertions"
    body = "\n".join([header] + lines) + "\n"
    sys.stdout.write(body)
    summary = f"{'PASS' if all_ok else 'FAIL'}: {len(lines)} run(s)\n"
    sys.stdout.write(summary)
    if report_path:
        with open(report_path, "w", encoding="ascii") as fh:
            fh.write(body)
            fh.write(summary)
    return 0 if all_ok else 1


def cmd_fuzz(
    seed: int,
    cycles: int,
    params: Params,
    reset_storm: bool = False,
    report_path: str | None = None,
) -> int:
    if cycles < 1:
        raise SystemExit2("cycles must be >= 1")
    result = run_fuzz(seed, cycles, params, reset_storm=reset_storm)
    if result.ok:
        line = f"OK\tseed={seed}\tcycles={cycles}\tviolations=0\n"
    else:
        v = result.violation
        line = (
            f"VIOLATION\tseed={seed}\tprefix={v.prefix_len}"
            f"\tproperty={v.prop}\tdetail={v.detail}\n"
        )
    sys.stdout.write(line)
    if report_path:
        with open(report_path, "w", encoding="ascii") as fh:
            fh.write(line)
    return 0 if result.ok else 1


def cmd_list() -> int:
    for s in builtin_scenarios():
        n_events = len(s.events)
        n_asserts = len(s.assertions)
        print(f"{s.name}\tclock={s.clock_period}ns\trun={s.duration}ns"
              f"\tevents={n_events}\tassertions={n_asserts}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arbsim",
        description="Cycle-accurate two-client RAM arbiter simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="replay one scenario and check it")
    src = p_run.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", help="builtin scenario name or unique prefix")
    src.add_argument("--file", help="path to a scenario file")
    p_run.add_argument("--vcd", metavar="PATH", help="write a VCD waveform")
    p_run.add_argument("--table", metavar="PATH", help="write a TSV table ('-' for stdout)")
    p_run.add_argument("--registered", type=int, choices=(0, 1), default=None,
                       help="override the scenario's output-register mode")

    p_verify = sub.add_parser("verify", help="run the whole builtin corpus")
    p_verify.add_argument("--filter", help="glob over scenario names, e.g. 'tc2*'")
    p_verify.add_argument("--report", metavar="PATH", help="write the TSV report to a file")

    p_fuzz = sub.add_parser("fuzz", help="random-stimulus property campaign")
    p_fuzz.add_argument("--seed", type=int, required=True)
    p_fuzz.add_argument("--cycles", type=int, required=True)
    p_fuzz.add_argument("--addr-width", type=int, default=4)
    p_fuzz.add_argument("--data-width", type=int, default=8)
    p_fuzz.add_argument("--reset-storm", action="store_true",
                        help="also pull reset low at random during the run")
    p_fuzz.add_argument("--report", metavar="PATH", help="write the summary to a file")

    sub.add_parser("list", help="list builtin scenarios")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            registered = None if args.registered is None else bool(args.registered)
            config = RunConfig(
                builtin=args.builtin,
                file=args.file,
                vcd_path=args.vcd,
                table_path=args.table,
                registered_override=registered,
            )
            return cmd_run(config)
        if args.command == "verify":
            return cmd_verify_all(args.filter, args.report)
        if args.command == "fuzz":
            params = Params(args.addr_width, args.data_width)
            return cmd_fuzz(args.seed, args.cycles, params,
                            reset_storm=args.reset_storm, report_path=args.report)
        if args.command == "list":
            return cmd_list()
        raise AssertionError(f"unhandled command {args.command}")
    except SystemExit2 as exc:
        print(f"arbsim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

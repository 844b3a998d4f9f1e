"""Per-cycle recording, assertion evaluation, and waveform export.

A trace holds one row per rising clock edge: the inputs sampled at that
edge and the post-edge outputs, RAM drive, channel states, and clash flag.
Rows are stamped with the edge time ``cycle * clock_period + clock_period/2``
(the clock starts low).  Traces export to IEEE-1364-style VCD and to a
tab-separated table.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, IO

from .arbiter import (
    STATE_CODES,
    ChannelState,
    ClientInputs,
    ClientOutputs,
    RamDrive,
)
from .scenario import Assertion, Scenario
from .signals import LOW, Level, Params, Word, parse_word
from .system import SystemState, system_new, system_step


@dataclass(frozen=True, slots=True)
class TraceRow:
    cycle: int
    time: int
    inputs: ClientInputs
    outputs: ClientOutputs
    drive: RamDrive
    read_state: ChannelState
    write_state: ChannelState
    addr_clash: Level


@dataclass(frozen=True)
class Trace:
    params: Params
    clock_period: int
    rows: tuple[TraceRow, ...]

    def edge_for_time(self, t: int) -> int:
        """Index of the first rising edge at or after time t."""
        half = self.clock_period // 2
        if t <= half:
            return 0
        return -(-(t - half) // self.clock_period)

    def last_edge_at_or_before(self, t: int) -> int:
        """Index of the last rising edge at or before time t (-1 if none)."""
        half = self.clock_period // 2
        if t < half:
            return -1
        return (t - half) // self.clock_period


@dataclass(frozen=True, slots=True)
class AssertionResult:
    assertion: Assertion
    observed: str
    passed: bool


@dataclass(frozen=True)
class AssertionReport:
    results: tuple[AssertionResult, ...]
    passed: bool

    def failures(self) -> list[AssertionResult]:
        return [r for r in self.results if not r.passed]


_EVENT_FIELDS = {
    "RST_N": ("rst_n", "level"),
    "RD_EN_C1": ("rd_en_c1", "level"),
    "WR_EN_C1": ("wr_en_c1", "level"),
    "RDADDR_C1": ("rdaddr_c1", "word"),
    "WRADDR_C1": ("wraddr_c1", "word"),
    "WRDATA_C1": ("wrdata_c1", "word"),
    "REQUEST_C2": ("request_c2", "level"),
    "RD_NOT_WRITE_C2": ("rd_not_write_c2", "level"),
    "ADDR_C2": ("addr_c2", "word"),
    "DATAIN_C2": ("datain_c2", "word"),
}


def _apply_event(inputs: ClientInputs, pin: str, value: str) -> ClientInputs:
    field, kind = _EVENT_FIELDS[pin]
    if kind == "level":
        return replace(inputs, **{field: value == "1"})
    return replace(inputs, **{field: parse_word(value, len(value))})


def run_scenario(s: Scenario) -> Trace:
    """Replay a scenario's event timeline and record every edge.

    An input assignment at time t takes effect at the first rising edge
    whose time is >= t; assignments at equal times apply in file order, so
    a later line on the same pin wins.
    """
    state: SystemState = system_new(s.params)
    inputs = ClientInputs.quiet(s.params, rst_n=LOW)
    half = s.clock_period // 2
    rows: list[TraceRow] = []
    idx = 0
    for cycle in range(s.num_edges()):
        t = cycle * s.clock_period + half
        while idx < len(s.events) and s.events[idx].time <= t:
            ev = s.events[idx]
            inputs = _apply_event(inputs, ev.pin, ev.value)
            idx += 1
        state, out = system_step(state, inputs)
        arb = state.arbiter
        drive = RamDrive(
            arb.temp_rd_en, arb.temp_wr_en, arb.temp_rd_addr, arb.temp_wr_addr,
            arb.temp_wr_data,
        )
        rows.append(
            TraceRow(
                cycle=cycle,
                time=t,
                inputs=inputs,
                outputs=out,
                drive=drive,
                read_state=arb.pr_read,
                write_state=arb.pr_write,
                addr_clash=arb.addr_clash,
            )
        )
    return Trace(s.params, s.clock_period, tuple(rows))


def _output_value(row: TraceRow, pin: str) -> str:
    out = row.outputs
    if pin == "RDDATA_C1":
        return out.rddata_c1.render()
    if pin == "DATAOUT_C2":
        return out.dataout_c2.render()
    if pin == "ACK_C2":
        return "1" if out.ack_c2 else "0"
    if pin == "RST_DONE":
        return "1" if out.rst_done else "0"
    raise KeyError(pin)


def check_assertions(trace: Trace, s: Scenario) -> AssertionReport:
    """Evaluate every assertion of a scenario against its trace."""
    results: list[AssertionResult] = []
    n = len(trace.rows)
    for a in s.assertions:
        if a.kind == "value":
            k = trace.edge_for_time(a.time)
            if k >= n:
                results.append(AssertionResult(a, "out of range", False))
                continue
            observed = _output_value(trace.rows[k], a.pin)
            expected = {"high": "1", "low": "0"}.get(a.expected, a.expected)
            results.append(AssertionResult(a, observed, observed == expected))
        else:
            # A window a..b covers the edges whose times lie inside [a, b].
            ka = trace.edge_for_time(a.start)
            kb = trace.last_edge_at_or_before(a.end)
            if ka >= n or kb >= n or kb < ka:
                results.append(AssertionResult(a, "out of range", False))
                continue
            values = [_output_value(trace.rows[i], a.pin) for i in range(ka, kb + 1)]
            if a.kind == "pulses":
                rising = sum(
                    1
                    for i in range(max(ka, 1), kb + 1)
                    if _output_value(trace.rows[i - 1], a.pin) == "0"
                    and _output_value(trace.rows[i], a.pin) == "1"
                )
                results.append(
                    AssertionResult(a, f"{rising} rising edge(s)", rising >= 1)
                )
            else:  # quiet
                highs = [
                    trace.rows[ka + i].time for i, v in enumerate(values) if v == "1"
                ]
                observed = f"high at t={highs[0]}" if highs else "low throughout"
                results.append(AssertionResult(a, observed, not highs))
    return AssertionReport(tuple(results), all(r.passed for r in results))


# ---------------------------------------------------------------------------
# Signal schema shared by the VCD and table exporters.  Channel states are
# exported as 3-bit buses using the encoding in arbiter.STATE_CODES.

def _signal_schema(params: Params) -> list[tuple[str, int, Callable[[TraceRow], str]]]:
    a, d = params.addr_width, params.data_width

    def lvl(get: Callable[[TraceRow], Level]) -> Callable[[TraceRow], str]:
        return lambda r: "1" if get(r) else "0"

    def word(get: Callable[[TraceRow], Word]) -> Callable[[TraceRow], str]:
        return lambda r: get(r).render()

    return [
        ("RST_N", 1, lvl(lambda r: r.inputs.rst_n)),
        ("RD_EN_C1", 1, lvl(lambda r: r.inputs.rd_en_c1)),
        ("WR_EN_C1", 1, lvl(lambda r: r.inputs.wr_en_c1)),
        ("RDADDR_C1", a, word(lambda r: r.inputs.rdaddr_c1)),
        ("WRADDR_C1", a, word(lambda r: r.inputs.wraddr_c1)),
        ("WRDATA_C1", d, word(lambda r: r.inputs.wrdata_c1)),
        ("REQUEST_C2", 1, lvl(lambda r: r.inputs.request_c2)),
        ("RD_NOT_WRITE_C2", 1, lvl(lambda r: r.inputs.rd_not_write_c2)),
        ("ADDR_C2", a, word(lambda r: r.inputs.addr_c2)),
        ("DATAIN_C2", d, word(lambda r: r.inputs.datain_c2)),
        ("RDDATA_C1", d, word(lambda r: r.outputs.rddata_c1)),
        ("DATAOUT_C2", d, word(lambda r: r.outputs.dataout_c2)),
        ("ACK_C2", 1, lvl(lambda r: r.outputs.ack_c2)),
        ("RST_DONE", 1, lvl(lambda r: r.outputs.rst_done)),
        ("RD_EN", 1, lvl(lambda r: r.drive.rd_en)),
        ("WR_EN", 1, lvl(lambda r: r.drive.wr_en)),
        ("RD_ADDR", a, word(lambda r: r.drive.rd_addr)),
        ("WR_ADDR", a, word(lambda r: r.drive.wr_addr)),
        ("WR_DATA", d, word(lambda r: r.drive.wr_data)),
        ("READ_STATE", 3, lambda r: STATE_CODES[r.read_state]),
        ("WRITE_STATE", 3, lambda r: STATE_CODES[r.write_state]),
        ("ADDR_CLASH", 1, lvl(lambda r: r.addr_clash)),
    ]


def _vcd_ids(count: int) -> list[str]:
    return [chr(33 + i) for i in range(count)]


def write_vcd(trace: Trace, sink: IO[str]) -> None:
    """Emit a minimal VCD: header, initial values, then changes only.

    Scalars are 1-bit wires, buses are n-bit wires dumped as ``b<bits> <id>``
    records.  Power-on values populate the ``$dumpvars`` block; each trace
    row then contributes a ``#<time>`` section containing only the signals
    whose value differs from the previous row.
    """
    schema = _signal_schema(trace.params)
    ids = _vcd_ids(len(schema))

    sink.write("$timescale 1ns $end\n")
    sink.write("$scope module ram_arbiter $end\n")
    for (name, width, _), vid in zip(schema, ids):
        if width == 1:
            sink.write(f"$var wire 1 {vid} {name} $end\n")
        else:
            sink.write(f"$var wire {width} {vid} {name} [{width - 1}:0] $end\n")
    sink.write("$upscope $end\n")
    sink.write("$enddefinitions $end\n")

    def record(vid: str, width: int, value: str) -> str:
        if width == 1:
            return f"{value}{vid}\n"
        return f"b{value} {vid}\n"

    # Power-on values: everything zero except the channel states, which
    # start in reset (itself the all-zero code).
    current = ["0" * width for (_, width, _) in schema]
    sink.write("$dumpvars\n")
    for (name, width, _), vid, value in zip(schema, ids, current):
        sink.write(record(vid, width, value))
    sink.write("$end\n")

    for row in trace.rows:
        changes = []
        for i, ((name, width, extract), vid) in enumerate(zip(schema, ids)):
            value = extract(row)
            if value != current[i]:
                current[i] = value
                changes.append(record(vid, width, value))
        if changes:
            sink.write(f"#{row.time}\n")
            sink.writelines(changes)


def write_table(trace: Trace, sink: IO[str]) -> None:
    """Tab-separated dump: header of signal names, one row per cycle."""
    schema = _signal_schema(trace.params)
    sink.write("\t".join(["cycle", "time_ns"] + [name for name, _, _ in schema]) + "\n")
    for row in trace.rows:
        cells = [str(row.cycle), str(row.time)]
        cells += [extract(row) for _, _, extract in schema]
        sink.write("\t".join(cells) + "\n")

"""Dual-channel fixed-priority arbiter: grant FSM, temp registers, clash bypass.

The arbiter owns two independent grant channels (read and write).  Client1
has dedicated enables and always preempts; client2 shares one request pin
plus a read-not-write selector, so it can hold at most one channel at a
time.  Granted requests are latched into drive registers that feed the RAM.
When the latched read and write addresses collide with both enables high,
the in-flight write data is captured and forwarded to the reading client
instead of the stale memory word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .signals import HIGH, LOW, Level, Params, Word


class ChannelState(enum.Enum):
    RESET = "reset"
    IDLE = "idle"
    CLIENT1_READ = "client1_read"
    CLIENT2_READ = "client2_read"
    CLIENT1_WRITE = "client1_write"
    CLIENT2_WRITE = "client2_write"


# 3-bit encoding used by the waveform/table exporters.
STATE_CODES = {
    ChannelState.RESET: "000",
    ChannelState.IDLE: "001",
    ChannelState.CLIENT1_READ: "010",
    ChannelState.CLIENT2_READ: "011",
    ChannelState.CLIENT1_WRITE: "100",
    ChannelState.CLIENT2_WRITE: "101",
}


@dataclass(frozen=True, slots=True)
class ClientInputs:
    """Per-cycle snapshot of every top-level input pin."""

    rst_n: Level
    rd_en_c1: Level
    wr_en_c1: Level
    rdaddr_c1: Word
    wraddr_c1: Word
    wrdata_c1: Word
    request_c2: Level
    rd_not_write_c2: Level
    addr_c2: Word
    datain_c2: Word

    @classmethod
    def quiet(cls, params: Params, rst_n: Level = HIGH) -> "ClientInputs":
        za, zd = params.zero_addr(), params.zero_data()
        return cls(rst_n, LOW, LOW, za, za, zd, LOW, LOW, za, zd)


@dataclass(frozen=True, slots=True)
class RamDrive:
    """Registered request bundle with which the arbiter stimulates the RAM."""

    rd_en: Level
    wr_en: Level
    rd_addr: Word
    wr_addr: Word
    wr_data: Word


@dataclass(frozen=True, slots=True)
class ClientOutputs:
    rddata_c1: Word
    dataout_c2: Word
    ack_c2: Level
    rst_done: Level


@dataclass(frozen=True, slots=True)
class ArbiterState:
    pr_read: ChannelState
    pr_write: ChannelState
    temp_rd_en: Level
    temp_wr_en: Level
    temp_rd_addr: Word
    temp_wr_addr: Word
    temp_wr_data: Word
    temp_rd_data: Word    # clash bypass capture
    temp_rd_data1: Word   # bypass value delayed one cycle (registered mode)
    temp_rd_data2: Word   # RAM output delayed one cycle (registered mode)
    temp_ack: Level
    temp_ack1: Level
    temp_wr: Level
    addr_clash: Level
    addr_clash_d: Level   # clash flag delayed one cycle (registered mode)
    reset_count: int
    reset_done: Level


def arbiter_reset(params: Params) -> ArbiterState:
    """Power-on state: both channels in reset, every register cleared."""
    za, zd = params.zero_addr(), params.zero_data()
    return ArbiterState(
        pr_read=ChannelState.RESET,
        pr_write=ChannelState.RESET,
        temp_rd_en=LOW,
        temp_wr_en=LOW,
        temp_rd_addr=za,
        temp_wr_addr=za,
        temp_wr_data=zd,
        temp_rd_data=zd,
        temp_rd_data1=zd,
        temp_rd_data2=zd,
        temp_ack=LOW,
        temp_ack1=LOW,
        temp_wr=LOW,
        addr_clash=LOW,
        addr_clash_d=LOW,
        reset_count=0,
        reset_done=LOW,
    )


def _read_grant(inp: ClientInputs) -> ChannelState:
    if inp.rd_en_c1:
        return ChannelState.CLIENT1_READ
    if inp.request_c2 and inp.rd_not_write_c2:
        return ChannelState.CLIENT2_READ
    return ChannelState.IDLE


def _write_grant(inp: ClientInputs) -> ChannelState:
    if inp.wr_en_c1:
        return ChannelState.CLIENT1_WRITE
    if inp.request_c2 and not inp.rd_not_write_c2:
        return ChannelState.CLIENT2_WRITE
    return ChannelState.IDLE


def fsm_next(
    pr_read: ChannelState,
    pr_write: ChannelState,
    inp: ClientInputs,
    reset_count: int,
    params: Params,
) -> tuple[ChannelState, ChannelState, int, Level]:
    """One grant decision: next channel states, sweep counter, init-done flag.

    A low ``rst_n`` forces both channels into reset with the counter cleared.
    In reset with ``rst_n`` high the counter runs for one full memory depth,
    then both channels move to idle and the done flag rises.  Out of reset
    each channel independently grants client1 first (its enable always wins),
    then client2 when requested on the matching side of the read-not-write
    selector, and otherwise idles.
    """
    if not inp.rst_n:
        return ChannelState.RESET, ChannelState.RESET, 0, LOW
    if pr_read is ChannelState.RESET or pr_write is ChannelState.RESET:
        if reset_count < params.ram_depth():
            return ChannelState.RESET, ChannelState.RESET, reset_count + 1, LOW
        return ChannelState.IDLE, ChannelState.IDLE, 0, HIGH
    return _read_grant(inp), _write_grant(inp), reset_count, HIGH


def detect_clash(
    temp_rd_en: Level, temp_wr_en: Level, temp_rd_addr: Word, temp_wr_addr: Word
) -> Level:
    """High iff both latched enables are high and the addresses match bit for bit."""
    return temp_rd_en and temp_wr_en and temp_rd_addr == temp_wr_addr


def arbiter_step(
    state: ArbiterState, inp: ClientInputs, ram_rd_data: Word, params: Params
) -> tuple[ArbiterState, RamDrive]:
    """Advance the arbiter by one rising clock edge.

    Update order within the edge:

    1. the grant FSM decides the next channel owners;
    2. the drive registers latch from the granted client (idle or resetting
       channels clear their enables and zero their address/data registers;
       client2 latches are paced by the ack bookkeeping registers);
    3. the clash flag is computed from the just-latched drive registers and,
       when high, the in-flight write data is captured for the bypass;
    4. the client2 ack registers advance (write acks self-clear one cycle
       after they set, read acks run a set/hold/clear pattern);
    5. the one-cycle-delay registers for registered-output mode capture the
       pre-edge clash flag, pre-edge bypass data, and the RAM read data.

    Returns the post-edge state and the drive bundle seen by the RAM.
    """
    za, zd = params.zero_addr(), params.zero_data()

    # Delay registers capture pre-edge values; this is what makes the
    # registered output an exact one-cycle shift of the unregistered one.
    addr_clash_d = state.addr_clash
    temp_rd_data1 = state.temp_rd_data
    temp_rd_data2 = ram_rd_data

    nx_read, nx_write, reset_count, reset_done = fsm_next(
        state.pr_read, state.pr_write, inp, state.reset_count, params
    )

    temp_rd_en, temp_rd_addr = state.temp_rd_en, state.temp_rd_addr
    temp_ack = state.temp_ack
    if nx_read in (ChannelState.IDLE, ChannelState.RESET):
        temp_rd_en, temp_rd_addr = LOW, za
    elif nx_read is ChannelState.CLIENT1_READ:
        temp_rd_en, temp_rd_addr = inp.rd_en_c1, inp.rdaddr_c1
    elif nx_read is ChannelState.CLIENT2_READ:
        if not state.temp_ack:
            temp_rd_en, temp_rd_addr, temp_ack = HIGH, inp.addr_c2, HIGH

    temp_wr_en, temp_wr_addr = state.temp_wr_en, state.temp_wr_addr
    temp_wr_data = state.temp_wr_data
    temp_wr = state.temp_wr
    if nx_write in (ChannelState.IDLE, ChannelState.RESET):
        temp_wr_en, temp_wr_addr, temp_wr_data = LOW, za, zd
    elif nx_write is ChannelState.CLIENT1_WRITE:
        temp_wr_en, temp_wr_addr, temp_wr_data = (
            inp.wr_en_c1,
            inp.wraddr_c1,
            inp.wrdata_c1,
        )
    elif nx_write is ChannelState.CLIENT2_WRITE:
        if not state.temp_wr:
            temp_wr_en, temp_wr_addr, temp_wr_data, temp_wr = (
                HIGH,
                inp.addr_c2,
                inp.datain_c2,
                HIGH,
            )

    addr_clash = detect_clash(temp_rd_en, temp_wr_en, temp_rd_addr, temp_wr_addr)
    temp_rd_data = state.temp_rd_data
    if addr_clash:
        temp_rd_data = temp_wr_data

    # Ack cadence, guarded on pre-edge values: a set and its clear never
    # land on the same edge, so continuous client2 service produces a
    # period-2 pulse train for writes and period-3 for reads.
    if state.temp_wr:
        temp_wr = LOW
    temp_ack1 = state.temp_ack
    if state.temp_ack1:
        temp_ack1 = LOW
        temp_ack = LOW

    if not inp.rst_n:
        temp_rd_data = zd
        temp_rd_data1 = zd
        temp_rd_data2 = zd

    new = ArbiterState(
        pr_read=nx_read,
        pr_write=nx_write,
        temp_rd_en=temp_rd_en,
        temp_wr_en=temp_wr_en,
        temp_rd_addr=temp_rd_addr,
        temp_wr_addr=temp_wr_addr,
        temp_wr_data=temp_wr_data,
        temp_rd_data=temp_rd_data,
        temp_rd_data1=temp_rd_data1,
        temp_rd_data2=temp_rd_data2,
        temp_ack=temp_ack,
        temp_ack1=temp_ack1,
        temp_wr=temp_wr,
        addr_clash=addr_clash,
        addr_clash_d=addr_clash_d,
        reset_count=reset_count,
        reset_done=reset_done,
    )
    drive = RamDrive(temp_rd_en, temp_wr_en, temp_rd_addr, temp_wr_addr, temp_wr_data)
    return new, drive


def resolve_outputs(
    state: ArbiterState, ram_rd_data: Word, params: Params
) -> ClientOutputs:
    """Combinational output mux over the post-edge arbiter registers.

    Client2's ack is the OR of the read and write ack registers.  Both data
    outputs substitute the bypass capture for the RAM word while the clash
    flag is up; in registered mode client1's data instead comes from the
    one-cycle-delay registers selected by the delayed clash flag.
    """
    ack_c2 = state.temp_ack1 or state.temp_wr
    dataout_c2 = state.temp_rd_data if state.addr_clash else ram_rd_data
    if params.registered_output:
        rddata_c1 = state.temp_rd_data1 if state.addr_clash_d else state.temp_rd_data2
    else:
        rddata_c1 = state.temp_rd_data if state.addr_clash else ram_rd_data
    return ClientOutputs(rddata_c1, dataout_c2, ack_c2, state.reset_done)

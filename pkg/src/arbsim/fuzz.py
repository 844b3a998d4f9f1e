"""Randomized stimulus campaigns checking the arbiter's structural invariants.

Every measured cycle is checked for: channel-state polarity, client2 never
holding both channels, client1 preemption, the client2 admission rules,
clash-bypass data equality, and quiet RAM enables while a channel is in
reset.  Runs are reproducible from (seed, cycles, params) alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arbiter import ArbiterState, ChannelState, ClientInputs, RamDrive
from .signals import HIGH, LOW, Params, Word
from .system import SystemState, system_new, system_step

_READ_STATES = {
    ChannelState.RESET,
    ChannelState.IDLE,
    ChannelState.CLIENT1_READ,
    ChannelState.CLIENT2_READ,
}
_WRITE_STATES = {
    ChannelState.RESET,
    ChannelState.IDLE,
    ChannelState.CLIENT1_WRITE,
    ChannelState.CLIENT2_WRITE,
}


@dataclass(frozen=True, slots=True)
class Violation:
    cycle: int          # index within the measured phase
    prefix_len: int     # cycles needed to reproduce (cycle + 1)
    prop: str
    detail: str


@dataclass(frozen=True)
class FuzzResult:
    seed: int
    cycles: int
    violation: Violation | None

    @property
    def ok(self) -> bool:
        return self.violation is None


def random_inputs(rng: random.Random, params: Params, rst_n: bool = HIGH) -> ClientInputs:
    word = lambda w: Word(w, rng.getrandbits(w))
    bit = lambda: rng.random() < 0.5
    return ClientInputs(
        rst_n=rst_n,
        rd_en_c1=bit(),
        wr_en_c1=bit(),
        rdaddr_c1=word(params.addr_width),
        wraddr_c1=word(params.addr_width),
        wrdata_c1=word(params.data_width),
        request_c2=bit(),
        rd_not_write_c2=bit(),
        addr_c2=word(params.addr_width),
        datain_c2=word(params.data_width),
    )


def check_invariants(
    pre: ArbiterState, inp: ClientInputs, post: ArbiterState, drive: RamDrive
) -> list[tuple[str, str]]:
    """Return (property, detail) pairs for every invariant violated this edge."""
    bad: list[tuple[str, str]] = []
    rd, wr = post.pr_read, post.pr_write

    if rd not in _READ_STATES or wr not in _WRITE_STATES:
        bad.append(("channel-polarity", f"read={rd.value} write={wr.value}"))

    if rd is ChannelState.CLIENT2_READ and wr is ChannelState.CLIENT2_WRITE:
        bad.append(("client2-single-op", "client2 holds both channels"))

    out_of_reset = inp.rst_n and pre.pr_read is not ChannelState.RESET
    if out_of_reset:
        if inp.rd_en_c1 and rd is not ChannelState.CLIENT1_READ:
            bad.append(("client1-read-preemption", f"read={rd.value}"))
        if inp.wr_en_c1 and wr is not ChannelState.CLIENT1_WRITE:
            bad.append(("client1-write-preemption", f"write={wr.value}"))
        if rd is ChannelState.CLIENT2_READ and not (
            not inp.rd_en_c1 and inp.request_c2 and inp.rd_not_write_c2
        ):
            bad.append(("client2-read-admission", "granted without eligibility"))
        if wr is ChannelState.CLIENT2_WRITE and not (
            not inp.wr_en_c1 and inp.request_c2 and not inp.rd_not_write_c2
        ):
            bad.append(("client2-write-admission", "granted without eligibility"))
        if inp.rd_en_c1 and inp.wr_en_c1 and (
            rd is ChannelState.CLIENT2_READ or wr is ChannelState.CLIENT2_WRITE
        ):
            bad.append(("client2-blocked", "client2 granted while client1 does both"))

    if post.addr_clash:
        if not (post.temp_rd_en and post.temp_wr_en):
            bad.append(("clash-flag", "clash high without both enables"))
        if post.temp_rd_addr != post.temp_wr_addr:
            bad.append(("clash-flag", "clash high with distinct addresses"))
        if post.temp_rd_data != post.temp_wr_data:
            bad.append(
                (
                    "clash-bypass",
                    f"bypass={post.temp_rd_data} write={post.temp_wr_data}",
                )
            )

    if rd is ChannelState.RESET and (drive.rd_en or drive.wr_en):
        bad.append(("reset-quiescence", "RAM enable asserted during reset"))

    return bad


def run_fuzz(
    seed: int,
    cycles: int,
    params: Params,
    reset_storm: bool = False,
) -> FuzzResult:
    """Drive `cycles` edges of random legal stimulus and check every edge.

    The run starts with a reset release and a full init sweep so the checks
    are not vacuous; with ``reset_storm`` the reset pin is occasionally
    yanked low during the measured phase as well.
    """
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    rng = random.Random(seed)
    state: SystemState = system_new(params)

    quiet = ClientInputs.quiet(params, rst_n=LOW)
    for _ in range(2):
        state, _ = system_step(state, quiet)
    warm = ClientInputs.quiet(params, rst_n=HIGH)
    for _ in range(params.ram_depth() + 2):
        state, _ = system_step(state, warm)

    for cycle in range(cycles):
        rst_n = HIGH
        if reset_storm and rng.random() < 0.02:
            rst_n = LOW
        inp = random_inputs(rng, params, rst_n=rst_n)
        pre = state.arbiter
        state, _ = system_step(state, inp)
        arb = state.arbiter
        drive = RamDrive(
            arb.temp_rd_en, arb.temp_wr_en, arb.temp_rd_addr, arb.temp_wr_addr,
            arb.temp_wr_data,
        )
        bad = check_invariants(pre, inp, arb, drive)
        if bad:
            prop, detail = bad[0]
            return FuzzResult(seed, cycles, Violation(cycle, cycle + 1, prop, detail))
    return FuzzResult(seed, cycles, None)

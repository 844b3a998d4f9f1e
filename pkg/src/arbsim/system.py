"""Composition of the arbiter and the RAM into the full two-client system.

Evaluation order within one rising edge is fixed: the arbiter steps first,
reading the RAM's pre-edge registered output; the RAM then steps, driven by
the arbiter's freshly latched request registers.  The feedback loop crosses
a register in each direction, so the order is well defined and the whole
system is a deterministic step function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arbiter import (
    ArbiterState,
    ClientInputs,
    ClientOutputs,
    arbiter_reset,
    arbiter_step,
    resolve_outputs,
)
from .ram import RamInputs, RamState, ram_reset, ram_step
from .signals import Params, Word


@dataclass(frozen=True, slots=True)
class SystemState:
    params: Params
    arbiter: ArbiterState
    ram: RamState
    cycle: int


def system_new(params: Params) -> SystemState:
    """Both blocks at power-on, cycle counter at zero."""
    return SystemState(params, arbiter_reset(params), ram_reset(params), 0)


def _check_widths(inp: ClientInputs, params: Params) -> None:
    widths = (
        (inp.rdaddr_c1.width, params.addr_width, "rdaddr_c1"),
        (inp.wraddr_c1.width, params.addr_width, "wraddr_c1"),
        (inp.addr_c2.width, params.addr_width, "addr_c2"),
        (inp.wrdata_c1.width, params.data_width, "wrdata_c1"),
        (inp.datain_c2.width, params.data_width, "datain_c2"),
    )
    for got, want, name in widths:
        if got != want:
            raise ValueError(f"{name} width {got} does not match params width {want}")


def system_step(
    state: SystemState, inp: ClientInputs
) -> tuple[SystemState, ClientOutputs]:
    """Advance the whole system by one rising clock edge.

    1. capture the RAM's current (pre-edge) registered read data;
    2. step the arbiter with it, producing the new drive bundle;
    3. step the RAM with that drive and the raw reset pin;
    4. resolve the client outputs from the post-edge arbiter registers and
       the post-edge RAM read data.
    """
    params = state.params
    _check_widths(inp, params)
    pre_rd_data: Word = state.ram.rd_data_reg
    arb, drive = arbiter_step(state.arbiter, inp, pre_rd_data, params)
    ram_in = RamInputs(
        rst_n=inp.rst_n,
        rd_en=drive.rd_en,
        wr_en=drive.wr_en,
        rd_addr=drive.rd_addr,
        wr_addr=drive.wr_addr,
        wr_data=drive.wr_data,
    )
    ram, post_rd_data = ram_step(state.ram, ram_in, params)
    out = resolve_outputs(arb, post_rd_data, params)
    return SystemState(params, arb, ram, state.cycle + 1), out

"""Clocked behavioral model of the synchronous RAM block.

One :func:`ram_step` call models one rising clock edge.  After the reset
pin is released the block spends one edge per memory word zeroing the
array, plus one final edge to clear the internal init flag; client
accesses are ignored during that whole sweep.  Reads are registered and
return the pre-edge memory content, so a read and a write to the same
address in the same cycle yields the old word.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .signals import Level, Params, Word, word_to_index


@dataclass(frozen=True, slots=True)
class RamInputs:
    rst_n: Level
    rd_en: Level
    wr_en: Level
    rd_addr: Word
    wr_addr: Word
    wr_data: Word


@dataclass(frozen=True, slots=True)
class RamState:
    memory: tuple[Word, ...]
    count: int
    reset_done_internal: bool
    rd_data_reg: Word


def ram_reset(params: Params) -> RamState:
    """Power-on state: all-zero memory, idle sweep counter, zero read register."""
    zero = params.zero_data()
    return RamState(
        memory=(zero,) * params.ram_depth(),
        count=0,
        reset_done_internal=False,
        rd_data_reg=zero,
    )


def ram_step(state: RamState, inp: RamInputs, params: Params) -> tuple[RamState, Word]:
    """Advance the RAM by one rising clock edge.

    Returns the new state and the registered read output.  While ``rst_n``
    is low only the init flag is set; the zeroing sweep itself runs on the
    subsequent edges with ``rst_n`` high.
    """
    if not inp.rst_n:
        new = replace(state, reset_done_internal=True)
        return new, new.rd_data_reg

    depth = params.ram_depth()
    if state.reset_done_internal:
        if state.count < depth:
            memory = list(state.memory)
            memory[state.count] = params.zero_data()
            new = RamState(tuple(memory), state.count + 1, True, state.rd_data_reg)
        else:
            new = replace(state, count=0, reset_done_internal=False)
        return new, new.rd_data_reg

    memory = state.memory
    rd_data = state.rd_data_reg
    if inp.rd_en:
        rd_data = state.memory[word_to_index(inp.rd_addr)]
    if inp.wr_en:
        mem = list(memory)
        mem[word_to_index(inp.wr_addr)] = inp.wr_data
        memory = tuple(mem)
    new = RamState(memory, state.count, False, rd_data)
    return new, rd_data

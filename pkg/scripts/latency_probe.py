#!/usr/bin/env python3
"""Measure the pipeline constants: init-sweep length, read latency, ack cadence.

Prints one row per address width with the observed edge counts, so changes
to the stepping semantics show up immediately as diffs of this table.
"""

from arbsim import (
    HIGH,
    LOW,
    ClientInputs,
    Params,
    Word,
    system_new,
    system_step,
)


def quiet(params, rst_n=HIGH):
    return ClientInputs.quiet(params, rst_n=rst_n)


def sweep_edges(params):
    state = system_new(params)
    for _ in range(2):
        state, _ = system_step(state, quiet(params, rst_n=LOW))
    edges = 0
    while True:
        state, out = system_step(state, quiet(params))
        edges += 1
        if out.rst_done:
            return edges, state


def read_latency(params, state):
    import dataclasses

    addr = Word(params.addr_width, params.ram_depth() - 1)
    data = Word(params.data_width, (1 << params.data_width) - 3)
    write = dataclasses.replace(
        quiet(params), wr_en_c1=HIGH, wraddr_c1=addr, wrdata_c1=data
    )
    for _ in range(2):
        state, _ = system_step(state, write)
    read = dataclasses.replace(quiet(params), rd_en_c1=HIGH, rdaddr_c1=addr)
    for lag in range(6):
        state, out = system_step(state, read)
        if out.rddata_c1 == data:
            return lag
    return None


def ack_cadence(params, state, rd_not_write):
    import dataclasses

    req = dataclasses.replace(
        quiet(params),
        request_c2=HIGH,
        rd_not_write_c2=rd_not_write,
        addr_c2=Word(params.addr_width, 1),
        datain_c2=Word(params.data_width, 1),
    )
    acks = []
    for _ in range(12):
        state, out = system_step(state, req)
        acks.append("1" if out.ack_c2 else "0")
    return "".join(acks)


def main():
    print("addr_width  sweep_edges  rd_lag_unreg  rd_lag_reg  ack_write      ack_read")
    for width in (2, 4, 6):
        unreg = Params(width, 8)
        reg = Params(width, 8, registered_output=True)
        edges, settled = sweep_edges(unreg)
        lag_u = read_latency(unreg, settled)
        edges_r, settled_r = sweep_edges(reg)
        lag_r = read_latency(reg, settled_r)
        wr_acks = ack_cadence(unreg, settled, rd_not_write=LOW)
        rd_acks = ack_cadence(unreg, settled, rd_not_write=HIGH)
        print(
            f"{width:>10}  {edges:>11}  {lag_u:>12}  {lag_r:>10}  {wr_acks}  {rd_acks}"
        )


if __name__ == "__main__":
    main()

import pytest

from arbsim import HIGH, LOW, ClientInputs, Params, parse_word, system_new, system_step


@pytest.fixture
def params():
    return Params(addr_width=4, data_width=8)


def make_inputs(params, **kw):
    """ClientInputs with keyword overrides; word fields accept binary strings."""
    base = ClientInputs.quiet(params, rst_n=kw.pop("rst_n", HIGH))
    fields = {}
    for name, value in kw.items():
        if isinstance(value, str):
            width = params.addr_width if "addr" in name else params.data_width
            fields[name] = parse_word(value, width)
        else:
            fields[name] = value
    import dataclasses

    return dataclasses.replace(base, **fields)


def settle_reset(state, extra=0):
    """Run the post-release init sweep: reset low two edges, then the sweep."""
    params = state.params
    low = ClientInputs.quiet(params, rst_n=LOW)
    for _ in range(2):
        state, _ = system_step(state, low)
    idle = ClientInputs.quiet(params, rst_n=HIGH)
    for _ in range(params.ram_depth() + 1 + extra):
        state, _ = system_step(state, idle)
    return state


def fresh_system(params, extra=0):
    """A system that has completed its init sweep and sits idle."""
    return settle_reset(system_new(params), extra=extra)

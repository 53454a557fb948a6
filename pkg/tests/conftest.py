import pathlib

import pytest

import gradedprimes as gp

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"

Z2 = gp.GradingGroup((2,))


def trivially_graded_cyclic(n):
    gr = gp.graded_ring(gp.cyclic_ring(n), Z2)
    gm = gp.graded_module(gr, gp.ring_as_module(gr.ring))
    return gr, gm


@pytest.fixture(scope="session")
def z12():
    return trivially_graded_cyclic(12)


@pytest.fixture(scope="session")
def z8():
    return trivially_graded_cyclic(8)


@pytest.fixture(scope="session")
def z4():
    return trivially_graded_cyclic(4)


@pytest.fixture(scope="session")
def z3z2():
    """Size-9 group ring with its natural two-component grading."""
    from gradedprimes.grading import group_ring_components

    ring = gp.group_ring(gp.cyclic_ring(3), (2,))
    comps = group_ring_components(ring, Z2)
    gr = gp.graded_ring(ring, Z2, comps)
    gm = gp.graded_module(gr, gp.ring_as_module(ring), comps)
    return gr, gm


@pytest.fixture(scope="session")
def z2sq_trivial():
    """Z2 x Z2 over Z2 with the trivial grading (not a multiplication module)."""
    gr = gp.graded_ring(gp.cyclic_ring(2), Z2)
    base = gp.ring_as_module(gr.ring)
    mod = gp.product_module((base, base))
    gm = gp.graded_module(gr, mod)
    return gr, gm


def axis_graded_square(n):
    """Z_n x Z_n over Z_n with one axis per degree."""
    gr = gp.graded_ring(gp.cyclic_ring(n), Z2)
    base = gp.ring_as_module(gr.ring)
    mod = gp.product_module((base, base))
    comps = {
        (0,): tuple(sorted(a * n for a in range(n))),
        (1,): tuple(range(n)),
    }
    gm = gp.graded_module(gr, mod, comps)
    return gr, gm


@pytest.fixture(scope="session")
def z4sq_axis():
    return axis_graded_square(4)


@pytest.fixture(scope="session")
def fixture_path():
    return str(FIXTURES / "z12_n4_i4.json")


def ideal(gr, gens):
    return gp.span(gr.ring, "ideal", gens)


def submodule(gm, gens):
    return gp.span(gm.module, "submodule", gens)

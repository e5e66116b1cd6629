from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from ropesweep.arrangement import (
    WiringDiagram,
    canonicalize,
    is_canonical,
    reflect_horizontal,
    reflect_vertical,
)
from ropesweep.cutwidth import SmallGraph, directed_cutwidth_exact
from ropesweep.graph import build_dual, build_graph
from ropesweep.optimal import optimal_rope_length, replay_face_order
from ropesweep.sweep import primal_dual_sweep


@st.composite
def diagrams(draw, max_n=6):
    """A random reduced word: repeatedly swap a random adjacent pair that is still in order."""
    n = draw(st.integers(2, max_n))
    wires = list(range(n))
    word = []
    for _ in range(n * (n - 1) // 2):
        options = [p for p in range(1, n) if wires[p - 1] < wires[p]]
        p = draw(st.sampled_from(options))
        wires[p - 1], wires[p] = wires[p], wires[p - 1]
        word.append(p)
    return WiringDiagram(n, tuple(word))


def wire_crossing_orders(wd):
    seq = {c: [] for c in range(1, wd.n + 1)}
    for a, b in wd.crossing_pairs():
        seq[a].append(b)
        seq[b].append(a)
    return seq


@settings(max_examples=150, deadline=None)
@given(diagrams(7))
def test_canonical_form(wd):
    c = canonicalize(wd)
    assert is_canonical(c.swaps)
    assert canonicalize(c) == c
    # commuting swaps never change the order in which a wire meets the others
    assert wire_crossing_orders(c) == wire_crossing_orders(wd)


@settings(max_examples=100, deadline=None)
@given(diagrams(7))
def test_reflections(wd):
    assert reflect_horizontal(reflect_horizontal(wd)) == wd
    assert reflect_vertical(reflect_vertical(wd)) == wd


@settings(max_examples=60, deadline=None)
@given(diagrams(6))
def test_sweep_and_optimum(wd):
    g = build_graph(wd)
    tr = primal_dual_sweep(g, verify=True)
    assert tr.max_rope_length <= 2 * wd.n - 2
    assert len(tr.moves) == wd.n ** 2 - 1
    res = optimal_rope_length(g)
    assert res.lower_bound <= res.optimal <= tr.max_rope_length
    assert replay_face_order(g, res.witness) == res.optimal
    assert replay_face_order(g, tr.face_order) == tr.max_rope_length


@settings(max_examples=40, deadline=None)
@given(diagrams(6))
def test_duality(wd):
    g = build_graph(wd)
    d = build_dual(g)
    dg = SmallGraph(d.num_vertices, tuple(d.edge_pairs()), directed=True)
    assert directed_cutwidth_exact(dg, max_vertices=d.num_vertices).width == optimal_rope_length(g).optimal


@settings(max_examples=40, deadline=None)
@given(diagrams(6))
def test_optimum_is_invariant_under_symmetry(wd):
    base = optimal_rope_length(build_graph(wd), witness=False).optimal
    for image in (reflect_horizontal(wd), reflect_vertical(wd)):
        assert optimal_rope_length(build_graph(canonicalize(image)), witness=False).optimal == base

from __future__ import annotations

import pytest

from ropesweep.arrangement import iter_arrangements, validate
from ropesweep.graph import build_dual, build_graph, shortest_xmonotone_path


def test_two_lines():
    g = build_graph(validate(2, [1]))
    assert (g.num_vertices, len(g.edges), g.num_inner_faces) == (3, 4, 2)
    assert g.lower_hull != g.upper_hull
    assert len(g.lower_hull) == len(g.upper_hull) == 2


def test_small_golden():
    g = build_graph(validate(3, [1, 2, 1]))
    assert g.lower_hull == (3, 8)
    assert g.upper_hull == (0, 4, 6)
    assert [(f.top, f.bottom) for f in g.faces] == [
        ((0,), (1,)), ((1, 2), (3,)), ((4,), (2, 5)), ((5, 7), (8,)), ((6,), (7,)),
    ]
    js = g.to_json()
    assert js["edges"][0]["left_face"] == "s*"
    assert [v["name"] for v in js["vertices"]] == ["s", "1", "2", "3", "t"]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_structure(n):
    for wd in iter_arrangements(n):
        g = build_graph(wd)
        N = len(wd.swaps)
        assert g.num_vertices == N + 2
        assert len(g.edges) == n * n
        assert g.num_inner_faces == n * (n + 1) // 2 - 1
        # Euler's formula with s* and t* as one outer face
        assert g.num_vertices - len(g.edges) + g.num_inner_faces + 1 == 2
        assert [v for v in range(g.num_vertices) if not g.in_edges[v]] == [g.s]
        assert [v for v in range(g.num_vertices) if not g.out_edges[v]] == [g.t]
        for v in range(1, N + 1):
            assert len(g.in_edges[v]) == len(g.out_edges[v]) == 2
        for f in g.faces:
            for chain in (f.top, f.bottom):
                assert g.edges[chain[0]].tail == f.source
                assert g.edges[chain[-1]].head == f.sink
                for a, b in zip(chain, chain[1:]):
                    assert g.edges[a].head == g.edges[b].tail
            assert all(g.edges[e].right_face == f.id for e in f.top)
            assert all(g.edges[e].left_face == f.id for e in f.bottom)


def test_dual_is_bipolar_and_acyclic():
    for wd in iter_arrangements(5):
        g = build_graph(wd)
        d = build_dual(g)
        order = d.topological_order()
        assert order is not None
        assert order[0] == g.s_star and order[-1] == g.t_star
        for e in g.edges:
            assert (d.tail[e.id], d.head[e.id]) == (e.left_face, e.right_face)


def test_shortest_paths():
    g = build_graph(validate(4, [1, 2, 3, 1, 2, 1]))
    assert shortest_xmonotone_path(g, g.s, g.s) == 0
    assert shortest_xmonotone_path(g, g.t, g.s) is None
    assert shortest_xmonotone_path(g, g.s, g.t) == min(len(g.lower_hull), len(g.upper_hull))

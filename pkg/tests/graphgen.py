"""Small planar subcubic test graphs."""

from __future__ import annotations

import random

import networkx as nx

from ropesweep.cutwidth import SmallGraph


def _small(g: nx.Graph) -> SmallGraph:
    idx = {v: i for i, v in enumerate(sorted(g.nodes))}
    return SmallGraph(len(idx), tuple(sorted((idx[a], idx[b]) for a, b in g.edges)))


def atlas_graphs(max_nodes: int = 7) -> list[SmallGraph]:
    """Every connected planar graph with max degree 3 on 3..max_nodes vertices, up to isomorphism."""
    out = []
    for g in nx.graph_atlas_g():
        if not 3 <= g.number_of_nodes() <= max_nodes:
            continue
        if not nx.is_connected(g) or max(d for _, d in g.degree) > 3:
            continue
        if nx.check_planarity(g)[0]:
            out.append(_small(g))
    return out


def random_subcubic_planar(rng: random.Random, n: int) -> SmallGraph:
    """Random spanning tree of max degree 3, then random extra edges kept while planar."""
    deg = [0] * n
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for v in range(1, n):
        u = rng.choice([u for u in range(v) if deg[u] < 3])
        g.add_edge(u, v)
        deg[u] += 1
        deg[v] += 1
    cand = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(cand)
    for a, b in cand[: rng.randint(0, len(cand))]:
        if g.has_edge(a, b) or deg[a] >= 3 or deg[b] >= 3:
            continue
        g.add_edge(a, b)
        if nx.check_planarity(g)[0]:
            deg[a] += 1
            deg[b] += 1
        else:
            g.remove_edge(a, b)
    return _small(g)


def random_instances(count: int = 500, seed: int = 20240601) -> list[SmallGraph]:
    rng = random.Random(seed)
    return [random_subcubic_planar(rng, rng.randint(8, 10)) for _ in range(count)]


def improvable_example() -> SmallGraph:
    """Four-vertex example with cutwidth 2; v1..v4 are vertices 0..3."""
    return SmallGraph(4, ((0, 1), (0, 3), (1, 3), (2, 3)))

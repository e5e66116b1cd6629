"""The bipolar arrangement graph and its dual.

Vertices of the primal graph are ``s`` (id 0), one vertex per crossing in
swap order (ids ``1..N``) and ``t`` (id ``N + 1``).  Edges run left to right
along the pseudolines.  Inner faces get ids ``0..m-1``; the two outer faces
are ``s_star = m`` (above the upper hull) and ``t_star = m + 1`` (below the
lower hull).  Dual edges share ids with the primal edges they cross and point
from the face above (left of) an edge to the face below (right of) it.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .arrangement import WiringDiagram


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    index: int  # label of the supporting pseudoline
    left_face: int  # face above the edge
    right_face: int  # face below the edge
    track: int


@dataclass(frozen=True)
class Face:
    id: int
    source: int
    sink: int
    strip: int  # faces live between tracks ``strip`` and ``strip + 1``
    top: tuple[int, ...]  # edge ids, left to right
    bottom: tuple[int, ...]


@dataclass
class ArrangementGraph:
    wd: WiringDiagram
    edges: list[Edge]
    faces: list[Face]
    in_edges: list[tuple[int, ...]]  # per vertex, top to bottom
    out_edges: list[tuple[int, ...]]
    crossing_pair: list[tuple[int, int] | None]  # per vertex; None for s, t
    lower_hull: tuple[int, ...] = field(default=())
    upper_hull: tuple[int, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.wd.n

    @property
    def s(self) -> int:
        return 0

    @property
    def t(self) -> int:
        return len(self.in_edges) - 1

    @property
    def num_vertices(self) -> int:
        return len(self.in_edges)

    @property
    def num_inner_faces(self) -> int:
        return len(self.faces)

    @property
    def s_star(self) -> int:
        return len(self.faces)

    @property
    def t_star(self) -> int:
        return len(self.faces) + 1

    def face_name(self, f: int) -> str:
        if f == self.s_star:
            return "s*"
        if f == self.t_star:
            return "t*"
        return str(f)

    def vertex_name(self, v: int) -> str:
        if v == self.s:
            return "s"
        if v == self.t:
            return "t"
        return str(v)

    def is_top_incoming(self, e: int) -> bool:
        return self.in_edges[self.edges[e].head][0] == e

    def is_bottom_outgoing(self, e: int) -> bool:
        return self.out_edges[self.edges[e].tail][-1] == e

    def rope_vertices(self, rope: tuple[int, ...] | list[int]) -> list[int]:
        """Vertex sequence of an edge path."""
        if not rope:
            return []
        return [self.edges[rope[0]].tail] + [self.edges[e].head for e in rope]

    def to_json(self) -> dict:
        """Debug dump with stable field names."""
        return {
            "n": self.n,
            "swaps": list(self.wd.swaps),
            "vertices": [
                {
                    "id": v,
                    "name": self.vertex_name(v),
                    "pair": None if p is None else list(p),
                    "in": list(self.in_edges[v]),
                    "out": list(self.out_edges[v]),
                }
                for v, p in enumerate(self.crossing_pair)
            ],
            "edges": [
                {
                    "id": e.id,
                    "tail": e.tail,
                    "head": e.head,
                    "index": e.index,
                    "left_face": self.face_name(e.left_face),
                    "right_face": self.face_name(e.right_face),
                }
                for e in self.edges
            ],
            "faces": [
                {
                    "id": f.id,
                    "source": f.source,
                    "sink": f.sink,
                    "bottom_chain": list(f.bottom),
                    "top_chain": list(f.top),
                }
                for f in self.faces
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def build_graph(wd: WiringDiagram) -> ArrangementGraph:
    """Simulate the wiring diagram and record vertices, edges and faces."""
    n = wd.n
    N = len(wd.swaps)
    t = N + 1
    m = n * (n + 1) // 2 - 1
    s_star, t_star = m, m + 1

    wires = list(range(1, n + 1))  # wires[track - 1]
    start = [0] * (n + 1)  # start[track]: tail of the current edge on that track
    cur_face = [0] * n  # cur_face[strip] for strip 1..n-1
    face_src: list[int] = []
    face_strip: list[int] = []
    for q in range(1, n):
        cur_face[q] = len(face_src)
        face_src.append(0)
        face_strip.append(q)
    face_sink = [0] * m

    edges: list[Edge] = []
    in_edges: list[tuple[int, ...]] = [()] * (N + 2)
    out_by_vertex: list[list[tuple[int, int]]] = [[] for _ in range(N + 2)]
    pair: list[tuple[int, int] | None] = [None] * (N + 2)

    def face_above(track: int) -> int:
        return s_star if track == 1 else cur_face[track - 1]

    def face_below(track: int) -> int:
        return t_star if track == n else cur_face[track]

    def add_edge(track: int, head: int) -> int:
        eid = len(edges)
        tail = start[track]
        edges.append(
            Edge(eid, tail, head, wires[track - 1], face_above(track), face_below(track), track)
        )
        out_by_vertex[tail].append((track, eid))
        return eid

    for k, p in enumerate(wd.swaps):
        v = k + 1
        pair[v] = (wires[p - 1], wires[p])
        top = add_edge(p, v)
        bottom = add_edge(p + 1, v)
        in_edges[v] = (top, bottom)
        face_sink[cur_face[p]] = v
        cur_face[p] = len(face_src)
        face_src.append(v)
        face_strip.append(p)
        wires[p - 1], wires[p] = wires[p], wires[p - 1]
        start[p] = start[p + 1] = v

    in_edges[t] = tuple(add_edge(track, t) for track in range(1, n + 1))
    for q in range(1, n):
        face_sink[cur_face[q]] = t
    out_edges = [tuple(e for _, e in sorted(lst)) for lst in out_by_vertex]

    tops: list[list[int]] = [[] for _ in range(m)]
    bottoms: list[list[int]] = [[] for _ in range(m)]
    upper, lower = [], []
    for e in edges:
        if e.right_face == t_star:
            lower.append(e.id)
        else:
            tops[e.right_face].append(e.id)
        if e.left_face == s_star:
            upper.append(e.id)
        else:
            bottoms[e.left_face].append(e.id)
    # Creation order is by head, which is left-to-right along each chain.
    faces = [
        Face(f, face_src[f], face_sink[f], face_strip[f], tuple(tops[f]), tuple(bottoms[f]))
        for f in range(m)
    ]
    return ArrangementGraph(
        wd=wd,
        edges=edges,
        faces=faces,
        in_edges=in_edges,
        out_edges=out_edges,
        crossing_pair=pair,
        lower_hull=tuple(lower),
        upper_hull=tuple(upper),
    )


@dataclass
class DualGraph:
    """One vertex per inner face plus ``s*`` and ``t*``; dual edge ids equal primal edge ids."""

    num_vertices: int
    s_star: int
    t_star: int
    tail: list[int]  # per dual edge
    head: list[int]
    out_edges: list[tuple[int, ...]]
    in_edges: list[tuple[int, ...]]

    @property
    def num_edges(self) -> int:
        return len(self.tail)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.tail, self.head))

    def topological_order(self) -> list[int] | None:
        """Kahn's algorithm; ``None`` if a cycle exists."""
        indeg = [len(x) for x in self.in_edges]
        queue = deque(v for v in range(self.num_vertices) if indeg[v] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for e in self.out_edges[v]:
                w = self.head[e]
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return order if len(order) == self.num_vertices else None


def build_dual(g: ArrangementGraph) -> DualGraph:
    nv = g.num_inner_faces + 2
    tail = [e.left_face for e in g.edges]
    head = [e.right_face for e in g.edges]
    outs: list[list[int]] = [[] for _ in range(nv)]
    ins: list[list[int]] = [[] for _ in range(nv)]
    for e in g.edges:
        outs[e.left_face].append(e.id)
        ins[e.right_face].append(e.id)
    return DualGraph(
        num_vertices=nv,
        s_star=g.s_star,
        t_star=g.t_star,
        tail=tail,
        head=head,
        out_edges=[tuple(x) for x in outs],
        in_edges=[tuple(x) for x in ins],
    )


def hulls(g: ArrangementGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(lower hull, upper hull) as edge sequences from s to t."""
    return g.lower_hull, g.upper_hull


def shortest_xmonotone_path(g: ArrangementGraph, u: int, v: int) -> int | None:
    """Fewest edges on a directed ``u -> v`` path, or ``None`` if there is none."""
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for e in g.out_edges[x]:
            y = g.edges[e].head
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return None

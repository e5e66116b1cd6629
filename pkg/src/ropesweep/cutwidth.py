"""Exact cutwidth and directed cutwidth of small graphs, and the reduction between them.

The reduction replaces every edge ``e = (v, w)`` of an undirected graph by a
source ``s_e`` and a sink ``t_e`` joined to both endpoints.  In the reduced
graph the original vertices keep their ids ``0..n-1``; edge ``k`` of the
input contributes ``s_e = n + 2k`` and ``t_e = n + 2k + 1``.
"""

from __future__ import annotations

import time
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DegenerateInput, NotAcyclic, ParseError, ResourceLimit, TooLarge

DEFAULT_MAX_VERTICES = 16
DEFAULT_MAX_DIRECTED_VERTICES = 64


@dataclass(frozen=True)
class SmallGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def topological_order(self) -> list[int] | None:
        indeg = [0] * self.n
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            succ[a].append(b)
            indeg[b] += 1
        queue = deque(v for v in range(self.n) if indeg[v] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return order if len(order) == self.n else None

    def dumps(self) -> str:
        lines = [f"{'directed' if self.directed else 'undirected'} {self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "SmallGraph":
        rows = [
            (i, ln.split()) for i, ln in enumerate(text.splitlines(), 1)
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
        if not rows:
            raise ParseError("empty graph file")
        line, head = rows[0]
        if len(head) != 2 or head[0] not in ("directed", "undirected"):
            raise ParseError("expected 'directed|undirected <vertex count>'", line)
        try:
            n = int(head[1])
            edges = []
            for line, parts in rows[1:]:
                if len(parts) != 2:
                    raise ParseError("expected 'u v'", line)
                edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(str(exc), line) from exc
        try:
            return cls(n, tuple(edges), head[0] == "directed")
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class LinearOrder:
    order: tuple[int, ...]
    cuts: tuple[int, ...]  # cuts[i]: edges between order[:i+1] and the rest

    @property
    def width(self) -> int:
        return max(self.cuts, default=0)

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def __str__(self) -> str:
        return " ".join(map(str, self.order)) + "\n" + " ".join(map(str, self.cuts))


def cut_sizes(g: SmallGraph, order: Sequence[int]) -> tuple[int, ...]:
    """Size of the cut after each position of ``order`` (a permutation of the vertices)."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    diff = [0] * (g.n + 1)
    for a, b in g.edges:
        lo, hi = sorted((pos[a], pos[b]))
        diff[lo] += 1
        diff[hi] -= 1
    cuts, running = [], 0
    for i in range(g.n):
        running += diff[i]
        cuts.append(running)
    return tuple(cuts)


def make_order(g: SmallGraph, order: Sequence[int]) -> LinearOrder:
    if g.directed:
        pos = {v: i for i, v in enumerate(order)}
        for a, b in g.edges:
            if pos[a] > pos[b]:
                raise ValueError(f"edge {a}->{b} violates the order")
    return LinearOrder(tuple(order), cut_sizes(g, order))


def cutwidth_exact(g: SmallGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> LinearOrder:
    """Minimum-width vertex order by dynamic programming over vertex subsets."""
    n = g.n
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the subset-DP bound {max_vertices}")
    if n == 0:
        return LinearOrder((), ())
    deg = g.degrees()
    mult: list[dict[int, int]] = [dict() for _ in range(n)]
    for a, b in g.edges:
        mult[a][b] = mult[a].get(b, 0) + 1
        mult[b][a] = mult[b].get(a, 0) + 1
    nbrs = [list(m.items()) for m in mult]

    size = 1 << n
    cut = [0] * size
    best = [0] * size
    last = [-1] * size
    inf = 1 << 30
    for S in range(1, size):
        low = S & -S
        v = low.bit_length() - 1
        prev = S ^ low
        inside = sum(c for u, c in nbrs[v] if prev >> u & 1)
        cut[S] = cut[prev] + deg[v] - 2 * inside
        b, arg = inf, -1
        rest = S
        while rest:
            lw = rest & -rest
            rest ^= lw
            val = best[S ^ lw]
            if val < b:
                b, arg = val, lw.bit_length() - 1
        best[S] = max(b, cut[S])
        last[S] = arg
    order = []
    S = size - 1
    while S:
        v = last[S]
        order.append(v)
        S ^= 1 << v
    order.reverse()
    result = make_order(g, order)
    assert result.width == best[size - 1]
    return result


def directed_cutwidth_exact(
    g: SmallGraph,
    max_vertices: int = DEFAULT_MAX_DIRECTED_VERTICES,
    *,
    reduce: bool = True,
    budget_states: int | None = 5_000_000,
    budget_seconds: float | None = None,
) -> LinearOrder:
    """Minimum-width topological order, searching down-sets of the precedence order.

    Placing a vertex whose predecessors are all placed changes the cut by
    ``outdeg - indeg``.  With ``reduce=True`` vertices for which this is not
    positive are placed as soon as they become available, which cannot hurt
    and shrinks the search to the remaining choices.
    """
    n = g.n
    if not g.directed:
        raise ValueError("directed cutwidth needs a directed graph")
    if g.topological_order() is None:
        raise NotAcyclic("graph has a directed cycle")
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the bound {max_vertices}")
    if n == 0:
        return LinearOrder((), ())
    pred = [0] * n
    succs: list[list[int]] = [[] for _ in range(n)]
    delta = [0] * n
    for a, b in g.edges:
        pred[b] |= 1 << a
        succs[a].append(b)
        delta[a] += 1
        delta[b] -= 1
    full = (1 << n) - 1
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds

    def place(ideal: int, cut: int, v: int, width: int, added: list[int]) -> tuple[int, int, int]:
        # Place v, then (optionally) every newly available non-increasing vertex.
        ideal |= 1 << v
        cut += delta[v]
        width = max(width, cut)
        added.append(v)
        if reduce:
            stack = [w for w in succs[v] if pred[w] & ~ideal == 0 and not ideal >> w & 1]
            while stack:
                w = stack.pop()
                if ideal >> w & 1 or delta[w] > 0:
                    continue
                ideal |= 1 << w
                cut += delta[w]
                added.append(w)
                stack.extend(x for x in succs[w] if pred[x] & ~ideal == 0 and not ideal >> x & 1)
        return ideal, cut, width

    start_added: list[int] = []
    ideal, cut = 0, 0
    if reduce:
        for v in range(n):
            if pred[v] == 0 and delta[v] <= 0 and not ideal >> v & 1:
                ideal, cut, _ = place(ideal, cut, v, 0, start_added)
    parent: dict[int, tuple[int, tuple[int, ...]]] = {}
    # Bucketed bottleneck search: level = width budget currently explored.
    level = 0
    buckets: dict[int, list[tuple[int, int, int, tuple[int, ...]]]] = {
        0: [(ideal, cut, -1, tuple(start_added))]
    }
    seen: set[int] = set()
    expanded = 0
    while True:
        stack = buckets.pop(level, [])
        while stack:
            ideal, cut, par, added = stack.pop()
            if ideal in seen:
                continue
            seen.add(ideal)
            parent[ideal] = (par, added)
            if ideal == full:
                order: list[int] = []
                x = ideal
                while x != -1:
                    p, seq = parent[x]
                    order[:0] = seq
                    x = p
                result = make_order(g, order)
                if result.width != level:  # pragma: no cover - internal check
                    raise AssertionError(f"witness width {result.width} != {level}")
                return result
            expanded += 1
            if budget_states is not None and expanded > budget_states:
                raise ResourceLimit(f"directed cutwidth search exceeded {budget_states} states")
            if deadline is not None and expanded & 1023 == 0 and time.monotonic() > deadline:
                raise ResourceLimit("directed cutwidth search exceeded its time budget")
            for v in range(n):
                if ideal >> v & 1 or pred[v] & ~ideal:
                    continue
                seq: list[int] = []
                ni, nc, nw = place(ideal, cut, v, level, seq)
                if ni in seen:
                    continue
                entry = (ni, nc, ideal, tuple(seq))
                if nw <= level:
                    stack.append(entry)
                else:
                    buckets.setdefault(nw, []).append(entry)
        level = min(buckets)


# -- reduction -----------------------------------------------------------------


def source_of(g: SmallGraph, k: int) -> int:
    return g.n + 2 * k


def sink_of(g: SmallGraph, k: int) -> int:
    return g.n + 2 * k + 1


def check_nondegenerate(g: SmallGraph) -> None:
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] == 0:
            raise DegenerateInput(f"vertex {v} is isolated", v)
    for a, b in g.edges:
        if deg[a] == 1 and deg[b] == 1:
            raise DegenerateInput(f"edge ({a}, {b}) is an isolated edge", (a, b))


def reduce_to_dcw(g: SmallGraph) -> SmallGraph:
    """Directed graph whose directed cutwidth is ``2 cw(g) + 2``."""
    if g.directed:
        raise ValueError("reduction expects an undirected graph")
    check_nondegenerate(g)
    edges = []
    for k, (v, w) in enumerate(g.edges):
        s, t = source_of(g, k), sink_of(g, k)
        edges += [(s, v), (s, w), (v, t), (w, t)]
    return SmallGraph(g.n + 2 * len(g.edges), tuple(edges), directed=True)


def side_sets(g: SmallGraph, order: Sequence[int]) -> list[tuple[list[int], list[int], list[int]]]:
    """Per position ``i``: edge ids to the left (L), to the right (R) and bypassing (B)."""
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for i, v in enumerate(order):
        left, right, bypass = [], [], []
        for k, (a, b) in enumerate(g.edges):
            pa, pb = sorted((pos[a], pos[b]))
            if v in (a, b):
                other = pb if pa == i else pa
                (left if other < i else right).append(k)
            elif pa < i < pb:
                bypass.append(k)
        out.append((left, right, bypass))
    return out


def order_g_to_h(g: SmallGraph, order: Sequence[int]) -> LinearOrder:
    """Topological order of the reduced graph: per vertex, sources of R, the vertex, sinks of L."""
    h = reduce_to_dcw(g)
    seq: list[int] = []
    for v, (left, right, _) in zip(order, side_sets(g, order)):
        seq += [source_of(g, k) for k in right]
        seq.append(v)
        seq += [sink_of(g, k) for k in left]
    return make_order(h, seq)


def improvable_pairs(g: SmallGraph, order: Sequence[int]) -> list[int]:
    """Positions ``i`` such that ``(order[i], order[i+1])`` is improvable."""
    sides = side_sets(g, order)
    return [i for i in range(len(order) - 1) if not sides[i][0] and not sides[i + 1][1]]


@dataclass(frozen=True)
class Exchange:
    position: int
    cut_before: int
    cut_after: int


def order_h_to_g(
    g: SmallGraph, h_order: Sequence[int], log: list[Exchange] | None = None
) -> LinearOrder:
    """Induced order of the original vertices, then leftmost improvable pairs exchanged."""
    order = [v for v in h_order if v < g.n]
    if sorted(order) != list(range(g.n)):
        raise ValueError("order does not contain every original vertex")
    while True:
        pairs = improvable_pairs(g, order)
        if not pairs:
            return make_order(g, order)
        i = pairs[0]
        before = cut_sizes(g, order)
        order[i], order[i + 1] = order[i + 1], order[i]
        after = cut_sizes(g, order)
        if log is not None:
            log.append(Exchange(i, before[i], after[i]))

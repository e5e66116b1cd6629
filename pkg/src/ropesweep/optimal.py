"""Exact minimum rope-length over all sweeps.

A sweep is determined by the order in which it flips faces, and the faces
flipped so far always form a down-set ("ideal") of the precedence order in
which the face below an edge must be flipped before the face above it.  The
rope of an ideal consists of the edges with exactly one side in
``ideal + {t*}``, and flipping a face changes the rope length by
``|top chain| - |bottom chain|`` independently of the ideal.

Two solvers live here:

* :func:`optimal_rope_length` searches the ideal lattice with bitsets.  Faces
  whose flip does not lengthen the rope are flipped eagerly, and a bucketed
  bottleneck search expands every remaining ideal at most once.
* :func:`rope_flip_search` is a plain bottleneck best-first search over
  explicit ropes, kept deliberately naive as an oracle.
"""

from __future__ import annotations

import heapq
import sys
import time
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import NotADownSet, ResourceLimit
from .graph import ArrangementGraph
from .sweep import Rope, flip_face, primal_dual_sweep

DEFAULT_BUDGET_IDEALS = 5_000_000


@dataclass(frozen=True)
class FacePoset:
    """Bitset view of the faces: requirements and length deltas."""

    m: int
    base: int  # lower hull length
    delta: tuple[int, ...]
    requires: tuple[int, ...]  # faces that must be flipped first, as bit masks

    @classmethod
    def of(cls, g: ArrangementGraph) -> "FacePoset":
        req = []
        for f in g.faces:
            mask = 0
            for e in f.bottom:
                r = g.edges[e].right_face
                if r != g.t_star:
                    mask |= 1 << r
            req.append(mask)
        delta = tuple(len(f.top) - len(f.bottom) for f in g.faces)
        return cls(len(g.faces), len(g.lower_hull), delta, tuple(req))

    @property
    def full(self) -> int:
        return (1 << self.m) - 1

    def is_down_set(self, ideal: int) -> bool:
        for f in range(self.m):
            if ideal >> f & 1 and self.requires[f] & ~ideal:
                return False
        return True

    def boundary(self, ideal: int) -> int:
        total = self.base
        for f in range(self.m):
            if ideal >> f & 1:
                total += self.delta[f]
        return total


def as_mask(faces: Iterable[int] | int) -> int:
    if isinstance(faces, int):
        return faces
    mask = 0
    for f in faces:
        mask |= 1 << f
    return mask


def rope_of_ideal(g: ArrangementGraph, ideal: Iterable[int] | int) -> Rope:
    """The rope bounding a down-set of flipped faces."""
    mask = as_mask(ideal)
    poset = FacePoset.of(g)
    if not poset.is_down_set(mask):
        raise NotADownSet("face set is not closed under the flip precedence")
    swept = mask | (1 << g.t_star)
    by_tail = {}
    for e in g.edges:
        if swept >> e.right_face & 1 and not swept >> e.left_face & 1:
            by_tail[e.tail] = e.id
    rope = []
    v = g.s
    while v != g.t:
        e = by_tail[v]
        rope.append(e)
        v = g.edges[e].head
    if len(rope) != len(by_tail):
        raise NotADownSet("boundary edges do not form a single rope")
    return tuple(rope)


@dataclass(frozen=True)
class OptimalResult:
    optimal: int
    witness: tuple[int, ...]
    ideals_explored: int
    lower_bound: int
    primal_dual: int


class _IdealSearch:
    """Search over ideals closed under eager non-lengthening flips.

    Flipping a face whose top chain is no longer than its bottom chain as soon
    as it becomes available never increases the best achievable width: the
    same flip can be moved to the front of any continuation without making a
    later rope longer.  So only closed ideals need to be stored.
    """

    def __init__(self, poset: FacePoset, budget_ideals: int | None, deadline: float | None):
        self.p = poset
        self.budget = budget_ideals
        self.deadline = deadline
        self.expanded = 0
        m, req = poset.m, poset.requires
        self.deps: list[list[int]] = [[] for _ in range(m)]
        for f in range(m):
            rest = req[f]
            while rest:
                low = rest & -rest
                self.deps[low.bit_length() - 1].append(f)
                rest ^= low

    def _tick(self) -> None:
        self.expanded += 1
        if self.budget is not None and self.expanded > self.budget:
            raise ResourceLimit(f"optimal search exceeded {self.budget} ideals")
        if self.deadline is not None and self.expanded & 1023 == 0:
            if time.monotonic() > self.deadline:
                raise ResourceLimit("optimal search exceeded its time budget")

    def frontier(self, ideal: int) -> int:
        req = self.p.requires
        out = 0
        for f in range(self.p.m):
            if not ideal >> f & 1 and req[f] & ~ideal == 0:
                out |= 1 << f
        return out

    def close(self, ideal: int, frontier: int, length: int, new: list[int]) -> tuple[int, int, int]:
        """Absorb non-lengthening faces among ``new`` (just-addable faces), cascading."""
        delta, req, deps = self.p.delta, self.p.requires, self.deps
        while new:
            f = new.pop()
            if delta[f] > 0:
                continue
            bit = 1 << f
            if ideal & bit:
                continue
            ideal |= bit
            frontier &= ~bit
            length += delta[f]
            for d in deps[f]:
                if req[d] & ~ideal == 0:
                    frontier |= 1 << d
                    new.append(d)
        return ideal, frontier, length

    def add(self, ideal: int, frontier: int, length: int, f: int) -> tuple[int, int, int]:
        """Flip ``f`` (which must be addable), then close."""
        req = self.p.requires
        low = 1 << f
        ni = ideal | low
        nf = frontier & ~low
        new = []
        for d in self.deps[f]:
            if req[d] & ~ni == 0:
                nf |= 1 << d
                new.append(d)
        return self.close(ni, nf, length + self.p.delta[f], new)

    def start(self) -> tuple[int, int, int]:
        fr = self.frontier(0)
        return self.close(0, fr, self.p.base, [f for f in range(self.p.m) if fr >> f & 1])

    def value(self) -> int:
        """Optimal width by a bucketed bottleneck search.

        Level ``w`` explores every closed ideal reachable without a rope longer
        than ``w``; moves that would exceed it wait in the bucket of their rope
        length.  Each ideal is expanded once over all levels.
        """
        full, delta = self.p.full, self.p.delta
        level = self.p.base
        buckets: dict[int, list[tuple[int, int, int]]] = {level: [self.start()]}
        seen: set[int] = set()
        while True:
            stack = buckets.pop(level, [])
            while stack:
                ideal, frontier, length = stack.pop()
                if ideal == full:
                    return level
                if ideal in seen:
                    continue
                seen.add(ideal)
                self._tick()
                rest = frontier
                while rest:
                    low = rest & -rest
                    rest ^= low
                    f = low.bit_length() - 1
                    nl = length + delta[f]
                    state = self.add(ideal, frontier, length, f)
                    if state[0] in seen:
                        continue
                    if nl <= level:
                        stack.append(state)
                    else:
                        buckets.setdefault(nl, []).append(state)
            if not buckets:  # pragma: no cover - the full ideal is always reachable
                raise AssertionError("search exhausted without reaching the upper hull")
            level = min(buckets)

    def feasible(self, state: tuple[int, int, int], w: int, failed: set[int]) -> bool:
        """Can the sweep finish from a closed ``state`` without exceeding ``w``?"""
        ideal, frontier, length = state
        if ideal == self.p.full:
            return True
        if ideal in failed:
            return False
        self._tick()
        delta = self.p.delta
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            f = low.bit_length() - 1
            if length + delta[f] <= w and self.feasible(self.add(ideal, frontier, length, f), w, failed):
                return True
        failed.add(ideal)
        return False

    def witness(self, w: int) -> tuple[int, ...]:
        """Lexicographically least face order of width at most ``w``."""
        p = self.p
        failed: set[int] = set()
        ideal, length, order = 0, p.base, []
        while ideal != p.full:
            frontier = self.frontier(ideal)
            for f in range(p.m):
                if not frontier >> f & 1:
                    continue
                nl = length + p.delta[f]
                if nl > w:
                    continue
                ni = ideal | 1 << f
                nf = self.frontier(ni)
                closed = self.close(ni, nf, nl, [d for d in range(p.m) if nf >> d & 1])
                if self.feasible(closed, w, failed):
                    ideal, length = ni, nl
                    order.append(f)
                    break
            else:  # pragma: no cover - value() guarantees a feasible order
                raise AssertionError("witness reconstruction failed")
        return tuple(order)


def optimal_rope_length(
    g: ArrangementGraph,
    *,
    budget_ideals: int | None = DEFAULT_BUDGET_IDEALS,
    budget_seconds: float | None = None,
    witness: bool = True,
) -> OptimalResult:
    """Minimum over all sweeps of the maximum rope length.

    The witness is the lexicographically least face order attaining the
    optimum; pass ``witness=False`` to skip its reconstruction.
    """
    poset = FacePoset.of(g)
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    search = _IdealSearch(poset, budget_ideals, deadline)
    lb = max(len(g.lower_hull), len(g.upper_hull))
    pd = primal_dual_sweep(g).max_rope_length
    w = search.value()
    order: tuple[int, ...] = ()
    if witness:
        if sys.getrecursionlimit() < 4 * poset.m + 200:
            sys.setrecursionlimit(4 * poset.m + 200)
        order = search.witness(w)
    return OptimalResult(w, order, search.expanded, lb, pd)


def replay_face_order(g: ArrangementGraph, order: Iterable[int]) -> int:
    """Flip faces in ``order`` from the lower hull; return the maximum rope length."""
    rope = g.lower_hull
    best = len(rope)
    for f in order:
        rope = flip_face(g, rope, f)
        best = max(best, len(rope))
    if rope != g.upper_hull:
        raise ValueError("face order does not end at the upper hull")
    return best


def rope_flip_search(g: ArrangementGraph, *, max_nodes: int | None = 2_000_000) -> int:
    """Bottleneck best-first search in the graph of ropes connected by face flips."""
    start, goal = g.lower_hull, g.upper_hull
    first_bottom = {f.bottom[0]: f.id for f in g.faces}
    best = {start: len(start)}
    heap = [(len(start), start)]
    done = set()
    while heap:
        cost, rope = heapq.heappop(heap)
        if rope in done:
            continue
        if rope == goal:
            return cost
        done.add(rope)
        if max_nodes is not None and len(done) > max_nodes:
            raise ResourceLimit(f"rope search exceeded {max_nodes} ropes")
        for e in rope:
            f = first_bottom.get(e)
            if f is None:
                continue
            bottom = g.faces[f].bottom
            i = rope.index(e)
            if rope[i : i + len(bottom)] != bottom:
                continue
            nxt = rope[:i] + g.faces[f].top + rope[i + len(bottom) :]
            c = max(cost, len(nxt))
            if c < best.get(nxt, 1 << 30):
                best[nxt] = c
                heapq.heappush(heap, (c, nxt))
    raise AssertionError("upper hull unreachable")  # pragma: no cover

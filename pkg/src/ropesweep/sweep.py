"""Ropes, dual ropes, flips and the coordinated primal-dual sweep.

A rope is stored as its edge sequence from ``s`` to ``t``.  A dual rope is
stored as the sequence of primal edges it crosses, i.e. its dual edges from
``s*`` to ``t*``.  The sweep keeps both explicitly so that the hugging
conditions are an independent check rather than true by construction.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .errors import (
    BottomChainNotOnRope,
    InvariantViolation,
    MultipleCrossings,
    NoCrossing,
    NotInnerFace,
    PreconditionNotMet,
    TerminalVertex,
)
from .graph import ArrangementGraph

Rope = tuple[int, ...]
DualRope = tuple[int, ...]


def _find_run(seq: Sequence[int], run: Sequence[int]) -> int:
    """Start index of ``run`` as a contiguous block of ``seq``, or -1."""
    if not run:
        return -1
    try:
        i = seq.index(run[0])
    except ValueError:
        return -1
    if tuple(seq[i : i + len(run)]) != tuple(run):
        return -1
    return i


def flip_face(g: ArrangementGraph, rope: Sequence[int], face: int) -> Rope:
    """Replace the bottom chain of ``face`` on the rope by its top chain."""
    if not 0 <= face < g.num_inner_faces:
        raise NotInnerFace(f"{g.face_name(face)} is not an inner face")
    f = g.faces[face]
    i = _find_run(rope, f.bottom)
    if i < 0:
        raise BottomChainNotOnRope(f"bottom chain of face {face} is not on the rope")
    return tuple(rope[:i]) + f.top + tuple(rope[i + len(f.bottom) :])


def flip_vertex(g: ArrangementGraph, dual_rope: Sequence[int], v: int) -> DualRope:
    """Move the dual rope across vertex ``v``: incoming edges out, outgoing edges in."""
    if v in (g.s, g.t):
        raise TerminalVertex(f"cannot flip across {g.vertex_name(v)}")
    ins = g.in_edges[v]
    i = _find_run(dual_rope, ins)
    if i < 0:
        raise PreconditionNotMet(f"dual rope does not cross all incoming edges of vertex {v}")
    return tuple(dual_rope[:i]) + g.out_edges[v] + tuple(dual_rope[i + len(ins) :])


def dual_rope_faces(g: ArrangementGraph, dual_rope: Sequence[int]) -> list[int]:
    return [g.s_star] + [g.edges[e].right_face for e in dual_rope]


def is_rope(g: ArrangementGraph, rope: Sequence[int]) -> bool:
    if not rope or g.edges[rope[0]].tail != g.s or g.edges[rope[-1]].head != g.t:
        return False
    return all(g.edges[a].head == g.edges[b].tail for a, b in zip(rope, rope[1:]))


def is_dual_rope(g: ArrangementGraph, dual_rope: Sequence[int]) -> bool:
    if not dual_rope:
        return False
    e = g.edges
    if e[dual_rope[0]].left_face != g.s_star or e[dual_rope[-1]].right_face != g.t_star:
        return False
    return all(e[a].right_face == e[b].left_face for a, b in zip(dual_rope, dual_rope[1:]))


def crossing(g: ArrangementGraph, rope: Sequence[int], dual_rope: Sequence[int]) -> tuple[int, int]:
    """Positions ``(i, j)`` of the unique shared edge in the rope and the dual rope."""
    dual_pos = {e: j for j, e in enumerate(dual_rope)}
    hits = [(i, dual_pos[e]) for i, e in enumerate(rope) if e in dual_pos]
    if not hits:
        raise NoCrossing("rope and dual rope do not cross")
    if len(hits) > 1:
        raise MultipleCrossings(f"rope and dual rope cross {len(hits)} times")
    return hits[0]


def check_hugging(
    g: ArrangementGraph, rope: Sequence[int], dual_rope: Sequence[int]
) -> list[tuple[int, int]]:
    """Violated ``(condition, edge id)`` pairs of the four hugging conditions.

    The active edge belongs to both halves of the rope and of the dual rope.
    """
    i, j = crossing(g, rope, dual_rope)
    faces = set(dual_rope_faces(g, dual_rope))
    verts = set(g.rope_vertices(rope))
    edges = g.edges
    out = []
    for e in rope[: i + 1]:
        if edges[e].left_face not in faces:
            out.append((1, e))
    for e in rope[i:]:
        if edges[e].right_face not in faces:
            out.append((2, e))
    # Walking down a dual edge, the tail of the primal edge is on its right.
    for e in dual_rope[: j + 1]:
        if edges[e].tail not in verts:
            out.append((3, e))
    for e in dual_rope[j:]:
        if edges[e].head not in verts:
            out.append((4, e))
    return out


def check_claims(g: ArrangementGraph, rope: Sequence[int], active_pos: int) -> list[str]:
    """Structural properties every sweep state must have; returns failure messages."""
    out = []
    for e in rope[:active_pos]:
        if not g.is_top_incoming(e):
            out.append(f"edge {e} before the active edge is not top incoming")
    for e in rope[active_pos + 1 :]:
        if not g.is_bottom_outgoing(e):
            out.append(f"edge {e} after the active edge is not bottom outgoing")
    idx = [g.edges[e].index for e in rope[: active_pos + 1]]
    if any(a > b for a, b in zip(idx, idx[1:])):
        out.append(f"pseudoline indices before the crossing decrease: {idx}")
    if len(rope) > 2 * g.n - 2:
        out.append(f"rope length {len(rope)} exceeds 2n-2 = {2 * g.n - 2}")
    return out


@dataclass(frozen=True)
class Move:
    kind: str  # "face" or "vertex"
    id: int
    rope_len: int
    active: int


@dataclass
class SweepTrace:
    initial_rope: Rope
    initial_dual: DualRope
    initial_active: int
    moves: list[Move] = field(default_factory=list)
    final_rope: Rope = ()
    final_dual: DualRope = ()

    @property
    def max_rope_length(self) -> int:
        return max([len(self.initial_rope)] + [m.rope_len for m in self.moves])

    @property
    def face_order(self) -> list[int]:
        return [m.id for m in self.moves if m.kind == "face"]

    @property
    def vertex_order(self) -> list[int]:
        return [m.id for m in self.moves if m.kind == "vertex"]

    def states(self, g: ArrangementGraph) -> Iterator[tuple[int, Move | None, Rope, DualRope]]:
        """Replay the moves, yielding ``(step, move, rope, dual_rope)`` from step 0."""
        rope, dual = self.initial_rope, self.initial_dual
        yield 0, None, rope, dual
        for step, m in enumerate(self.moves, 1):
            if m.kind == "face":
                rope = flip_face(g, rope, m.id)
            else:
                dual = flip_vertex(g, dual, m.id)
            if len(rope) != m.rope_len:
                raise InvariantViolation(
                    f"replayed rope length {len(rope)} != recorded {m.rope_len}", step
                )
            yield step, m, rope, dual

    def jsonl_lines(self, g: ArrangementGraph) -> list[str]:
        lines = []
        for step, m, rope, _ in self.states(g):
            rec = {
                "step": step,
                "kind": "init" if m is None else m.kind,
                "id": None if m is None else m.id,
                "rope": g.rope_vertices(rope),
                "rope_len": len(rope),
                "active": self.initial_active if m is None else m.active,
            }
            lines.append(json.dumps(rec, separators=(",", ":")))
        return lines


def initial_state(g: ArrangementGraph) -> tuple[Rope, DualRope, int]:
    """Lower hull, the dual rope through all faces at ``s`` and the bottom edge out of ``s``."""
    outs = g.out_edges[g.s]
    return g.lower_hull, outs, outs[-1]


def primal_dual_sweep(g: ArrangementGraph, verify: bool = False) -> SweepTrace:
    """Run the coordinated primal-dual sweep.

    With ``verify=True`` every intermediate state is checked for hugging, for a
    unique crossing at the active edge and for the structural claims; any
    failure raises :class:`InvariantViolation`.
    """
    rope, dual, active = initial_state(g)
    trace = SweepTrace(rope, dual, active)
    edges, faces = g.edges, g.faces
    s_star, t = g.s_star, g.t
    step = 0

    def check() -> None:
        try:
            i, _ = crossing(g, rope, dual)
            bad = check_hugging(g, rope, dual)
        except (NoCrossing, MultipleCrossings) as exc:
            raise InvariantViolation(str(exc), step) from exc
        if rope[i] != active:
            raise InvariantViolation(f"crossing at edge {rope[i]}, expected {active}", step)
        if bad:
            raise InvariantViolation(f"hugging violated: {bad}", step)
        claims = check_claims(g, rope, i)
        if claims:
            raise InvariantViolation("; ".join(claims), step)

    if verify:
        check()
    while True:
        e = edges[active]
        v, f = e.head, e.left_face
        if f == s_star and v == t:
            break
        step += 1
        try:
            if g.in_edges[v][0] != active:
                rope = flip_face(g, rope, f)
                active = faces[f].top[0]
                trace.moves.append(Move("face", f, len(rope), active))
            else:
                dual = flip_vertex(g, dual, v)
                active = g.out_edges[v][-1]
                trace.moves.append(Move("vertex", v, len(rope), active))
        except (BottomChainNotOnRope, PreconditionNotMet, TerminalVertex, NotInnerFace) as exc:
            raise InvariantViolation(str(exc), step) from exc
        if verify:
            check()

    trace.final_rope, trace.final_dual = rope, dual
    if rope != g.upper_hull:
        raise InvariantViolation("sweep did not end at the upper hull", step)
    if dual != g.in_edges[t]:
        raise InvariantViolation("dual sweep did not end at the incoming edges of t", step)
    expected = g.num_inner_faces + (g.num_vertices - 2)
    if len(trace.moves) != expected:
        raise InvariantViolation(f"{len(trace.moves)} moves, expected {expected}", step)
    return trace

"""Generators for the extremal arrangement families and their structural verifiers.

The verifiers only query the built graph, so they certify an instance no
matter where it came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import WiringDiagram, canonicalize, validate
from .graph import ArrangementGraph, build_dual, build_graph, shortest_xmonotone_path


# -- lower-bound family --------------------------------------------------------


@dataclass(frozen=True)
class LowerBoundInstance:
    wd: WiringDiagram
    K: int
    # Pseudoline labels (1-based, top to bottom at s).
    c: int
    c_prime: int
    red: tuple[int, ...]
    blue: tuple[int, ...]
    # Landmark faces as ids of the built graph.
    f_left: int
    f_center: int
    f_right: int

    @property
    def n(self) -> int:
        return self.wd.n

    def sidecar(self) -> dict:
        return {
            "family": "lower_bound",
            "K": self.K,
            "n": self.n,
            "c": self.c,
            "c_prime": self.c_prime,
            "red": list(self.red),
            "blue": list(self.blue),
            "faces": {"F_l": self.f_left, "F_c": self.f_center, "F_r": self.f_right},
        }


def _bottom_visit_reversal(lo: int, hi: int) -> list[int]:
    """Reverse the wires on tracks lo..hi so each one passes through track ``hi``.

    Repeatedly the wire on the bottom track rises to just below the wires
    already reversed.
    """
    word = []
    for top in range(lo, hi):
        word += list(range(hi - 1, top - 1, -1))
    return word


def _top_visit_reversal(lo: int, hi: int) -> list[int]:
    """Reverse tracks lo..hi so each wire passes through track ``lo``: the top wire sinks."""
    word = []
    for bottom in range(hi, lo, -1):
        word += list(range(lo, bottom))
    return word


def _landmarks(g: ArrangementGraph, c: int, c_prime: int, middle: int) -> tuple[int, int, int]:
    """Locate F_l, F_c, F_r from the crossings of the middle red curve with c and c'."""
    enter = exit_ = None
    for v, pair in enumerate(g.crossing_pair):
        if pair is None:
            continue
        if set(pair) == {c, middle}:
            enter = v
        elif set(pair) == {c_prime, middle}:
            exit_ = v
    assert enter is not None and exit_ is not None
    # The edge of c leaving its crossing with the middle curve has F_c above and F_l below.
    e_c = next(e for e in g.out_edges[enter] if g.edges[e].index == c)
    e_cp = next(e for e in g.in_edges[exit_] if g.edges[e].index == c_prime)
    return g.edges[e_c].right_face, g.edges[e_c].left_face, g.edges[e_cp].right_face


def lower_bound_word(K: int) -> list[int]:
    """Swap word of the lower-bound construction on n = 4K + 3 tracks."""
    if K < 1:
        raise ValueError("K must be at least 1")
    n = 4 * K + 3
    gap = 2 * K + 2  # bottom red track once reds and blues are separated
    # Interleaved red/blue wires on tracks 2..n-1 separate, reds up.
    # Round r swaps every blue sitting directly above a red.
    sep = []
    for r in range(1, 2 * K + 1):
        sep += list(range(2 + r, n - r + 1, 2))
    # Next the lower K+1 reds reverse so that each runs along the top of
    # F_l, then c descends from the top through all reds into the gap.
    lower_reds = _bottom_visit_reversal(K + 2, gap)
    c_descent = list(range(1, gap))
    left = sep + lower_reds + c_descent
    # Middle: c, the blues and c' reverse with each passing along the bottom of
    # F_c; the upper K reds cross the lower K reds, leaving the middle red alone.
    blues = _top_visit_reversal(gap, n)
    reds = []
    for d in range(K):
        reds += list(range(K - d, 2 * K - d))
    # The right part mirrors the left part in time.
    return left + blues + reds + left[::-1]


def lower_bound_family(K: int) -> LowerBoundInstance:
    """Arrangement of n = 4K + 3 pseudolines needing rope-length 7K + 4.

    The diagram is returned in canonical form; landmark face ids refer to the
    graph built from that form.
    """
    wd = canonicalize(validate(4 * K + 3, lower_bound_word(K)))
    n = wd.n
    c, c_prime = 1, n
    red = tuple(range(2, n, 2))
    blue = tuple(range(3, n - 1, 2))
    middle = red[K]
    g = build_graph(wd)
    fl, fc, fr = _landmarks(g, c, c_prime, middle)
    return LowerBoundInstance(wd, K, c, c_prime, red, blue, fl, fc, fr)


def lower_bound_from(wd: WiringDiagram, K: int) -> LowerBoundInstance:
    """Label an arbitrary diagram on 4K + 3 lines with the family's landmark rules."""
    n = wd.n
    if n != 4 * K + 3:
        raise ValueError(f"expected {4 * K + 3} pseudolines, got {n}")
    red = tuple(range(2, n, 2))
    blue = tuple(range(3, n - 1, 2))
    g = build_graph(wd)
    fl, fc, fr = _landmarks(g, 1, n, red[K])
    return LowerBoundInstance(wd, K, 1, n, red, blue, fl, fc, fr)


@dataclass
class Certificate:
    ok: bool
    values: dict[str, int | None] = field(default_factory=dict)
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_lower_bound(inst: LowerBoundInstance) -> Certificate:
    """Check the path-length and adjacency properties the lower-bound argument uses."""
    g = build_graph(inst.wd)
    K = inst.K
    fl, fc, fr = (g.faces[f] for f in (inst.f_left, inst.f_center, inst.f_right))
    values = {
        "dist_s_to_source_Fl": shortest_xmonotone_path(g, g.s, fl.source),
        "dist_sink_Fc_to_t": shortest_xmonotone_path(g, fc.sink, g.t),
        "dist_sink_Fl_to_source_Fr": shortest_xmonotone_path(g, fl.sink, fr.source),
        "top_chain_Fl": len(fl.top),
    }
    checks = [
        ("dist_s_to_source_Fl", 2 * K, "path from s to s(F_l) shorter than 2K"),
        ("dist_sink_Fc_to_t", 2 * K + 1, "path from t(F_c) to t shorter than 2K+1"),
        ("dist_sink_Fl_to_source_Fr", 2 * K, "path from t(F_l) to s(F_r) shorter than 2K"),
    ]
    for key, bound, msg in checks:
        d = values[key]
        if d is None or d < bound:
            return Certificate(False, values, f"{msg} (got {d})")
    if len(fl.top) != K + 2:
        return Certificate(False, values, f"top chain of F_l has {len(fl.top)} edges, not K+2")
    dual = build_dual(g)
    arcs = set(dual.edge_pairs())
    for target, name in ((inst.f_left, "F_l"), (inst.f_right, "F_r")):
        if (inst.f_center, target) not in arcs:
            return Certificate(False, values, f"dual edge F_c -> {name} missing")
    return Certificate(True, values)


# -- worst case for the primal-dual sweep ----------------------------------------


@dataclass(frozen=True)
class WorstCaseInstance:
    wd: WiringDiagram
    c1: int = 1
    face: int | None = None  # face left of the last edge of c1

    @property
    def n(self) -> int:
        return self.wd.n

    def sidecar(self) -> dict:
        return {"family": "worst_case", "n": self.n, "c1": self.c1, "faces": {"F": self.face}}


def worst_case_word(n: int) -> list[int]:
    # c1 sinks from the top track to the bottom, crossing c2..cn in turn; the
    # others then reverse with every wire passing over track n-1.
    word = list(range(1, n))
    for top in range(1, n - 1):
        word += list(range(n - 2, top - 1, -1))
    return word


def _last_edge_face(g: ArrangementGraph, c1: int) -> int:
    e = next(e for e in g.in_edges[g.t] if g.edges[e].index == c1)
    return g.edges[e].left_face


def worst_case_family(n: int) -> WorstCaseInstance:
    """Arrangement on which the primal-dual sweep reaches rope length 2n - 2."""
    if n < 3:
        raise ValueError("worst-case family needs n >= 3")
    wd = canonicalize(validate(n, worst_case_word(n)))
    return WorstCaseInstance(wd, 1, _last_edge_face(build_graph(wd), 1))


def verify_worst_case(inst: WorstCaseInstance) -> Certificate:
    """Check that every other line first crosses c1, and the face left of c1's last edge
    has a top chain meeting every line except c1."""
    wd, c1 = inst.wd, inst.c1
    if wd.n < 3:
        return Certificate(False, {}, "worst-case structure needs n >= 3")
    first: dict[int, int] = {}
    for a, b in wd.crossing_pairs():
        first.setdefault(a, b)
        first.setdefault(b, a)
    for ci in range(1, wd.n + 1):
        if ci != c1 and first[ci] != c1:
            return Certificate(
                False, {"line": ci}, f"first-crossing condition: first crossing of c{ci} is with c{first[ci]}"
            )
    g = build_graph(wd)
    f = _last_edge_face(g, c1)
    if f == g.s_star:
        return Certificate(False, {}, "top-chain condition: last edge of c1 lies on the upper hull")
    met = {g.edges[e].index for e in g.faces[f].top}
    missing = sorted(set(range(1, wd.n + 1)) - {c1} - met)
    if missing:
        return Certificate(
            False, {"face": f}, f"top-chain condition: top chain of face {f} misses lines {missing}"
        )
    return Certificate(True, {"face": f, "top_chain": len(g.faces[f].top)})

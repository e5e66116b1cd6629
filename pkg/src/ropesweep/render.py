"""SVG drawings of wiring diagrams with an optional rope and highlighted faces.

Layout: one unit column per swap, one unit row per track.  Crossing ``k`` sits
at column ``k``, ``s`` at column 0 and ``t`` at column ``N + 1``.  All
coordinates are integers, so the output is byte-stable.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from xml.sax.saxutils import escape

from .graph import ArrangementGraph

UNIT = 40
HALF = UNIT // 2
MARGIN = 40
WIRE_COLORS = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
ROPE_COLOR = "#d62728"
FACE_COLORS = ("#fde68a", "#bfdbfe", "#bbf7d0", "#fbcfe8", "#ddd6fe")


class _Layout:
    def __init__(self, g: ArrangementGraph):
        self.g = g
        self.N = len(g.wd.swaps)
        self.width = (self.N + 1) * UNIT + 2 * MARGIN
        self.height = (g.n + 1) * UNIT + 2 * MARGIN

    def pt(self, col2: int, row2: int) -> tuple[int, int]:
        """Point from doubled grid coordinates (half-unit resolution)."""
        return MARGIN + col2 * HALF, MARGIN + row2 * HALF

    def edge_points(self, e: int) -> list[tuple[int, int]]:
        g = self.g
        edge = g.edges[e]
        tr2 = 2 * edge.track
        pts = []
        if edge.tail == g.s:
            pts.append(self.pt(0, tr2))
        else:
            k = edge.tail
            p = g.wd.swaps[k - 1]
            pts += [self.pt(2 * k, 2 * p + 1), self.pt(2 * k + 1, tr2)]
        if edge.head == g.t:
            pts.append(self.pt(2 * (self.N + 1), tr2))
        else:
            k = edge.head
            p = g.wd.swaps[k - 1]
            pts += [self.pt(2 * k - 1, tr2), self.pt(2 * k, 2 * p + 1)]
        return _dedupe(pts)

    def chain_points(self, chain: Sequence[int]) -> list[tuple[int, int]]:
        pts: list[tuple[int, int]] = []
        for e in chain:
            pts += self.edge_points(e)
        return _dedupe(pts)


def _dedupe(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    return out


def _points_attr(pts: Sequence[tuple[int, int]]) -> str:
    return " ".join(f"{x},{y}" for x, y in pts)


def render_svg(
    g: ArrangementGraph,
    rope: Sequence[int] | None = None,
    faces: Mapping[str, int] | None = None,
    title: str | None = None,
) -> str:
    """Return the SVG document as a string."""
    lay = _Layout(g)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{lay.width}" '
        f'height="{lay.height}" viewBox="0 0 {lay.width} {lay.height}">',
        f'<rect width="{lay.width}" height="{lay.height}" fill="white"/>',
    ]
    if title:
        out.append(f'<title>{escape(title)}</title>')
    for i, (name, f) in enumerate(sorted((faces or {}).items())):
        face = g.faces[f]
        pts = lay.chain_points(face.bottom) + lay.chain_points(face.top)[::-1]
        color = FACE_COLORS[i % len(FACE_COLORS)]
        out.append(
            f'<polygon class="face" data-face="{f}" data-name="{escape(name)}" '
            f'points="{_points_attr(_dedupe(pts))}" fill="{color}" stroke="none"/>'
        )
        cx = sum(x for x, _ in pts) // len(pts)
        cy = sum(y for _, y in pts) // len(pts)
        out.append(
            f'<text x="{cx}" y="{cy}" font-size="12" text-anchor="middle">{escape(name)}</text>'
        )
    # Wires, each as one polyline in left-to-right order.
    wire_edges: dict[int, list[int]] = {}
    for e in g.edges:
        wire_edges.setdefault(e.index, []).append(e.id)
    for label in range(1, g.n + 1):
        chain = sorted(wire_edges[label], key=lambda e: g.edges[e].head)
        color = WIRE_COLORS[(label - 1) % len(WIRE_COLORS)]
        out.append(
            f'<polyline class="wire" data-wire="{label}" points="{_points_attr(lay.chain_points(chain))}" '
            f'fill="none" stroke="{color}" stroke-width="2"/>'
        )
        x, y = lay.pt(0, 2 * label)
        out.append(f'<text x="{x - 6}" y="{y + 4}" font-size="12" text-anchor="end">c{label}</text>')
    if rope is not None:
        out.append(f'<g class="rope" data-length="{len(rope)}">')
        for e in rope:
            out.append(
                f'<polyline class="rope-edge" data-edge="{e}" points="{_points_attr(lay.edge_points(e))}" '
                f'fill="none" stroke="{ROPE_COLOR}" stroke-width="4" stroke-dasharray="8 4" opacity="0.8"/>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

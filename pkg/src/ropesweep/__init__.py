"""Sweeping pseudoline arrangements with a rope of bounded length."""

from __future__ import annotations

from .arrangement import (
    WiringDiagram,
    canonicalize,
    enumerate_arrangements,
    iter_arrangements,
    reflect_horizontal,
    reflect_vertical,
    symmetry_orbit,
    validate,
)
from .constructions import (
    lower_bound_family,
    verify_lower_bound,
    verify_worst_case,
    worst_case_family,
)
from .cutwidth import (
    SmallGraph,
    cutwidth_exact,
    directed_cutwidth_exact,
    order_g_to_h,
    order_h_to_g,
    reduce_to_dcw,
)
from .graph import build_dual, build_graph
from .optimal import optimal_rope_length, rope_flip_search
from .sweep import check_hugging, crossing, flip_face, flip_vertex, primal_dual_sweep

__all__ = [
    "SmallGraph",
    "WiringDiagram",
    "build_dual",
    "build_graph",
    "canonicalize",
    "check_hugging",
    "crossing",
    "cutwidth_exact",
    "directed_cutwidth_exact",
    "enumerate_arrangements",
    "flip_face",
    "flip_vertex",
    "iter_arrangements",
    "lower_bound_family",
    "optimal_rope_length",
    "order_g_to_h",
    "order_h_to_g",
    "primal_dual_sweep",
    "reduce_to_dcw",
    "reflect_horizontal",
    "reflect_vertical",
    "rope_flip_search",
    "symmetry_orbit",
    "validate",
    "verify_lower_bound",
    "verify_worst_case",
    "worst_case_family",
]

"""Semantic label frames to ground-plane navigation paths.

Thin wrapper over the C++ core: homography estimation and warping, class
cost mapping, grid pooling, A*/Dijkstra planning, path comparison and
overlay rendering.
"""

from ._core import (
    PipelineError,
    apply_costs,
    astar,
    compare_paths,
    dijkstra,
    estimate_homography,
    generate_bev_labels,
    invert_homography,
    pool,
    project,
    render_overlay,
    warp_costs,
    warp_labels,
)

__all__ = [
    "PipelineError",
    "apply_costs",
    "astar",
    "compare_paths",
    "dijkstra",
    "estimate_homography",
    "generate_bev_labels",
    "invert_homography",
    "pool",
    "project",
    "render_overlay",
    "warp_costs",
    "warp_labels",
]

__version__ = "0.1.0"

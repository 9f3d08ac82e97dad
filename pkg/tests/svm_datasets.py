"""Tiny labeled datasets for solver-vs-oracle equivalence checks.

Each dataset has at most 6 points in at most 3 dimensions. They were chosen
to cover separable, overlapping, unbalanced, and rescaled geometries while
avoiding two degeneracies: duplicate points with opposite labels (the
two-variable update is skipped when the pair subproblem has zero curvature)
and training points that land exactly on a decision boundary (sign
comparisons would be ambiguous).
"""

from __future__ import annotations

import numpy as np

ORACLE_C_VALUES = (0.5, 1.0, 10.0)

ORACLE_DATASETS = {
    "line_pair": (
        [[-1.0], [1.0]],
        [-1, 1],
    ),
    "line_three": (
        [[-2.0], [-1.0], [1.0]],
        [-1, -1, 1],
    ),
    "line_overlap": (
        [[-1.0], [0.2], [0.5], [1.0]],
        [-1, -1, 1, 1],
    ),
    "line_interleaved": (
        [[-2.0], [-0.5], [0.4], [0.6], [1.5], [2.5]],
        [-1, 1, -1, 1, -1, 1],
    ),
    "plane_diagonal": (
        [[1.0, 1.0], [2.0, 2.0], [-1.0, -1.0], [-2.0, -1.0]],
        [1, 1, -1, -1],
    ),
    "plane_outlier": (
        [[1.0, 0.0], [2.0, 0.3], [0.5, 0.5], [-1.0, 0.1], [-2.0, -0.3], [1.4, 0.2]],
        [1, 1, 1, -1, -1, -1],
    ),
    "plane_unbalanced": (
        [[1.0, 0.5], [2.0, 1.0], [1.5, -0.5], [2.5, 0.0], [-1.0, 0.0], [-1.5, 0.5]],
        [1, 1, 1, 1, -1, -1],
    ),
    "plane_rescaled": (
        [[10.0, 0.0], [12.0, 1.0], [-5.0, 0.5], [-8.0, -1.0]],
        [1, 1, -1, -1],
    ),
    "plane_near_collinear": (
        [[0.0, 0.0], [1.0, 1.01], [2.0, 2.0], [3.0, 3.02]],
        [-1, -1, 1, 1],
    ),
    "space_axes": (
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [-1.0, -1.0, -1.0]],
        [1, 1, 1, -1],
    ),
    "space_shifted": (
        [[1.0, 2.0, 0.5], [2.0, 1.0, 1.0], [1.5, 1.5, -0.5], [-1.0, 0.0, 0.0],
         [0.0, -1.0, 0.5], [-0.5, -0.5, -1.0]],
        [1, 1, 1, -1, -1, -1],
    ),
    "space_tight": (
        [[0.3, 0.1, 0.0], [0.5, -0.1, 0.2], [-0.3, 0.0, 0.1], [-0.5, 0.2, -0.1]],
        [1, 1, -1, -1],
    ),
}


def as_arrays(name: str) -> tuple[np.ndarray, np.ndarray]:
    X, y = ORACLE_DATASETS[name]
    return np.asarray(X, dtype=np.float64), np.asarray(y, dtype=np.float64)

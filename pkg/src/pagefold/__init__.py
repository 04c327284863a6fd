"""Single-fold page optimization toolkit.

Core layers:
    geometry  -- exact polygon fold engine (the ground-truth oracle)
    formulas  -- closed-form excess/extent expressions and analytic optima
    optimize  -- root finding, constrained optima, phase diagram, grid oracle
    checks    -- self-verification suite
    curves    -- CSV builders for the excess/transition/phase/summary curves
    render    -- SVG rendering of a fold
    service   -- FastAPI app exposing everything over HTTP
    cli       -- thin command-line client for the service
"""

__version__ = "0.1.0"

from .formulas import (
    RectOptimum,
    SquareCase2Optimum,
    case1_xe,
    case2_excess,
    case2_ye,
    rect_boundary_b_from_a,
    rect_case1_optimum,
    rect_case2_optimum,
    rect_constrained_objective,
    square_boundary_a_from_b,
    square_case2_optimum,
    square_constrained_objective,
)
from .geometry import (
    Crease,
    FoldCase,
    FoldOutcome,
    FoldParams,
    Layout,
    PageSpec,
    Point,
    Polygon,
    apply_fold_params,
    crease_from_params,
    extent,
    fold,
    reflect_point,
    split_polygon,
    unfolded_layout,
)
from .optimize import (
    OracleResult,
    PhasePoint,
    RootResult,
    critical_aspect,
    eb_curve,
    feasible,
    find_root,
    grid_oracle,
    phase_curve,
    rect_constrained_optimum,
    solve_cubic_sqrt_b,
    square_constrained_optimum,
    summary_trajectories,
    transition_curves,
    two_fold_demo,
)

__all__ = [
    "__version__",
    "Crease",
    "FoldCase",
    "FoldOutcome",
    "FoldParams",
    "Layout",
    "OracleResult",
    "PageSpec",
    "PhasePoint",
    "Point",
    "Polygon",
    "RectOptimum",
    "RootResult",
    "SquareCase2Optimum",
    "apply_fold_params",
    "case1_xe",
    "case2_excess",
    "case2_ye",
    "crease_from_params",
    "critical_aspect",
    "eb_curve",
    "extent",
    "feasible",
    "find_root",
    "fold",
    "grid_oracle",
    "phase_curve",
    "rect_boundary_b_from_a",
    "rect_case1_optimum",
    "rect_case2_optimum",
    "rect_constrained_objective",
    "rect_constrained_optimum",
    "reflect_point",
    "solve_cubic_sqrt_b",
    "split_polygon",
    "square_boundary_a_from_b",
    "square_case2_optimum",
    "square_constrained_objective",
    "square_constrained_optimum",
    "summary_trajectories",
    "transition_curves",
    "two_fold_demo",
    "unfolded_layout",
]

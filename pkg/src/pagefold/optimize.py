"""Numerical machinery on top of the fold engine and the closed forms.

Covers 1D root finding, the constrained-square optimum via the cubic in
sqrt(b), the constrained-rectangle optimum with internal/boundary regime
classification, the critical aspect ratio where the optimal fold switches
regime, brute-force grid verification through the geometry engine, and the
samplers behind the excess/transition/phase/trajectory curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .formulas import (
    rect_boundary_b_from_a,
    rect_constrained_objective,
    square_boundary_a_from_b,
    square_constrained_objective,
)
from .geometry import (
    Crease,
    FoldCase,
    FoldParams,
    PageSpec,
    Point,
    apply_fold_params,
    crease_from_params,
    extent,
    fold,
    reflect_point,
    unfolded_layout,
)

INTERNAL = "internal"
BOUNDARY = "boundary"


class BracketError(ValueError):
    """The supplied interval does not bracket a sign change."""


class ConvergenceError(RuntimeError):
    """Root iteration exceeded the iteration budget."""


class ConsistencyError(RuntimeError):
    """Two independent evaluations of the same quantity disagree."""


@dataclass(frozen=True)
class RootResult:
    x: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class PhasePoint:
    """Constrained optimum for one aspect ratio, with its regime."""

    aspect: float
    a_opt: float
    b_opt: float
    excess: float
    regime: str


@dataclass(frozen=True)
class OracleResult:
    """Best fold found by brute-force grid search through the fold engine."""

    case: FoldCase
    a: float
    b: float
    excess: float
    grid_step: float


@dataclass(frozen=True)
class TransitionCurve:
    """Constrained-boundary excess curve e(a) for one aspect, plus its argmax."""

    aspect: float
    points: list[tuple[float, float]]
    marker_a: float
    marker_e: float


@dataclass(frozen=True)
class Trajectory:
    """Track of the folded bottom-right corner as b sweeps at fixed a."""

    a: float
    b_values: list[float]
    points: list[Point]


def _linspace(lo: float, hi: float, m: int) -> list[float]:
    if m == 1:
        return [lo]
    span = hi - lo
    xs = [lo + span * i / (m - 1) for i in range(m)]
    xs[0] = lo
    xs[-1] = hi
    return xs


# =============================================================================
# Root finding
# =============================================================================

def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    df: Callable[[float], float] | None = None,
    max_iter: int = 10_000,
) -> RootResult:
    """Bracketing bisection, Newton-accelerated when ``df`` is given.

    Requires f(lo) and f(hi) of opposite sign (or zero).  Stops when
    |f(x)| <= tol or the bracket width drops to tol; deterministic for fixed
    inputs.  Raises BracketError without a sign change and ConvergenceError
    past ``max_iter`` iterations.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    f_lo = f(lo)
    if f_lo == 0.0:
        return RootResult(lo, 0.0, 0)
    f_hi = f(hi)
    if f_hi == 0.0:
        return RootResult(hi, 0.0, 0)
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={f_lo}, {f_hi}")

    x = 0.5 * (lo + hi)
    for iteration in range(1, max_iter + 1):
        fx = f(x)
        if abs(fx) <= tol or (hi - lo) <= tol:
            return RootResult(x, fx, iteration)
        if (fx > 0.0) == (f_lo > 0.0):
            lo, f_lo = x, fx
        else:
            hi, f_hi = x, fx
        nxt = None
        if df is not None:
            slope = df(x)
            if slope != 0.0:
                candidate = x - fx / slope
                if lo < candidate < hi:
                    nxt = candidate
        x = 0.5 * (lo + hi) if nxt is None else nxt
    raise ConvergenceError(f"no convergence within {max_iter} iterations")


def solve_cubic_sqrt_b() -> float:
    """Optimal b for the constrained square, solved two independent ways.

    The stationarity condition along the constraint boundary is a cubic in
    t = sqrt(b): t^3 - 2*sqrt(2)*t^2 + 4*t - sqrt(2) = 0.  The numeric root
    is cross-checked against the closed radical form of the unique real
    solution; disagreement beyond 1e-10 raises ConsistencyError.
    """
    s2 = math.sqrt(2.0)

    def cubic(t: float) -> float:
        return ((t - 2.0 * s2) * t + 4.0) * t - s2

    def cubic_deriv(t: float) -> float:
        return (3.0 * t - 4.0 * s2) * t + 4.0

    root = find_root(cubic, 0.0, 1.0, tol=1e-15, df=cubic_deriv)
    b_numeric = root.x * root.x

    w = 7.0 * math.sqrt(33.0) + 9.0
    b_radical = w ** (1.0 / 3.0) / 9.0 ** (1.0 / 3.0) - 8.0 / (3.0 * w) ** (1.0 / 3.0)

    if abs(b_numeric - b_radical) > 1e-10:
        raise ConsistencyError(
            f"cubic root {b_numeric!r} and radical form {b_radical!r} disagree"
        )
    return b_numeric


# =============================================================================
# Constrained optima and the regime transition
# =============================================================================

def _boundary_deriv(a: float, aspect: float) -> float:
    # d/da of aspect/a + sqrt(aspect*(2a - aspect)) - 2; +inf at a = aspect/2
    radicand = aspect * (2.0 * a - aspect)
    if radicand <= 0.0:
        return math.inf
    return aspect / math.sqrt(radicand) - aspect / (a * a)


def _interior_stationary_points(aspect: float, scan: int = 1000) -> list[tuple[float, float]]:
    """Stationary points of the boundary objective on (A/2, A].

    Scans a uniform grid for sign changes of the derivative and refines each
    bracket; the objective can have up to two stationary points (a maximum
    followed by a minimum) since its derivative is positive at both ends.
    """
    lo, hi = aspect / 2.0, aspect
    xs = _linspace(lo, hi, scan + 1)[1:]  # derivative blows up at lo itself
    roots: list[float] = []
    prev_x = xs[0]
    prev_d = _boundary_deriv(prev_x, aspect)
    if prev_d == 0.0:
        roots.append(prev_x)
    for x in xs[1:]:
        d = _boundary_deriv(x, aspect)
        if d == 0.0:
            roots.append(x)
        elif prev_d * d < 0.0:
            roots.append(
                find_root(lambda t: _boundary_deriv(t, aspect), prev_x, x, tol=1e-14).x
            )
        prev_x, prev_d = x, d
    return [(r, rect_constrained_objective(r, aspect)) for r in roots]


def square_constrained_optimum() -> PhasePoint:
    """Best fold of the unit square that must not poke above the top edge."""
    b = solve_cubic_sqrt_b()
    a = square_boundary_a_from_b(b)
    return PhasePoint(
        aspect=1.0,
        a_opt=a,
        b_opt=b,
        excess=square_constrained_objective(b),
        regime=INTERNAL,
    )


def rect_constrained_optimum(aspect: float) -> PhasePoint:
    """Best constrained fold of [0,1] x [0,A], classified by regime.

    Maximizes the boundary objective over a in [A/2, A].  When the best
    interior stationary value beats the endpoint value A - 1 the regime is
    internal; otherwise (including exact ties) the optimum is the regular
    corner fold (a, b) = (A, A-1).
    """
    if aspect < 1.0:
        raise ValueError(f"aspect ratio must be >= 1, got {aspect}")
    endpoint_value = rect_constrained_objective(aspect, aspect)
    candidates = [
        (value, a) for a, value in _interior_stationary_points(aspect) if a < aspect
    ]
    if candidates:
        best_value, best_a = max(candidates)
        if best_value > endpoint_value + 1e-12:
            return PhasePoint(
                aspect=aspect,
                a_opt=best_a,
                b_opt=rect_boundary_b_from_a(best_a, aspect),
                excess=best_value,
                regime=INTERNAL,
            )
    return PhasePoint(
        aspect=aspect,
        a_opt=aspect,
        b_opt=rect_boundary_b_from_a(aspect, aspect),
        excess=endpoint_value,
        regime=BOUNDARY,
    )


def critical_aspect(tol: float = 1e-6) -> float:
    """Aspect ratio where the constrained optimum switches regime.

    Bisects [1, 1.5] on the sign of (best interior stationary value) minus
    the endpoint value A - 1.  The optimal fold parameters jump there while
    the optimal excess stays continuous.
    """
    if tol < 1e-12:
        raise ValueError(f"tolerance must be >= 1e-12, got {tol}")

    def margin(aspect: float) -> float:
        interior = [
            value for a, value in _interior_stationary_points(aspect) if a < aspect
        ]
        if not interior:
            return -1.0
        return max(interior) - (aspect - 1.0)

    lo, hi = 1.0, 1.5
    if not (margin(lo) > 0.0 > margin(hi)):
        raise ConsistencyError("regime margin does not change sign on [1, 1.5]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# =============================================================================
# Brute-force oracle
# =============================================================================

def grid_oracle(aspect: float, constrained: bool = False, n: int = 500) -> OracleResult:
    """Exhaustive fold search through the geometry engine (never closed forms).

    Evaluates case-1 creases on an n x n grid over a in [0,A], b in [0,1]
    and case-2 creases over 0 <= b <= a <= A; with ``constrained`` set,
    candidates whose layout pokes above y = A (beyond 1e-9) are discarded.
    The best cell is rescanned once at a 100x finer step.  Ties prefer the
    smaller a, then the smaller b, so results do not depend on scan order.
    """
    if n < 100:
        raise ValueError(f"oracle grid needs n >= 100, got {n}")
    page = PageSpec(aspect)
    y_limit = aspect + 1e-9
    best_excess = -math.inf
    best: tuple[FoldCase, float, float] | None = None

    def scan(case: FoldCase, a_values: Sequence[float], b_values: Sequence[float]) -> None:
        nonlocal best_excess, best
        triangular = case == FoldCase.CASE2
        for a in a_values:
            for b in b_values:
                if triangular:
                    if b > a:
                        break  # b_values ascend; the rest only grow
                elif a == 0.0 and b == 0.0:
                    continue  # degenerate case-1 crease
                outcome = apply_fold_params(page, FoldParams(case, a, b))
                if constrained and outcome.y_e > y_limit:
                    continue
                if outcome.x_e - 1.0 > best_excess:
                    best_excess = outcome.x_e - 1.0
                    best = (case, a, b)

    domains = {
        FoldCase.CASE1: ((0.0, aspect), (0.0, 1.0)),
        FoldCase.CASE2: ((0.0, aspect), (0.0, aspect)),
    }
    for case, ((a_lo, a_hi), (b_lo, b_hi)) in domains.items():
        scan(case, _linspace(a_lo, a_hi, n), _linspace(b_lo, b_hi, n))

    assert best is not None  # b = 0 row is always feasible
    case, a0, b0 = best
    (a_lo, a_hi), (b_lo, b_hi) = domains[case]
    step_a = (a_hi - a_lo) / (n - 1)
    step_b = (b_hi - b_lo) / (n - 1)
    fine_a = _refine_axis(a0, step_a, a_lo, a_hi)
    fine_b = _refine_axis(b0, step_b, b_lo, b_hi)
    scan(case, fine_a, fine_b)

    case, a_best, b_best = best  # type: ignore[misc]
    return OracleResult(
        case=case,
        a=a_best,
        b=b_best,
        excess=best_excess,
        grid_step=aspect / (n - 1),
    )


def _refine_axis(center: float, step: float, lo: float, hi: float) -> list[float]:
    w_lo = max(lo, center - step)
    w_hi = min(hi, center + step)
    count = max(2, int(round((w_hi - w_lo) / (step / 100.0))) + 1)
    return _linspace(w_lo, w_hi, count)


# =============================================================================
# Curves and trajectories
# =============================================================================

def eb_curve(samples: int) -> list[tuple[float, float]]:
    """Excess of the square's a = 1 fold as b sweeps [0, 1]."""
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    out = []
    for b in _linspace(0.0, 1.0, samples):
        t = 1.0 - b
        out.append((b, 2.0 * b * t / (1.0 + t * t)))
    return out


def transition_curves(aspects: Sequence[float], samples: int) -> list[TransitionCurve]:
    """Constrained-boundary excess curves e(a), one per aspect, with argmax markers."""
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    if not aspects:
        raise ValueError("need at least one aspect ratio")
    curves = []
    for aspect in aspects:
        opt = rect_constrained_optimum(aspect)
        points = [
            (a, rect_constrained_objective(a, aspect))
            for a in _linspace(aspect / 2.0, aspect, samples)
        ]
        curves.append(
            TransitionCurve(
                aspect=aspect, points=points, marker_a=opt.a_opt, marker_e=opt.excess
            )
        )
    return curves


def phase_curve(aspect_lo: float, aspect_hi: float, samples: int) -> list[PhasePoint]:
    """Constrained optimum swept over a range of aspect ratios."""
    if not 1.0 <= aspect_lo < aspect_hi:
        raise ValueError(f"need 1 <= lo < hi, got [{aspect_lo}, {aspect_hi}]")
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    return [rect_constrained_optimum(a) for a in _linspace(aspect_lo, aspect_hi, samples)]


def feasible(a: float, b: float, slack: float = 1e-12) -> bool:
    """Whether (a, b) satisfies the constrained-square fold constraints.

    Checks b <= a, 2a <= 1 + (a-b)^2 (the top-edge limit y_e <= 1), and
    a, b >= 0, each with the given slack.
    """
    t = a - b
    return (
        a >= -slack
        and b >= -slack
        and b <= a + slack
        and 2.0 * a <= 1.0 + t * t + slack
    )


def summary_trajectories(
    a_values: Sequence[float], constrained: bool, samples: int
) -> list[Trajectory]:
    """Folded bottom-right corner tracks on the unit square, one per fixed a.

    Sweeps b over [0, a], or over the sub-range keeping the flap below the
    top edge when ``constrained``; corner positions come from the geometry
    engine, not the closed forms.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    page = PageSpec(1.0)
    corner = (1.0, 0.0)
    out = []
    for a in a_values:
        if not 0.0 <= a <= 1.0:
            raise ValueError(f"square page needs a in [0, 1], got {a}")
        b_hi = a
        if constrained and a > 0.5:
            b_hi = rect_boundary_b_from_a(a, 1.0)
        b_values = _linspace(0.0, b_hi, samples)
        points = []
        for b in b_values:
            crease = crease_from_params(page, FoldParams(FoldCase.CASE2, a, b))
            points.append(reflect_point(corner, crease))
        out.append(Trajectory(a=a, b_values=b_values, points=points))
    return out


def two_fold_demo() -> tuple[float, float]:
    """Excess and top extent of the diagonal-then-bisector two-fold construction.

    Folds the unit square along the (0,1)-(1,0) diagonal, then about the
    crease through (0,1) at -22.5 degrees, which lays the diagonal onto the
    top edge.  Both folds run through the geometry engine.
    """
    page = PageSpec(1.0)
    layout = fold(unfolded_layout(page), Crease((0.0, 1.0), (1.0, 0.0)))
    angle = -math.pi / 8.0
    bisector = Crease((0.0, 1.0), (math.cos(angle), 1.0 + math.sin(angle)))
    layout = fold(layout, bisector)
    x_e, y_e = extent(layout)
    return x_e - 1.0, y_e

"""Closed-form fold formulas as pure functions of (a, b, aspect).

Every function mirrors one explicit expression for the single-fold problem:
the folded-corner abscissa for triangular (case-1) folds, the excess and top
extent for trapezoidal (case-2) folds, the analytic optima for square and
rectangular pages, and the parameterization of the nonlinear constraint
boundary y_e = aspect.

Domain guards raise ValueError instead of clamping so optimizer bugs surface
immediately.  Exact constants come from math.sqrt, never from rounded
decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import FoldCase


@dataclass(frozen=True)
class SquareCase2Optimum:
    """The unconstrained square optimum: a = 1, b = 2 - sqrt(2)."""

    a: float
    b: float
    excess: float
    y_e: float


@dataclass(frozen=True)
class RectOptimum:
    """A closed-form optimum for the page [0,1] x [0,aspect]."""

    aspect: float
    a: float
    b: float
    excess: float
    case: FoldCase


def case1_xe(a: float, b: float) -> float:
    """Folded-corner abscissa 2*a^2*b / (a^2 + b^2) of a case-1 fold."""
    if a < 0.0 or b < 0.0:
        raise ValueError(f"case-1 edge lengths must be >= 0, got a={a}, b={b}")
    if a + b <= 0.0:
        raise ValueError("case-1 fold with a = b = 0 is undefined (0/0)")
    return 2.0 * a * a * b / (a * a + b * b)


def _check_case2_domain(a: float, b: float) -> None:
    if b < 0.0 or b > a:
        raise ValueError(
            f"case-2 fold needs 0 <= b <= a (upper-right fold), got a={a}, b={b}"
        )


def case2_excess(a: float, b: float) -> float:
    """Rightward excess 2*b*(a-b) / (1 + (a-b)^2) of a case-2 fold."""
    _check_case2_domain(a, b)
    t = a - b
    return 2.0 * b * t / (1.0 + t * t)


def case2_ye(a: float, b: float) -> float:
    """Top extent 2*a / (1 + (a-b)^2) of the flap of a case-2 fold."""
    _check_case2_domain(a, b)
    t = a - b
    return 2.0 * a / (1.0 + t * t)


def square_case2_optimum() -> SquareCase2Optimum:
    """Best unconstrained single fold of the unit square."""
    s2 = math.sqrt(2.0)
    return SquareCase2Optimum(a=1.0, b=2.0 - s2, excess=s2 - 1.0, y_e=1.0 + s2 / 2.0)


def square_boundary_a_from_b(b: float) -> float:
    """Left intercept a on the square's constraint boundary y_e = 1.

    Solves 2a = 1 + (a-b)^2 for the branch a = 1 + b - sqrt(2b); valid for
    b in [0, sqrt(2)/2], the arc between b = 0 and the corner a = b.
    """
    if not 0.0 <= b <= math.sqrt(2.0) / 2.0:
        raise ValueError(f"boundary parameterization needs 0 <= b <= sqrt(2)/2, got {b}")
    return 1.0 + b - math.sqrt(2.0 * b)


def square_constrained_objective(b: float) -> float:
    """Excess along the square's constraint boundary: b - b^2/(1 + b - sqrt(2b))."""
    a = square_boundary_a_from_b(b)
    if a <= 1e-12:
        raise ValueError(f"boundary intercept collapsed at b={b}")
    return b - b * b / a


def rect_case1_optimum(aspect: float) -> RectOptimum:
    """Best case-1 fold of a rectangle: along the page diagonal (a=A, b=1)."""
    if aspect < 1.0:
        raise ValueError(f"aspect ratio must be >= 1, got {aspect}")
    a2 = aspect * aspect
    return RectOptimum(
        aspect=aspect,
        a=aspect,
        b=1.0,
        excess=(a2 - 1.0) / (a2 + 1.0),
        case=FoldCase.CASE1,
    )


def rect_case2_optimum(aspect: float) -> RectOptimum:
    """Best unconstrained case-2 fold of a rectangle.

    The maximum sits at a = A with b = (1 + A^2 - sqrt(1 + A^2))/A and gives
    excess sqrt(1 + A^2) - 1; aspect 1 recovers the square optimum.
    """
    if aspect < 1.0:
        raise ValueError(f"aspect ratio must be >= 1, got {aspect}")
    s = math.sqrt(1.0 + aspect * aspect)
    return RectOptimum(
        aspect=aspect,
        a=aspect,
        b=(1.0 + aspect * aspect - s) / aspect,
        excess=s - 1.0,
        case=FoldCase.CASE2,
    )


def rect_boundary_b_from_a(a: float, aspect: float) -> float:
    """Right intercept b on the rectangle's constraint boundary y_e = aspect.

    Solves 2a / (1 + (a-b)^2) = aspect for b = a - sqrt(2aA - A^2)/A; valid
    for a in [A/2, A].
    """
    if aspect < 1.0:
        raise ValueError(f"aspect ratio must be >= 1, got {aspect}")
    if not aspect / 2.0 <= a <= aspect:
        raise ValueError(
            f"boundary parameterization needs {aspect / 2} <= a <= {aspect}, got {a}"
        )
    radicand = 2.0 * a * aspect - aspect * aspect
    return a - math.sqrt(max(radicand, 0.0)) / aspect


def rect_constrained_objective(a: float, aspect: float) -> float:
    """Excess along the rectangle's constraint boundary: A/a + sqrt(A(2a-A)) - 2."""
    if aspect < 1.0:
        raise ValueError(f"aspect ratio must be >= 1, got {aspect}")
    if not aspect / 2.0 <= a <= aspect:
        raise ValueError(
            f"boundary objective needs {aspect / 2} <= a <= {aspect}, got {a}"
        )
    return aspect / a + math.sqrt(max(aspect * (2.0 * a - aspect), 0.0)) - 2.0

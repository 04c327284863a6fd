"""CSV renderings of the fold curves.

All builders return complete CSV text (header line, LF endings, 9
significant digits) so identical inputs always produce byte-identical
files.
"""

from __future__ import annotations

from typing import Sequence

from . import optimize

CURVE_KINDS = ("eb", "transition", "phase", "summary")

# Figure-matching defaults used when a request omits the parameter lists.
DEFAULT_TRANSITION_ASPECTS = (1.05, 1.15, 1.2, 1.35)
DEFAULT_SUMMARY_A_VALUES = (0.2, 0.4, 0.543689012692076, 0.7, 0.85, 1.0)


def fmt(x: float) -> str:
    """Canonical number format: 9 significant digits."""
    return f"{x:.9g}"


def _table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def eb_csv(samples: int) -> str:
    """Square a = 1 excess curve: columns b, e."""
    return _table(("b", "e"), optimize.eb_curve(samples))


def transition_csv(aspects: Sequence[float], samples: int) -> str:
    """Boundary excess curves per aspect: columns aspect, a, e, marker_a, marker_e.

    One block of ``samples`` rows per aspect; the argmax marker of the block
    is repeated on each of its rows.
    """
    rows = []
    for curve in optimize.transition_curves(aspects, samples):
        for a, e in curve.points:
            rows.append((curve.aspect, a, e, curve.marker_a, curve.marker_e))
    return _table(("aspect", "a", "e", "marker_a", "marker_e"), rows)


def phase_csv(aspect_lo: float, aspect_hi: float, samples: int) -> str:
    """Phase diagram of the constrained optimum: one row per aspect ratio."""
    rows = [
        (p.aspect, p.a_opt, p.b_opt, p.excess, p.regime)
        for p in optimize.phase_curve(aspect_lo, aspect_hi, samples)
    ]
    return _table(("aspect", "a_opt", "b_opt", "excess", "regime"), rows)


def summary_csv(a_values: Sequence[float], constrained: bool, samples: int) -> str:
    """Folded-corner trajectories on the square: columns a, b, x, y.

    One block per fixed a, sweeping b over the (possibly constraint-clipped)
    range.
    """
    rows = []
    for track in optimize.summary_trajectories(a_values, constrained, samples):
        for b, (x, y) in zip(track.b_values, track.points):
            rows.append((track.a, b, x, y))
    return _table(("a", "b", "x", "y"), rows)

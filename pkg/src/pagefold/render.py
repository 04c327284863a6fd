"""SVG rendering of a single fold.

Draws the page outline, the crease (red dashed), the part of the page that
stays put, and the reflected flap (gray, half-opaque).  Geometry stays in
page coordinates; a scale(1,-1) group flips the y axis for SVG, so the
``points`` attributes in the output can be read back directly as page
coordinates.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

from .curves import fmt
from .geometry import (
    Crease,
    FoldParams,
    PageSpec,
    Point,
    Polygon,
    crease_from_params,
    reflect_point,
    split_polygon,
)

_STROKE_SCALE = 0.006  # stroke widths relative to the scene size


def _crease_chord(page: PageSpec, crease: Crease) -> tuple[Point, Point] | None:
    """Clip the crease line to the page rectangle."""
    px, py = crease.p
    dx = crease.q[0] - px
    dy = crease.q[1] - py
    ts = []
    # line: (px + t dx, py + t dy); intersect with x in {0,1}, y in {0,A}
    if dx != 0.0:
        for x_edge in (0.0, 1.0):
            t = (x_edge - px) / dx
            y = py + t * dy
            if -1e-12 <= y <= page.aspect + 1e-12:
                ts.append(t)
    if dy != 0.0:
        for y_edge in (0.0, page.aspect):
            t = (y_edge - py) / dy
            x = px + t * dx
            if -1e-12 <= x <= 1.0 + 1e-12:
                ts.append(t)
    if not ts:
        return None
    t0, t1 = min(ts), max(ts)
    if t1 - t0 <= 1e-12:
        return None
    return (
        (px + t0 * dx, py + t0 * dy),
        (px + t1 * dx, py + t1 * dy),
    )


def _points_attr(poly: Polygon) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in poly)


def render_fold_svg(aspect: float, fp: FoldParams) -> str:
    """Render one fold of the page [0,1] x [0,aspect] as an SVG document."""
    page = PageSpec(aspect)
    crease = crease_from_params(page, fp)
    kept, moved = split_polygon(page.polygon(), crease)
    images = [
        [reflect_point(pt, crease) for pt in reversed(piece)] for piece in moved
    ]

    xs = [0.0, 1.0]
    ys = [0.0, page.aspect]
    for piece in images:
        xs.extend(x for x, _ in piece)
        ys.extend(y for _, y in piece)
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys))
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    width, height = x1 - x0, y1 - y0
    stroke = _STROKE_SCALE * max(width, height)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(480.0)}" '
        f'height="{fmt(480.0 * height / width)}" '
        f'viewBox="{fmt(x0)} {fmt(-y1)} {fmt(width)} {fmt(height)}">',
        '<g transform="scale(1 -1)">',
        f'<polygon class="page" points="{_points_attr(page.polygon())}" '
        f'fill="none" stroke="black" stroke-width="{fmt(stroke)}"/>',
    ]
    for piece in kept:
        parts.append(
            f'<polygon class="kept" points="{_points_attr(piece)}" '
            f'fill="none" stroke="black" stroke-width="{fmt(0.5 * stroke)}"/>'
        )
    for piece in images:
        parts.append(
            f'<polygon class="folded-image" points="{_points_attr(piece)}" '
            f'fill="gray" fill-opacity="0.5" stroke="black" '
            f'stroke-width="{fmt(0.5 * stroke)}"/>'
        )
    chord = _crease_chord(page, crease)
    if chord is not None:
        (cx0, cy0), (cx1, cy1) = chord
        parts.append(
            f'<line class="crease" x1="{fmt(cx0)}" y1="{fmt(cy0)}" '
            f'x2="{fmt(cx1)}" y2="{fmt(cy1)}" stroke="red" '
            f'stroke-width="{fmt(stroke)}" '
            f'stroke-dasharray="{fmt(4.0 * stroke)} {fmt(2.0 * stroke)}"/>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""Exact 2D fold engine for a page pinned along its top edge.

The page occupies [0,1] x [0,A] (aspect ratio A >= 1) and is folded by
reflecting everything on one side of a crease line; the side containing the
fixed top edge (the segment y = A, x in [0,1]) never moves.  Layouts are
multi-layer polygon sets, so successive folds stack layers.  All operations
are pure functions of immutable-ish values and serve as the ground-truth
oracle for the closed-form fold formulas.

Conventions:
    - polygons are counterclockwise vertex lists;
    - degeneracy epsilon 1e-12 (point-on-line, zero area), equality
      assertions elsewhere use 1e-9;
    - polygon slivers below 1e-12 area are discarded after splitting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum

# Type aliases: geometry is plain tuples/lists for speed, structured values
# are dataclasses.
Point = tuple[float, float]
Polygon = list[Point]

GEOM_EPS = 1e-12   # degeneracy tests: point-on-line, zero length
AREA_EPS = 1e-12   # polygon slivers below this area are dropped


class FoldCaptureError(ValueError):
    """The requested fold would move the fixed top edge of the page."""


class FoldCase(IntEnum):
    """How the crease crosses the page edges.

    CASE1: crease through left and bottom edges, the flap is a triangle.
    CASE2: crease through left and right edges, the flap is a trapezoid.
    """

    CASE1 = 1
    CASE2 = 2


# =============================================================================
# Basic polygon helpers
# =============================================================================

def signed_area(poly: Polygon) -> float:
    """Shoelace signed area; positive for counterclockwise winding."""
    n = len(poly)
    total = 0.0
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return 0.5 * total


def polygon_area(poly: Polygon) -> float:
    """Absolute polygon area."""
    return abs(signed_area(poly))


def ensure_ccw(poly: Polygon) -> Polygon:
    if signed_area(poly) < 0.0:
        return list(reversed(poly))
    return poly


def is_simple(poly: Polygon, eps: float = GEOM_EPS) -> bool:
    """True if no two non-adjacent edges intersect (O(k^2); k is tiny here)."""
    n = len(poly)
    for i in range(n):
        a1, a2 = poly[i], poly[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            b1, b2 = poly[j], poly[(j + 1) % n]
            if _segments_cross(a1, a2, b1, b2, eps):
                return False
    return True


def _segments_cross(a1: Point, a2: Point, b1: Point, b2: Point, eps: float) -> bool:
    d1 = _cross(b1, b2, a1)
    d2 = _cross(b1, b2, a2)
    d3 = _cross(a1, a2, b1)
    d4 = _cross(a1, a2, b2)
    return ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    )


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def validate_polygon(poly: Polygon) -> Polygon:
    """Check the polygon contract: >=3 finite vertices, simple, nonzero area.

    Returns the polygon oriented counterclockwise.  Raises ValueError on any
    violation.
    """
    if len(poly) < 3:
        raise ValueError(f"polygon needs >= 3 vertices, got {len(poly)}")
    for x, y in poly:
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite vertex ({x}, {y})")
    if polygon_area(poly) <= AREA_EPS:
        raise ValueError("degenerate polygon (area below 1e-12)")
    if not is_simple(poly):
        raise ValueError("self-intersecting polygon")
    return ensure_ccw(poly)


# =============================================================================
# Domain types
# =============================================================================

@dataclass(frozen=True)
class Crease:
    """A fold line through two distinct points ``p`` and ``q``.

    The direction p -> q matters only for the split convention: the "kept"
    side of :func:`split_polygon` is the left half-plane.
    """

    p: Point
    q: Point

    def __post_init__(self) -> None:
        for x, y in (self.p, self.q):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"non-finite crease point ({x}, {y})")
        if math.hypot(self.q[0] - self.p[0], self.q[1] - self.p[1]) <= GEOM_EPS:
            raise ValueError("degenerate crease: anchor points coincide")

    @property
    def direction(self) -> Point:
        """Unit vector along the crease, oriented p -> q."""
        dx, dy = self.q[0] - self.p[0], self.q[1] - self.p[1]
        norm = math.hypot(dx, dy)
        return (dx / norm, dy / norm)

    @property
    def tilt_angle(self) -> float:
        """Downward tilt (radians) of the rightward-oriented crease.

        Positive when the crease descends to the right, so a CASE2 crease
        built from parameters (a, b) has tan(tilt_angle) = a - b.
        """
        dx, dy = self.direction
        if dx < 0.0 or (dx == 0.0 and dy < 0.0):
            dx, dy = -dx, -dy
        return -math.atan2(dy, dx)


@dataclass(frozen=True)
class PageSpec:
    """The pristine page [0,1] x [0,aspect] with its top edge fixed."""

    aspect: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.aspect) or self.aspect < 1.0:
            raise ValueError(f"aspect ratio must be >= 1, got {self.aspect}")

    def polygon(self) -> Polygon:
        a = self.aspect
        return [(0.0, 0.0), (1.0, 0.0), (1.0, a), (0.0, a)]

    @property
    def area(self) -> float:
        return self.aspect

    @property
    def top_edge(self) -> tuple[Point, Point]:
        return ((0.0, self.aspect), (1.0, self.aspect))


@dataclass(frozen=True)
class FoldParams:
    """Crease parameterization by intercepts on the page edges.

    CASE1: crease through (0, a) on the left edge and (b, 0) on the bottom
    edge; requires 0 <= a <= aspect and 0 <= b <= 1.
    CASE2: crease through (0, a) on the left edge and (1, b) on the right
    edge; requires 0 <= b <= a <= aspect (fold points upper-right).
    """

    case: FoldCase
    a: float
    b: float

    def validate_for(self, page: PageSpec) -> None:
        a, b = self.a, self.b
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"non-finite fold parameters ({a}, {b})")
        if self.case == FoldCase.CASE1:
            if not (0.0 <= a <= page.aspect and 0.0 <= b <= 1.0):
                raise ValueError(
                    f"case-1 fold needs 0 <= a <= {page.aspect} and 0 <= b <= 1, "
                    f"got a={a}, b={b}"
                )
        else:
            if not (0.0 <= b <= a <= page.aspect):
                raise ValueError(
                    f"case-2 fold needs 0 <= b <= a <= {page.aspect}, got a={a}, b={b}"
                )


@dataclass
class Layout:
    """A partially folded page: a list of polygon layers over a page spec.

    Folding rearranges paper, so the layer areas always sum to the page area.
    """

    layers: list[Polygon]
    page: PageSpec

    def total_area(self) -> float:
        return sum(polygon_area(layer) for layer in self.layers)

    def bounding_box(self) -> tuple[float, float, float, float]:
        xs = [x for layer in self.layers for x, _ in layer]
        ys = [y for layer in self.layers for _, y in layer]
        return (min(xs), min(ys), max(xs), max(ys))


@dataclass(frozen=True)
class FoldOutcome:
    """A folded layout together with its extents and rightward excess."""

    layout: Layout
    x_e: float
    y_e: float
    excess: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "excess", self.x_e - 1.0)


def unfolded_layout(page: PageSpec) -> Layout:
    """The null-fold layout: one layer, the pristine page rectangle."""
    return Layout([page.polygon()], page)


# =============================================================================
# Reflection and splitting
# =============================================================================

def reflect_point(p: Point, crease: Crease) -> Point:
    """Mirror image of ``p`` across the crease line.

    Points on the crease map to themselves.
    """
    x, y = p
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite point ({x}, {y})")
    px, py = crease.p
    vx = crease.q[0] - px
    vy = crease.q[1] - py
    t = ((x - px) * vx + (y - py) * vy) / (vx * vx + vy * vy)
    fx = px + t * vx
    fy = py + t * vy
    return (2.0 * fx - x, 2.0 * fy - y)


def _reflect_ring(ring: Polygon, px: float, py: float, vx: float, vy: float,
                  inv_vv: float) -> Polygon:
    # reflection flips orientation, so reverse to restore CCW
    out: Polygon = []
    for x, y in reversed(ring):
        t = ((x - px) * vx + (y - py) * vy) * inv_vv
        out.append((2.0 * (px + t * vx) - x, 2.0 * (py + t * vy) - y))
    return out


def _split_ring(poly: Polygon, px: float, py: float, vx: float, vy: float,
                keep_sign: float, eps: float) -> tuple[Polygon | None, Polygon | None]:
    """One-pass half-plane split of a convex-ish ring.

    ``keep_sign`` selects which side of the directed line (p, p+v) counts as
    kept (+1 = left).  Vertices within ``eps`` of the line belong to both
    output rings.  Returns (kept, moved); either may be None when empty or a
    sub-sliver.
    """
    n = len(poly)
    dists = []
    for x, y in poly:
        d = (vx * (y - py) - vy * (x - px)) * keep_sign
        dists.append(0.0 if -eps <= d <= eps else d)
    kept: Polygon = []
    moved: Polygon = []
    for i in range(n):
        p1 = poly[i]
        d1 = dists[i]
        if d1 > 0.0:
            kept.append(p1)
        elif d1 < 0.0:
            moved.append(p1)
        else:
            kept.append(p1)
            moved.append(p1)
        j = (i + 1) % n
        d2 = dists[j]
        if d1 * d2 < 0.0:
            p2 = poly[j]
            t = d1 / (d1 - d2)
            ip = (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
            kept.append(ip)
            moved.append(ip)
    return _clean_ring(kept), _clean_ring(moved)


def _clean_ring(ring: Polygon) -> Polygon | None:
    if len(ring) < 3:
        return None
    out: Polygon = [ring[0]]
    for pt in ring[1:]:
        last = out[-1]
        if abs(pt[0] - last[0]) > 1e-14 or abs(pt[1] - last[1]) > 1e-14:
            out.append(pt)
    while len(out) > 1 and abs(out[0][0] - out[-1][0]) <= 1e-14 and \
            abs(out[0][1] - out[-1][1]) <= 1e-14:
        out.pop()
    if len(out) < 3 or polygon_area(out) < AREA_EPS:
        return None
    return out


def split_polygon(poly: Polygon, crease: Crease) -> tuple[list[Polygon], list[Polygon]]:
    """Split a polygon by the crease into (kept, moved) piece lists.

    "Kept" is the closed half-plane to the left of the directed crease
    p -> q; creases built by :func:`crease_from_params` are oriented so the
    page's fixed top edge lies on the kept side.  Piece areas sum to the
    input area; slivers below 1e-12 are dropped, and a crease that misses
    the polygon yields one empty list.
    """
    poly = validate_polygon(poly)
    px, py = crease.p
    vx = crease.q[0] - px
    vy = crease.q[1] - py
    eps = GEOM_EPS * math.hypot(vx, vy)
    kept, moved = _split_ring(poly, px, py, vx, vy, 1.0, eps)
    return ([kept] if kept else []), ([moved] if moved else [])


# =============================================================================
# Folding
# =============================================================================

def _fixed_side_sign(page: PageSpec, px: float, py: float, vx: float, vy: float,
                     eps: float) -> float:
    """Which side of the crease holds the fixed top edge: +1 left, -1 right.

    Returns 0.0 when the crease runs along the top edge line (everything
    reflects).  Raises FoldCaptureError when the crease crosses the interior
    of the top edge, because then no single side can stay fixed.
    """
    a = page.aspect
    d_left = vx * (a - py) - vy * (0.0 - px)
    d_right = vx * (a - py) - vy * (1.0 - px)
    pos = d_left > eps or d_right > eps
    neg = d_left < -eps or d_right < -eps
    if pos and neg:
        raise FoldCaptureError(
            "crease crosses the interior of the fixed top edge; "
            "the fold would move pinned paper"
        )
    if pos:
        return 1.0
    if neg:
        return -1.0
    return 0.0


def fold(layout: Layout, crease: Crease) -> Layout:
    """Fold every layer of the layout about the crease.

    Each layer is split by the crease line and the pieces on the side not
    containing the fixed top edge are reflected; pieces on the fixed side
    stay put.  The moved side may touch the top edge only at its endpoints.
    Total area is preserved.  A crease that misses the layout leaves it
    unchanged.
    """
    px, py = crease.p
    vx = crease.q[0] - px
    vy = crease.q[1] - py
    eps = GEOM_EPS * math.hypot(vx, vy)
    fixed_sign = _fixed_side_sign(layout.page, px, py, vx, vy, eps)
    inv_vv = 1.0 / (vx * vx + vy * vy)

    new_layers: list[Polygon] = []
    for layer in layout.layers:
        if fixed_sign == 0.0:
            new_layers.append(_reflect_ring(layer, px, py, vx, vy, inv_vv))
            continue
        kept, moved = _split_ring(layer, px, py, vx, vy, fixed_sign, eps)
        if moved is None:
            new_layers.append(layer)
            continue
        if kept is not None:
            new_layers.append(kept)
        new_layers.append(_reflect_ring(moved, px, py, vx, vy, inv_vv))
    return Layout(new_layers, layout.page)


def extent(layout: Layout) -> tuple[float, float]:
    """Maximum x and y over all vertices of all layers.

    Extrema of a union of polygons occur at vertices, so this is exact.
    """
    if not layout.layers:
        raise ValueError("empty layout has no extent")
    x_e = -math.inf
    y_e = -math.inf
    for layer in layout.layers:
        for x, y in layer:
            if x > x_e:
                x_e = x
            if y > y_e:
                y_e = y
    return (x_e, y_e)


def crease_from_params(page: PageSpec, fp: FoldParams) -> Crease:
    """Build the crease for the given fold parameters.

    Oriented so the fixed top edge is on the left (kept) side.
    """
    fp.validate_for(page)
    if fp.case == FoldCase.CASE1:
        return Crease((0.0, fp.a), (fp.b, 0.0))
    return Crease((0.0, fp.a), (1.0, fp.b))


def apply_fold_params(page: PageSpec, fp: FoldParams) -> FoldOutcome:
    """Fold the pristine page once and measure the outcome."""
    crease = crease_from_params(page, fp)
    layout = fold(unfolded_layout(page), crease)
    x_e, y_e = extent(layout)
    return FoldOutcome(layout, x_e, y_e)

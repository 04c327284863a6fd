"""CSV curve files and SVG rendering."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from pagefold.curves import eb_csv, fmt, phase_csv, summary_csv, transition_csv
from pagefold.geometry import FoldCase, FoldParams
from pagefold.render import render_fold_svg

from conftest import A_CR_CLOSED, SQRT2


def rows_of(csv_text: str) -> list[list[str]]:
    lines = csv_text.strip().split("\n")
    return [line.split(",") for line in lines]


class TestFormat:
    def test_nine_significant_digits(self):
        assert fmt(SQRT2) == "1.41421356"
        assert fmt(1.0) == "1"
        assert fmt(0.25) == "0.25"


class TestEbCsv:
    def test_shape_and_peak(self):
        table = rows_of(eb_csv(101))
        assert table[0] == ["b", "e"]
        assert len(table) == 102
        data = [(float(b), float(e)) for b, e in table[1:]]
        bs = [b for b, _ in data]
        assert bs == sorted(bs) and len(set(bs)) == len(bs)
        best_b, best_e = max(data, key=lambda r: r[1])
        assert best_e == pytest.approx(SQRT2 - 1.0, abs=1e-4)
        assert best_b == pytest.approx(2.0 - SQRT2, abs=0.01)

    def test_deterministic(self):
        assert eb_csv(101) == eb_csv(101)


class TestPhaseCsv:
    def test_regime_flips_once_near_critical_aspect(self):
        table = rows_of(phase_csv(1.0, 1.5, 201))
        assert table[0] == ["aspect", "a_opt", "b_opt", "excess", "regime"]
        assert len(table) == 202
        regimes = [row[4] for row in table[1:]]
        flips = [
            i for i in range(1, len(regimes)) if regimes[i] != regimes[i - 1]
        ]
        assert len(flips) == 1
        last_internal = float(table[flips[0]][0])
        first_boundary = float(table[flips[0] + 1][0])
        assert last_internal < A_CR_CLOSED < first_boundary
        assert first_boundary - last_internal == pytest.approx(0.0025, abs=1e-9)


class TestTransitionCsv:
    def test_blocks_and_markers(self):
        aspects = [1.05, 1.15, 1.2, 1.35]
        table = rows_of(transition_csv(aspects, 51))
        assert table[0] == ["aspect", "a", "e", "marker_a", "marker_e"]
        assert len(table) == 1 + 4 * 51
        for k, aspect in enumerate(aspects):
            block = table[1 + k * 51 : 1 + (k + 1) * 51]
            assert all(float(row[0]) == aspect for row in block)
            a_vals = [float(row[1]) for row in block]
            assert a_vals[0] == aspect / 2.0 and a_vals[-1] == aspect
            assert a_vals == sorted(a_vals)
            markers = {(row[3], row[4]) for row in block}
            assert len(markers) == 1
        interior_flags = []
        for k in range(4):
            marker_a = float(table[1 + k * 51][3])
            interior_flags.append(marker_a < aspects[k])
        assert interior_flags == [True, True, True, False]


class TestSummaryCsv:
    def test_blocks_start_at_fixed_corner(self):
        table = rows_of(summary_csv([0.3, 0.8], False, 21))
        assert table[0] == ["a", "b", "x", "y"]
        assert len(table) == 1 + 2 * 21
        first = table[1]
        assert float(first[2]) == pytest.approx(1.0, abs=1e-9)
        assert float(first[3]) == pytest.approx(0.0, abs=1e-9)
        b_first_block = [float(row[1]) for row in table[1:22]]
        assert b_first_block == sorted(b_first_block)
        assert b_first_block[-1] == 0.3


# =============================================================================
# SVG rendering
# =============================================================================

def svg_polygons(svg: str, cls: str) -> list[list[tuple[float, float]]]:
    root = ET.fromstring(svg)
    out = []
    for el in root.iter():
        if el.tag.endswith("polygon") and el.get("class") == cls:
            pts = [
                tuple(float(v) for v in pair.split(","))
                for pair in el.get("points").split()
            ]
            out.append(pts)
    return out


class TestRenderSvg:
    def test_optimal_square_fold_image_reaches_sqrt2(self):
        svg = render_fold_svg(1.0, FoldParams(FoldCase.CASE2, 1.0, 2.0 - SQRT2))
        images = svg_polygons(svg, "folded-image")
        assert len(images) == 1
        max_x = max(x for x, _ in images[0])
        assert max_x == pytest.approx(SQRT2, abs=1e-8)

    def test_upward_fold_stays_inside_page(self):
        svg = render_fold_svg(1.0, FoldParams(FoldCase.CASE2, 0.5, 0.5))
        (image,) = svg_polygons(svg, "folded-image")
        assert max(x for x, _ in image) <= 1.0 + 1e-9
        assert max(y for _, y in image) <= 1.0 + 1e-9

    def test_tall_page_diagonal_fold(self):
        svg = render_fold_svg(2.0, FoldParams(FoldCase.CASE1, 2.0, 1.0))
        (image,) = svg_polygons(svg, "folded-image")
        assert max(x for x, _ in image) == pytest.approx(1.6, abs=1e-8)

    def test_contains_page_outline_and_crease(self):
        svg = render_fold_svg(1.0, FoldParams(FoldCase.CASE2, 0.8, 0.3))
        assert svg_polygons(svg, "page")
        assert svg_polygons(svg, "kept")
        root = ET.fromstring(svg)
        creases = [
            el for el in root.iter()
            if el.tag.endswith("line") and el.get("class") == "crease"
        ]
        assert len(creases) == 1
        assert creases[0].get("stroke") == "red"
        assert creases[0].get("stroke-dasharray")

    def test_viewbox_covers_scene_with_padding(self):
        svg = render_fold_svg(1.0, FoldParams(FoldCase.CASE2, 1.0, 2.0 - SQRT2))
        root = ET.fromstring(svg)
        x0, neg_y1, w, h = (float(v) for v in root.get("viewBox").split())
        assert x0 < 0.0 and x0 + w > SQRT2
        assert -neg_y1 > 1.0 + SQRT2 / 2.0  # flipped-y top above the flap
        assert h > 1.0

    def test_deterministic(self):
        fp = FoldParams(FoldCase.CASE2, 0.7, 0.2)
        assert render_fold_svg(1.0, fp) == render_fold_svg(1.0, fp)

    def test_invalid_params_rejected(self):
        with pytest.raises(ValueError):
            render_fold_svg(1.0, FoldParams(FoldCase.CASE2, 0.3, 0.7))

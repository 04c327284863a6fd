"""CLI tests: exit codes, outputs, file writing, determinism."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest

from pagefold.cli import main
from pagefold.formulas import case2_excess

from conftest import SQRT2


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "solve", "--aspect", "1")
        assert code == 0
        fields = dict(line.split(None, 1) for line in out.strip().split("\n"))
        assert float(fields["excess"]) == pytest.approx(0.414214, abs=1e-6)
        assert float(fields["b"]) == pytest.approx(0.585786, abs=1e-6)
        assert fields["regime"] == "-"

    def test_json_report_round_trips(self, capsys):
        code, out, _ = run(capsys, "solve", "--aspect", "1", "--constrained", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["regime"] == "internal"
        assert report["excess"] == pytest.approx(0.1349, abs=5e-4)
        assert report["x_e"] == 1.0 + report["excess"]
        assert case2_excess(report["a"], report["b"]) == pytest.approx(
            report["excess"], abs=1e-9
        )

    def test_boundary_regime(self, capsys):
        code, out, _ = run(capsys, "solve", "--aspect", "2", "--constrained", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["regime"] == "boundary"
        assert report["excess"] == pytest.approx(1.0, abs=1e-9)
        assert (report["a"], report["b"]) == pytest.approx((2.0, 1.0), abs=1e-9)

    def test_with_oracle(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--aspect", "1", "--with-oracle",
            "--oracle-n", "120", "--json",
        )
        report = json.loads(out)
        assert code == 0
        assert report["oracle_excess"] == pytest.approx(SQRT2 - 1.0, abs=2.0 / 120)

    def test_invalid_aspect_exits_2(self, capsys):
        code, _, err = run(capsys, "solve", "--aspect", "0.5")
        assert code == 2
        assert "aspect" in err

    def test_unknown_command_exits_2(self, capsys):
        assert run(capsys, "bogus")[0] == 2


class TestCurve:
    def test_eb_file(self, capsys, tmp_path):
        out_path = tmp_path / "eb.csv"
        code, out, _ = run(capsys, "curve", "eb", "--samples", "101",
                           "--out", str(out_path))
        assert code == 0
        assert str(out_path) in out
        lines = out_path.read_text().strip().split("\n")
        assert lines[0] == "b,e"
        assert len(lines) == 102
        best = max(float(line.split(",")[1]) for line in lines[1:])
        assert best == pytest.approx(0.414214, abs=1e-4)

    def test_eb_default_filename(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, _, _ = run(capsys, "curve", "eb", "--samples", "11")
        assert code == 0
        assert (tmp_path / "eb.csv").exists()

    def test_byte_identical_reruns(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "curve", "phase", "--from", "1", "--to", "1.3",
            "--samples", "31", "--out", str(a))
        run(capsys, "curve", "phase", "--from", "1", "--to", "1.3",
            "--samples", "31", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_phase_regime_flip(self, capsys, tmp_path):
        out_path = tmp_path / "phase.csv"
        code, _, _ = run(capsys, "curve", "phase", "--from", "1", "--to", "1.5",
                         "--samples", "201", "--out", str(out_path))
        assert code == 0
        rows = [line.split(",") for line in out_path.read_text().strip().split("\n")[1:]]
        regimes = [row[4] for row in rows]
        flips = [i for i in range(1, len(regimes)) if regimes[i] != regimes[i - 1]]
        assert len(flips) == 1
        assert float(rows[flips[0]][0]) == pytest.approx(1.2071, abs=0.005)

    def test_transition_blocks(self, capsys, tmp_path):
        out_path = tmp_path / "transition.csv"
        code, _, _ = run(capsys, "curve", "transition",
                         "--aspects", "1.05,1.15,1.2,1.35",
                         "--samples", "41", "--out", str(out_path))
        assert code == 0
        rows = [line.split(",") for line in out_path.read_text().strip().split("\n")[1:]]
        assert len(rows) == 4 * 41
        markers = []
        for k in range(4):
            block = rows[k * 41 : (k + 1) * 41]
            aspect = float(block[0][0])
            markers.append(float(block[0][3]) < aspect)
        assert markers == [True, True, True, False]

    def test_summary_constrained(self, capsys, tmp_path):
        out_path = tmp_path / "summary.csv"
        code, _, _ = run(capsys, "curve", "summary", "--a-values", "0.3,0.543689",
                         "--constrained", "--samples", "41", "--out", str(out_path))
        assert code == 0
        rows = [line.split(",") for line in out_path.read_text().strip().split("\n")[1:]]
        xs = [float(row[2]) for row in rows if row[0] == "0.543689"]
        assert max(xs) == pytest.approx(1.1349, abs=5e-4)

    def test_bad_samples_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "curve", "eb", "--samples", "1",
                           "--out", str(tmp_path / "x.csv"))
        assert code == 2
        assert err

    def test_bad_aspect_list_exits_2(self, capsys, tmp_path):
        code, _, _ = run(capsys, "curve", "transition", "--aspects", "nope",
                         "--out", str(tmp_path / "x.csv"))
        assert code == 2


class TestRender:
    def test_writes_svg(self, capsys, tmp_path):
        out_path = tmp_path / "fold.svg"
        code, _, _ = run(capsys, "render", "--aspect", "1", "--case", "2",
                         "--a", "1", "--b", str(2.0 - SQRT2), "--out", str(out_path))
        assert code == 0
        root = ET.fromstring(out_path.read_text())
        polys = [
            el for el in root.iter()
            if el.tag.endswith("polygon") and el.get("class") == "folded-image"
        ]
        max_x = max(float(p.split(",")[0]) for p in polys[0].get("points").split())
        assert max_x == pytest.approx(SQRT2, abs=1e-8)

    def test_invalid_fold_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "--case", "2", "--a", "0.2",
                           "--b", "0.9", "--out", str(tmp_path / "x.svg"))
        assert code == 2
        assert "case-2" in err

    def test_unwritable_path_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "--case", "2", "--a", "1", "--b", "0.5",
                           "--out", str(tmp_path / "missing" / "x.svg"))
        assert code == 2
        assert "cannot write" in err


class TestCriticalAndVerify:
    def test_critical_prints_six_decimals(self, capsys):
        code, out, _ = run(capsys, "critical")
        assert code == 0
        assert "1.207107" in out
        assert "matches (1+sqrt(2))/2" in out

    def test_critical_json(self, capsys):
        code, out, _ = run(capsys, "critical", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["matches_closed_form"] is True

    def test_verify_fast_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--level", "fast")
        assert code == 0
        assert "all" in out and "passed" in out
        assert "FAIL" not in out

    def test_verify_detects_tampered_closed_form(self, capsys, monkeypatch):
        # the suite must go red if a formula drifts
        from pagefold import formulas

        true_excess = formulas.case2_excess
        monkeypatch.setattr(
            formulas, "case2_excess", lambda a, b: true_excess(a, b) * 1.001
        )
        code, out, _ = run(capsys, "verify", "--level", "fast")
        assert code == 1
        assert "FAIL" in out

    def test_internal_error_exits_3(self, capsys, monkeypatch):
        from pagefold import optimize

        def boom(tol=1e-6):
            raise optimize.ConsistencyError("regime margin does not change sign")

        monkeypatch.setattr(optimize, "critical_aspect", boom)
        code, _, err = run(capsys, "critical")
        assert code == 3

    def test_unreachable_server_exits_3(self, capsys):
        code, _, err = run(capsys, "--server", "http://127.0.0.1:9",
                           "solve", "--aspect", "1")
        assert code == 3
        assert "server" in err

import json

import pytest

from edgemorph import layout_to_json, parse_layout, parse_schedule
from edgemorph.cli import main
from gen_layouts import two_segment_cross

TWO_NODE_DOC = json.dumps(
    {
        "nodes": [{"id": "a", "x": 0, "y": 0}, {"id": "b", "x": 100, "y": 0}],
        "edges": [{"source": "a", "target": "b"}],
    }
)


@pytest.fixture
def layout_file(tmp_path):
    path = tmp_path / "layout.json"
    path.write_text(layout_to_json(two_segment_cross()), encoding="utf-8")
    return path


@pytest.fixture
def schedule_file(tmp_path, layout_file):
    path = tmp_path / "schedule.json"
    rc = main(["schedule", str(layout_file), "--model", "slowlin", "-o", str(path)])
    assert rc == 0
    return path


class TestValidate:
    def test_valid_layout(self, tmp_path, capsys):
        path = tmp_path / "two.json"
        path.write_text(TWO_NODE_DOC, encoding="utf-8")
        assert main(["validate", str(path)]) == 0
        assert "valid" in capsys.readouterr().out

    def test_invalid_layout(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(
                {
                    "nodes": [{"id": "a", "x": 0, "y": 0}],
                    "edges": [{"source": "a", "target": "a"}],
                }
            ),
            encoding="utf-8",
        )
        assert main(["validate", str(path)]) == 1
        assert "self-loop" in capsys.readouterr().err

    def test_missing_file(self):
        assert main(["validate", "/nonexistent/file.json"]) == 1

    def test_usage_error(self):
        assert main(["validate"]) == 2

    def test_unknown_command(self):
        assert main(["frobnicate"]) == 2


class TestCrossings:
    def test_lists_crossing(self, layout_file, capsys):
        assert main(["crossings", str(layout_file)]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert out == ["a,b c,d 200.000000 0.000000 0.500000 0.500000"]

    def test_delta0_flag(self, tmp_path, capsys):
        doc = {
            "nodes": [
                {"id": "a", "x": 0, "y": 0},
                {"id": "b", "x": 10, "y": 0},
                {"id": "c", "x": 2, "y": -5},
                {"id": "d", "x": 2, "y": 5},
            ],
            "edges": [
                {"source": "a", "target": "b"},
                {"source": "c", "target": "d"},
            ],
        }
        path = tmp_path / "near.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["crossings", str(path)]) == 0
        assert capsys.readouterr().out == ""
        assert main(["crossings", str(path), "--delta0", "0.15"]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 1


class TestSchedule:
    def test_writes_file_and_prints_makespan(self, layout_file, tmp_path, capsys):
        out = tmp_path / "schedule.json"
        rc = main(["schedule", str(layout_file), "--model", "slowlin", "-o", str(out)])
        assert rc == 0
        assert "makespan_ms 2250.000" in capsys.readouterr().out
        schedule = parse_schedule(out.read_bytes())
        assert schedule.makespan == 2250.0

    def test_stdout_mode(self, layout_file, capsys):
        rc = main(["schedule", str(layout_file), "--model", "slowlin"])
        assert rc == 0
        captured = capsys.readouterr()
        schedule = parse_schedule(captured.out)
        assert schedule.makespan == 2250.0
        assert "makespan_ms" in captured.err

    def test_horizon_flag_enables_repeats(self, layout_file, capsys):
        rc = main(
            ["schedule", str(layout_file), "--model", "slowlin", "--horizon", "7000"]
        )
        assert rc == 0
        schedule = parse_schedule(capsys.readouterr().out)
        assert max(len(se.starts) for se in schedule.edges) >= 2

    def test_config_file_layered_with_flags(self, layout_file, tmp_path, capsys):
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(json.dumps({"sigma_a_px_s": 100}), encoding="utf-8")
        rc = main(
            [
                "schedule",
                str(layout_file),
                "--config",
                str(cfg_path),
                "--sigma-a",
                "200",
            ]
        )
        assert rc == 0
        schedule = parse_schedule(capsys.readouterr().out)
        assert schedule.config.sigma_a == 200.0

    def test_horizon_too_small_is_domain_error(self, layout_file, capsys):
        rc = main(
            ["schedule", str(layout_file), "--model", "slowlin", "--horizon", "100"]
        )
        assert rc == 1
        assert "horizon" in capsys.readouterr().err


class TestRender:
    def test_frames_directory(self, layout_file, schedule_file, tmp_path, capsys):
        out_dir = tmp_path / "frames"
        rc = main(
            [
                "render",
                str(layout_file),
                "--schedule",
                str(schedule_file),
                "--out",
                str(out_dir),
            ]
        )
        assert rc == 0
        files = sorted(p.name for p in out_dir.iterdir())
        assert len(files) == 69
        assert files[0] == "frame_000000.svg"

    def test_frame_at_zero_is_resting_drawing(
        self, layout_file, schedule_file, tmp_path, capsys
    ):
        out_dir = tmp_path / "single"
        rc = main(
            [
                "render",
                str(layout_file),
                "--schedule",
                str(schedule_file),
                "--out",
                str(out_dir),
                "--frame-at",
                "0",
            ]
        )
        assert rc == 0
        (path,) = list(out_dir.iterdir())
        text = path.read_text(encoding="utf-8")
        # resting drawing: every edge split into two stubs
        assert text.count("<line") == 4
        assert 'x2="100.000"' in text  # quarter stub of the 400 px edge

    def test_schedule_roundtrip_renders_identically(
        self, layout_file, schedule_file, tmp_path
    ):
        from edgemorph import PRESETS, compute_schedule, frame_to_svg, sample_frame

        layout = parse_layout(layout_file.read_bytes())
        direct = compute_schedule(layout, PRESETS["slowlin"])
        reread = parse_schedule(schedule_file.read_bytes())
        for t in (0.0, 137.0, 1050.0, 2249.0):
            a = frame_to_svg(sample_frame(layout, direct.config, direct, t))
            b = frame_to_svg(sample_frame(layout, reread.config, reread, t))
            assert a == b

    def test_animated_output(self, layout_file, schedule_file, tmp_path):
        out_dir = tmp_path / "anim"
        rc = main(
            [
                "render",
                str(layout_file),
                "--schedule",
                str(schedule_file),
                "--out",
                str(out_dir),
                "--animated",
            ]
        )
        assert rc == 0
        assert (out_dir / "animation.svg").exists()


class TestTrial:
    def test_writes_trial_and_colored_layout(self, layout_file, tmp_path, capsys):
        out = tmp_path / "trial.json"
        rc = main(
            ["trial", str(layout_file), "--task", "T1", "--seed", "5", "-o", str(out)]
        )
        assert rc == 0
        doc = json.loads(out.read_text(encoding="utf-8"))
        assert doc["task"] == "T1"
        assert len(doc["blue"]) == 2
        assert isinstance(doc["ground_truth"], bool)
        layout_copy = json.loads((tmp_path / "trial_layout.json").read_text())
        blues = {n["id"] for n in layout_copy["nodes"] if n["color"] == "blue"}
        assert blues == set(doc["blue"])

    def test_deterministic_under_seed(self, layout_file, tmp_path):
        first = tmp_path / "one.json"
        second = tmp_path / "two.json"
        main(["trial", str(layout_file), "--task", "T4", "--seed", "9", "-o", str(first)])
        main(["trial", str(layout_file), "--task", "T4", "--seed", "9", "-o", str(second)])
        assert first.read_text() == second.read_text()

    def test_bad_task_is_usage_error(self, layout_file, tmp_path):
        rc = main(
            ["trial", str(layout_file), "--task", "T7", "--seed", "1", "-o", "x.json"]
        )
        assert rc == 2


class TestStats:
    def test_model_comparison(self, layout_file, capsys):
        rc = main(
            [
                "stats",
                "--layout",
                str(layout_file),
                "--model-a",
                "slowlin",
                "--model-b",
                "fastlin",
            ]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert "makespan_a_ms 2250.000" in out
        assert "makespan_b_ms 1250.000" in out
        assert "slowdown 0.800000" in out

    def test_missing_config_is_usage_error(self, layout_file, capsys):
        rc = main(["stats", "--layout", str(layout_file), "--model-a", "slowlin"])
        assert rc == 2

    def test_synthetic_forty_node_slowdown_range(self, tmp_path, capsys):
        from gen_layouts import paper_scale_layout

        path = tmp_path / "forty.json"
        path.write_text(layout_to_json(paper_scale_layout(9100)), encoding="utf-8")
        rc = main(
            [
                "stats",
                "--layout",
                str(path),
                "--model-a",
                "slowlin",
                "--model-b",
                "fastlin",
            ]
        )
        assert rc == 0
        out = capsys.readouterr().out
        slowdown = float(out.strip().splitlines()[-1].split()[1])
        assert 0.5 <= slowdown <= 1.0

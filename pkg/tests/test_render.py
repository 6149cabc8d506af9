from pathlib import Path

import pytest

import numpy as np

from edgemorph import (
    GraphLayout,
    PRESETS,
    RenderStyle,
    Schedule,
    compute_schedule,
    export_animation,
    frame_timestamps,
    frame_to_svg,
    sample_frame,
)
from edgemorph.scheduling import sample_ratio_series
from gen_layouts import k4_square

SLOWLIN = PRESETS["slowlin"]
GOLDEN = Path(__file__).resolve().parent / "data" / "golden_frame.svg"


def golden_fixture_svg():
    """Mid-animation frame of a 5-node layout: K4 on a square plus a tail."""
    from edgemorph import EdgeSpec, NodeSpec

    base = k4_square()
    layout = GraphLayout(
        base.nodes + (NodeSpec("t", 50.0, -80.0),),
        base.edges + (EdgeSpec("p", "t"),),
    )
    schedule = compute_schedule(layout, SLOWLIN)
    return frame_to_svg(sample_frame(layout, SLOWLIN, schedule, 400.0))


@pytest.fixture
def cross_schedule(cross_layout):
    return compute_schedule(cross_layout, SLOWLIN)


class TestSampleFrame:
    def test_before_any_start_everything_rests(self, cross_layout, cross_schedule):
        frame = sample_frame(cross_layout, SLOWLIN, cross_schedule, 0.0)
        assert all(stub.ratio == 0.25 for stub in frame.stubs)

    def test_hold_phase_is_fully_drawn(self, cross_layout, cross_schedule):
        frame = sample_frame(cross_layout, SLOWLIN, cross_schedule, 1050.0)
        by_key = {stub.edge.key: stub.ratio for stub in frame.stubs}
        assert by_key[("a", "b")] == 0.5

    def test_after_makespan_everything_rests(self, cross_layout, cross_schedule):
        frame = sample_frame(
            cross_layout, SLOWLIN, cross_schedule, cross_schedule.makespan + 1.0
        )
        assert all(stub.ratio == 0.25 for stub in frame.stubs)

    def test_ratios_always_in_bounds(self, cross_layout, cross_schedule):
        for t in range(0, int(cross_schedule.makespan) + 2, 7):
            frame = sample_frame(cross_layout, SLOWLIN, cross_schedule, float(t))
            for stub in frame.stubs:
                assert 0.25 <= stub.ratio <= 0.5

    def test_millisecond_sweep_matches_validator_series(
        self, cross_layout, cross_schedule
    ):
        times = np.arange(0.0, cross_schedule.makespan + 1.0, 1.0)
        by_key = cross_schedule.starts_by_key()
        for se in cross_schedule.edges:
            series = sample_ratio_series(se.animation, se.starts, SLOWLIN, times)
            for i in (0, 150, 999, 1000, 1500, 2000, len(times) - 1):
                frame = sample_frame(cross_layout, SLOWLIN, cross_schedule, float(times[i]))
                frame_ratio = {s.edge.key: s.ratio for s in frame.stubs}[
                    se.animation.edge.key
                ]
                assert frame_ratio == pytest.approx(float(series[i]), abs=1e-12)

    def test_repeated_animation_uses_latest_start(self, cross_layout):
        from edgemorph.kinematics import with_overrides

        cfg = with_overrides(SLOWLIN, horizon=7000.0)
        schedule = compute_schedule(cross_layout, cfg)
        se = schedule.starts_by_key()[("a", "b")]
        assert len(se.starts) >= 2
        second_start = se.starts[1]
        frame = sample_frame(cross_layout, cfg, schedule, second_start + se.animation.tau)
        ratio = {s.edge.key: s.ratio for s in frame.stubs}[("a", "b")]
        assert ratio == 0.5


class TestFrameToSvg:
    def test_byte_identical(self, cross_layout, cross_schedule):
        first = frame_to_svg(sample_frame(cross_layout, SLOWLIN, cross_schedule, 321.0))
        second = frame_to_svg(sample_frame(cross_layout, SLOWLIN, cross_schedule, 321.0))
        assert first == second

    def test_empty_graph_document(self):
        layout = GraphLayout((), ())
        schedule = Schedule(config=SLOWLIN, edges=(), makespan=0.0)
        svg = frame_to_svg(sample_frame(layout, SLOWLIN, schedule, 0.0))
        assert svg.count("<line") == 0
        assert svg.count("<circle") == 0
        assert '<rect' in svg and 'fill="#ffffff"' in svg

    def test_fully_drawn_edge_is_one_line(self, cross_layout, cross_schedule):
        frame = sample_frame(cross_layout, SLOWLIN, cross_schedule, 1050.0)
        svg = frame_to_svg(frame)
        # edge a-b is at full extension, edge c-d still partial: 1 + 2 lines
        assert svg.count("<line") == 3
        assert '<line x1="0.000" y1="0.000" x2="400.000" y2="0.000"' in svg

    def test_partial_edges_are_two_lines_each(self, cross_layout, cross_schedule):
        svg = frame_to_svg(sample_frame(cross_layout, SLOWLIN, cross_schedule, 0.0))
        assert svg.count("<line") == 4

    def test_nodes_drawn_after_edges(self, cross_layout, cross_schedule):
        svg = frame_to_svg(sample_frame(cross_layout, SLOWLIN, cross_schedule, 0.0))
        assert svg.rindex("<line") < svg.index("<circle")

    def test_style_colors(self, k4_layout):
        from edgemorph import with_color_roles

        layout = with_color_roles(k4_layout, blue=["p"], orange=["q"])
        schedule = Schedule(config=SLOWLIN, edges=(), makespan=0.0)
        svg = frame_to_svg(sample_frame(layout, SLOWLIN, schedule, 0.0))
        assert 'fill="#1f77b4"' in svg
        assert 'fill="#ff7f0e"' in svg
        assert 'fill="#808080"' in svg

    def test_region_tint_halos(self, k4_layout):
        schedule = Schedule(config=SLOWLIN, edges=(), makespan=0.0)
        frame = sample_frame(k4_layout, SLOWLIN, schedule, 0.0)
        svg = frame_to_svg(frame, regions=(("p", "q"), ("r",)))
        assert svg.count('fill="#ffd54d"') == 3

    def test_stub_union_covers_segment_at_half(self, cross_layout, cross_schedule):
        frame = sample_frame(cross_layout, SLOWLIN, cross_schedule, 1050.0)
        stub = {s.edge.key: s for s in frame.stubs}[("a", "b")]
        sx, sy = stub.segment_source[1]
        tx, ty = stub.segment_target[1]
        assert abs(sx - tx) <= 1e-6 and abs(sy - ty) <= 1e-6

    def test_golden_five_node_fixture(self):
        svg = golden_fixture_svg()
        assert svg == GOLDEN.read_text(encoding="utf-8")


class TestExport:
    def test_frame_count_for_example_makespan(self):
        # 2250 ms at 30 fps: the last frame index is ceil(67.5) = 68.
        stamps = frame_timestamps(2250.0, 30.0)
        assert len(stamps) == 69
        assert stamps[0] == 0.0
        assert stamps[-1] >= 2250.0

    def test_export_writes_frames(self, tmp_path, cross_layout, cross_schedule):
        written = export_animation(
            cross_layout, SLOWLIN, cross_schedule, tmp_path / "frames"
        )
        assert len(written) == 69
        assert written[0].name == "frame_000000.svg"
        assert written[-1].name == "frame_000068.svg"

    def test_frame_zero_equals_static_render(self, tmp_path, cross_layout, cross_schedule):
        written = export_animation(
            cross_layout, SLOWLIN, cross_schedule, tmp_path / "frames"
        )
        static = frame_to_svg(sample_frame(cross_layout, SLOWLIN, cross_schedule, 0.0))
        assert written[0].read_text(encoding="utf-8") == static

    def test_exported_frames_match_resampling(self, tmp_path, cross_layout, cross_schedule):
        written = export_animation(
            cross_layout, SLOWLIN, cross_schedule, tmp_path / "frames"
        )
        for k, t in enumerate(frame_timestamps(cross_schedule.makespan, SLOWLIN.fps)):
            expected = frame_to_svg(sample_frame(cross_layout, SLOWLIN, cross_schedule, t))
            assert written[k].read_text(encoding="utf-8") == expected

    def test_animated_document(self, tmp_path, cross_layout, cross_schedule):
        written = export_animation(
            cross_layout,
            SLOWLIN,
            cross_schedule,
            tmp_path / "anim",
            frames=False,
            animated=True,
        )
        assert [p.name for p in written] == ["animation.svg"]
        text = written[0].read_text(encoding="utf-8")
        assert text.count("<animate ") == 8  # 2 edges x 2 stubs x 2 attributes
        assert 'repeatCount="indefinite"' in text
        assert text == (
            export_animation(
                cross_layout,
                SLOWLIN,
                cross_schedule,
                tmp_path / "anim2",
                frames=False,
                animated=True,
            )[0].read_text(encoding="utf-8")
        )


def test_style_rejects_nonpositive_dimensions():
    with pytest.raises(ValueError):
        RenderStyle(node_radius=0.0)

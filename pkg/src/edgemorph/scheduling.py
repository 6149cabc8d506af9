"""Greedy crossing-aware scheduling of edge animations, plus validation.

Start times are chosen greedily: edges in decreasing order of morph duration,
each getting the earliest start that keeps its visits to every shared
avoidable crossing point separated from the other edge's visits by at least
the configured distinctness time. Feasibility is computed exactly with open
forbidden intervals on the start-time axis; a gap of exactly the distinctness
time is feasible. When a schedule horizon is set, further animations of each
edge are appended pass by pass for as long as they fit (each at least one
full animation plus the distinctness time after the previous one).

The first pass always places every edge once and every start is at or after
time zero, so the frame at time zero shows the resting drawing.

:func:`validate_schedule` is an independent check: it samples every edge's
stub ratio on a fixed time grid and verifies ratio bounds, crossing-point
separation, per-edge start separation, and the resting initial frame, without
reusing any of the interval arithmetic that placed the starts.

All starts are quantized to microseconds when placed (rounding up, which can
only relax separations), so serialized schedules with times at 3 decimal
places round-trip losslessly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from statistics import fmean

import numpy as np
from scipy.ndimage import maximum_filter1d

from .crossings import AvoidableCrossing, find_avoidable_crossings
from .easing import evaluate_many, invert_many
from .errors import ConfigError, ParseError, UsageError
from .graph import EdgeSpec, GraphLayout
from .kinematics import (
    AnimationConfig,
    EdgeAnimation,
    ceil_ms,
    config_from_dict,
    config_to_dict,
    edge_animation,
)

_EPS_MS = 1e-6      # forgiveness for float noise in time comparisons
_EPS_RATIO = 1e-12  # forgiveness for float noise in ratio comparisons


@dataclass(frozen=True)
class ScheduledEdge:
    animation: EdgeAnimation
    starts: tuple[float, ...]


@dataclass(frozen=True)
class Schedule:
    """Start times for every edge, with the configuration that produced them."""

    config: AnimationConfig
    edges: tuple[ScheduledEdge, ...]
    makespan: float

    def starts_by_key(self) -> dict[tuple[str, str], ScheduledEdge]:
        return {se.animation.edge.key: se for se in self.edges}


@dataclass(frozen=True)
class ConflictConstraint:
    """A crossing plus each edge's time offset to reach the crossing point."""

    crossing: AvoidableCrossing
    reach_a: float
    reach_b: float


def forbidden_start_window(
    reach: float,
    total: float,
    occupancy: tuple[float, float],
    tau_distinct: float,
) -> tuple[float, float]:
    """Open interval of start times that would violate one occupancy.

    A candidate animation covers the shared point on
    [start + reach, start + total - reach]. Given the other edge's occupancy
    [a, b], a start is feasible iff its coverage ends at least tau_distinct
    before a, or begins at least tau_distinct after b; equality counts as
    elapsed.
    """
    a, b = occupancy
    return (a - tau_distinct - (total - reach), b + tau_distinct - reach)


def _earliest_feasible(base: float, windows: list[tuple[float, float]]) -> float:
    """Smallest microsecond-grid time >= base outside all open windows."""
    c = ceil_ms(max(base, 0.0))
    for lo, hi in sorted(windows):
        if c <= lo:
            break
        if c < hi:
            c = ceil_ms(hi)
    return c


def conflict_constraints(
    layout: GraphLayout,
    cfg: AnimationConfig,
    animations: dict[tuple[str, str], EdgeAnimation],
) -> tuple[ConflictConstraint, ...]:
    """Reach offsets for every avoidable crossing, batched through the easing."""
    crossings = find_avoidable_crossings(layout, cfg.delta0)
    if not crossings:
        return ()
    progress = np.empty(2 * len(crossings))
    for i, crossing in enumerate(crossings):
        nearer_a = min(crossing.ratio_a, 1.0 - crossing.ratio_a)
        nearer_b = min(crossing.ratio_b, 1.0 - crossing.ratio_b)
        progress[2 * i] = (nearer_a - cfg.delta0) / cfg.ratio_span
        progress[2 * i + 1] = (nearer_b - cfg.delta0) / cfg.ratio_span
    fracs = invert_many(cfg.easing, progress)
    return tuple(
        ConflictConstraint(
            crossing=crossing,
            reach_a=animations[crossing.edge_a.key].tau * float(fracs[2 * i]),
            reach_b=animations[crossing.edge_b.key].tau * float(fracs[2 * i + 1]),
        )
        for i, crossing in enumerate(crossings)
    )


def compute_schedule(layout: GraphLayout, cfg: AnimationConfig) -> Schedule:
    """Greedy schedule for all edges of a layout under one configuration.

    Deterministic: ties in morph duration break lexicographically by edge id,
    and repeat passes walk edges in the same order. Raises ConfigError when a
    horizon is too short for even a single animation of every edge.
    """
    animations = {e.key: edge_animation(e, layout, cfg) for e in layout.edges}
    constraints = conflict_constraints(layout, cfg, animations)

    partners: dict[tuple[str, str], list[tuple[tuple[str, str], float, float]]] = {
        key: [] for key in animations
    }
    for con in constraints:
        key_a = con.crossing.edge_a.key
        key_b = con.crossing.edge_b.key
        partners[key_a].append((key_b, con.reach_a, con.reach_b))
        partners[key_b].append((key_a, con.reach_b, con.reach_a))

    order = sorted(animations, key=lambda k: (-animations[k].tau, k))
    starts: dict[tuple[str, str], list[float]] = {key: [] for key in animations}

    def windows_for(key: tuple[str, str]) -> list[tuple[float, float]]:
        own_total = animations[key].total
        out = []
        for other, reach_self, reach_other in partners[key]:
            other_total = animations[other].total
            for ts in starts[other]:
                occupancy = (ts + reach_other, ts + other_total - reach_other)
                out.append(
                    forbidden_start_window(
                        reach_self, own_total, occupancy, cfg.tau_distinct
                    )
                )
        return out

    for key in order:
        starts[key].append(_earliest_feasible(0.0, windows_for(key)))

    if cfg.horizon is not None:
        first_pass_end = max(
            (starts[key][0] + animations[key].total for key in order), default=0.0
        )
        if first_pass_end > cfg.horizon + _EPS_MS:
            raise ConfigError(
                f"horizon {cfg.horizon} ms cannot fit one animation of every "
                f"edge (needs {first_pass_end} ms)"
            )
        progressed = True
        while progressed:
            progressed = False
            for key in order:
                base = starts[key][-1] + animations[key].total + cfg.tau_distinct
                candidate = _earliest_feasible(base, windows_for(key))
                if candidate + animations[key].total <= cfg.horizon + _EPS_MS:
                    starts[key].append(candidate)
                    progressed = True

    scheduled = tuple(
        ScheduledEdge(animations[key], tuple(starts[key]))
        for key in sorted(animations)
    )
    makespan = max(
        (ts + se.animation.total for se in scheduled for ts in se.starts),
        default=0.0,
    )
    return Schedule(config=cfg, edges=scheduled, makespan=makespan)


def sample_ratio_series(
    anim: EdgeAnimation,
    starts: tuple[float, ...],
    cfg: AnimationConfig,
    times: np.ndarray,
) -> np.ndarray:
    """Stub ratio of one edge at every time of an ascending sample grid."""
    t = np.asarray(times, dtype=float)
    out = np.full(t.shape, cfg.delta0)
    for ts in starts:
        lo = int(np.searchsorted(t, ts, side="right"))
        hi = int(np.searchsorted(t, ts + anim.total, side="left"))
        if lo >= hi:
            continue
        rel = t[lo:hi] - ts
        seg = np.full(rel.shape, 0.5)
        growing = rel < anim.tau
        retracting = rel > anim.tau + cfg.tau_half
        if np.any(growing):
            seg[growing] = cfg.delta0 + cfg.ratio_span * evaluate_many(
                cfg.easing, rel[growing] / anim.tau
            )
        if np.any(retracting):
            seg[retracting] = cfg.delta0 + cfg.ratio_span * evaluate_many(
                cfg.easing, (anim.total - rel[retracting]) / anim.tau
            )
        out[lo:hi] = seg
    return out


@dataclass(frozen=True)
class ScheduleViolation:
    kind: str  # ratio-range | crossing-separation | start-separation | initial-frame
    time_ms: float | None
    edges: tuple[tuple[str, str], ...]
    detail: str


@dataclass(frozen=True)
class ScheduleReport:
    passed: bool
    sample_count: int
    step_ms: float
    violations: tuple[ScheduleViolation, ...]


def validate_schedule(
    layout: GraphLayout,
    cfg: AnimationConfig,
    schedule: Schedule,
    step_ms: float = 1.0,
) -> ScheduleReport:
    """Brute-force check of a schedule by dense time sampling.

    Samples every edge's ratio on a step_ms grid over the whole schedule and
    checks: (a) ratios stay within [delta0, 1/2]; (b) for every avoidable
    crossing the two edges never cover the point within tau_distinct of each
    other (a gap of exactly tau_distinct is fine); (c) per-edge starts are
    non-negative, sorted, and separated by a full animation plus tau_distinct;
    (d) everything rests at delta0 at time zero. Edges absent from the
    schedule are treated as never animating.
    """
    by_key = schedule.starts_by_key()
    end = schedule.makespan
    for se in schedule.edges:
        for ts in se.starts:
            end = max(end, ts + se.animation.total)
    count = int(np.floor(end / step_ms)) + 1 if end > 0 else 1
    times = np.arange(count) * step_ms

    violations: list[ScheduleViolation] = []

    def add(kind, time_ms, edges, detail):
        if len(violations) < 100:
            violations.append(ScheduleViolation(kind, time_ms, edges, detail))

    for se in schedule.edges:
        key = se.animation.edge.key
        prev = None
        for ts in se.starts:
            if ts < 0.0:
                add("start-separation", ts, (key,), "negative start")
            if prev is not None:
                needed = se.animation.total + cfg.tau_distinct
                if ts - prev < needed - _EPS_MS:
                    add(
                        "start-separation",
                        ts,
                        (key,),
                        f"gap {ts - prev} ms < animation + distinctness {needed} ms",
                    )
            prev = ts

    series: dict[tuple[str, str], np.ndarray] = {}
    for se in schedule.edges:
        key = se.animation.edge.key
        values = sample_ratio_series(se.animation, se.starts, cfg, times)
        series[key] = values
        if abs(values[0] - cfg.delta0) > _EPS_RATIO:
            add("initial-frame", 0.0, (key,), f"ratio {values[0]} at time 0")
        bad = (values < cfg.delta0 - _EPS_RATIO) | (values > 0.5 + _EPS_RATIO)
        if np.any(bad):
            i = int(np.argmax(bad))
            add("ratio-range", float(times[i]), (key,), f"ratio {values[i]}")

    lag = int(np.floor((cfg.tau_distinct - _EPS_MS) / step_ms))
    if lag >= 0:
        dilated: dict[tuple[str, str], np.ndarray] = {}

        def dilate(key: tuple[str, str]) -> np.ndarray:
            if key not in dilated:
                dilated[key] = maximum_filter1d(
                    series[key], size=2 * lag + 1, mode="constant", cval=cfg.delta0
                )
            return dilated[key]

        for crossing in find_avoidable_crossings(layout, cfg.delta0):
            key_a, key_b = crossing.edge_a.key, crossing.edge_b.key
            if key_a not in by_key or key_b not in by_key:
                continue
            nearer_a = min(crossing.ratio_a, 1.0 - crossing.ratio_a)
            nearer_b = min(crossing.ratio_b, 1.0 - crossing.ratio_b)
            cover_a = series[key_a] >= nearer_a - _EPS_RATIO
            near_b = dilate(key_b) >= nearer_b - _EPS_RATIO
            clash = cover_a & near_b
            if np.any(clash):
                i = int(np.argmax(clash))
                add(
                    "crossing-separation",
                    float(times[i]),
                    (key_a, key_b),
                    f"both within {cfg.tau_distinct} ms of crossing "
                    f"({crossing.point[0]:.3f}, {crossing.point[1]:.3f})",
                )

    return ScheduleReport(
        passed=not violations,
        sample_count=count,
        step_ms=step_ms,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class ScheduleStats:
    makespan_ms: float
    edge_count: int
    total_starts: int
    min_starts_per_edge: int
    mean_starts_per_edge: float
    max_starts_per_edge: int
    mean_inter_repeat_gap_ms: float | None
    slowdown: float | None = None


def schedule_stats(schedule: Schedule, baseline: Schedule | None = None) -> ScheduleStats:
    """Summary numbers for a schedule, optionally relative to a baseline.

    The slowdown is makespan / baseline makespan - 1 and requires both
    schedules to cover the same edge set. The inter-repeat gap is the idle
    time between the end of one animation of an edge and the start of its
    next one, averaged over all such pairs. The makespan is the schedule's
    own span: a single pass when no horizon was set, repeats included
    otherwise, so model comparisons should use schedules built the same way.
    """
    counts = [len(se.starts) for se in schedule.edges]
    gaps: list[float] = []
    for se in schedule.edges:
        for prev, nxt in zip(se.starts, se.starts[1:]):
            gaps.append(nxt - (prev + se.animation.total))
    slowdown = None
    if baseline is not None:
        keys = {se.animation.edge.key for se in schedule.edges}
        base_keys = {se.animation.edge.key for se in baseline.edges}
        if keys != base_keys:
            raise UsageError("schedules cover different edge sets")
        if baseline.makespan <= 0.0:
            raise UsageError("baseline schedule has zero makespan")
        slowdown = schedule.makespan / baseline.makespan - 1.0
    return ScheduleStats(
        makespan_ms=schedule.makespan,
        edge_count=len(schedule.edges),
        total_starts=sum(counts),
        min_starts_per_edge=min(counts, default=0),
        mean_starts_per_edge=fmean(counts) if counts else 0.0,
        max_starts_per_edge=max(counts, default=0),
        mean_inter_repeat_gap_ms=fmean(gaps) if gaps else None,
        slowdown=slowdown,
    )


def schedule_to_dict(schedule: Schedule) -> dict:
    """JSON-ready form; all times rounded to 3 decimals (already exact)."""
    return {
        "config": config_to_dict(schedule.config),
        "makespan_ms": round(schedule.makespan, 3),
        "edges": [
            {
                "source": se.animation.edge.source,
                "target": se.animation.edge.target,
                "tau_ms": round(se.animation.tau, 3),
                "total_ms": round(se.animation.total, 3),
                "starts_ms": [round(ts, 3) for ts in se.starts],
            }
            for se in schedule.edges
        ],
    }


def schedule_to_json(schedule: Schedule) -> str:
    return json.dumps(schedule_to_dict(schedule), indent=2)


def schedule_from_dict(doc: dict) -> Schedule:
    """Rebuild a schedule from its file form.

    Totals and the makespan are recomputed from the stored morph durations
    and the embedded configuration, so a written schedule reads back equal to
    the in-memory original.
    """
    try:
        cfg = config_from_dict(doc["config"])
        entries = doc["edges"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"schedule document is missing {exc}") from exc
    edges = []
    for entry in entries:
        try:
            edge = EdgeSpec(str(entry["source"]), str(entry["target"]))
            tau = float(entry["tau_ms"])
            starts = tuple(float(ts) for ts in entry["starts_ms"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad schedule edge entry: {exc}") from exc
        anim = EdgeAnimation(edge=edge, tau=tau, total=2.0 * tau + cfg.tau_half)
        edges.append(ScheduledEdge(anim, starts))
    makespan = max(
        (ts + se.animation.total for se in edges for ts in se.starts),
        default=0.0,
    )
    return Schedule(config=cfg, edges=tuple(edges), makespan=makespan)


def parse_schedule(raw: bytes | str) -> Schedule:
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"schedule is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("schedule document must be a JSON object")
    return schedule_from_dict(doc)

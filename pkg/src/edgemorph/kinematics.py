"""Time evolution of stub length ratios for a single edge animation.

One animation of an edge grows both stubs from the resting ratio to 1/2,
holds the edge fully drawn for a fixed time, then retracts along the
time-mirrored growth curve. The one-way morph time is length-proportional:
each stub tip travels (1/2 - delta0) * edge length at the configured average
tip speed, so the morph time depends only on edge length, never on the easing
curve. All times are real-valued milliseconds; durations are quantized to
microseconds at creation so that serialized schedules (3 decimal places)
round-trip without loss.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

from .easing import (
    EASE,
    LINEAR,
    EasingSpec,
    easing_to_string,
    evaluate,
    invert,
    parse_easing,
    verify_monotone,
)
from .errors import ConfigError, ParseError, RangeError
from .graph import EdgeSpec, GraphLayout, edge_length


def quantize_ms(value: float) -> float:
    """Round a millisecond value to the microsecond grid."""
    return round(value * 1000.0) / 1000.0


def ceil_ms(value: float) -> float:
    """Smallest microsecond-grid value at or above the input."""
    return math.ceil(value * 1000.0) / 1000.0


@dataclass(frozen=True)
class AnimationConfig:
    """Animation parameters shared by every edge of a drawing.

    sigma_a       average stub tip speed in px/s
    delta0        resting stub length ratio, in (0, 1/2)
    tau_half      hold time fully drawn, ms
    tau_distinct  minimum separation between animations and between two
                  edges' visits to a shared crossing point, ms
    easing        progress curve, strictly increasing on [0, 1]
    fps           frame rate used by rendering and export
    horizon       optional schedule length bound in ms; enables repeated
                  animations of each edge
    """

    sigma_a: float
    delta0: float = 0.25
    tau_half: float = 100.0
    tau_distinct: float = 50.0
    easing: EasingSpec = LINEAR
    fps: float = 30.0
    horizon: float | None = None

    def __post_init__(self) -> None:
        if not self.sigma_a > 0.0:
            raise ConfigError(f"sigma_a must be positive, got {self.sigma_a}")
        if not 0.0 < self.delta0 < 0.5:
            raise ConfigError(f"delta0 must be in (0, 1/2), got {self.delta0}")
        if self.tau_half < 0.0:
            raise ConfigError(f"tau_half must be >= 0, got {self.tau_half}")
        if self.tau_distinct < 0.0:
            raise ConfigError(f"tau_distinct must be >= 0, got {self.tau_distinct}")
        if not self.fps > 0.0:
            raise ConfigError(f"fps must be positive, got {self.fps}")
        if self.horizon is not None and self.horizon <= 0.0:
            raise ConfigError(f"horizon must be positive, got {self.horizon}")
        if not self.easing.is_linear:
            for name, value in (("y1", self.easing.y1), ("y2", self.easing.y2)):
                if not 0.0 <= value <= 1.0:
                    raise ConfigError(
                        f"easing control {name}={value} outside [0, 1]"
                    )
        report = verify_monotone(self.easing)
        if not report.passed:
            raise ConfigError(f"easing rejected: {report.reason}")

    @property
    def ratio_span(self) -> float:
        return 0.5 - self.delta0


#: The four stock parameter sets: slow/fast tip speed crossed with linear/ease.
PRESETS: dict[str, AnimationConfig] = {
    "slowlin": AnimationConfig(sigma_a=100.0, easing=LINEAR),
    "sloweas": AnimationConfig(sigma_a=100.0, easing=EASE),
    "fastlin": AnimationConfig(sigma_a=200.0, easing=LINEAR),
    "fasteas": AnimationConfig(sigma_a=200.0, easing=EASE),
}


@dataclass(frozen=True)
class EdgeAnimation:
    """Durations of one edge's animation: one-way morph time and total."""

    edge: EdgeSpec
    tau: float    # one-way morph duration, ms
    total: float  # 2 * tau + hold, ms

    def __post_init__(self) -> None:
        if not self.tau > 0.0:
            raise ConfigError(f"morph duration must be positive, got {self.tau}")


def edge_animation(
    edge: EdgeSpec | tuple[str, str], layout: GraphLayout, cfg: AnimationConfig
) -> EdgeAnimation:
    """Durations for one edge: tip travel distance over average tip speed."""
    length = edge_length(layout, edge)
    if isinstance(edge, tuple):
        edge = EdgeSpec(*edge)
    tau = quantize_ms(cfg.ratio_span * length / cfg.sigma_a * 1000.0)
    tau = max(tau, 0.001)  # keep sub-microsecond edges representable
    return EdgeAnimation(edge=edge, tau=tau, total=2.0 * tau + cfg.tau_half)


def stub_ratio_at(anim: EdgeAnimation, cfg: AnimationConfig, t_rel: float) -> float:
    """Stub length ratio at a time offset from the animation start.

    Piecewise: resting ratio outside the animation, eased growth, full hold,
    then the growth curve mirrored in time.
    """
    if t_rel <= 0.0 or t_rel >= anim.total:
        return cfg.delta0
    if t_rel < anim.tau:
        return cfg.delta0 + cfg.ratio_span * evaluate(cfg.easing, t_rel / anim.tau)
    if t_rel <= anim.tau + cfg.tau_half:
        return 0.5
    return cfg.delta0 + cfg.ratio_span * evaluate(
        cfg.easing, (anim.total - t_rel) / anim.tau
    )


def time_to_ratio(anim: EdgeAnimation, cfg: AnimationConfig, ratio: float) -> float:
    """Offset from animation start at which the growing stubs reach a ratio."""
    if not cfg.delta0 < ratio <= 0.5:
        raise RangeError(
            f"ratio {ratio} outside ({cfg.delta0}, 1/2]"
        )
    progress = (ratio - cfg.delta0) / cfg.ratio_span
    return anim.tau * invert(cfg.easing, progress)


def occupancy_interval(
    anim: EdgeAnimation,
    cfg: AnimationConfig,
    point_ratio: float,
    start_ts: float,
) -> tuple[float, float]:
    """Closed time interval during which a point on the edge is covered.

    The point is given as its along-edge ratio. It is covered once the nearer
    stub tip reaches it, stays covered through full extension and the hold,
    and is released at the mirrored time during retraction. Points within the
    resting ratio of an endpoint are always covered, so they are out of range
    here.
    """
    if not cfg.delta0 < point_ratio < 1.0 - cfg.delta0:
        raise RangeError(
            f"point ratio {point_ratio} outside ({cfg.delta0}, {1.0 - cfg.delta0})"
        )
    nearer = min(point_ratio, 1.0 - point_ratio)
    reach = time_to_ratio(anim, cfg, nearer)
    return (start_ts + reach, start_ts + anim.total - reach)


def config_to_dict(cfg: AnimationConfig) -> dict:
    """JSON-ready form of a configuration."""
    return {
        "sigma_a_px_s": cfg.sigma_a,
        "delta0": cfg.delta0,
        "tau_half_ms": cfg.tau_half,
        "tau_distinct_ms": cfg.tau_distinct,
        "easing": easing_to_string(cfg.easing),
        "fps": cfg.fps,
        "horizon_ms": cfg.horizon,
    }


_CONFIG_KEYS = {
    "sigma_a_px_s",
    "delta0",
    "tau_half_ms",
    "tau_distinct_ms",
    "easing",
    "fps",
    "horizon_ms",
}


def config_from_dict(doc: dict) -> AnimationConfig:
    unknown = set(doc) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    easing = doc.get("easing", "linear")
    if isinstance(easing, str):
        easing_spec = parse_easing(easing)
    else:
        raise ConfigError("easing must be a string")
    try:
        return AnimationConfig(
            sigma_a=float(doc.get("sigma_a_px_s", 100.0)),
            delta0=float(doc.get("delta0", 0.25)),
            tau_half=float(doc.get("tau_half_ms", 100.0)),
            tau_distinct=float(doc.get("tau_distinct_ms", 50.0)),
            easing=easing_spec,
            fps=float(doc.get("fps", 30.0)),
            horizon=None if doc.get("horizon_ms") is None else float(doc["horizon_ms"]),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad config value: {exc}") from exc


def parse_config(raw: bytes | str) -> AnimationConfig:
    """Parse a configuration document; absent keys fall back to the defaults."""
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("config document must be a JSON object")
    return config_from_dict(doc)


def with_overrides(cfg: AnimationConfig, **kwargs) -> AnimationConfig:
    """New configuration with some fields replaced."""
    return replace(cfg, **kwargs)

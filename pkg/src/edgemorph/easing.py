"""Easing functions: strictly monotone maps from elapsed-time fraction to progress.

Two families are supported. ``linear`` is the identity. ``cubic-bezier`` is the
web-style timing curve through (0,0) and (1,1) with two inner control points;
its x coordinate is the time fraction and its y coordinate the progress, so
evaluating it as a function requires solving x(p) = t numerically. The solver
is a safeguarded Newton iteration that falls back to bisection, the same
strategy browsers use for CSS timing functions.

Evaluation and inversion are exact at the interval boundaries: 0 maps to 0 and
1 maps to 1 without touching the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConfigError, RangeError, UsageError

LINEAR_KIND = "linear"
CUBIC_KIND = "cubic-bezier"

# Newton acceptance: both the residual and the last step must be this small,
# otherwise the element is re-solved by bisection.
_NEWTON_TOL = 1e-9
_NEWTON_ITERATIONS = 8
_BISECTION_ITERATIONS = 48

#: Grid size used by verify_monotone and the documented round-trip guarantees.
MONOTONE_GRID = 10_000


@dataclass(frozen=True)
class EasingSpec:
    """Description of an easing curve.

    For the cubic kind the inner control points are (x1, y1) and (x2, y2);
    x1 and x2 must lie in [0, 1] so the curve is a function of the time
    fraction. The y values are unconstrained here so that a candidate curve
    can still be inspected by :func:`verify_monotone`; configurations reject
    curves whose progress leaves [0, 1] or is not strictly increasing.
    """

    kind: str
    x1: float = 0.0
    y1: float = 0.0
    x2: float = 1.0
    y2: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in (LINEAR_KIND, CUBIC_KIND):
            raise ConfigError(f"unknown easing kind {self.kind!r}")
        if self.kind == CUBIC_KIND:
            for name, value in (("x1", self.x1), ("x2", self.x2)):
                if not 0.0 <= value <= 1.0:
                    raise RangeError(f"easing control {name}={value} outside [0, 1]")

    @property
    def is_linear(self) -> bool:
        return self.kind == LINEAR_KIND


LINEAR = EasingSpec(LINEAR_KIND)
#: The standard web easing curve, cubic-bezier(0.25, 0.1, 0.25, 1).
EASE = EasingSpec(CUBIC_KIND, 0.25, 0.1, 0.25, 1.0)

#: A cubic parameterization of the identity, useful for consistency checks.
IDENTITY_BEZIER = EasingSpec(CUBIC_KIND, 1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0)


@dataclass(frozen=True)
class EasingEval:
    """Evaluator for one spec with precomputed polynomial coefficients."""

    spec: EasingSpec
    tolerance: float = 1e-7

    def __post_init__(self) -> None:
        # Coefficients of x(p) = ((ax p + bx) p + cx) p, and likewise for y.
        cx = 3.0 * self.spec.x1
        bx = 3.0 * (self.spec.x2 - self.spec.x1) - cx
        object.__setattr__(self, "_xc", (1.0 - cx - bx, bx, cx))
        cy = 3.0 * self.spec.y1
        by = 3.0 * (self.spec.y2 - self.spec.y1) - cy
        object.__setattr__(self, "_yc", (1.0 - cy - by, by, cy))

    def curve_x(self, p):
        a, b, c = self._xc
        return ((a * p + b) * p + c) * p

    def curve_y(self, p):
        a, b, c = self._yc
        return ((a * p + b) * p + c) * p

    def solve_x(self, targets: np.ndarray) -> np.ndarray:
        """Parameters p with x(p) = target, for targets in [0, 1]."""
        return _solve_monotone_cubic(self._xc, targets)

    def solve_y(self, targets: np.ndarray) -> np.ndarray:
        """Parameters p with y(p) = target; requires y monotone on [0, 1]."""
        return _solve_monotone_cubic(self._yc, targets)


@lru_cache(maxsize=64)
def _evaluator(spec: EasingSpec) -> EasingEval:
    return EasingEval(spec)


def _solve_monotone_cubic(coeffs: tuple[float, float, float], targets) -> np.ndarray:
    """Solve ((a p + b) p + c) p = target on [0, 1], element-wise.

    Newton from p = target, accepted only when both the residual and the last
    step are below 1e-9; remaining elements fall back to bisection, which is
    safe because the axis polynomial is monotone on [0, 1].
    """
    a, b, c = coeffs
    t = np.asarray(targets, dtype=float)
    p = np.clip(t, 0.0, 1.0)
    last_step = np.full(t.shape, np.inf)
    for _ in range(_NEWTON_ITERATIONS):
        residual = ((a * p + b) * p + c) * p - t
        deriv = (3.0 * a * p + 2.0 * b) * p + c
        safe = np.abs(deriv) > 1e-12
        step = np.where(safe, residual / np.where(safe, deriv, 1.0), np.inf)
        new_p = np.clip(p - np.where(np.isfinite(step), step, 0.0), 0.0, 1.0)
        last_step = np.where(np.isfinite(step), np.abs(new_p - p), np.inf)
        p = new_p
    residual = ((a * p + b) * p + c) * p - t
    unsettled = (np.abs(residual) > _NEWTON_TOL) | (last_step > _NEWTON_TOL)
    if np.any(unsettled):
        tt = t[unsettled]
        lo = np.zeros_like(tt)
        hi = np.ones_like(tt)
        for _ in range(_BISECTION_ITERATIONS):
            mid = 0.5 * (lo + hi)
            below = ((a * mid + b) * mid + c) * mid < tt
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        p[unsettled] = 0.5 * (lo + hi)
    return p


def bezier_xy(spec: EasingSpec, p: float) -> tuple[float, float]:
    """Point on the cubic curve at parameter p: (time fraction, progress)."""
    if spec.is_linear:
        raise UsageError("bezier_xy needs a cubic-bezier spec")
    if not 0.0 <= p <= 1.0:
        raise RangeError(f"curve parameter {p} outside [0, 1]")
    ev = _evaluator(spec)
    return float(ev.curve_x(p)), float(ev.curve_y(p))


def evaluate_many(spec: EasingSpec, time_fracs) -> np.ndarray:
    """Vectorized progress values for time fractions in [0, 1].

    Interior values are clamped to [0, 1]; 0 and 1 map to exactly 0 and 1.
    """
    t = np.asarray(time_fracs, dtype=float)
    if np.any((t < 0.0) | (t > 1.0)):
        raise RangeError("time fraction outside [0, 1]")
    if spec.is_linear:
        return t.copy()
    ev = _evaluator(spec)
    out = np.clip(ev.curve_y(ev.solve_x(t)), 0.0, 1.0)
    out = np.where(t == 0.0, 0.0, out)
    out = np.where(t == 1.0, 1.0, out)
    return out


def evaluate(spec: EasingSpec, time_frac: float) -> float:
    """Progress reached after the given fraction of the morph time."""
    return float(evaluate_many(spec, np.array([time_frac]))[0])


def invert_many(spec: EasingSpec, progresses) -> np.ndarray:
    """Vectorized time fractions at which each progress value is reached.

    Only meaningful for accepted (strictly increasing) specs; configurations
    guarantee that before any inversion happens.
    """
    g = np.asarray(progresses, dtype=float)
    if np.any((g < 0.0) | (g > 1.0)):
        raise RangeError("progress outside [0, 1]")
    if spec.is_linear:
        return g.copy()
    ev = _evaluator(spec)
    out = np.clip(ev.curve_x(ev.solve_y(g)), 0.0, 1.0)
    out = np.where(g == 0.0, 0.0, out)
    out = np.where(g == 1.0, 1.0, out)
    return out


def invert(spec: EasingSpec, progress: float) -> float:
    """Time fraction at which the given progress is reached."""
    return float(invert_many(spec, np.array([progress]))[0])


@dataclass(frozen=True)
class MonotoneReport:
    """Outcome of sampling an easing curve for strict monotonicity."""

    passed: bool
    reason: str | None = None
    grid_index: int | None = None
    pair: tuple[float, float] | None = None


@lru_cache(maxsize=64)
def verify_monotone(spec: EasingSpec) -> MonotoneReport:
    """Sample the curve on a uniform 10^4-point grid and check it is usable.

    Passes iff the sampled progress stays inside [0, 1], is strictly
    increasing, and is exact at the endpoints. Failures are reported, not
    raised, so candidate curves can be inspected before acceptance.
    """
    if spec.is_linear:
        return MonotoneReport(passed=True)
    grid = np.linspace(0.0, 1.0, MONOTONE_GRID)
    ev = _evaluator(spec)
    values = ev.curve_y(ev.solve_x(grid))
    values[0] = 0.0
    values[-1] = 1.0
    out_of_range = (values < 0.0) | (values > 1.0)
    if np.any(out_of_range):
        i = int(np.argmax(out_of_range))
        return MonotoneReport(
            passed=False,
            reason="progress leaves [0, 1]",
            grid_index=i,
            pair=(float(grid[i]), float(values[i])),
        )
    diffs = np.diff(values)
    if np.any(diffs <= 0.0):
        i = int(np.argmax(diffs <= 0.0))
        return MonotoneReport(
            passed=False,
            reason="progress not strictly increasing",
            grid_index=i,
            pair=(float(values[i]), float(values[i + 1])),
        )
    return MonotoneReport(passed=True)


def parse_easing(text: str) -> EasingSpec:
    """Parse an easing description: "linear", "ease", or "cubic-bezier:x1,y1,x2,y2"."""
    name = text.strip()
    if name == "linear":
        return LINEAR
    if name == "ease":
        return EASE
    if name.startswith("cubic-bezier:"):
        body = name[len("cubic-bezier:"):]
        parts = body.split(",")
        if len(parts) != 4:
            raise ConfigError(f"cubic-bezier needs 4 numbers, got {body!r}")
        try:
            x1, y1, x2, y2 = (float(s) for s in parts)
        except ValueError as exc:
            raise ConfigError(f"bad cubic-bezier controls {body!r}") from exc
        try:
            return EasingSpec(CUBIC_KIND, x1, y1, x2, y2)
        except RangeError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError(f"unknown easing {text!r}")


def easing_to_string(spec: EasingSpec) -> str:
    """Canonical string form accepted back by :func:`parse_easing`."""
    if spec.is_linear:
        return "linear"
    if spec == EASE:
        return "ease"
    return f"cubic-bezier:{spec.x1!r},{spec.y1!r},{spec.x2!r},{spec.y2!r}"

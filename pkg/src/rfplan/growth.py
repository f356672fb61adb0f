"""Doubling-period fits for access-point count series.

Deployed AP counts grow close to exponentially, so a straight line through
log2(count) captures the trend: its inverse slope is the doubling period in
days, and extrapolating one period ahead predicts the next doubling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError


class NoGrowthError(DomainError):
    """The series is flat: a doubling period is undefined."""


@dataclass(frozen=True)
class CountSeries:
    """(t_days, count) samples, strictly increasing in time."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "points", tuple((float(t), float(c)) for t, c in self.points)
        )
        if len(self.points) < 2:
            raise DomainError(f"need at least 2 points, got {len(self.points)}")
        for (t0, c0), (t1, c1) in zip(self.points, self.points[1:]):
            if not t1 > t0:
                raise DomainError(f"times must be strictly increasing ({t0} -> {t1})")
        for t, c in self.points:
            if not (c > 0 and math.isfinite(c) and math.isfinite(t)):
                raise DomainError(f"counts must be positive and finite, got ({t}, {c})")


@dataclass(frozen=True)
class GrowthFit:
    doubling_days: float
    intercept_log2: float
    r_squared: float


def fit_doubling(series: CountSeries) -> GrowthFit:
    """Least squares of log2(count) against time; doubling = 1/slope."""
    ts = [t for t, _ in series.points]
    ys = [math.log2(c) for _, c in series.points]
    n = len(ts)
    t_mean = sum(ts) / n
    y_mean = sum(ys) / n
    s_tt = sum((t - t_mean) ** 2 for t in ts)
    s_ty = sum((t - t_mean) * (y - y_mean) for t, y in zip(ts, ys))
    slope = s_ty / s_tt
    if slope == 0.0:
        raise NoGrowthError("flat series: log2(count) has zero slope")
    intercept = y_mean - slope * t_mean
    ss_res = sum((y - (intercept + slope * t)) ** 2 for t, y in zip(ts, ys))
    ss_tot = sum((y - y_mean) ** 2 for y in ys)
    r_squared = 1.0 if ss_tot == 0.0 else max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return GrowthFit(
        doubling_days=1.0 / slope,
        intercept_log2=intercept,
        r_squared=r_squared,
    )


def predict_doubling_date(fit: GrowthFit, from_t_days: float) -> float:
    """Time at which the count has doubled once more, one period out."""
    if fit.doubling_days <= 0:
        raise DomainError(
            f"doubling period must be positive to extrapolate, got {fit.doubling_days}"
        )
    return from_t_days + fit.doubling_days


def read_count_series(source: str | Path) -> CountSeries:
    """Parse two-column text (t_days count), comma or whitespace separated.

    Accepts a path or the text itself; blank lines and #-comments skipped.
    """
    text = source
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).exists()):
        text = Path(source).read_text()
    points = []
    for lineno, line in enumerate(str(text).splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.replace(",", " ").split()
        if len(parts) != 2:
            raise DomainError(f"line {lineno}: expected 't_days count', got {line!r}")
        try:
            points.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise DomainError(f"line {lineno}: {exc}") from exc
    return CountSeries(points=tuple(points))

"""Merging sweeps from several sensors into one spectrum.

Two modes:

* max-hold: bin-wise maximum over every sweep seen. Commutative and
  idempotent, so sensor streams may interleave arbitrarily.
* ewma: exponential smoothing per sensor in the mW domain (energies
  average, dB values do not), then a bin-wise max across sensors. Per-sensor
  sweeps must arrive in timestamp order.

Sweeps also travel as line-delimited JSON records for logging and replay.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..errors import DomainError
from .frames import SensorSweep

MAX_HOLD = "max-hold"
EWMA = "ewma"

DEFAULT_EWMA_ALPHA = 0.3


@dataclass(frozen=True)
class AggregatedSpectrum:
    """Merged view of one position's RF environment on a fixed bin grid."""

    position_id: str
    mode: str
    start_khz: int
    bin_khz: int
    bins: tuple[float, ...]
    last_update_ms: Mapping[int, int]

    @property
    def n_bins(self) -> int:
        return len(self.bins)

    def bin_center_khz(self, i: int) -> float:
        return self.start_khz + (i + 0.5) * self.bin_khz

    @property
    def stop_khz(self) -> int:
        return self.start_khz + self.n_bins * self.bin_khz


def _check_common_grid(sweeps: Sequence[SensorSweep]) -> None:
    first = sweeps[0]
    for s in sweeps[1:]:
        if (
            s.start_khz != first.start_khz
            or s.bin_khz != first.bin_khz
            or s.n_bins != first.n_bins
        ):
            raise DomainError(
                "sweeps disagree on the bin grid "
                f"({s.start_khz}/{s.bin_khz}/{s.n_bins} vs "
                f"{first.start_khz}/{first.bin_khz}/{first.n_bins}); resampling is not supported"
            )


def aggregate(
    sweeps: Sequence[SensorSweep],
    mode: str = MAX_HOLD,
    *,
    alpha: float = DEFAULT_EWMA_ALPHA,
    position_id: str = "all",
) -> AggregatedSpectrum:
    """Merge sweeps sharing one grid into a single spectrum."""
    if not sweeps:
        raise DomainError("nothing to aggregate")
    _check_common_grid(sweeps)

    if mode == MAX_HOLD:
        merged = np.max(np.array([s.bins for s in sweeps], dtype=float), axis=0)
    elif mode == EWMA:
        if not 0.0 < alpha <= 1.0:
            raise DomainError(f"ewma alpha must lie in (0, 1], got {alpha}")
        per_sensor: dict[int, np.ndarray] = {}
        for s in sweeps:
            power_mw = 10.0 ** (np.asarray(s.bins, dtype=float) / 10.0)
            prev = per_sensor.get(s.sensor_id)
            per_sensor[s.sensor_id] = (
                power_mw if prev is None else alpha * power_mw + (1.0 - alpha) * prev
            )
        smoothed_dbm = [10.0 * np.log10(mw) for mw in per_sensor.values()]
        merged = np.max(np.array(smoothed_dbm), axis=0)
    else:
        raise DomainError(f"unknown aggregation mode {mode!r}")

    last_update: dict[int, int] = {}
    for s in sweeps:
        last_update[s.sensor_id] = max(last_update.get(s.sensor_id, 0), s.timestamp_ms)

    first = sweeps[0]
    return AggregatedSpectrum(
        position_id=position_id,
        mode=mode,
        start_khz=first.start_khz,
        bin_khz=first.bin_khz,
        bins=tuple(float(v) for v in merged),
        last_update_ms=last_update,
    )


def sweep_record(sweep: SensorSweep) -> dict:
    return {
        "sensor_id": sweep.sensor_id,
        "timestamp_ms": sweep.timestamp_ms,
        "start_khz": sweep.start_khz,
        "bin_khz": sweep.bin_khz,
        "bins": list(sweep.bins),
    }


def sweeps_to_jsonl(sweeps: Iterable[SensorSweep]) -> str:
    """One JSON record per line; the interchange format for sweep logs."""
    return "".join(json.dumps(sweep_record(s)) + "\n" for s in sweeps)


def sweeps_from_jsonl(text: str) -> list[SensorSweep]:
    sweeps = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            sweeps.append(
                SensorSweep(
                    sensor_id=rec["sensor_id"],
                    timestamp_ms=rec["timestamp_ms"],
                    start_khz=rec["start_khz"],
                    bin_khz=rec["bin_khz"],
                    bins=tuple(rec["bins"]),
                )
            )
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise DomainError(f"bad sweep record on line {lineno}: {exc}") from exc
    return sweeps

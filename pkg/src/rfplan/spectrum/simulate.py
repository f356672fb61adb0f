"""Deterministic scenario simulator standing in for a fleet of RF sensors.

Each emitter radiates its power spread flat over a 22 MHz channel mask;
sensors receive it over free space plus one log-normal shadowing draw per
sensor-emitter link (drawn from the scenario seed, so a scenario always
produces byte-identical sweeps). Sweeps cover 2400-2500 MHz in 1 MHz bins.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from ..errors import DomainError
from ..linkbudget import Frequency, LinkGeometry, fspl_db
from .frames import SensorSweep
from .plan import CHANNEL_HALF_WIDTH_KHZ, channel_center_khz

SWEEP_START_KHZ = 2_400_000
SWEEP_BIN_KHZ = 1_000
SWEEP_N_BINS = 100

# power spread evenly over the 22 one-MHz bins of the mask
_MASK_BINS = 2 * CHANNEL_HALF_WIDTH_KHZ // SWEEP_BIN_KHZ
_SPREAD_DB = 10.0 * math.log10(_MASK_BINS)


@dataclass(frozen=True)
class Client:
    id: str
    x: float
    y: float


@dataclass(frozen=True)
class Emitter:
    channel: int
    tx_power_dbm: float
    x: float
    y: float

    def __post_init__(self):
        channel_center_khz(self.channel)  # validates 1..14


@dataclass(frozen=True)
class Scenario:
    """One floor plan: an AP, clients, interference emitters, and noise."""

    ap_position: tuple[float, float]
    clients: tuple[Client, ...] = ()
    emitters: tuple[Emitter, ...] = ()
    noise_floor_dbm: float = -95.0
    shadowing_sigma_db: float = 4.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ap_position", tuple(float(v) for v in self.ap_position))
        object.__setattr__(self, "clients", tuple(self.clients))
        object.__setattr__(self, "emitters", tuple(self.emitters))
        coords = [*self.ap_position]
        for c in self.clients:
            coords += [c.x, c.y]
        for e in self.emitters:
            coords += [e.x, e.y]
        if not all(math.isfinite(v) for v in coords):
            raise DomainError("all positions must be finite")
        if self.shadowing_sigma_db < 0:
            raise DomainError(f"shadowing sigma must be non-negative, got {self.shadowing_sigma_db}")
        if not 0 <= self.seed <= 0xFFFFFFFFFFFFFFFF:
            raise DomainError(f"seed must fit 64 bits, got {self.seed}")


def default_sensor_layout(scenario: Scenario) -> tuple[list[str], list[tuple[float, float]]]:
    """Sensors at the AP and at every client, the deployment worth arguing for."""
    ids = ["ap"] + [c.id for c in scenario.clients]
    positions = [scenario.ap_position] + [(c.x, c.y) for c in scenario.clients]
    return ids, positions


def _shadowing_db(scenario: Scenario, sensor_index: int, emitter_index: int) -> float:
    if scenario.shadowing_sigma_db == 0.0:
        return 0.0
    rng = np.random.default_rng([scenario.seed, sensor_index, emitter_index])
    return float(rng.normal(0.0, scenario.shadowing_sigma_db))


def simulate_sweeps(
    scenario: Scenario,
    sensor_positions: Sequence[tuple[float, float]],
    t_ms: int = 0,
) -> list[SensorSweep]:
    """One sweep per sensor position at time t_ms.

    Per sensor-emitter link: received power = tx - FSPL(distance, emitter
    center) + one shadowing draw, spread flat over the emitter's mask bins.
    Distances are clamped up to one wavelength so co-located gear stays in
    the free-space formula's domain. Bin powers add in mW, are floored at the
    scenario noise floor, and quantize to signed 8-bit dBm.
    """
    sweeps = []
    for sensor_index, (sx, sy) in enumerate(sensor_positions):
        total_mw = np.zeros(SWEEP_N_BINS)
        for emitter_index, emitter in enumerate(scenario.emitters):
            center_khz = channel_center_khz(emitter.channel)
            freq = Frequency(center_khz * 1e3)
            distance = math.hypot(emitter.x - sx, emitter.y - sy)
            distance = max(distance, freq.wavelength_m)
            loss_db = fspl_db(LinkGeometry(distance, freq))
            per_bin_dbm = (
                emitter.tx_power_dbm
                - loss_db
                - _SPREAD_DB
                + _shadowing_db(scenario, sensor_index, emitter_index)
            )
            lo = center_khz - CHANNEL_HALF_WIDTH_KHZ
            hi = center_khz + CHANNEL_HALF_WIDTH_KHZ
            for i in range(SWEEP_N_BINS):
                center = SWEEP_START_KHZ + (i + 0.5) * SWEEP_BIN_KHZ
                if lo <= center <= hi:
                    total_mw[i] += 10.0 ** (per_bin_dbm / 10.0)
        bins = []
        for mw in total_mw:
            dbm = scenario.noise_floor_dbm if mw <= 0 else max(
                10.0 * math.log10(mw), scenario.noise_floor_dbm
            )
            bins.append(int(min(127, max(-128, round(dbm)))))
        sweeps.append(
            SensorSweep(
                sensor_id=sensor_index,
                timestamp_ms=t_ms,
                start_khz=SWEEP_START_KHZ,
                bin_khz=SWEEP_BIN_KHZ,
                bins=tuple(bins),
            )
        )
    return sweeps


def scenario_to_json(scenario: Scenario, indent: int = 2) -> str:
    """Scenario as a JSON document mirroring the type field-for-field."""
    doc = {
        "ap_position": list(scenario.ap_position),
        "clients": [{"id": c.id, "x": c.x, "y": c.y} for c in scenario.clients],
        "emitters": [
            {"channel": e.channel, "tx_power_dbm": e.tx_power_dbm, "x": e.x, "y": e.y}
            for e in scenario.emitters
        ],
        "noise_floor_dbm": scenario.noise_floor_dbm,
        "shadowing_sigma_db": scenario.shadowing_sigma_db,
        "seed": scenario.seed,
    }
    return json.dumps(doc, indent=indent) + "\n"


def scenario_from_json(text: str) -> Scenario:
    try:
        doc = json.loads(text)
        return Scenario(
            ap_position=tuple(doc["ap_position"]),
            clients=tuple(Client(**c) for c in doc.get("clients", [])),
            emitters=tuple(Emitter(**e) for e in doc.get("emitters", [])),
            noise_floor_dbm=doc.get("noise_floor_dbm", -95.0),
            shadowing_sigma_db=doc.get("shadowing_sigma_db", 4.0),
            seed=doc.get("seed", 0),
        )
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DomainError(f"bad scenario document: {exc}") from exc


def load_scenario(path: str | Path) -> Scenario:
    return scenario_from_json(Path(path).read_text())

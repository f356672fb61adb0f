"""Sensor sweeps: wire codec, aggregation, channel planning, simulation."""

from .aggregate import (
    DEFAULT_EWMA_ALPHA,
    EWMA,
    MAX_HOLD,
    AggregatedSpectrum,
    aggregate,
    sweep_record,
    sweeps_from_jsonl,
    sweeps_to_jsonl,
)
from .frames import (
    MAGIC,
    VERSION,
    FrameError,
    FrameFormatError,
    FrameIntegrityError,
    FrameTruncationError,
    SensorSweep,
    encode_frame,
    parse_frame,
)
from .plan import (
    ALL_CHANNELS,
    AP_ONLY,
    CLIENT_AWARE,
    MINIMAX,
    WEIGHTED_SUM,
    ChannelPlan,
    ChannelScore,
    channel_center_khz,
    channel_power_mw,
    overlap_weight,
    select_channel,
)
from .simulate import (
    SWEEP_BIN_KHZ,
    SWEEP_N_BINS,
    SWEEP_START_KHZ,
    Client,
    Emitter,
    Scenario,
    default_sensor_layout,
    load_scenario,
    scenario_from_json,
    scenario_to_json,
    simulate_sweeps,
)

__all__ = [
    "AggregatedSpectrum",
    "AP_ONLY",
    "ALL_CHANNELS",
    "ChannelPlan",
    "ChannelScore",
    "Client",
    "CLIENT_AWARE",
    "DEFAULT_EWMA_ALPHA",
    "Emitter",
    "EWMA",
    "FrameError",
    "FrameFormatError",
    "FrameIntegrityError",
    "FrameTruncationError",
    "MAGIC",
    "MAX_HOLD",
    "MINIMAX",
    "Scenario",
    "SensorSweep",
    "SWEEP_BIN_KHZ",
    "SWEEP_N_BINS",
    "SWEEP_START_KHZ",
    "VERSION",
    "WEIGHTED_SUM",
    "aggregate",
    "channel_center_khz",
    "channel_power_mw",
    "default_sensor_layout",
    "encode_frame",
    "load_scenario",
    "overlap_weight",
    "parse_frame",
    "scenario_from_json",
    "scenario_to_json",
    "select_channel",
    "simulate_sweeps",
    "sweep_record",
    "sweeps_from_jsonl",
    "sweeps_to_jsonl",
]

"""Channel scoring and selection over aggregated spectra.

Built-in channel selectors on consumer access points score the air only
where the AP sits. The selector here can also fold in spectra measured at
the client positions, so an emitter audible only near one client still
steers the decision: ap-only mode reproduces the AP-local baseline,
client-aware mode the proposed improvement.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..errors import DomainError
from .aggregate import AggregatedSpectrum

AP_ONLY = "ap-only"
CLIENT_AWARE = "client-aware"

MINIMAX = "minimax"
WEIGHTED_SUM = "weighted-sum"

# 2.4 GHz (802.11b/g) channel plan; channel energy is approximated by a flat
# +-11 MHz mask around the center, deliberately a touch conservative.
CHANNEL_HALF_WIDTH_KHZ = 11_000
CHANNEL_MASK_KHZ = 22_000
CHANNEL_STEP_KHZ = 5_000
ALL_CHANNELS: tuple[int, ...] = tuple(range(1, 15))
PREFERRED_CHANNELS = frozenset({1, 6, 11})


def channel_center_khz(channel: int) -> int:
    """Center frequency of a 2.4 GHz channel: 2407 + 5*ch MHz, ch 14 at 2484."""
    if channel == 14:
        return 2_484_000
    if 1 <= channel <= 13:
        return (2407 + 5 * channel) * 1000
    raise DomainError(f"channel must lie in 1..14, got {channel}")


def channel_power_mw(spectrum: AggregatedSpectrum, channel: int) -> float:
    """Total in-channel power: sum of bin powers whose centers fall in the mask."""
    center = channel_center_khz(channel)
    lo = center - CHANNEL_HALF_WIDTH_KHZ
    hi = center + CHANNEL_HALF_WIDTH_KHZ
    if lo < spectrum.start_khz or hi > spectrum.stop_khz:
        raise DomainError(
            f"spectrum [{spectrum.start_khz}, {spectrum.stop_khz}] kHz does not cover "
            f"channel {channel} mask [{lo}, {hi}] kHz"
        )
    total = 0.0
    for i, dbm in enumerate(spectrum.bins):
        if lo <= spectrum.bin_center_khz(i) <= hi:
            total += 10.0 ** (dbm / 10.0)
    return total


def overlap_weight(channel_distance: int) -> float:
    """Fraction of the 22 MHz mask shared by channels this many steps apart.

    Triangular falloff on the 5 MHz grid; zero from distance 5 up, the
    classic non-overlapping spacing.
    """
    if channel_distance < 0:
        raise DomainError(f"channel distance must be non-negative, got {channel_distance}")
    return max(0.0, (CHANNEL_MASK_KHZ - CHANNEL_STEP_KHZ * channel_distance) / CHANNEL_MASK_KHZ)


@dataclass(frozen=True)
class ChannelScore:
    per_position_mw: Mapping[str, float]
    objective: float


@dataclass(frozen=True)
class ChannelPlan:
    chosen_channel: int
    per_channel_scores: Mapping[int, ChannelScore]
    mode: str


def select_channel(
    spectra: Mapping[str, AggregatedSpectrum],
    mode: str = CLIENT_AWARE,
    candidates: Iterable[int] | None = None,
    objective: str = MINIMAX,
    *,
    ap_id: str = "ap",
    weights: Mapping[str, float] | None = None,
) -> ChannelPlan:
    """Pick the channel minimizing in-channel interference over positions.

    ap-only scores only the spectrum at the AP; client-aware scores the AP
    plus every client position. The objective is the worst position's
    in-channel power (minimax) or a weighted sum. Every candidate is scored
    exhaustively; ties fall to the lower AP-local power, then to channels
    {1, 6, 11}, then to the lowest number.
    """
    channels = tuple(candidates) if candidates is not None else ALL_CHANNELS
    if not channels:
        raise DomainError("no candidate channels to choose from")
    for ch in channels:
        channel_center_khz(ch)  # validates the range
    if ap_id not in spectra:
        raise DomainError(f"no spectrum for the access-point position {ap_id!r}")
    if mode == AP_ONLY:
        positions: Sequence[str] = (ap_id,)
    elif mode == CLIENT_AWARE:
        if len(spectra) < 2:
            raise DomainError("client-aware selection needs at least one client spectrum")
        positions = tuple(spectra)
    else:
        raise DomainError(f"unknown selection mode {mode!r}")
    if objective not in (MINIMAX, WEIGHTED_SUM):
        raise DomainError(f"unknown objective {objective!r}")

    scores: dict[int, ChannelScore] = {}
    ranking = []
    for ch in channels:
        per_position = {pos: channel_power_mw(spectra[pos], ch) for pos in positions}
        if objective == MINIMAX:
            value = max(per_position.values())
        else:
            value = sum(
                (weights.get(pos, 1.0) if weights else 1.0) * mw
                for pos, mw in per_position.items()
            )
        scores[ch] = ChannelScore(per_position_mw=per_position, objective=value)
        ranking.append(
            (value, per_position[ap_id], 0 if ch in PREFERRED_CHANNELS else 1, ch)
        )

    chosen = min(ranking)[3]
    return ChannelPlan(chosen_channel=chosen, per_channel_scores=scores, mode=mode)

"""Free-space link budget primitives.

All powers are stored in dBm, antenna gains linearly (dimensionless). dB
conversions follow the usual conventions: 10*log10 for power ratios,
20*log10 for field/distance ratios.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Exact SI value; wavelengths below 2.4 GHz folklore (0.125 m) come out as
# 0.12491... from this constant.
SPEED_OF_LIGHT_M_S = 299_792_458.0


class NearFieldError(DomainError):
    """Distance below one wavelength: free-space formulas not applicable."""


@dataclass(frozen=True)
class Frequency:
    """Carrier frequency in hertz."""

    hertz: float

    def __post_init__(self):
        if not (self.hertz > 0 and math.isfinite(self.hertz)):
            raise DomainError(f"frequency must be positive and finite, got {self.hertz}")

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT_M_S / self.hertz


@dataclass(frozen=True)
class AntennaGain:
    """Antenna power gain, stored linearly (1.0 = isotropic)."""

    linear: float

    def __post_init__(self):
        if not (self.linear > 0 and math.isfinite(self.linear)):
            raise DomainError(f"gain must be positive and finite, got {self.linear}")

    @property
    def dbi(self) -> float:
        return 10.0 * math.log10(self.linear)

    @classmethod
    def from_dbi(cls, dbi: float) -> "AntennaGain":
        return cls(10.0 ** (dbi / 10.0))


@dataclass(frozen=True)
class LinkGeometry:
    """One radio path: separation and carrier."""

    distance_m: float
    frequency: Frequency

    def __post_init__(self):
        if not (self.distance_m > 0 and math.isfinite(self.distance_m)):
            raise DomainError(f"distance must be positive and finite, got {self.distance_m}")

    @property
    def wavelength_m(self) -> float:
        return self.frequency.wavelength_m


@dataclass(frozen=True)
class LinkBudget:
    """Transmit side plus geometry; received power is derived, never stored."""

    tx_power_dbm: float
    tx_gain: AntennaGain
    rx_gain: AntennaGain
    geometry: LinkGeometry

    @property
    def rx_power_dbm(self) -> float:
        return friis_received_dbm(self)


def wavelength(frequency: Frequency) -> float:
    """Wavelength in meters, c / f with the exact SI speed of light."""
    return frequency.wavelength_m


def _check_far_field(geometry: LinkGeometry) -> None:
    if geometry.distance_m < geometry.wavelength_m:
        raise NearFieldError(
            f"distance {geometry.distance_m} m is inside one wavelength "
            f"({geometry.wavelength_m:.4f} m); free-space result would be meaningless"
        )


def fspl_db(geometry: LinkGeometry, *, enforce_far_field: bool = True) -> float:
    """Free-space path loss, 20*log10(4*pi*R/lambda).

    Raises NearFieldError for R < lambda unless enforce_far_field is False
    (useful only for checking the formula's fixed points).
    """
    if enforce_far_field:
        _check_far_field(geometry)
    return 20.0 * math.log10(4.0 * math.pi * geometry.distance_m / geometry.wavelength_m)


def friis_received_dbm(budget: LinkBudget) -> float:
    """Received power: Pt + Gt + Gr - FSPL, everything in dB terms."""
    return (
        budget.tx_power_dbm
        + budget.tx_gain.dbi
        + budget.rx_gain.dbi
        - fspl_db(budget.geometry)
    )


def power_utilization(
    tx_gain: AntennaGain,
    rx_gain: AntennaGain,
    geometry: LinkGeometry,
    *,
    enforce_far_field: bool = True,
) -> float:
    """Fraction of radiated power collected by the receive antenna.

    Gt * A_eff / (4*pi*R^2) with A_eff = Gr * lambda^2 / (4*pi), which reduces
    to Gt * Gr * (lambda / (4*pi*R))^2. Symmetric in the two gains. For stock
    2.4 GHz gear at tens of meters this lands around 1e-6, i.e. nearly all
    radiated energy misses the receiver.
    """
    if enforce_far_field:
        _check_far_field(geometry)
    scale = geometry.wavelength_m / (4.0 * math.pi * geometry.distance_m)
    return tx_gain.linear * rx_gain.linear * scale * scale


def range_ratio_from_gain_delta(delta_db: float) -> float:
    """Distance ratio that keeps received power fixed after a gain change.

    Free space: power goes with 1/R^2, so a delta_db budget improvement buys
    a factor 10**(delta_db/20) of range at constant link quality.
    """
    return 10.0 ** (delta_db / 20.0)

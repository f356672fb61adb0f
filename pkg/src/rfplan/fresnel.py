"""Fresnel-zone geometry and annular-screen diffraction.

A screen plane at distance d1 from the transmitter and d2 from the receiver
divides into annular half-period zones: zone n ends where the detour path
exceeds the direct one by n*lambda/2, at radius r_n = sqrt(n*lambda*d1*d2 /
(d1+d2)). Consecutive zones arrive in antiphase, so blocking even zones with
a conducting annulus *raises* the on-axis field.

The continuous zone coordinate u = r^2*(d1+d2)/(lambda*d1*d2) makes the
on-axis field of an aperture a one-dimensional integral: with the free-path
field normalized to 1, the contribution of the u-interval [a, b] is

    integral_a^b (-i*pi) * K(u) * exp(i*pi*u) du

which telescopes to exp(i*pi*a) - exp(i*pi*b) when the obliquity weight
K(u) = (1 + cos(chi))/2 is dropped. Blocking a set of intervals subtracts
their contributions from 1.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from scipy.integrate import quad

from .errors import DomainError

# Quadrature never looks past this zone index; under obliquity weighting the
# tail beyond a couple hundred zones is negligible at Wi-Fi geometries.
U_MAX = 200.0

QUADRATURE_REL_TOL = 1e-6


@dataclass(frozen=True)
class PathGeometry:
    """Transmitter -> screen plane -> receiver distances plus wavelength."""

    d1_m: float
    d2_m: float
    lambda_m: float

    def __post_init__(self):
        for name in ("d1_m", "d2_m", "lambda_m"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise DomainError(f"{name} must be positive and finite, got {v}")


def zone_radius(n: int, geometry: PathGeometry) -> float:
    """Outer radius of Fresnel zone n: sqrt(n*lambda*d1*d2/(d1+d2))."""
    if n < 1:
        raise DomainError(f"zone number must be >= 1, got {n}")
    g = geometry
    return math.sqrt(n * g.lambda_m * g.d1_m * g.d2_m / (g.d1_m + g.d2_m))


def zone_index(r_m: float, geometry: PathGeometry) -> float:
    """Continuous zone coordinate u at radius r; inverse of zone_radius."""
    if r_m < 0:
        raise DomainError(f"radius must be non-negative, got {r_m}")
    g = geometry
    return r_m * r_m * (g.d1_m + g.d2_m) / (g.lambda_m * g.d1_m * g.d2_m)


@dataclass(frozen=True)
class AnnularScreenSpec:
    """Conducting annulus covering exactly one Fresnel zone."""

    geometry: PathGeometry
    r_inner_m: float
    r_outer_m: float
    blocked_zone: int

    def __post_init__(self):
        if not 0.0 <= self.r_inner_m < self.r_outer_m:
            raise DomainError(
                f"need 0 <= r_inner < r_outer, got [{self.r_inner_m}, {self.r_outer_m}]"
            )

    @property
    def outer_diameter_m(self) -> float:
        return 2.0 * self.r_outer_m


def screen_for_zone(n: int, geometry: PathGeometry) -> AnnularScreenSpec:
    """Annular screen spanning zone n: [r_{n-1}, r_n] (r_0 = 0)."""
    if n < 1:
        raise DomainError(f"zone number must be >= 1, got {n}")
    inner = 0.0 if n == 1 else zone_radius(n - 1, geometry)
    return AnnularScreenSpec(
        geometry=geometry,
        r_inner_m=inner,
        r_outer_m=zone_radius(n, geometry),
        blocked_zone=n,
    )


def shading_cone_deg(r_outer_m: float, distance_m: float) -> float:
    """Full apex angle of the shadow cone a screen of radius r casts.

    The caller picks the apex distance: d1 for the cone seen from the access
    point, d1+d2 for the whole link.
    """
    if distance_m <= 0:
        raise DomainError(f"distance must be positive, got {distance_m}")
    if r_outer_m < 0:
        raise DomainError(f"radius must be non-negative, got {r_outer_m}")
    return 2.0 * math.degrees(math.atan(r_outer_m / distance_m))


@dataclass(frozen=True)
class FieldRatio:
    """On-axis field relative to the unobstructed path."""

    complex_ratio: complex

    @property
    def magnitude(self) -> float:
        return abs(self.complex_ratio)

    @property
    def power_gain_db(self) -> float:
        mag = self.magnitude
        return 20.0 * math.log10(mag) if mag > 0 else float("-inf")


def obliquity_factor(u: float, geometry: PathGeometry) -> float:
    """K(u) = (1 + cos(chi))/2 with chi the ray deflection angle at radius r(u)."""
    g = geometry
    r_sq = u * g.lambda_m * g.d1_m * g.d2_m / (g.d1_m + g.d2_m)
    cos_chi = (g.d1_m * g.d2_m - r_sq) / math.sqrt(
        (g.d1_m * g.d1_m + r_sq) * (g.d2_m * g.d2_m + r_sq)
    )
    return 0.5 * (1.0 + cos_chi)


def _validated_intervals(blocked: Sequence[tuple[float, float]]) -> list[tuple[float, float]]:
    intervals = []
    for a, b in blocked:
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"interval bounds must be finite, got [{a}, {b}]")
        if not 0.0 <= a < b <= U_MAX:
            raise DomainError(
                f"interval [{a}, {b}] must satisfy 0 <= a < b <= {U_MAX}"
            )
        intervals.append((float(a), float(b)))
    intervals.sort()
    for (_, b_prev), (a_next, _) in zip(intervals, intervals[1:]):
        if a_next < b_prev:
            raise DomainError("blocked intervals overlap")
    return intervals


def _interval_contribution_quadrature(
    a: float, b: float, geometry: PathGeometry | None
) -> complex:
    """Quadrature of (-i*pi)*K(u)*exp(i*pi*u) over [a, b], split at zone edges."""

    def weight(u: float) -> float:
        return obliquity_factor(u, geometry) if geometry is not None else 1.0

    # splitting at integer u keeps each panel inside a single half-period;
    # skip split points within roundoff of the endpoints so no degenerate
    # slivers reach the quadrature
    edges = [a]
    k = math.floor(a) + 1
    while k < b - 1e-12:
        if k > a + 1e-12:
            edges.append(float(k))
        k += 1
    edges.append(b)

    # the absolute floor keeps quad quiet on panels whose integral is ~0
    # (zero crossings of sin/cos); 1e-9 per panel is far inside the 1e-6 target
    total = 0.0 + 0.0j
    for lo, hi in zip(edges, edges[1:]):
        re, _ = quad(
            lambda u: weight(u) * math.pi * math.sin(math.pi * u),
            lo,
            hi,
            epsabs=1e-9,
            epsrel=QUADRATURE_REL_TOL,
        )
        im, _ = quad(
            lambda u: -weight(u) * math.pi * math.cos(math.pi * u),
            lo,
            hi,
            epsabs=1e-9,
            epsrel=QUADRATURE_REL_TOL,
        )
        total += complex(re, im)
    return total


def field_ratio(
    blocked: Sequence[tuple[float, float]],
    *,
    obliquity: bool = False,
    geometry: PathGeometry | None = None,
    force_quadrature: bool = False,
) -> FieldRatio:
    """Field at the receiver with the given u-intervals blocked.

    Without obliquity the result is the closed form
    1 + sum_k (exp(i*pi*b_k) - exp(i*pi*a_k)); force_quadrature evaluates the
    same integral numerically instead (used to cross-check the closed form).
    With obliquity the contributions are weighted by K(u), which needs the
    path geometry.
    """
    intervals = _validated_intervals(blocked)
    if obliquity and geometry is None:
        raise DomainError("obliquity weighting needs the path geometry")

    if not obliquity and not force_quadrature:
        ratio = 1.0 + 0.0j
        for a, b in intervals:
            ratio += cmath.exp(1j * math.pi * b) - cmath.exp(1j * math.pi * a)
        return FieldRatio(ratio)

    geom = geometry if obliquity else None
    ratio = 1.0 + 0.0j
    for a, b in intervals:
        ratio -= _interval_contribution_quadrature(a, b, geom)
    return FieldRatio(ratio)


def partial_field_curve(
    u_max: float,
    step: float = 0.05,
    *,
    obliquity: bool = False,
    geometry: PathGeometry | None = None,
) -> list[tuple[float, float]]:
    """(u, |field of the open aperture [0, u]|) samples for plotting.

    Without obliquity this is |1 - exp(i*pi*u)|, the familiar spiral swing
    between 0 and twice the free field.
    """
    if not 0 < u_max <= U_MAX:
        raise DomainError(f"u_max must lie in (0, {U_MAX}], got {u_max}")
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if obliquity and geometry is None:
        raise DomainError("obliquity weighting needs the path geometry")

    points = [(0.0, 0.0)]
    acc = 0.0 + 0.0j
    u = 0.0
    while u < u_max - 1e-12:
        u_next = min(u + step, u_max)
        if obliquity:
            acc += _interval_contribution_quadrature(u, u_next, geometry)
        else:
            acc = 1.0 - cmath.exp(1j * math.pi * u_next)
        points.append((u_next, abs(acc)))
        u = u_next
    return points


def zone_table(geometry: PathGeometry, max_zone: int) -> list[tuple[float, int]]:
    """(radius, zone index) rows out to max_zone."""
    if max_zone < 1:
        raise DomainError(f"max_zone must be >= 1, got {max_zone}")
    return [(zone_radius(n, geometry), n) for n in range(1, max_zone + 1)]


FIELD_CURVE_CSV_HEADER = "u,partial_field_magnitude"
ZONE_TABLE_CSV_HEADER = "r_m,zone_index"


def field_curve_csv(points: Sequence[tuple[float, float]]) -> str:
    lines = [FIELD_CURVE_CSV_HEADER]
    lines += [f"{u!r},{mag!r}" for u, mag in points]
    return "\n".join(lines) + "\n"


def zone_table_csv(rows: Sequence[tuple[float, int]]) -> str:
    lines = [ZONE_TABLE_CSV_HEADER]
    lines += [f"{r!r},{n}" for r, n in rows]
    return "\n".join(lines) + "\n"

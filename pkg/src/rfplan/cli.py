"""Command-line front end.

One executable, one subcommand per planning task, three output formats:
a human table (default), a single JSON document, or CSV rows for plotting.
Exit codes: 0 success, 1 usage error, 2 domain error (bad physics/inputs).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Sequence

from . import fixtures, fresnel, growth, lens, polarization
from .errors import DomainError
from .linkbudget import (
    AntennaGain,
    Frequency,
    LinkGeometry,
    fspl_db,
    power_utilization,
    wavelength,
)
from .spectrum import (
    AP_ONLY,
    CLIENT_AWARE,
    MAX_HOLD,
    MINIMAX,
    aggregate,
    default_sensor_layout,
    load_scenario,
    select_channel,
    simulate_sweeps,
    sweeps_from_jsonl,
    sweeps_to_jsonl,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems instead of exiting with code 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


@dataclass
class Rows:
    name: str
    header: list[str]
    data: list[tuple]


@dataclass
class Result:
    command: str
    scalars: dict
    rows: Rows | None = None


def _fmt_cell(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _render_table(result: Result) -> str:
    lines = []
    width = max((len(k) for k in result.scalars), default=0)
    for key, value in result.scalars.items():
        lines.append(f"{key:<{width}}  {_fmt_cell(value)}")
    if result.rows is not None:
        if lines:
            lines.append("")
        cells = [result.rows.header] + [
            [_fmt_cell(v) for v in row] for row in result.rows.data
        ]
        widths = [max(len(r[i]) for r in cells) for i in range(len(result.rows.header))]
        for r in cells:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_json(result: Result) -> str:
    doc: dict = {"command": result.command}
    doc.update(result.scalars)
    if result.rows is not None:
        doc[result.rows.name] = [
            dict(zip(result.rows.header, row)) for row in result.rows.data
        ]
    return json.dumps(doc, indent=2) + "\n"


def _render_csv(result: Result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if result.rows is not None:
        writer.writerow(result.rows.header)
        for row in result.rows.data:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    else:
        writer.writerow(result.scalars.keys())
        writer.writerow(
            [repr(v) if isinstance(v, float) else v for v in result.scalars.values()]
        )
    return buf.getvalue()


_RENDERERS: dict[str, Callable[[Result], str]] = {
    "table": _render_table,
    "json": _render_json,
    "csv": _render_csv,
}


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default: table)",
    )
    parser.add_argument("--seed", type=int, default=None, help="override the random seed")
    parser.add_argument("--out", type=Path, default=None, help="write output to a file")


def _resolve_scenario(name: str):
    path = Path(name)
    if path.exists():
        return load_scenario(path)
    if name in fixtures.BUNDLED_SCENARIOS:
        return load_scenario(fixtures.BUNDLED_SCENARIOS[name]())
    raise DomainError(f"no scenario file or bundled scenario named {name!r}")


def _parse_interval(text: str) -> tuple[float, float]:
    a, _, b = text.partition(":")
    return float(a), float(b)


def _parse_channels(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


# --- command handlers -------------------------------------------------------

def _cmd_linkbudget(args) -> Result:
    geometry = LinkGeometry(args.dist, Frequency(args.freq))
    tx_gain = AntennaGain.from_dbi(args.gt)
    rx_gain = AntennaGain.from_dbi(args.gr)
    loss = fspl_db(geometry)
    return Result(
        "linkbudget",
        {
            "wavelength_m": wavelength(geometry.frequency),
            "fspl_db": loss,
            "rx_power_dbm": args.pt + args.gt + args.gr - loss,
            "power_utilization": power_utilization(tx_gain, rx_gain, geometry),
        },
    )


def _cmd_lens_design(args) -> Result:
    freq = Frequency(args.freq)
    spacing = args.spacing if args.spacing is not None else 0.625 * freq.wavelength_m
    spec = lens.LensSpec(
        plate_spacing_m=spacing,
        design_frequency=freq,
        focal_length_m=args.focal,
        aperture_half_angle_deg=args.aperture,
    )
    profile = lens.lens_profile(spec, step_deg=args.step)
    return Result(
        "lens design",
        {
            "wavelength_m": freq.wavelength_m,
            "plate_spacing_m": spacing,
            "effective_index": spec.index,
            "focal_length_m": spec.focal_length_m,
            "aperture_half_angle_deg": spec.aperture_half_angle_deg,
        },
        Rows(
            "profile",
            ["theta_deg", "r_m", "y_m", "depth_m"],
            [(s.theta_deg, s.r_m, s.y_m, s.depth_m) for s in profile.samples],
        ),
    )


def _cmd_lens_apply(args) -> Result:
    effect = lens.LensEffect(
        gain_uplift_db=args.uplift_db,
        throughput_uplift_fraction=args.throughput_frac,
    )
    report = lens.boost_rx_power(args.rx_dbm, effect)
    return Result(
        "lens apply",
        {
            "rx_before_dbm": report.rx_before_dbm,
            "rx_after_dbm": report.rx_after_dbm,
            "gain_uplift_db": report.gain_uplift_db,
            "range_ratio": report.range_ratio,
            "throughput_multiplier": report.throughput_multiplier,
        },
    )


def _fresnel_geometry(args) -> fresnel.PathGeometry:
    lam = args.lambda_m
    if lam is None:
        if args.freq is None:
            raise DomainError("give either --lambda or --freq")
        lam = Frequency(args.freq).wavelength_m
    if args.d1 is None or args.d2 is None:
        raise DomainError("this computation needs --d1 and --d2")
    return fresnel.PathGeometry(d1_m=args.d1, d2_m=args.d2, lambda_m=lam)


def _cmd_fresnel_zones(args) -> Result:
    geometry = _fresnel_geometry(args)
    table = fresnel.zone_table(geometry, args.max_zone)
    return Result(
        "fresnel zones",
        {"lambda_m": geometry.lambda_m, "d1_m": geometry.d1_m, "d2_m": geometry.d2_m},
        Rows("zones", ["r_m", "zone_index"], [(r, n) for r, n in table]),
    )


def _cmd_fresnel_screen(args) -> Result:
    geometry = _fresnel_geometry(args)
    screen = fresnel.screen_for_zone(args.zone, geometry)
    total = geometry.d1_m + geometry.d2_m
    return Result(
        "fresnel screen",
        {
            "blocked_zone": screen.blocked_zone,
            "r_inner_m": screen.r_inner_m,
            "r_outer_m": screen.r_outer_m,
            "outer_diameter_m": screen.outer_diameter_m,
            "shading_cone_total_deg": fresnel.shading_cone_deg(screen.r_outer_m, total),
            "shading_cone_ap_deg": fresnel.shading_cone_deg(screen.r_outer_m, geometry.d1_m),
        },
    )


def _cmd_fresnel_field(args) -> Result:
    geometry = _fresnel_geometry(args) if args.obliquity else None
    blocked = args.block or []
    ratio = fresnel.field_ratio(
        blocked,
        obliquity=args.obliquity,
        geometry=geometry,
        force_quadrature=args.quadrature,
    )
    rows = None
    if args.curve_max is not None:
        curve = fresnel.partial_field_curve(
            args.curve_max,
            step=args.curve_step,
            obliquity=args.obliquity,
            geometry=geometry,
        )
        rows = Rows("partial_field", ["u", "partial_field_magnitude"], curve)
    return Result(
        "fresnel field",
        {
            "blocked": ",".join(f"{a:g}:{b:g}" for a, b in blocked) or "none",
            "ratio_real": ratio.complex_ratio.real,
            "ratio_imag": ratio.complex_ratio.imag,
            "magnitude": ratio.magnitude,
            "power_gain_db": ratio.power_gain_db,
        },
        rows,
    )


def _cmd_polar_loss(args) -> Result:
    if args.epsilon is not None:
        env = polarization.EnvironmentModel(diffuse_fraction=args.epsilon)
    else:
        env = polarization.environment_preset(args.env)
    scalars = {
        "delta_psi_deg": args.delta_psi,
        "diffuse_fraction": env.diffuse_fraction,
        "mismatch_loss_db": polarization.mismatch_loss_db(args.delta_psi, env),
    }
    if args.tilt_deg is not None:
        tilt = polarization.tilt_effect_db(math.radians(args.tilt_deg), env)
        scalars["tilt_deg"] = args.tilt_deg
        scalars["tilt_effect_db"] = tilt
        scalars["total_effect_db"] = scalars["mismatch_loss_db"] + tilt
    return Result("polar loss", scalars)


def _cmd_polar_capacity(args) -> Result:
    channel = polarization.dual_polarized_channel(
        args.xpd, snr_linear=args.snr_linear, seed=args.seed
    )
    return Result(
        "polar capacity",
        {
            "xpd": args.xpd,
            "snr_linear": args.snr_linear,
            "perturbed": args.seed is not None,
            "capacity_bps_hz": polarization.mimo_capacity_bps_hz(channel),
        },
    )


def _scenario_from_args(args):
    scenario = _resolve_scenario(args.scenario)
    if args.seed is not None:
        scenario = replace(scenario, seed=args.seed)
    return scenario


def _cmd_spectrum_simulate(args) -> Result:
    scenario = _scenario_from_args(args)
    ids, positions = default_sensor_layout(scenario)
    sweeps = simulate_sweeps(scenario, positions, t_ms=args.t_ms)
    if args.jsonl:
        # raw interchange stream, one record per line, for piping into aggregate
        return Result("spectrum simulate", {"_raw": sweeps_to_jsonl(sweeps)})
    rows = []
    for pos_id, sweep in zip(ids, sweeps):
        for i, dbm in enumerate(sweep.bins):
            rows.append((sweep.sensor_id, pos_id, sweep.bin_center_khz(i), dbm))
    return Result(
        "spectrum simulate",
        {
            "sensors": len(sweeps),
            "t_ms": args.t_ms,
            "seed": scenario.seed,
            "noise_floor_dbm": scenario.noise_floor_dbm,
        },
        Rows("bins", ["sensor_id", "position_id", "bin_center_khz", "dbm"], rows),
    )


def _cmd_spectrum_aggregate(args) -> Result:
    sweeps = sweeps_from_jsonl(Path(args.sweeps).read_text())
    spectrum = aggregate(sweeps, args.mode, alpha=args.alpha, position_id=args.position_id)
    rows = [(spectrum.bin_center_khz(i), dbm) for i, dbm in enumerate(spectrum.bins)]
    return Result(
        "spectrum aggregate",
        {
            "position_id": spectrum.position_id,
            "mode": spectrum.mode,
            "n_sweeps": len(sweeps),
            "start_khz": spectrum.start_khz,
            "bin_khz": spectrum.bin_khz,
        },
        Rows("bins", ["bin_center_khz", "dbm"], rows),
    )


def _cmd_spectrum_plan(args) -> Result:
    scenario = _scenario_from_args(args)
    ids, positions = default_sensor_layout(scenario)
    sweeps = simulate_sweeps(scenario, positions, t_ms=args.t_ms)
    spectra = {
        pos_id: aggregate([sweep], MAX_HOLD, position_id=pos_id)
        for pos_id, sweep in zip(ids, sweeps)
    }
    ap_plan = select_channel(spectra, AP_ONLY, args.candidates, args.objective)
    client_plan = select_channel(spectra, CLIENT_AWARE, args.candidates, args.objective)
    rows = []
    for ch in sorted(client_plan.per_channel_scores):
        rows.append(
            (
                ch,
                ap_plan.per_channel_scores[ch].objective,
                client_plan.per_channel_scores[ch].objective,
            )
        )
    return Result(
        "spectrum plan",
        {
            "ap_only_channel": ap_plan.chosen_channel,
            "client_aware_channel": client_plan.chosen_channel,
            "modes_agree": ap_plan.chosen_channel == client_plan.chosen_channel,
            "objective": args.objective,
        },
        Rows("scores", ["channel", "ap_only_mw", "client_aware_mw"], rows),
    )


def _cmd_growth_fit(args) -> Result:
    series = growth.read_count_series(Path(args.input))
    fit = growth.fit_doubling(series)
    scalars = {
        "points": len(series.points),
        "doubling_days": fit.doubling_days,
        "intercept_log2": fit.intercept_log2,
        "r_squared": fit.r_squared,
    }
    if fit.doubling_days > 0:
        last_t = series.points[-1][0]
        scalars["next_doubling_t_days"] = growth.predict_doubling_date(fit, last_t)
    return Result("growth fit", scalars)


# --- parser assembly ---------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="rfplan", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = top.add_parser("linkbudget", help="free-space link budget and power utilization")
    p.add_argument("--pt", type=float, required=True, help="transmit power, dBm")
    p.add_argument("--gt", type=float, required=True, help="transmit antenna gain, dBi")
    p.add_argument("--gr", type=float, required=True, help="receive antenna gain, dBi")
    p.add_argument("--freq", type=float, required=True, help="carrier frequency, Hz")
    p.add_argument("--dist", type=float, required=True, help="link distance, m")
    _common_flags(p)
    p.set_defaults(handler=_cmd_linkbudget)

    lens_p = top.add_parser("lens", help="accelerating metal-plate lens")
    lens_sub = lens_p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = lens_sub.add_parser("design", help="effective index and plate-edge profile")
    p.add_argument("--freq", type=float, default=2.437e9, help="design frequency, Hz")
    p.add_argument("--spacing", type=float, default=None,
                   help="plate spacing, m (default: 0.625 wavelengths)")
    p.add_argument("--focal", type=float, default=0.3, help="focal length, m")
    p.add_argument("--aperture", type=float, default=40.0, help="aperture half angle, deg")
    p.add_argument("--step", type=float, default=1.0, help="profile sample step, deg")
    _common_flags(p)
    p.set_defaults(handler=_cmd_lens_design)

    p = lens_sub.add_parser("apply", help="apply the lens gain uplift to a link")
    p.add_argument("--rx-dbm", type=float, required=True, help="received power without lens, dBm")
    p.add_argument("--uplift-db", type=float, default=6.0, help="lens gain uplift, dB")
    p.add_argument("--throughput-frac", type=float, default=0.04,
                   help="fractional throughput gain at fixed range")
    _common_flags(p)
    p.set_defaults(handler=_cmd_lens_apply)

    fres_p = top.add_parser("fresnel", help="Fresnel zones, screens, field ratios")
    fres_sub = fres_p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def _fresnel_geom_flags(q, d_required=True):
        q.add_argument("--lambda", dest="lambda_m", type=float, default=None,
                       help="wavelength, m")
        q.add_argument("--freq", type=float, default=None,
                       help="carrier frequency, Hz (alternative to --lambda)")
        q.add_argument("--d1", type=float, required=d_required,
                       help="transmitter to screen plane, m")
        q.add_argument("--d2", type=float, required=d_required,
                       help="screen plane to receiver, m")

    p = fres_sub.add_parser("zones", help="zone radius table")
    _fresnel_geom_flags(p)
    p.add_argument("--max-zone", type=int, default=5, help="largest zone to tabulate")
    _common_flags(p)
    p.set_defaults(handler=_cmd_fresnel_zones)

    p = fres_sub.add_parser("screen", help="annular screen for one zone")
    _fresnel_geom_flags(p)
    p.add_argument("--zone", type=int, required=True, help="zone to block")
    _common_flags(p)
    p.set_defaults(handler=_cmd_fresnel_screen)

    p = fres_sub.add_parser("field", help="on-axis field ratio with zones blocked")
    _fresnel_geom_flags(p, d_required=False)
    p.add_argument("--block", type=_parse_interval, action="append", default=None,
                   metavar="A:B", help="blocked zone-coordinate interval, repeatable")
    p.add_argument("--obliquity", action="store_true",
                   help="weight by the obliquity factor (needs geometry)")
    p.add_argument("--quadrature", action="store_true",
                   help="force numerical quadrature instead of the closed form")
    p.add_argument("--curve-max", type=float, default=None,
                   help="also emit the partial-field curve up to this u")
    p.add_argument("--curve-step", type=float, default=0.05, help="curve sample step in u")
    _common_flags(p)
    p.set_defaults(handler=_cmd_fresnel_field)

    polar_p = top.add_parser("polar", help="polarization mismatch and MIMO capacity")
    polar_sub = polar_p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = polar_sub.add_parser("loss", help="polarization mismatch loss")
    p.add_argument("--delta-psi", type=float, required=True,
                   help="polarization misalignment, deg")
    p.add_argument("--env", choices=sorted(polarization.ENVIRONMENT_PRESETS),
                   default="sparse-room", help="environment preset")
    p.add_argument("--epsilon", type=float, default=None,
                   help="diffuse fraction, overrides --env")
    p.add_argument("--tilt-deg", type=float, default=None,
                   help="also report the tilt effect at this forward lean")
    _common_flags(p)
    p.set_defaults(handler=_cmd_polar_loss)

    p = polar_sub.add_parser("capacity", help="2x2 polarization-diversity capacity")
    p.add_argument("--xpd", type=float, required=True, help="cross-polar leakage in [0, 1]")
    p.add_argument("--snr-linear", type=float, default=100.0, help="mean branch SNR, linear")
    _common_flags(p)
    p.set_defaults(handler=_cmd_polar_capacity)

    spec_p = top.add_parser("spectrum", help="sweep simulation, aggregation, channel plan")
    spec_sub = spec_p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = spec_sub.add_parser("simulate", help="simulate sweeps at the AP and clients")
    p.add_argument("--scenario", required=True,
                   help="scenario JSON file or bundled name (e.g. 'divergence')")
    p.add_argument("--t-ms", type=int, default=0, help="sweep timestamp, ms")
    p.add_argument("--jsonl", action="store_true",
                   help="emit raw line-delimited sweep records instead of --format")
    _common_flags(p)
    p.set_defaults(handler=_cmd_spectrum_simulate)

    p = spec_sub.add_parser("aggregate", help="merge a sweep log into one spectrum")
    p.add_argument("--sweeps", required=True, help="JSONL sweep log file")
    p.add_argument("--mode", choices=("max-hold", "ewma"), default="max-hold")
    p.add_argument("--alpha", type=float, default=0.3, help="ewma smoothing factor")
    p.add_argument("--position-id", default="all", help="label for the merged spectrum")
    _common_flags(p)
    p.set_defaults(handler=_cmd_spectrum_aggregate)

    p = spec_sub.add_parser("plan", help="pick a channel, ap-only vs client-aware")
    p.add_argument("--scenario", required=True,
                   help="scenario JSON file or bundled name (e.g. 'divergence')")
    p.add_argument("--t-ms", type=int, default=0, help="sweep timestamp, ms")
    p.add_argument("--candidates", type=_parse_channels, default=None,
                   metavar="1,6,11", help="candidate channels (default: 1-14)")
    p.add_argument("--objective", choices=(MINIMAX, "weighted-sum"), default=MINIMAX)
    _common_flags(p)
    p.set_defaults(handler=_cmd_spectrum_plan)

    growth_p = top.add_parser("growth", help="AP count growth trends")
    growth_sub = growth_p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = growth_sub.add_parser("fit", help="fit a doubling period to a count series")
    p.add_argument("--input", required=True, help="two-column text file: t_days count")
    _common_flags(p)
    p.set_defaults(handler=_cmd_growth_fit)

    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return 1
    try:
        result = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if "_raw" in result.scalars:
        text = result.scalars["_raw"]
    else:
        text = _RENDERERS[args.format](result)
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line entry point.

Subcommands
-----------
analytic   closed-form delay/loss/DBP sweep over peak optical depth
kk         Kramers-Kronig reconstruction from measured absorption data
propagate  one frequency- or time-domain propagation run
sweep      delay and loss versus control intensity, with linearity check
xcorr      cross-correlation metrics for envelope CSVs

Exit codes: 0 success, 2 configuration or validation failure, 3 numerical
failure or resolution refusal.  All outputs are plot-ready CSVs plus a
flat ``key = value`` summary; every run also writes the fully-resolved
configuration for bit-identical re-runs.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

import numpy as np

from . import analysis, fdprop, io, medium as med, tdprop
from .config import SimulationConfig, load_config
from .errors import ConfigError, SlowLightError
from .kramers_kronig import (
    Susceptibility,
    group_delay_from_susceptibility,
    ingest_absorption,
    kk_real_from_imag,
)
from .spectral import TimeGrid, forward_transform, synthesize_pulse


def _out_path(args, name):
    os.makedirs(args.out_dir, exist_ok=True)
    return os.path.join(args.out_dir, name)


def _medium_figures(the_medium):
    figures = med.figures_of_merit(the_medium)
    return {
        "figures.d0": figures.d0,
        "figures.group_delay_ps": figures.group_delay_ps,
        "figures.loss_db": figures.loss_db,
        "figures.delay_per_loss_ps_per_db": figures.delay_per_loss_ps_per_db,
        "figures.delay_bandwidth_product": figures.delay_bandwidth_product,
    }


def _write_run_config(args, config: SimulationConfig):
    io.atomic_write_text(_out_path(args, "resolved_config.ini"), config.resolved_ini())


def cmd_analytic(args) -> int:
    config = load_config(args.config)
    m = config.medium
    if m.gamma_invps >= m.delta_invps:
        raise ConfigError(
            f"no transparency window: gamma_invps = {m.gamma_invps} >= "
            f"delta_invps = {m.delta_invps}"
        )
    if args.d0_max < 0 or args.d0_step <= 0:
        raise ConfigError("d0 sweep needs d0-max >= 0 and d0-step > 0")
    started = time.monotonic()
    count = int(round(args.d0_max / args.d0_step)) + 1
    d0_values = np.arange(count) * args.d0_step
    delays, losses, dbps = [], [], []
    for d0 in d0_values:
        point = med.from_target_depth(float(d0), m.gamma_invps, m.delta_invps, m.k0, m.length_mm)
        delays.append(med.group_delay(point))
        losses.append(med.loss_db(point))
        dbps.append(med.delay_bandwidth_product(point))
    io.write_analytic_csv(_out_path(args, "analytic_sweep.csv"), d0_values, delays, losses, dbps)

    ratio = med.delay_per_loss(m.gamma_invps, m.delta_invps)
    unit = med.from_target_depth(1.0, m.gamma_invps, m.delta_invps, m.k0, m.length_mm)
    tau_per_d0 = med.group_delay(unit)
    d0_unity = 1.0 / (tau_per_d0 * (m.delta_invps - m.gamma_invps))
    summary = {
        "run.command": "analytic",
        "sweep.d0_max": float(args.d0_max),
        "sweep.d0_step": float(args.d0_step),
        "figures.delay_per_loss_ps_per_db": ratio,
        "figures.d0_at_unit_dbp": d0_unity,
        "figures.loss_db_at_unit_dbp": d0_unity * med.loss_db(unit),
        "run.seconds": time.monotonic() - started,
    }
    summary.update(config.flat_items())
    io.write_summary(_out_path(args, "summary.txt"), summary)
    _write_run_config(args, config)
    return 0


def cmd_kk(args) -> int:
    wavelengths, values, kind = io.read_absorption_csv(args.absorption_csv)
    k0 = 2.0 * np.pi / (args.lambda0_nm * 1e-6)
    grid = TimeGrid(t_start=0.0, dt=2.0 * np.pi / args.span_invps, n=args.n).frequency_grid()
    depth = ingest_absorption(
        (wavelengths, values),
        center_wavelength_nm=args.center_nm,
        length_mm=args.length_mm,
        target_grid=grid,
        force_taper=args.force_taper,
        absorption=(kind == "absorption"),
    )
    chi = kk_real_from_imag(depth, k0, args.length_mm)
    io.write_susceptibility_csv(_out_path(args, "susceptibility.csv"), grid, chi.values)
    summary = {
        "run.command": "kk",
        "input.absorption_csv": args.absorption_csv,
        "input.kind": kind,
        "input.center_nm": args.center_nm,
        "input.lambda0_nm": args.lambda0_nm,
        "input.length_mm": args.length_mm,
        "grid.n": args.n,
        "grid.span_invps": args.span_invps,
        "kk.peak_depth": float(np.max(depth.depth)),
        "kk.reconstructed_delay_ps": group_delay_from_susceptibility(
            chi, k0, args.length_mm, 0.0
        ),
    }
    io.write_summary(_out_path(args, "summary.txt"), summary)
    return 0


def _chi_for_run(args, config, the_medium, fgrid):
    if args.chi_source == "model":
        return fdprop.susceptibility_from_medium(the_medium, fgrid)
    if not args.chi_csv:
        raise ConfigError("--chi-source csv requires --chi-csv")
    detunings, values = io.read_susceptibility_csv(args.chi_csv)
    real = np.interp(fgrid.omegas, detunings, values.real, left=0.0, right=0.0)
    imag = np.interp(fgrid.omegas, detunings, values.imag, left=0.0, right=0.0)
    return Susceptibility(grid=fgrid, values=real + 1j * imag)


def cmd_propagate(args) -> int:
    config = load_config(args.config)
    if config.control.intensity_list:
        raise ConfigError("propagate expects a single control.intensity; use sweep for lists")
    if args.domain == "td" and args.chi_source == "csv":
        raise ConfigError("the time-domain solver integrates the two-line model; use --domain fd with --chi-source csv")

    grid = config.grid.build(config.signal, config.medium)
    fgrid = grid.frequency_grid()
    pulse = config.signal.build(grid)
    intensity = config.control.intensity
    the_medium = config.medium.build().with_control_intensity(intensity)
    chi = _chi_for_run(args, config, the_medium, fgrid)
    transfer = fdprop.transfer_function(chi, the_medium.k0, the_medium.length_mm)

    warnings = []
    td_fd_l2_error = None
    if args.domain == "fd":
        out = fdprop.propagate(pulse, transfer)
    else:
        control = config.control.build(grid, intensity)
        result = tdprop.solve(the_medium, control, pulse, config.solver.build())
        out = result.output
        warnings.extend(result.warnings)
        if config.control.kind == "constant":
            fd_out = fdprop.propagate(pulse, transfer)
            td_fd_l2_error = float(
                np.sqrt(
                    np.sum(np.abs(out.samples - fd_out.samples) ** 2)
                    / np.sum(np.abs(fd_out.samples) ** 2)
                )
            )

    spec_in = forward_transform(pulse)
    if args.domain == "fd":
        spec_on = spec_in.samples * transfer.values
    else:
        spec_on = forward_transform(out).samples
    io.write_envelope_csv(_out_path(args, "input_envelope.csv"), pulse)
    io.write_envelope_csv(_out_path(args, "output_envelope.csv"), out)
    io.write_spectrum_csv(_out_path(args, "spectrum_off.csv"), fgrid, spec_in.samples)
    io.write_spectrum_csv(_out_path(args, "spectrum_on.csv"), fgrid, spec_on)

    delay = out.centroid() - pulse.centroid()
    loss_db_total = -10.0 * np.log10(out.energy() / pulse.energy())
    summary = {
        "run.command": f"propagate.{args.domain}",
        "run.chi_source": args.chi_source,
        "metrics.first_moment_delay_ps": delay,
        "metrics.loss_db": loss_db_total,
        "metrics.output_fwhm_ps": out.intensity_fwhm(),
        "metrics.center_transmission": transfer.center_transmission(),
        "grid.n": grid.n,
        "grid.dt_ps": grid.dt,
        "solver.nz": config.solver.nz,
        "solver.scheme": config.solver.scheme,
    }
    if args.chi_source == "model":
        summary.update(_medium_figures(the_medium))
    if td_fd_l2_error is not None:
        summary["metrics.td_fd_l2_error"] = td_fd_l2_error
    summary["warnings"] = "; ".join(warnings) if warnings else "none"
    summary.update(config.flat_items())
    io.write_summary(_out_path(args, "summary.txt"), summary)
    _write_run_config(args, config)
    return 0


def cmd_sweep(args) -> int:
    config = load_config(args.config)
    intensities = config.control.intensity_list
    if not intensities:
        raise ConfigError("sweep requires control.intensity_list")
    if config.control.kind != "constant":
        raise ConfigError("sweep assumes constant control during each point")

    grid = config.grid.build(config.signal, config.medium)
    fgrid = grid.frequency_grid()
    pulse = config.signal.build(grid)
    base_medium = config.medium.build()

    points = []
    if args.domain == "td":
        points = tdprop.delay_vs_control_scan(base_medium, intensities, pulse, config.solver.build())
    else:
        in_centroid = pulse.centroid()
        in_energy = pulse.energy()
        for intensity in intensities:
            m = base_medium.with_control_intensity(intensity)
            chi = fdprop.susceptibility_from_medium(m, fgrid)
            out = fdprop.propagate(pulse, fdprop.transfer_function(chi, m.k0, m.length_mm))
            points.append(
                tdprop.ScanPoint(
                    float(intensity),
                    float(out.centroid() - in_centroid),
                    float(-10.0 * np.log10(out.energy() / in_energy)),
                )
            )
    io.write_scan_csv(_out_path(args, "intensity_scan.csv"), points)

    summary = {"run.command": f"sweep.{args.domain}", "sweep.points": len(points)}
    if len(points) >= 3:
        slope, residual = analysis.linearity_diagnostic([(p.intensity, p.delay_ps) for p in points])
        summary["linearity.slope_ps_per_intensity"] = slope
        summary["linearity.residual_ratio"] = residual
    summary["metrics.max_delay_ps"] = max((p.delay_ps for p in points), default=0.0)
    summary.update(config.flat_items())
    io.write_summary(_out_path(args, "summary.txt"), summary)
    _write_run_config(args, config)
    return 0


def cmd_xcorr(args) -> int:
    signal = io.read_envelope_csv(args.signal_csv)
    reference = synthesize_pulse("gaussian", signal.grid, duration=args.ref_duration_ps)
    curve_on = analysis.cross_correlate(signal, reference)
    io.write_correlation_csv(_out_path(args, "xcorr_on.csv"), curve_on)

    summary = {
        "run.command": "xcorr",
        "input.signal_csv": args.signal_csv,
        "input.ref_duration_ps": args.ref_duration_ps,
        "metrics.xcorr_fwhm_ps": analysis.fwhm(curve_on),
    }
    summary["metrics.deconvolved_duration_ps"] = analysis.deconvolve_duration(
        summary["metrics.xcorr_fwhm_ps"], args.ref_duration_ps
    )
    if args.off_csv:
        off_env = io.read_envelope_csv(args.off_csv)
        if off_env.grid != signal.grid:
            raise ConfigError("on and off envelope CSVs must share a time grid")
        curve_off = analysis.cross_correlate(off_env, reference)
        io.write_correlation_csv(_out_path(args, "xcorr_off.csv"), curve_off)
        summary["metrics.first_moment_delay_ps"] = analysis.first_moment_delay(curve_on, curve_off)
    io.write_summary(_out_path(args, "summary.txt"), summary)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slowlight",
        description="Raman slow-light simulator: analytic figures of merit, "
        "frequency/time-domain propagation, Kramers-Kronig reconstruction "
        "and cross-correlation delay metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", default="slowlight_out", help="output directory")

    p = sub.add_parser("analytic", parents=[common], help="closed-form delay/loss/DBP sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--d0-max", type=float, default=5.0)
    p.add_argument("--d0-step", type=float, default=0.1)
    p.set_defaults(func=cmd_analytic)

    p = sub.add_parser("kk", parents=[common], help="Kramers-Kronig reconstruction")
    p.add_argument("--absorption-csv", required=True)
    p.add_argument("--center-nm", type=float, required=True)
    p.add_argument("--lambda0-nm", type=float, required=True)
    p.add_argument("--length-mm", type=float, required=True)
    p.add_argument("--n", type=int, default=2**14)
    p.add_argument("--span-invps", type=float, default=272.0)
    p.add_argument("--force-taper", action="store_true")
    p.set_defaults(func=cmd_kk)

    p = sub.add_parser("propagate", parents=[common], help="single propagation run")
    p.add_argument("--config", required=True)
    p.add_argument("--domain", choices=("fd", "td"), default="fd")
    p.add_argument("--chi-source", choices=("model", "csv"), default="model")
    p.add_argument("--chi-csv")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("sweep", parents=[common], help="delay/loss vs control intensity")
    p.add_argument("--config", required=True)
    p.add_argument("--domain", choices=("fd", "td"), default="td")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("xcorr", parents=[common], help="cross-correlation metrics")
    p.add_argument("--signal-csv", required=True)
    p.add_argument("--off-csv")
    p.add_argument("--ref-duration-ps", type=float, default=0.160)
    p.set_defaults(func=cmd_xcorr)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SlowLightError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

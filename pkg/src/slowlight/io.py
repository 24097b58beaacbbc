"""CSV and summary-file formats.

All CSVs are UTF-8 with LF line endings and full double precision
(17 significant digits).  Headers are fixed per format:

    envelope        time_ps,re,im
    spectrum        detuning_invps,re,im
    susceptibility  detuning_invps,chi_re,chi_im
    absorption in   wavelength_nm,absorption | wavelength_nm,optical_depth
    correlation     delay_ps,intensity
    intensity scan  control_intensity,delay_ps,loss_db
    analytic sweep  d0,delay_ps,loss_db,dbp

Files are written atomically (temp file + rename).
"""

from __future__ import annotations

import os
import tempfile

import numpy as np

from .errors import ConfigError
from .spectral import ComplexEnvelope, FrequencyGrid, TimeGrid

_FMT = "%.17g"

ENVELOPE_HEADER = "time_ps,re,im"
SPECTRUM_HEADER = "detuning_invps,re,im"
SUSCEPTIBILITY_HEADER = "detuning_invps,chi_re,chi_im"
CORRELATION_HEADER = "delay_ps,intensity"
SCAN_HEADER = "control_intensity,delay_ps,loss_db"
ANALYTIC_HEADER = "d0,delay_ps,loss_db,dbp"
ABSORPTION_HEADERS = ("wavelength_nm,absorption", "wavelength_nm,optical_depth")


def atomic_write_text(path, text: str):
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _table_text(header: str, columns) -> str:
    rows = np.column_stack([np.asarray(c, dtype=float) for c in columns])
    lines = [header]
    for row in rows:
        lines.append(",".join(_FMT % v for v in row))
    return "\n".join(lines) + "\n"


def write_envelope_csv(path, env: ComplexEnvelope):
    atomic_write_text(
        path, _table_text(ENVELOPE_HEADER, [env.grid.times, env.samples.real, env.samples.imag])
    )


def read_envelope_csv(path) -> ComplexEnvelope:
    t, re, im = _read_table(path, ENVELOPE_HEADER)
    dt = _uniform_step(t, "time")
    grid = TimeGrid(t_start=float(t[0]), dt=dt, n=t.size)
    return ComplexEnvelope(grid=grid, samples=re + 1j * im)


def write_spectrum_csv(path, grid: FrequencyGrid, values: np.ndarray):
    values = np.asarray(values, dtype=complex)
    atomic_write_text(
        path, _table_text(SPECTRUM_HEADER, [grid.omegas, values.real, values.imag])
    )


def write_susceptibility_csv(path, grid: FrequencyGrid, chi: np.ndarray):
    chi = np.asarray(chi, dtype=complex)
    atomic_write_text(
        path, _table_text(SUSCEPTIBILITY_HEADER, [grid.omegas, chi.real, chi.imag])
    )


def read_susceptibility_csv(path):
    """Returns (detunings, chi) arrays; the caller resamples as needed."""
    w, re, im = _read_table(path, SUSCEPTIBILITY_HEADER)
    _uniform_step(w, "detuning")
    return w, re + 1j * im


def write_correlation_csv(path, curve):
    atomic_write_text(path, _table_text(CORRELATION_HEADER, [curve.delays, curve.intensity]))


def write_scan_csv(path, points):
    cols = list(zip(*points)) if points else ([], [], [])
    atomic_write_text(path, _table_text(SCAN_HEADER, cols))


def write_analytic_csv(path, d0, delay, loss, dbp):
    atomic_write_text(path, _table_text(ANALYTIC_HEADER, [d0, delay, loss, dbp]))


def read_absorption_csv(path):
    """Read measured absorption data.

    Returns (wavelengths_nm, values, kind) with kind one of "absorption"
    (fractional A) or "optical_depth", auto-detected from the header.
    """
    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline().strip()
        if header not in ABSORPTION_HEADERS:
            raise ConfigError(
                f"unrecognized absorption CSV header {header!r}; expected one of "
                f"{ABSORPTION_HEADERS}"
            )
        body = np.loadtxt(handle, delimiter=",", ndmin=2)
    if body.shape[1] != 2:
        raise ConfigError(f"absorption CSV must have 2 columns, got {body.shape[1]}")
    kind = "absorption" if header == ABSORPTION_HEADERS[0] else "optical_depth"
    return body[:, 0], body[:, 1], kind


def write_summary(path, entries: dict):
    """Flat ``key = value`` summary document."""
    lines = []
    for key, value in entries.items():
        if isinstance(value, float):
            lines.append(f"{key} = {_FMT % value}")
        else:
            lines.append(f"{key} = {value}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def _read_table(path, expected_header: str):
    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline().strip()
        if header != expected_header:
            raise ConfigError(
                f"unexpected CSV header {header!r} in {path}; expected {expected_header!r}"
            )
        body = np.loadtxt(handle, delimiter=",", ndmin=2)
    if body.shape[1] != len(expected_header.split(",")):
        raise ConfigError(f"malformed CSV {path}: expected {expected_header!r} columns")
    return tuple(body[:, i] for i in range(body.shape[1]))


def _uniform_step(x: np.ndarray, what: str) -> float:
    if x.size < 2:
        raise ConfigError(f"{what} axis needs at least 2 samples")
    dt = float(x[-1] - x[0]) / (x.size - 1)
    if dt <= 0 or np.max(np.abs(np.diff(x) - dt)) > 1e-9 * abs(dt):
        raise ConfigError(f"{what} axis must be uniformly increasing")
    return dt

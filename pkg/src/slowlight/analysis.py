"""Experiment-facing metrics: intensity cross-correlation, first-moment
delays, widths, deconvolved durations, absorption spectra and the
linearity diagnostic for delay-versus-power scans.

The sum-frequency cross-correlator is modeled as an ideal intensity
correlator, I_xc(tau) = int I_sig(t) I_ref(t - tau) dt.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import correlate, correlation_lags

from .spectral import ComplexEnvelope, interpolated_fwhm, moment_centroid


@dataclass
class CorrelationCurve:
    delays: np.ndarray
    intensity: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        self.delays = np.asarray(self.delays, dtype=float)
        self.intensity = np.asarray(self.intensity, dtype=float)
        if self.delays.shape != self.intensity.shape:
            raise ValueError("delay and intensity arrays must have matching shapes")

    def first_moment(self, window: tuple[float, float] | None = None) -> float:
        """Mean delay; ``window = (lo, hi)`` restricts the integration range
        (useful when a measured baseline would otherwise bias the moment).
        Default: the full grid."""
        if window is None:
            return moment_centroid(self.delays, self.intensity)
        lo, hi = window
        mask = (self.delays >= lo) & (self.delays <= hi)
        return moment_centroid(self.delays[mask], self.intensity[mask])


def cross_correlate(
    signal: ComplexEnvelope, reference: ComplexEnvelope, normalize: bool = True
) -> CorrelationCurve:
    """Intensity cross-correlation of a signal against a reference pulse."""
    if signal.grid != reference.grid:
        raise ValueError("signal and reference must share a time grid")
    i_sig = signal.intensity()
    i_ref = reference.intensity()
    # correlate(a, b)[lag] = sum_t a(t + lag) b(t) = int I_sig(t) I_ref(t - lag) dt
    raw = correlate(i_sig, i_ref, mode="same", method="fft") * signal.grid.dt
    lags = correlation_lags(i_sig.size, i_ref.size, mode="same") * signal.grid.dt
    raw = np.maximum(raw, 0.0)  # clip FFT round-off noise
    if normalize:
        peak = np.max(raw)
        if peak > 0:
            raw = raw / peak
    return CorrelationCurve(delays=lags, intensity=raw, normalized=normalize)


def first_moment_delay(
    on: CorrelationCurve, off: CorrelationCurve, window: tuple[float, float] | None = None
) -> float:
    """Difference of the normalized first moments, on minus off (ps)."""
    return on.first_moment(window) - off.first_moment(window)


def fwhm(curve: CorrelationCurve) -> float:
    """Interpolated FWHM of a correlation curve (ps)."""
    return interpolated_fwhm(curve.delays, curve.intensity)


def deconvolve_duration(tau_xc: float, tau_ref: float) -> float:
    """Signal duration from a cross-correlation width, sqrt(xc^2 - ref^2)."""
    if tau_ref < 0:
        raise ValueError(f"reference duration must be non-negative, got {tau_ref}")
    if tau_xc <= tau_ref:
        raise ValueError(
            f"cross-correlation width {tau_xc} must exceed the reference width {tau_ref}"
        )
    return float(np.sqrt(tau_xc**2 - tau_ref**2))


def absorption_spectrum(on: np.ndarray, off: np.ndarray, floor: float = 1e-6):
    """Fractional absorption A = 1 - on/off, with a validity mask.

    Points where the control-off spectrum falls below ``floor`` times its
    peak are flagged invalid (A set to 0 there) rather than divided out.
    """
    on = np.asarray(on, dtype=float)
    off = np.asarray(off, dtype=float)
    if on.shape != off.shape:
        raise ValueError("spectra must have matching shapes")
    valid = off > floor * np.max(off)
    a = np.zeros_like(off)
    a[valid] = 1.0 - on[valid] / off[valid]
    return a, valid


def linearity_diagnostic(series) -> tuple[float, float]:
    """Least-squares line through the origin for (intensity, delay) points.

    Returns (slope, residual_ratio) where residual_ratio is the maximum
    absolute residual over the maximum absolute delay.
    """
    pts = [(float(x), float(y)) for x, y in series]
    if len(pts) < 3:
        raise ValueError(f"need at least 3 scan points, got {len(pts)}")
    x = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    denom = float(np.sum(x * x))
    if denom == 0:
        raise ValueError("all intensities are zero; cannot fit a slope")
    slope = float(np.sum(x * y) / denom)
    max_delay = float(np.max(np.abs(y)))
    if max_delay == 0:
        return slope, 0.0
    residual = float(np.max(np.abs(y - slope * x)))
    return slope, residual / max_delay

"""Run configuration: strict INI-style blocks for the medium, signal,
control, grid and solver, with units embedded in the key names.

Unknown sections or keys abort before any computation; every run writes
back the fully-resolved configuration so results can be reproduced
bit-for-bit.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field

from .errors import ConfigError
from .medium import RamanLine, RamanMedium
from .spectral import FLAT_TOP_TBP, GAUSSIAN_TBP, PULSE_SHAPES, ComplexEnvelope, TimeGrid, synthesize_pulse
from .tdprop import ControlField, SolverSettings

_SCHEMA = {
    "medium": {"gamma_invps", "delta_invps", "d0", "g_per_intensity", "length_mm", "lambda0_nm"},
    "signal": {"shape", "bandwidth_invps", "duration_ps", "gdd_ps2"},
    "control": {"kind", "intensity", "intensity_list", "fwhm_ps"},
    "grid": {"n", "dt_ps"},
    "solver": {"nz", "scheme"},
}

_CONTROL_KINDS = ("constant", "gaussian", "flat_top")


@dataclass
class MediumConfig:
    gamma_invps: float
    delta_invps: float
    length_mm: float
    lambda0_nm: float
    d0: float | None = None
    g_per_intensity: float | None = None

    @property
    def k0(self) -> float:
        return 2.0 * math.pi / (self.lambda0_nm * 1e-6)  # rad/mm

    def strength_per_intensity(self) -> float:
        if self.g_per_intensity is not None:
            return self.g_per_intensity
        return self.d0 * self.gamma_invps / self.length_mm

    def build(self) -> RamanMedium:
        g = self.strength_per_intensity()
        half = self.delta_invps / 2.0
        lines = (
            RamanLine(-half, self.gamma_invps, g),
            RamanLine(+half, self.gamma_invps, g),
        )
        return RamanMedium(
            lines=lines,
            splitting=self.delta_invps,
            length_mm=self.length_mm,
            k0=self.k0,
        )


@dataclass
class SignalConfig:
    shape: str
    bandwidth_invps: float | None = None
    duration_ps: float | None = None
    gdd_ps2: float = 0.0

    def transform_limited_duration(self) -> float:
        if self.duration_ps is not None:
            return self.duration_ps
        tbp = GAUSSIAN_TBP if self.shape == "gaussian" else FLAT_TOP_TBP
        return tbp / self.bandwidth_invps

    def build(self, grid: TimeGrid) -> ComplexEnvelope:
        return synthesize_pulse(
            self.shape,
            grid,
            bandwidth=self.bandwidth_invps,
            duration=self.duration_ps,
            quadratic_spectral_phase=self.gdd_ps2,
        )


@dataclass
class ControlConfig:
    kind: str = "constant"
    intensity: float | None = None
    intensity_list: list[float] = field(default_factory=list)
    fwhm_ps: float | None = None

    def build(self, grid: TimeGrid, intensity: float | None = None) -> ControlField:
        level = self.intensity if intensity is None else intensity
        if self.kind == "constant":
            return ControlField.constant(level)
        if self.kind == "gaussian":
            return ControlField.gaussian(grid, self.fwhm_ps, level)
        return ControlField.flat_top(grid, self.fwhm_ps, level)


@dataclass
class GridConfig:
    n: int = 2**14
    dt_ps: float | None = None

    def resolve_dt(self, signal: SignalConfig, medium: MediumConfig) -> float:
        """Pick a time step resolving the two-photon beat and the pulse,
        with span at least 16x the transform-limited duration."""
        duration = signal.transform_limited_duration()
        dt_beat = 2.0 * math.pi / (8.0 * medium.delta_invps)
        dt_pulse = duration / 16.0
        dt_span = 16.0 * duration / self.n
        if self.dt_ps is not None:
            return self.dt_ps
        dt = min(0.5 * dt_beat, dt_pulse)
        if dt < dt_span:
            dt = dt_span
        if dt > min(dt_beat, dt_pulse):
            raise ConfigError(
                f"no time step with n = {self.n} both spans 16x the pulse and resolves "
                f"the beat; increase grid n"
            )
        return dt

    def build(self, signal: SignalConfig, medium: MediumConfig) -> TimeGrid:
        return TimeGrid.centered(self.n, self.resolve_dt(signal, medium))


@dataclass
class SolverConfig:
    nz: int = 256
    scheme: str = "midpoint"

    def build(self) -> SolverSettings:
        return SolverSettings(nz=self.nz, scheme=self.scheme)


@dataclass
class SimulationConfig:
    medium: MediumConfig
    signal: SignalConfig
    control: ControlConfig
    grid: GridConfig
    solver: SolverConfig

    def resolved_ini(self) -> str:
        """Fully-resolved configuration, suitable for bit-identical re-runs."""
        dt = self.grid.resolve_dt(self.signal, self.medium)
        lines = ["[medium]"]
        lines.append(f"gamma_invps = {self.medium.gamma_invps!r}")
        lines.append(f"delta_invps = {self.medium.delta_invps!r}")
        lines.append(f"g_per_intensity = {self.medium.strength_per_intensity()!r}")
        lines.append(f"length_mm = {self.medium.length_mm!r}")
        lines.append(f"lambda0_nm = {self.medium.lambda0_nm!r}")
        lines.append("")
        lines.append("[signal]")
        lines.append(f"shape = {self.signal.shape}")
        if self.signal.bandwidth_invps is not None:
            lines.append(f"bandwidth_invps = {self.signal.bandwidth_invps!r}")
        else:
            lines.append(f"duration_ps = {self.signal.duration_ps!r}")
        lines.append(f"gdd_ps2 = {self.signal.gdd_ps2!r}")
        lines.append("")
        lines.append("[control]")
        lines.append(f"kind = {self.control.kind}")
        if self.control.intensity_list:
            lines.append(
                "intensity_list = " + ", ".join(repr(v) for v in self.control.intensity_list)
            )
        if self.control.intensity is not None:
            lines.append(f"intensity = {self.control.intensity!r}")
        if self.control.fwhm_ps is not None:
            lines.append(f"fwhm_ps = {self.control.fwhm_ps!r}")
        lines.append("")
        lines.append("[grid]")
        lines.append(f"n = {self.grid.n}")
        lines.append(f"dt_ps = {dt!r}")
        lines.append("")
        lines.append("[solver]")
        lines.append(f"nz = {self.solver.nz}")
        lines.append(f"scheme = {self.solver.scheme}")
        return "\n".join(lines) + "\n"

    def flat_items(self) -> dict:
        """config.* entries embedded in run summaries."""
        out = {}
        parser = configparser.ConfigParser(interpolation=None)
        parser.read_string(self.resolved_ini())
        for section in parser.sections():
            for key, value in parser.items(section):
                out[f"config.{section}.{key}"] = value
        return out


def _get_float(section, key, name, required=False, default=None, positive=False):
    if key not in section:
        if required:
            raise ConfigError(f"missing required key {name}")
        return default
    raw = section[key]
    try:
        value = float(raw)
    except ValueError as exc:
        raise ConfigError(f"key {name} must be a number, got {raw!r}") from exc
    if positive and value <= 0:
        raise ConfigError(f"key {name} must be positive, got {value}")
    return value


def _get_int(section, key, name, default):
    if key not in section:
        return default
    raw = section[key]
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"key {name} must be an integer, got {raw!r}") from exc


def load_config(path) -> SimulationConfig:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            parser.read_file(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc

    for section in parser.sections():
        if section not in _SCHEMA:
            raise ConfigError(f"unknown config section [{section}]")
        for key in parser[section]:
            if key not in _SCHEMA[section]:
                raise ConfigError(f"unknown key {key!r} in section [{section}]")

    if "medium" not in parser:
        raise ConfigError("missing required section [medium]")
    med = parser["medium"]
    medium = MediumConfig(
        gamma_invps=_get_float(med, "gamma_invps", "medium.gamma_invps", required=True, positive=True),
        delta_invps=_get_float(med, "delta_invps", "medium.delta_invps", required=True, positive=True),
        length_mm=_get_float(med, "length_mm", "medium.length_mm", required=True, positive=True),
        lambda0_nm=_get_float(med, "lambda0_nm", "medium.lambda0_nm", required=True, positive=True),
        d0=_get_float(med, "d0", "medium.d0"),
        g_per_intensity=_get_float(med, "g_per_intensity", "medium.g_per_intensity"),
    )
    if (medium.d0 is None) == (medium.g_per_intensity is None):
        raise ConfigError("section [medium] needs exactly one of d0 or g_per_intensity")
    if medium.d0 is not None and medium.d0 < 0:
        raise ConfigError(f"medium.d0 must be non-negative, got {medium.d0}")
    if medium.g_per_intensity is not None and medium.g_per_intensity < 0:
        raise ConfigError("medium.g_per_intensity must be non-negative")

    if "signal" not in parser:
        raise ConfigError("missing required section [signal]")
    sig = parser["signal"]
    shape = sig.get("shape", "")
    if shape not in PULSE_SHAPES:
        raise ConfigError(f"signal.shape must be one of {PULSE_SHAPES}, got {shape!r}")
    signal = SignalConfig(
        shape=shape,
        bandwidth_invps=_get_float(sig, "bandwidth_invps", "signal.bandwidth_invps", positive=True),
        duration_ps=_get_float(sig, "duration_ps", "signal.duration_ps", positive=True),
        gdd_ps2=_get_float(sig, "gdd_ps2", "signal.gdd_ps2", default=0.0),
    )
    if (signal.bandwidth_invps is None) == (signal.duration_ps is None):
        raise ConfigError("section [signal] needs exactly one of bandwidth_invps or duration_ps")

    control = ControlConfig()
    if "control" in parser:
        ctl = parser["control"]
        control.kind = ctl.get("kind", "constant")
        if control.kind not in _CONTROL_KINDS:
            raise ConfigError(f"control.kind must be one of {_CONTROL_KINDS}, got {control.kind!r}")
        control.intensity = _get_float(ctl, "intensity", "control.intensity")
        if control.intensity is not None and control.intensity < 0:
            raise ConfigError("control.intensity must be non-negative")
        if "intensity_list" in ctl:
            try:
                control.intensity_list = [float(v) for v in ctl["intensity_list"].split(",")]
            except ValueError as exc:
                raise ConfigError("control.intensity_list must be comma-separated numbers") from exc
            if any(v < 0 for v in control.intensity_list):
                raise ConfigError("control.intensity_list entries must be non-negative")
        control.fwhm_ps = _get_float(ctl, "fwhm_ps", "control.fwhm_ps", positive=True)
        if control.kind != "constant" and control.fwhm_ps is None:
            raise ConfigError(f"control.kind = {control.kind} requires fwhm_ps")
    if control.intensity is None and not control.intensity_list:
        control.intensity = 1.0

    grid = GridConfig()
    if "grid" in parser:
        grd = parser["grid"]
        grid.n = _get_int(grd, "n", "grid.n", grid.n)
        grid.dt_ps = _get_float(grd, "dt_ps", "grid.dt_ps", positive=True)

    solver = SolverConfig()
    if "solver" in parser:
        sol = parser["solver"]
        solver.nz = _get_int(sol, "nz", "solver.nz", solver.nz)
        solver.scheme = sol.get("scheme", solver.scheme)
        if solver.scheme != "midpoint":
            raise ConfigError(f"solver.scheme must be 'midpoint', got {solver.scheme!r}")

    try:
        config = SimulationConfig(medium=medium, signal=signal, control=control, grid=grid, solver=solver)
        config.medium.build()
        config.solver.build()
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return config

import numpy as np
import pytest

import slowlight as sl
from slowlight.config import load_config
from slowlight.errors import ConfigError

GOOD = """\
[medium]
gamma_invps = 1.0
delta_invps = 6.8
d0 = 2.5
length_mm = 30.0
lambda0_nm = 765.0

[signal]
shape = flat_top_spectrum
bandwidth_invps = 1.8

[control]
kind = constant
intensity = 1.0

[grid]
n = 16384
dt_ps = 0.06

[solver]
nz = 256
"""


def write(tmp_path, text):
    path = tmp_path / "run.ini"
    path.write_text(text)
    return path


def test_good_config_builds_everything(tmp_path):
    config = load_config(write(tmp_path, GOOD))
    medium = config.medium.build()
    assert sl.peak_optical_depth(medium) == pytest.approx(2.5, rel=1e-12)
    assert medium.k0 == pytest.approx(2 * np.pi / 765e-6, rel=1e-12)
    grid = config.grid.build(config.signal, config.medium)
    assert grid.n == 16384 and grid.dt == 0.06
    pulse = config.signal.build(grid)
    assert pulse.energy() == pytest.approx(1.0, rel=1e-9)
    control = config.control.build(grid)
    assert control.intensity == 1.0 and control.envelope is None


def test_unknown_key_named(tmp_path):
    with pytest.raises(ConfigError, match="frequency_offset"):
        load_config(write(tmp_path, GOOD + "\nfrequency_offset = 2\n"))


def test_unknown_section_rejected(tmp_path):
    with pytest.raises(ConfigError, match="detector"):
        load_config(write(tmp_path, GOOD + "\n[detector]\ngain = 2\n"))


def test_medium_needs_exactly_one_strength(tmp_path):
    text = GOOD.replace("d0 = 2.5", "d0 = 2.5\ng_per_intensity = 0.08")
    with pytest.raises(ConfigError, match="exactly one"):
        load_config(write(tmp_path, text))
    text = GOOD.replace("d0 = 2.5\n", "")
    with pytest.raises(ConfigError, match="exactly one"):
        load_config(write(tmp_path, text))


def test_g_per_intensity_equivalent_to_d0(tmp_path):
    g = 2.5 * 1.0 / 30.0
    text = GOOD.replace("d0 = 2.5", f"g_per_intensity = {g!r}")
    medium = load_config(write(tmp_path, text)).medium.build()
    assert sl.peak_optical_depth(medium) == pytest.approx(2.5, rel=1e-12)


def test_signal_needs_exactly_one_width(tmp_path):
    text = GOOD.replace("bandwidth_invps = 1.8", "bandwidth_invps = 1.8\nduration_ps = 0.5")
    with pytest.raises(ConfigError, match="exactly one"):
        load_config(write(tmp_path, text))


def test_bad_number_reported_with_key(tmp_path):
    text = GOOD.replace("gamma_invps = 1.0", "gamma_invps = one")
    with pytest.raises(ConfigError, match="gamma_invps"):
        load_config(write(tmp_path, text))


def test_shaped_control_requires_fwhm(tmp_path):
    text = GOOD.replace("kind = constant", "kind = flat_top")
    with pytest.raises(ConfigError, match="fwhm"):
        load_config(write(tmp_path, text))


def test_intensity_list_parsing(tmp_path):
    text = GOOD.replace("intensity = 1.0", "intensity_list = 0, 0.5, 1.0")
    config = load_config(write(tmp_path, text))
    assert config.control.intensity_list == [0.0, 0.5, 1.0]


def test_default_dt_respects_beat_and_span(tmp_path):
    text = GOOD.replace("dt_ps = 0.06\n", "")
    config = load_config(write(tmp_path, text))
    grid = config.grid.build(config.signal, config.medium)
    assert grid.dt <= 2 * np.pi / (8 * 6.8)
    duration = config.signal.transform_limited_duration()
    assert grid.span >= 16 * duration
    assert grid.dt <= duration / 16


def test_resolved_ini_round_trips(tmp_path):
    config = load_config(write(tmp_path, GOOD))
    resolved = tmp_path / "resolved.ini"
    resolved.write_text(config.resolved_ini())
    again = load_config(resolved)
    assert again.resolved_ini() == config.resolved_ini()
    assert again.medium.strength_per_intensity() == config.medium.strength_per_intensity()


def test_missing_file_is_config_error(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(tmp_path / "nope.ini")

import numpy as np
import pytest

import slowlight as sl
from slowlight.errors import GridResolutionError

from conftest import DELTA, GAMMA, K0, LENGTH, rel_l2


def fd_reference(medium, pulse):
    chi = sl.susceptibility_from_medium(medium, pulse.grid.frequency_grid())
    H = sl.transfer_function(chi, medium.k0, medium.length_mm)
    return sl.propagate(pulse, H)


class TestSolve:
    def test_control_off_is_identity(self, std_medium, flattop_signal):
        result = sl.solve(std_medium, sl.ControlField.constant(0.0), flattop_signal)
        assert np.array_equal(result.output.samples, flattop_signal.samples)
        assert np.all(result.coherences.q21 == 0)
        assert np.all(result.coherences.q31 == 0)

    def test_matches_frequency_domain_solution(self, std_medium, flattop_signal):
        result = sl.solve(std_medium, sl.ControlField.constant(1.0), flattop_signal)
        reference = fd_reference(std_medium, flattop_signal)
        assert rel_l2(result.output.samples, reference.samples) < 1e-3
        td_delay = result.output.centroid() - flattop_signal.centroid()
        fd_delay = reference.centroid() - flattop_signal.centroid()
        assert td_delay == pytest.approx(fd_delay, rel=0.01)

    def test_single_line_beer_lambert(self):
        d0 = 1.0
        grid = sl.TimeGrid.centered(2**14, 0.02)
        medium = sl.RamanMedium(
            lines=(
                sl.RamanLine(-DELTA / 2, GAMMA, 0.0),
                sl.RamanLine(+DELTA / 2, GAMMA, d0 * GAMMA / LENGTH),
            ),
            splitting=DELTA,
            length_mm=LENGTH,
            k0=K0,
        )
        # narrowband pulse sitting on the upper line: tone at +Delta/2
        carrier = np.exp(-1j * (DELTA / 2.0) * grid.times)
        base = sl.synthesize_pulse("gaussian", grid, duration=10.0)
        pulse = sl.ComplexEnvelope(grid=grid, samples=base.samples * carrier)
        result = sl.solve(medium, sl.ControlField.constant(1.0), pulse)
        ratio = result.output.energy() / pulse.energy()
        assert ratio == pytest.approx(np.exp(-d0), rel=0.02)

    def test_causality(self, std_medium):
        grid = sl.TimeGrid.centered(2**13, 0.03)
        base = sl.synthesize_pulse("gaussian", grid, duration=1.5)
        result = sl.solve(std_medium, sl.ControlField.constant(1.0), base)
        peak_in = np.max(np.abs(base.samples))
        leading = np.argmax(np.abs(base.samples) > 1e-8 * peak_in)
        front = np.abs(result.output.samples[: max(leading - 1, 0)])
        assert front.size == 0 or np.max(front) < 1e-8 * peak_in

    def test_passivity(self, flattop_signal):
        rng = np.random.default_rng(11)
        for _ in range(5):
            lines = (
                sl.RamanLine(-DELTA / 2, rng.uniform(0.3, 2.0), rng.uniform(0.0, 0.1)),
                sl.RamanLine(+DELTA / 2, rng.uniform(0.3, 2.0), rng.uniform(0.0, 0.1)),
            )
            medium = sl.RamanMedium(lines=lines, splitting=DELTA, length_mm=LENGTH, k0=K0)
            result = sl.solve(medium, sl.ControlField.constant(1.0), flattop_signal)
            assert result.output.energy() <= flattop_signal.energy() + 1e-12

    def test_z_convergence_is_second_order(self, std_medium):
        grid = sl.TimeGrid.centered(2**13, 0.03)
        pulse = sl.synthesize_pulse("gaussian", grid, duration=2.0)
        control = sl.ControlField.constant(1.0)
        reference = sl.solve(std_medium, control, pulse, sl.SolverSettings(nz=2048)).output
        errors = {}
        for nz in (16, 32, 64):
            out = sl.solve(std_medium, control, pulse, sl.SolverSettings(nz=nz)).output
            errors[nz] = rel_l2(out.samples, reference.samples)
        for coarse, fine in ((16, 32), (32, 64)):
            ratio = errors[coarse] / errors[fine]
            assert 2.8 < ratio < 5.2  # second order: factor 4 +- 30%

    def test_long_control_matches_constant(self, std_medium):
        grid = sl.TimeGrid.centered(2**13, 0.02)
        pulse = sl.synthesize_pulse("gaussian", grid, duration=0.65)
        const = sl.solve(std_medium, sl.ControlField.constant(1.0), pulse)
        shaped_control = sl.ControlField.flat_top(grid, fwhm_ps=4.0, intensity=1.0)
        shaped = sl.solve(std_medium, shaped_control, pulse)
        assert rel_l2(shaped.output.samples, const.output.samples) < 0.02
        d_const = const.output.centroid() - pulse.centroid()
        d_shaped = shaped.output.centroid() - pulse.centroid()
        assert d_shaped == pytest.approx(d_const, rel=0.02)

    def test_weak_signal_warning(self, std_medium, flattop_signal):
        loud = sl.ComplexEnvelope(
            grid=flattop_signal.grid, samples=10.0 * flattop_signal.samples
        )
        result = sl.solve(std_medium, sl.ControlField.constant(1.0), loud)
        assert any("weak-signal" in w for w in result.warnings)

    def test_short_control_warns(self, std_medium):
        grid = sl.TimeGrid.centered(2**13, 0.02)
        pulse = sl.synthesize_pulse("gaussian", grid, duration=2.0)
        control = sl.ControlField.gaussian(grid, fwhm_ps=3.0, intensity=1.0)
        result = sl.solve(std_medium, control, pulse)
        assert any("control" in w for w in result.warnings)

    def test_coarse_time_step_refused(self, std_medium):
        grid = sl.TimeGrid.centered(2**10, 0.2)  # > 2 pi / (8 Delta)
        pulse = sl.ComplexEnvelope(grid=grid, samples=np.exp(-grid.times**2).astype(complex))
        with pytest.raises(GridResolutionError, match="dt"):
            sl.solve(std_medium, sl.ControlField.constant(1.0), pulse)

    def test_insufficient_z_steps_refused(self):
        medium = sl.from_target_depth(50.0, GAMMA, DELTA, K0, LENGTH)
        grid = sl.TimeGrid.centered(2**12, 0.05)
        pulse = sl.synthesize_pulse("gaussian", grid, duration=2.0)
        with pytest.raises(GridResolutionError, match="nz >="):
            sl.solve(medium, sl.ControlField.constant(1.0), pulse, sl.SolverSettings(nz=16))

    def test_settings_validation(self):
        with pytest.raises(ValueError, match="16"):
            sl.SolverSettings(nz=8)
        with pytest.raises(ValueError, match="scheme"):
            sl.SolverSettings(scheme="rk4")
        with pytest.raises(ValueError, match="non-negative"):
            sl.ControlField.constant(-1.0)


class TestControlScan:
    def test_empty_scan(self, std_medium, flattop_signal):
        assert sl.delay_vs_control_scan(std_medium, [], flattop_signal) == []

    def test_zero_intensity_row(self, std_medium, flattop_signal):
        points = sl.delay_vs_control_scan(std_medium, [0.0], flattop_signal)
        assert points[0].delay_ps == 0.0
        assert points[0].loss_db == pytest.approx(0.0, abs=1e-12)

    def test_linear_regime(self, flattop_signal):
        medium = sl.from_target_depth(1.2, GAMMA, DELTA, K0, LENGTH)
        points = sl.delay_vs_control_scan(medium, [0.0, 0.5, 1.0], flattop_signal)
        delays = [p.delay_ps for p in points]
        assert delays[0] == 0.0
        assert delays[1] == pytest.approx(delays[2] / 2.0, rel=0.02)

    def test_monotone_for_slow_light_medium(self, std_medium, flattop_signal):
        points = sl.delay_vs_control_scan(
            std_medium, [0.0, 0.25, 0.5, 0.75, 1.0], flattop_signal
        )
        delays = [p.delay_ps for p in points]
        assert all(b >= a - 1e-12 for a, b in zip(delays, delays[1:]))

    def test_structured_medium_is_less_linear(self, flattop_signal):
        intensities = list(np.linspace(0.0, 1.0, 6))
        symmetric = sl.from_target_depth(2.5, GAMMA, DELTA, K0, LENGTH)
        sym_points = sl.delay_vs_control_scan(symmetric, intensities, flattop_signal)
        _, sym_residual = sl.linearity_diagnostic(
            [(p.intensity, p.delay_ps) for p in sym_points]
        )
        lopsided = sl.RamanMedium(
            lines=(
                sl.RamanLine(-DELTA / 2, 0.5, 1.2 * GAMMA / LENGTH),
                sl.RamanLine(+DELTA / 2, 2.2, 4.0 * GAMMA / LENGTH),
            ),
            splitting=DELTA,
            length_mm=LENGTH,
            k0=K0,
        )
        asym_points = sl.delay_vs_control_scan(lopsided, intensities, flattop_signal)
        _, asym_residual = sl.linearity_diagnostic(
            [(p.intensity, p.delay_ps) for p in asym_points]
        )
        assert asym_residual > sym_residual

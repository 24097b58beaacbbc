import numpy as np
import pytest
from hypothesis import settings

import slowlight as sl

# the toolkit is deterministic; keep the property tests that way too
settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")

K0 = 2.0 * np.pi / 765e-6  # rad/mm at 765 nm
LENGTH = 30.0              # mm
GAMMA = 1.0                # 1/ps
DELTA = 6.8                # 1/ps


@pytest.fixture(scope="session")
def std_medium():
    """Symmetric doublet at the headline operating point d0 = 2.5."""
    return sl.from_target_depth(2.5, GAMMA, DELTA, K0, LENGTH)


@pytest.fixture(scope="session")
def signal_grid():
    """Default propagation grid: long span keeps the sinc tails small."""
    return sl.TimeGrid.centered(2**14, 0.06)


@pytest.fixture(scope="session")
def flattop_signal(signal_grid):
    """The experiment-style signal: flat-top spectrum of full width 1.8."""
    return sl.synthesize_pulse("flat_top_spectrum", signal_grid, bandwidth=1.8)


@pytest.fixture(scope="session")
def std_transfer(std_medium, signal_grid):
    chi = sl.susceptibility_from_medium(std_medium, signal_grid.frequency_grid())
    return sl.transfer_function(chi, std_medium.k0, std_medium.length_mm)


def rel_l2(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(a - b) ** 2) / np.sum(np.abs(b) ** 2)))

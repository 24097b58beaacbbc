"""Frequency-domain propagation of a broadband signal through the
transparency window.

A flat-top signal filling a third of the window is propagated through the
doublet at d0 = 2.5.  The output pulse is delayed by roughly the analytic
group delay while the window-center intensity transmission is about 67%.
Writes the envelopes and on/off spectra as CSV under demo_out/.
"""

import os

import numpy as np

import slowlight as sl
from slowlight import io

GAMMA, DELTA, D0 = 1.0, 6.8, 2.5
K0, LENGTH = 2 * np.pi / 765e-6, 30.0

grid = sl.TimeGrid.centered(2**14, 0.06)
signal = sl.synthesize_pulse("flat_top_spectrum", grid, bandwidth=1.8)
medium = sl.from_target_depth(D0, GAMMA, DELTA, K0, LENGTH)

chi = sl.susceptibility_from_medium(medium, grid.frequency_grid())
transfer = sl.transfer_function(chi, K0, LENGTH)
out = sl.propagate(signal, transfer)
on, off = sl.output_spectra(signal, transfer)

delay = out.centroid() - signal.centroid()
print(f"analytic group delay:      {sl.group_delay(medium):.5f} ps")
print(f"measured centroid delay:   {delay:.5f} ps")
print(f"center transmission:       {transfer.center_transmission():.4f}")
print(f"pulse energy transmission: {out.energy() / signal.energy():.4f}")
absorption, valid = sl.absorption_spectrum(on, off)
i0 = transfer.grid.zero_index
print(f"window-center absorption:  {absorption[i0]:.4f}")

os.makedirs("demo_out", exist_ok=True)
io.write_envelope_csv("demo_out/fd_input_envelope.csv", signal)
io.write_envelope_csv("demo_out/fd_output_envelope.csv", out)
io.write_spectrum_csv("demo_out/fd_spectrum_off.csv", transfer.grid, sl.forward_transform(signal).samples)
io.write_spectrum_csv("demo_out/fd_spectrum_on.csv", transfer.grid, sl.forward_transform(out).samples)
print("wrote demo_out/fd_*.csv")

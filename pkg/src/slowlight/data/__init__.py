"""Bundled data files."""

from importlib.resources import files


def ktp_absorption_path() -> str:
    """Synthetic two-line KTP-style absorption spectrum (wavelength_nm,absorption).

    A stand-in with peaks at the measured 759.4 nm and 772.4 nm line
    positions; like the real measurement it is truncated at 758-778 nm, so
    Kramers-Kronig work on it needs the edge taper.
    """
    return str(files(__package__) / "ktp_two_line_absorption.csv")

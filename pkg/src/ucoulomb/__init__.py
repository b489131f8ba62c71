"""Coulomb scattering for a PT-symmetric potential on a U-shaped complex contour."""

from .asymptotics import (
    AsymptoticCoeffs,
    asymptotic_coeffs,
    asymptotic_wave,
    combine,
    coulomb_waves,
    relation_residuals,
)
from .contour import ContourPoint, branch_power, contour_log, contour_point, junction
from .model import Dispersion, PhysParams, dispersion, energy_from_k, potential, validate
from .oracle import extract_numeric_amplitudes, integrate_contour, verify_grid, verify_point
from .scattering import (
    BoundState,
    ScatteringAmplitudes,
    amplitudes_from_coeffs,
    bound_state_poles,
    inverse_transmission,
    scan,
    scattering_amplitudes,
)
from .solutions import psi1, psi2, solution_pair, wronskian

__version__ = "0.1.0"

__all__ = [
    "AsymptoticCoeffs",
    "BoundState",
    "ContourPoint",
    "Dispersion",
    "PhysParams",
    "ScatteringAmplitudes",
    "amplitudes_from_coeffs",
    "asymptotic_coeffs",
    "asymptotic_wave",
    "bound_state_poles",
    "branch_power",
    "combine",
    "contour_log",
    "contour_point",
    "coulomb_waves",
    "dispersion",
    "energy_from_k",
    "extract_numeric_amplitudes",
    "integrate_contour",
    "inverse_transmission",
    "junction",
    "potential",
    "psi1",
    "psi2",
    "relation_residuals",
    "scan",
    "scattering_amplitudes",
    "solution_pair",
    "validate",
    "verify_grid",
    "verify_point",
    "wronskian",
]

"""Physical parameters, the complexified Coulomb potential and the dispersion relation.

Units: hbar = 1 and 2|m| = 1, so 2mE/hbar^2 = -k^2 reads E = -sign(m) k^2.
The scattering pipeline works at negative mass (sign(m) = -1), where a real
wavenumber is a positive-energy scattering state and a wavenumber on the
positive imaginary axis is a negative-energy bound state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .contour import ContourPoint
from .errors import IntegerTwoL, NonPositiveEpsilon

__all__ = [
    "PhysParams",
    "Dispersion",
    "validate",
    "potential",
    "energy_from_k",
    "dispersion",
    "TWO_L_TOL",
]

TWO_L_TOL = 1e-9


@dataclass(frozen=True)
class PhysParams:
    """Coulomb strength ``Z``, centrifugal parameter ``L`` and contour width ``eps``."""

    Z: float
    L: float
    eps: float

    @property
    def centrifugal(self) -> float:
        return self.L * (self.L + 1.0)

    def validate(self) -> "PhysParams":
        validate(self)
        return self


def validate(params: PhysParams) -> None:
    """Raise unless Z, L are finite, eps > 0 and 2L is not an integer.

    The two Kummer-type solutions stop being independent when 2L is an
    integer, so 2L must sit more than TWO_L_TOL away from every integer.
    """
    if not (math.isfinite(params.Z) and math.isfinite(params.L)):
        raise ValueError(f"Z and L must be finite reals, got {params!r}")
    if not (params.eps > 0 and math.isfinite(params.eps)):
        raise NonPositiveEpsilon(f"eps must be positive, got {params.eps!r}")
    two_l = 2.0 * params.L
    if abs(two_l - round(two_l)) <= TWO_L_TOL:
        raise IntegerTwoL(f"2L = {two_l!r} is an integer; solutions are not independent")


def potential(params: PhysParams, p: ContourPoint) -> complex:
    """Effective potential i Z / x + L(L+1) / x^2 at a contour point."""
    x = p.x
    if x == 0:
        raise ZeroDivisionError("potential is singular at x = 0")
    return 1j * params.Z / x + params.centrifugal / (x * x)


def energy_from_k(k: complex, mass_sign: int = -1) -> complex:
    """Energy E = -sign(m) k^2 in units hbar^2 / (2|m|) = 1."""
    if mass_sign not in (1, -1):
        raise ValueError("mass_sign must be +1 or -1")
    k = complex(k)
    return -mass_sign * (k * k)


@dataclass(frozen=True)
class Dispersion:
    k: complex
    mass_sign: int
    E: complex

    @property
    def regime(self) -> str:
        """'scattering' for real positive E, 'bound' for real negative E, else 'complex'."""
        if self.E.imag == 0.0:
            if self.E.real > 0:
                return "scattering"
            if self.E.real < 0:
                return "bound"
        return "complex"


def dispersion(k: complex, mass_sign: int = -1) -> Dispersion:
    return Dispersion(complex(k), mass_sign, energy_from_k(k, mass_sign))

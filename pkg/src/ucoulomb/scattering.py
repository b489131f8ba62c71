"""Transmission and reflection amplitudes, k-scans and bound-state poles.

Conventions (amplitudes, not probabilities):

* left to right: unit e^{+i phi} arriving on the left arm, ``r_lr`` on the
  reflected e^{-i phi} wave there, ``t_lr`` on e^{+i phi} on the right arm and
  nothing arriving from the right;
* right to left: unit e^{-i phi} arriving on the right arm, ``r_rl`` on the
  e^{+i phi} wave there, ``t_rl`` on e^{-i phi} on the left arm.

In closed form, with eta = Z/(2k),

    t_lr = (i/2pi) e^{-i pi k eps} e^{pi eta} Gamma(-L - i eta) Gamma(L + 1 - i eta)
    r_lr = t_lr e^{-2k eps} (2 cos(2 pi L) - e^{-pi Z/k})
    t_rl = -t_lr
    r_rl = t_rl e^{2k eps} e^{-pi Z/k}

and the poles of t_lr in the upper half k-plane are the bound states.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .asymptotics import AsymptoticCoeffs, asymptotic_coeffs
from .errors import AtBoundStatePole, EmptyFamily, ZeroWavenumber
from .model import PhysParams, energy_from_k, validate
from .specfun import clngamma, pole_distance, rgamma

__all__ = [
    "ScatteringAmplitudes",
    "ScanRow",
    "BoundState",
    "FAMILIES",
    "scattering_amplitudes",
    "inverse_transmission",
    "amplitudes_from_coeffs",
    "scan",
    "bound_state_poles",
    "pole_polynomial_coeffs",
    "NEAR_POLE",
]

POLE_GUARD = 1e-12
NEAR_POLE = 1e-6
FAMILIES = ("q_plus", "q_minus")


@dataclass(frozen=True)
class ScatteringAmplitudes:
    t_lr: complex
    r_lr: complex
    t_rl: complex
    r_rl: complex
    k: complex
    params: PhysParams

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.t_lr, self.r_lr, self.t_rl, self.r_rl)


def _gamma_args(params: PhysParams, k: complex) -> tuple[complex, complex]:
    eta = 0.5 * params.Z / k
    return -params.L - 1j * eta, params.L + 1 - 1j * eta


def _prepare(params: PhysParams, k: complex) -> complex:
    validate(params)
    k = complex(k)
    if k == 0:
        raise ZeroWavenumber("k must be nonzero")
    return k


def scattering_amplitudes(params: PhysParams, k: complex) -> ScatteringAmplitudes:
    """All four amplitudes from the closed forms.

    The Gamma product is assembled in log space so large |eta| or large L do
    not overflow the intermediate factors.
    """
    k = _prepare(params, k)
    g1, g2 = _gamma_args(params, k)
    if min(pole_distance(g1), pole_distance(g2)) <= POLE_GUARD:
        raise AtBoundStatePole(f"k = {k!r} is a pole of the transmission amplitude")
    eps, Z, L = params.eps, params.Z, params.L
    log_t = (
        -1j * math.pi * k * eps + 0.5 * math.pi * Z / k + clngamma(g1) + clngamma(g2)
    )
    t_lr = 1j / (2 * math.pi) * cmath.exp(log_t)
    decay = cmath.exp(-math.pi * Z / k)
    r_lr = t_lr * cmath.exp(-2 * k * eps) * (2 * math.cos(2 * math.pi * L) - decay)
    t_rl = -t_lr
    r_rl = t_rl * cmath.exp(2 * k * eps - math.pi * Z / k)
    return ScatteringAmplitudes(t_lr, r_lr, t_rl, r_rl, k, params)


def inverse_transmission(params: PhysParams, k: complex) -> complex:
    """1/t_lr, finite everywhere and zero exactly at the bound-state poles."""
    k = _prepare(params, k)
    g1, g2 = _gamma_args(params, k)
    pref = -2j * math.pi * cmath.exp(1j * math.pi * k * params.eps - 0.5 * math.pi * params.Z / k)
    return pref * rgamma(g1) * rgamma(g2)


def amplitudes_from_coeffs(
    params: PhysParams, k: complex, coeffs: AsymptoticCoeffs | None = None
) -> ScatteringAmplitudes:
    """Amplitudes obtained by imposing the boundary conditions on alpha psi1 + beta psi2.

    This goes through the eight wave coefficients and two 2x2 solves and never
    touches the closed forms above, so it serves as a cross-check on them.
    """
    k = _prepare(params, k)
    c = coeffs if coeffs is not None else asymptotic_coeffs(params, k)
    # left to right: a_left = 1, b_right = 0
    m = np.array([[c.a1m, c.a2m], [c.b1p, c.b2p]], dtype=complex)
    al, be = np.linalg.solve(m, np.array([1.0, 0.0], dtype=complex))
    t_lr = al * c.a1p + be * c.a2p
    r_lr = al * c.b1m + be * c.b2m
    # right to left: b_right = 1, a_left = 0
    al, be = np.linalg.solve(m, np.array([0.0, 1.0], dtype=complex))
    t_rl = al * c.b1m + be * c.b2m
    r_rl = al * c.a1p + be * c.a2p
    return ScatteringAmplitudes(
        complex(t_lr), complex(r_lr), complex(t_rl), complex(r_rl), k, params
    )


@dataclass(frozen=True)
class ScanRow:
    k: float
    t_abs: float
    t_arg: float
    r_lr_abs: float
    r_rl_abs: float
    near_pole: bool


def scan(params: PhysParams, k_min: float, k_max: float, n_points: int) -> list[ScanRow]:
    """Amplitude moduli (and the phase of t_lr) on an inclusive linear k grid."""
    validate(params)
    if not (0 < k_min < k_max):
        raise ValueError("need 0 < k_min < k_max")
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    rows = []
    for k in np.linspace(k_min, k_max, int(n_points)):
        k = float(k)
        g1, g2 = _gamma_args(params, k)
        near = min(pole_distance(g1), pole_distance(g2)) < NEAR_POLE
        try:
            amp = scattering_amplitudes(params, k)
        except AtBoundStatePole:
            nan = float("nan")
            rows.append(ScanRow(k, nan, nan, nan, nan, True))
            continue
        rows.append(
            ScanRow(
                k,
                abs(amp.t_lr),
                cmath.phase(amp.t_lr),
                abs(amp.r_lr),
                abs(amp.r_rl),
                near,
            )
        )
    return rows


@dataclass(frozen=True)
class BoundState:
    family: str
    n: int
    k_n: complex
    E_n: float
    inv_t: float

    def gamma_residual(self, params: PhysParams) -> float:
        """Distance of the relevant Gamma argument from -n."""
        eta = 0.5 * params.Z / self.k_n
        arg = params.L + 1 - 1j * eta if self.family == "q_plus" else -params.L - 1j * eta
        return abs(arg + self.n)


def _pole_k(params: PhysParams, family: str, n: int) -> complex | None:
    denom = (n + params.L + 1.0) if family == "q_plus" else (n - params.L)
    if denom == 0:
        return None
    kn = 1j * params.Z / (2.0 * denom)
    return kn if kn.imag > 0 else None


def bound_state_poles(params: PhysParams, family: str, n_max: int) -> list[BoundState]:
    """Poles of t_lr on the positive imaginary k axis for one family.

    q_plus: L + 1 - i Z/(2k) = -n, so k_n = i Z / (2(n + L + 1)).
    q_minus: -L - i Z/(2k) = -n, so k_n = i Z / (2(n - L)).
    Only decaying states (Im k_n > 0) are kept. Each pole is confirmed by
    checking that |1/t_lr| shrinks linearly as k approaches k_n along the
    imaginary axis.
    """
    validate(params)
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = []
    for n in range(int(n_max) + 1):
        kn = _pole_k(params, family, n)
        if kn is None:
            continue
        inv_t = abs(inverse_transmission(params, kn))
        near = [abs(inverse_transmission(params, kn * (1 + d))) for d in (1e-4, 1e-6)]
        if not near[1] < near[0] or inv_t > near[1]:
            raise RuntimeError(f"pole of t_lr at {kn!r} not confirmed")
        out.append(BoundState(family, n, kn, energy_from_k(kn, -1).real, inv_t))
    if not out:
        raise EmptyFamily(f"no admissible {family} states for {params!r} with n <= {n_max}")
    return out


def pole_polynomial_coeffs(params: PhysParams, state: BoundState, n_terms: int) -> list[complex]:
    """First ``n_terms`` Maclaurin coefficients of the 1F1 whose first parameter hits -n.

    q_plus uses M(L + 1 - i Z/(2k_n), 2L + 2, .) and q_minus uses
    M(-L - i Z/(2k_n), -2L, .); at a pole every coefficient past degree n is
    zero up to rounding of the first parameter.
    """
    eta = 0.5 * params.Z / state.k_n
    if state.family == "q_plus":
        a, b = params.L + 1 - 1j * eta, 2 * params.L + 2
    else:
        a, b = -params.L - 1j * eta, -2 * params.L
    coeffs = [1 + 0j]
    for j in range(n_terms - 1):
        coeffs.append(coeffs[-1] * (a + j) / ((b + j) * (j + 1)))
    return coeffs

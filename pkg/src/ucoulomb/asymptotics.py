"""Large-|s| behaviour of the two solutions on the arms of the contour.

On each arm every solution approaches a combination of two Coulomb waves
with a logarithmic phase,

    left  (s -> -inf):  phi(s) = k s - (Z/2k) ln(-2ks)
    right (s -> +inf):  phi(s) = k s + (Z/2k) ln(2ks)

    psi_j ~ a_j e^{+i phi} + b_j e^{-i phi}.

The eight coefficients are closed-form Gamma ratios. ``coulomb_waves`` gives
the exact solutions that behave as e^{+-i phi}: the leading wave is corrected
by a 2F0 tail in 1/(2kx), with the derivative obtained from the same series
via d/dw 2F0(a, b; w) = a b 2F0(a+1, b+1; w).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .contour import contour_point, junction
from .errors import AtBoundStatePole, WrongSide, ZeroWavenumber
from .model import PhysParams, validate
from .specfun import clngamma, hyp2f0_asymptotic, pole_distance

__all__ = [
    "AsymptoticCoeffs",
    "WavePair",
    "asymptotic_coeffs",
    "coulomb_phase",
    "coulomb_waves",
    "asymptotic_wave",
    "combine",
    "relation_residuals",
    "POLE_GUARD",
]

POLE_GUARD = 1e-12
_SIDES = ("left", "right")


@dataclass(frozen=True)
class AsymptoticCoeffs:
    """Wave amplitudes of psi1 (``*1*``) and psi2 (``*2*``).

    The suffix ``p`` is the right arm (s -> +inf), ``m`` the left arm. ``a``
    multiplies e^{+i phi} and ``b`` multiplies e^{-i phi}.
    """

    a1p: complex
    a1m: complex
    b1p: complex
    b1m: complex
    a2p: complex
    a2m: complex
    b2p: complex
    b2m: complex
    C1: complex = 1.0
    C2: complex = 1.0

    def row(self, j: int, side: str) -> tuple[complex, complex]:
        """(a, b) for solution ``j`` on ``side``."""
        if side not in _SIDES:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        suffix = "p" if side == "right" else "m"
        if j not in (1, 2):
            raise ValueError("j must be 1 or 2")
        return getattr(self, f"a{j}{suffix}"), getattr(self, f"b{j}{suffix}")


def _check_k(k: complex) -> complex:
    k = complex(k)
    if k == 0:
        raise ZeroWavenumber("k must be nonzero")
    return k


def asymptotic_coeffs(
    params: PhysParams, k: complex, C1: complex = 1.0, C2: complex = 1.0
) -> AsymptoticCoeffs:
    """The eight amplitudes in closed form.

    Gamma quotients are formed as differences of log-Gamma values, and powers
    of 2k use the principal logarithm. The psi2 amplitudes follow from the
    psi1 ones under L -> -L-1.
    """
    validate(params)
    k = _check_k(k)
    Z, L, eps = params.Z, params.L, params.eps
    eta = 0.5 * Z / k
    for arg in (L + 1 + 1j * eta, L + 1 - 1j * eta, -L + 1j * eta, -L - 1j * eta):
        if pole_distance(arg) <= POLE_GUARD:
            raise AtBoundStatePole(f"Gamma argument {arg!r} sits on a pole")

    log2k = cmath.log(2 * k)
    ipe = 0.5j * math.pi * k * eps
    common = -0.25 * math.pi * Z / k
    ipi = 1j * math.pi

    def amp(C, mu, sign_ipe, phase, sign_keps, gamma_sign):
        # C (2k)^mu e^{...} Gamma(-2mu) / Gamma(-mu +- i eta), mu = -L-1 for psi1 and L for psi2
        nu = -mu
        log_ratio = clngamma(2 * nu) - clngamma(nu + gamma_sign * 1j * eta)
        return C * cmath.exp(
            mu * log2k + sign_ipe * ipe + ipi * phase + common + sign_keps * k * eps + log_ratio
        )

    p1, p2 = -L - 1.0, L
    return AsymptoticCoeffs(
        a1p=amp(C1, p1, -1, 2 * L + 2, +1, +1),
        a1m=amp(C1, p1, +1, L + 1, +1, -1),
        b1p=amp(C1, p1, +1, 3 * L + 3, -1, -1),
        b1m=amp(C1, p1, -1, 0.0, -1, +1),
        a2p=amp(C2, p2, -1, -2 * L, +1, +1),
        a2m=amp(C2, p2, +1, -L, +1, -1),
        b2p=amp(C2, p2, +1, -3 * L, -1, -1),
        b2m=amp(C2, p2, -1, 0.0, -1, +1),
        C1=C1,
        C2=C2,
    )


def relation_residuals(coeffs: AsymptoticCoeffs, params: PhysParams, k: complex) -> tuple[float, ...]:
    """Relative residuals of the four identities linking right and left amplitudes.

    b1p = a1m e^{-2k eps} e^{2 i pi (L+1)},  b1m = a1p e^{-2k eps} e^{-2 i pi (L+1)},
    b2p = a2m e^{-2k eps} e^{-2 i pi L},     b2m = a2p e^{-2k eps} e^{2 i pi L}.
    """
    k = complex(k)
    L = params.L
    damp = cmath.exp(-2 * k * params.eps)
    w1 = cmath.exp(2j * math.pi * (L + 1))
    w2 = cmath.exp(-2j * math.pi * L)
    pairs = (
        (coeffs.b1p, coeffs.a1m * damp * w1),
        (coeffs.b1m, coeffs.a1p * damp / w1),
        (coeffs.b2p, coeffs.a2m * damp * w2),
        (coeffs.b2m, coeffs.a2p * damp / w2),
    )
    return tuple(abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300) for lhs, rhs in pairs)


def _side_of(s: float, side: str) -> None:
    if side not in _SIDES:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if (side == "left" and not s < 0) or (side == "right" and not s > 0):
        raise WrongSide(f"s = {s!r} is not on the {side} arm")


def coulomb_phase(k: complex, Z: float, s: float, side: str) -> complex:
    """phi(s) = k s -+ (Z/2k) ln(-+2ks) with the sign fixed by ``side``."""
    k = _check_k(k)
    _side_of(s, side)
    if side == "left":
        return k * s - 0.5 * Z / k * cmath.log(-2 * k * s)
    return k * s + 0.5 * Z / k * cmath.log(2 * k * s)


@dataclass(frozen=True)
class WavePair:
    """Exact solutions behaving as e^{+i phi} (``plus``) and e^{-i phi} (``minus``) with s-derivatives."""

    plus: complex
    dplus_ds: complex
    minus: complex
    dminus_ds: complex
    est_error: float

    def matrix(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.plus, self.minus), (self.dplus_ds, self.dminus_ds))


def _whittaker(L: float, k: complex, eta: complex, x: complex, sign: int):
    # e^{sign k x} (2kx)^{sign i eta} 2F0(L+1 - sign i eta, -L - sign i eta; sign/(2kx))
    al = L + 1 - sign * 1j * eta
    be = -L - sign * 1j * eta
    w = sign / (2 * k * x)
    F = hyp2f0_asymptotic(al, be, w)
    dF = hyp2f0_asymptotic(al + 1, be + 1, w)
    lead = cmath.exp(sign * (k * x + 1j * eta * cmath.log(2 * k * x)))
    val = lead * F.value
    dwdx = -w / x
    dval = val * sign * (k + 1j * eta / x) + lead * al * be * dF.value * dwdx
    err = abs(lead) * F.est_error
    return val, dval, err


def coulomb_waves(params: PhysParams, k: complex, s: float, side: str) -> WavePair:
    """Exact Coulomb waves on an arm, normalised to e^{+-i phi(s)} as |s| -> inf.

    ``s`` must lie on the straight part of the requested arm. The error
    estimate is the first omitted 2F0 term scaled by the wave magnitude.
    """
    k = _check_k(k)
    _side_of(s, side)
    if abs(s) <= junction(params.eps):
        raise WrongSide(f"s = {s!r} lies on the circular part of the contour")
    p = contour_point(params.eps, s)
    x = p.x
    L, eps = params.L, params.eps
    eta = 0.5 * params.Z / k
    up, dup, eup = _whittaker(L, k, eta, x, +1)
    um, dum, eum = _whittaker(L, k, eta, x, -1)
    shift = k * eps + 0.5j * math.pi * k * eps + 0.5 * math.pi * eta
    if side == "right":
        cp = cmath.exp(-k * eps + 0.5j * math.pi * k * eps + 0.5 * math.pi * eta)
        cm = 1.0 / cp
        plus, dplus, eplus = cp * up, cp * dup, abs(cp) * eup
        minus, dminus, eminus = cm * um, cm * dum, abs(cm) * eum
    else:
        cp = cmath.exp(-shift)
        cm = cmath.exp(shift)
        plus, dplus, eplus = cp * um, cp * dum, abs(cp) * eum
        minus, dminus, eminus = cm * up, cm * dup, abs(cm) * eup
    return WavePair(plus, p.dxds * dplus, minus, p.dxds * dminus, max(eplus, eminus))


def asymptotic_wave(
    k: complex,
    Z: float,
    a: complex,
    b: complex,
    s: float,
    side: str,
    L: float | None = None,
    eps: float | None = None,
) -> complex:
    """a e^{i phi(s)} + b e^{-i phi(s)} on the given side.

    Without ``L`` this is the bare log-phase form, which is accurate only to
    O(1/s). Passing ``L`` and ``eps`` replaces each exponential with the exact
    Coulomb wave of the same asymptotics, removing the 1/s tail.
    """
    if L is None:
        phi = coulomb_phase(k, Z, s, side)
        return a * cmath.exp(1j * phi) + b * cmath.exp(-1j * phi)
    if eps is None:
        raise ValueError("eps is required together with L")
    w = coulomb_waves(PhysParams(Z, L, eps), k, s, side)
    return a * w.plus + b * w.minus


def combine(
    alpha: complex, beta: complex, coeffs: AsymptoticCoeffs
) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """Amplitudes of alpha psi1 + beta psi2 as ((a_left, b_left), (a_right, b_right))."""
    left = (alpha * coeffs.a1m + beta * coeffs.a2m, alpha * coeffs.b1m + beta * coeffs.b2m)
    right = (alpha * coeffs.a1p + beta * coeffs.a2p, alpha * coeffs.b1p + beta * coeffs.b2p)
    return left, right

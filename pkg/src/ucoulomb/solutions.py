"""The two Kummer-type solutions evaluated on the contour.

    psi1(x) = C1 e^{-kx} x^{L+1} M(1 + L + iZ/(2k), 2L + 2, 2kx)
    psi2(x) = C2 e^{-kx} x^{-L}  M(-L + iZ/(2k),   -2L,    2kx)

Both solve psi'' = (L(L+1)/x^2 + iZ/x + k^2) psi. The powers of x use the
argument tracked along the contour, so values on the right arm already carry
the phases exp(2 pi i (L+1)) and exp(-2 pi i L). psi2 is psi1 with L -> -L-1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .contour import ContourPoint, branch_power
from .errors import ZeroWavenumber
from .model import PhysParams, validate
from .specfun import hyp1f1

__all__ = ["SolutionPair", "psi1", "psi2", "solution_pair", "wronskian", "kummer_solution"]


@dataclass(frozen=True)
class SolutionPair:
    psi1: complex
    psi2: complex
    dpsi1_ds: complex
    dpsi2_ds: complex

    def wronskian_s(self) -> complex:
        return self.psi1 * self.dpsi2_ds - self.dpsi1_ds * self.psi2


def kummer_solution(
    params: PhysParams, k: complex, p: ContourPoint, mu: float, C: complex = 1.0
) -> tuple[complex, complex]:
    """C e^{-kx} x^mu M(mu + iZ/(2k), 2 mu, 2kx) and its x-derivative.

    mu = L + 1 gives psi1, mu = -L gives psi2.
    """
    k = complex(k)
    if k == 0:
        raise ZeroWavenumber("k must be nonzero")
    x = p.x
    a = mu + 0.5j * params.Z / k
    b = 2.0 * mu
    z = 2.0 * k * x
    m0 = hyp1f1(a, b, z).value
    m1 = hyp1f1(a + 1.0, b + 1.0, z).value
    pre = C * cmath.exp(-k * x) * branch_power(p, mu)
    psi = pre * m0
    dpsi = psi * (mu / x - k) + pre * 2.0 * k * (a / b) * m1
    return psi, dpsi


def psi1(params: PhysParams, k: complex, p: ContourPoint, C1: complex = 1.0) -> complex:
    validate(params)
    return kummer_solution(params, k, p, params.L + 1.0, C1)[0]


def psi2(params: PhysParams, k: complex, p: ContourPoint, C2: complex = 1.0) -> complex:
    validate(params)
    return kummer_solution(params, k, p, -params.L, C2)[0]


def solution_pair(
    params: PhysParams, k: complex, p: ContourPoint, C1: complex = 1.0, C2: complex = 1.0
) -> SolutionPair:
    """Values and s-derivatives of both solutions at ``p``."""
    validate(params)
    f1, d1 = kummer_solution(params, k, p, params.L + 1.0, C1)
    f2, d2 = kummer_solution(params, k, p, -params.L, C2)
    return SolutionPair(f1, f2, p.dxds * d1, p.dxds * d2)


def wronskian(
    params: PhysParams, k: complex, p: ContourPoint, C1: complex = 1.0, C2: complex = 1.0
) -> complex:
    """W_x = psi1 psi2' - psi1' psi2 with x-derivatives; equals -(2L+1) C1 C2."""
    pair = solution_pair(params, k, p, C1, C2)
    return pair.wronskian_s() / p.dxds

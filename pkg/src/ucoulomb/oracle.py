"""Direct numerical integration along the contour, used to check the closed forms.

The Schroedinger equation psi_xx = (V(x) + k^2) psi becomes, for a path x(s),

    psi_ss = x'(s)^2 (V + k^2) psi + (x''(s) / x'(s)) psi_s

and is integrated piecewise with an embedded Runge-Kutta pair (scipy's
DOP853). Pieces meet where the path has a kink. There psi and psi_x are
continuous, so psi_s is rescaled by the ratio of tangents.

Near the origin the two solutions differ in size by roughly |x|^(2L+1). On
the literal bottom circle of radius eps this dynamic range swamps double
precision for small eps and large L. The amplitude extraction therefore
uses the same arms joined by a wider arc of radius R around the origin.
The solutions are analytic between the two paths, so the values on the
arms are unchanged.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from .asymptotics import coulomb_phase, coulomb_waves
from .contour import contour_point, junction
from .errors import IllConditionedMatching, NonPositiveEpsilon, StepUnderflow, ZeroWavenumber
from .model import PhysParams, validate
from .scattering import ScatteringAmplitudes, scattering_amplitudes

__all__ = [
    "IntegrationResult",
    "integrate_contour",
    "extract_numeric_amplitudes",
    "default_s_match",
    "VerifyRow",
    "verify_point",
    "verify_grid",
    "oracle_grid",
    "worker_count",
    "MAX_CONDITION",
]

MAX_CONDITION = 1e8

Path = Callable[[float], tuple[complex, complex, complex]]


@dataclass(frozen=True)
class IntegrationResult:
    samples: list[tuple[float, complex, complex]]
    step_stats: tuple[float, float, int]
    est_error: float

    @property
    def final(self) -> tuple[complex, complex]:
        return self.samples[-1][1], self.samples[-1][2]


def _literal_pieces(eps: float) -> list[tuple[float, float, Path]]:
    sj = junction(eps)

    def geom(s: float) -> tuple[complex, complex, complex]:
        p = contour_point(eps, s)
        return p.x, p.dxds, p.d2xds2

    return [(-math.inf, -sj, geom), (-sj, sj, geom), (sj, math.inf, geom)]


def _deformed_pieces(eps: float, radius: float) -> list[tuple[float, float, Path]]:
    # Arms as on the contour; the bottom is the arc |x| = radius below the
    # origin, swept with its angle linear in s over [-sw, sw].
    h = math.sqrt(max(radius * radius - eps * eps, 0.0))
    sw = h + junction(eps)
    th0 = math.atan2(h, -eps)
    th1 = 2.0 * math.pi + math.atan2(h, eps)
    rate = (th1 - th0) / (2.0 * sw)

    def arm(s: float) -> tuple[complex, complex, complex]:
        p = contour_point(eps, s)
        return p.x, p.dxds, 0j

    def arc(s: float) -> tuple[complex, complex, complex]:
        th = th0 + rate * (s + sw)
        x = radius * complex(math.cos(th), math.sin(th))
        dx = 1j * rate * x
        return x, dx, -rate * rate * x

    return [(-math.inf, -sw, arm), (-sw, sw, arc), (sw, math.inf, arm)]


def _rhs(params: PhysParams, k: complex, geom: Path):
    c = params.centrifugal
    iz = 1j * params.Z
    k2 = k * k

    def f(s, y):
        x, dx, ddx = geom(s)
        q = dx * dx * (c / (x * x) + iz / x + k2)
        out = np.empty_like(y)
        out[0::2] = y[1::2]
        out[1::2] = q * y[0::2] + (ddx / dx) * y[1::2]
        return out

    return f


def _integrate(
    params: PhysParams,
    k: complex,
    s_from: float,
    s_to: float,
    y0: np.ndarray,
    tol: float,
    pieces: list[tuple[float, float, Path]],
    keep_samples: bool = True,
) -> tuple[IntegrationResult, np.ndarray]:
    forward = s_to >= s_from
    lo, hi = (s_from, s_to) if forward else (s_to, s_from)
    spans = []
    for a, b, geom in pieces:
        a2, b2 = max(a, lo), min(b, hi)
        if b2 > a2:
            spans.append((a2, b2, geom))
    if not forward:
        spans = [(b, a, g) for a, b, g in reversed(spans)]

    y = np.array(y0, dtype=complex)
    # A pure relative test breaks down on exactly-zero components, so keep a
    # tiny absolute floor tied to the size of the initial data.
    atol = max(1e-40 * float(np.max(np.abs(y))), 1e-300)
    samples = [(float(s_from), complex(y[0]), complex(y[1]))]
    steps: list[float] = []
    prev_dx = None
    for a, b, geom in spans:
        _, dx, _ = geom(a)
        if prev_dx is not None and dx != prev_dx:
            y[1::2] *= dx / prev_dx
        sol = solve_ivp(
            _rhs(params, k, geom), (a, b), y, method="DOP853", rtol=tol, atol=atol
        )
        if sol.status != 0:
            raise StepUnderflow(f"integration stopped at s = {sol.t[-1]!r}: {sol.message}")
        steps.extend(np.abs(np.diff(sol.t)).tolist())
        y = sol.y[:, -1].copy()
        if keep_samples:
            samples.extend(
                (float(t), complex(sol.y[0, i]), complex(sol.y[1, i]))
                for i, t in enumerate(sol.t[1:], start=1)
            )
        else:
            samples.append((float(b), complex(y[0]), complex(y[1])))
        _, prev_dx, _ = geom(b)
    if not steps:
        stats = (0.0, 0.0, 0)
    else:
        stats = (min(steps), max(steps), len(steps))
    # Crude global bound: local tolerance accumulated over the steps taken.
    est = tol * max(stats[2], 1)
    return IntegrationResult(samples, stats, est), y


def integrate_contour(
    params: PhysParams,
    k: complex,
    s_from: float,
    s_to: float,
    init: tuple[complex, complex],
    tol: float = 1e-10,
    bottom_radius: float | None = None,
) -> IntegrationResult:
    """Carry (psi, dpsi/ds) from ``s_from`` to ``s_to`` along the contour.

    With ``bottom_radius`` set, the circle of radius eps is replaced by an
    arc of that radius. The parameters are not validated, so the free case
    Z = 0, L = 0 can be integrated.
    """
    if not (math.isfinite(s_from) and math.isfinite(s_to)):
        raise ValueError("integration limits must be finite")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not params.eps > 0:
        raise NonPositiveEpsilon(f"eps must be positive, got {params.eps!r}")
    pieces = (
        _literal_pieces(params.eps)
        if bottom_radius is None
        else _deformed_pieces(params.eps, max(bottom_radius, params.eps))
    )
    y0 = np.array(init, dtype=complex)
    return _integrate(params, complex(k), s_from, s_to, y0, tol, pieces)[0]


def default_s_match(eps: float) -> float:
    return max(500.0, 1e4 * eps)


def _bare_waves(k: float, Z: float, s: float, side: str) -> tuple[complex, complex, complex, complex]:
    phi = coulomb_phase(k, Z, s, side)
    dphi = k + (0.5 * Z / k) / s if side == "right" else k - (0.5 * Z / k) / s
    ep = np.exp(1j * phi)
    em = np.exp(-1j * phi)
    return ep, 1j * dphi * ep, em, -1j * dphi * em


def _wave_matrix(params: PhysParams, k: float, s: float, side: str, corrected: bool) -> np.ndarray:
    if corrected:
        w = coulomb_waves(params, k, s, side)
        return np.array([[w.plus, w.minus], [w.dplus_ds, w.dminus_ds]], dtype=complex)
    ep, dep, em, dem = _bare_waves(k, params.Z, s, side)
    return np.array([[ep, em], [dep, dem]], dtype=complex)


def extract_numeric_amplitudes(
    params: PhysParams,
    k: float,
    s_match: float | None = None,
    tol: float = 1e-12,
    bottom_radius: float | str | None = "auto",
    corrected: bool = True,
) -> ScatteringAmplitudes:
    """Transmission and reflection amplitudes from direct integration.

    Two solutions start at -s_match as the pure waves e^{+i phi} and e^{-i phi}.
    Both are integrated to +s_match and decomposed there into the right-arm
    waves by a 2x2 solve on (psi, dpsi/ds). The scattering states are
    combinations of the two.

    ``bottom_radius='auto'`` uses max(eps, |L + 1/2| / k). ``None`` keeps the
    literal circle. ``corrected=False`` matches to the bare log-phase waves,
    whose error falls off as 1/s_match.
    """
    validate(params)
    if isinstance(k, complex):
        if k.imag != 0:
            raise ValueError("the oracle works for real k only")
        k = k.real
    k = float(k)
    if k == 0:
        raise ZeroWavenumber("k must be nonzero")
    if not k > 0:
        raise ValueError("the oracle works in the scattering regime k > 0")
    floor = default_s_match(params.eps)
    S = floor if s_match is None else float(s_match)
    if S < floor:
        raise ValueError(f"s_match must be at least {floor}")
    if bottom_radius == "auto":
        radius: float | None = max(params.eps, abs(params.L + 0.5) / k)
    else:
        radius = bottom_radius  # type: ignore[assignment]

    left = _wave_matrix(params, k, -S, "left", corrected)
    y0 = np.array([left[0, 0], left[1, 0], left[0, 1], left[1, 1]], dtype=complex)
    pieces = (
        _literal_pieces(params.eps)
        if radius is None
        else _deformed_pieces(params.eps, max(float(radius), params.eps))
    )
    _, y = _integrate(params, k, -S, S, y0, tol, pieces, keep_samples=False)

    right = _wave_matrix(params, k, S, "right", corrected)
    cond = np.linalg.cond(right)
    if not cond <= MAX_CONDITION:
        raise IllConditionedMatching(f"wave matrix condition number {cond:.3g} exceeds {MAX_CONDITION:g}")
    (A, B), (C, D) = (np.linalg.solve(right, y[0:2]), np.linalg.solve(right, y[2:4]))
    r_lr = -B / D
    t_lr = A + r_lr * C
    t_rl = 1.0 / D
    r_rl = C / D
    return ScatteringAmplitudes(complex(t_lr), complex(r_lr), complex(t_rl), complex(r_rl), complex(k), params)


@dataclass(frozen=True)
class VerifyRow:
    Z: float
    L: float
    eps: float
    k: float
    err_t_lr: float
    err_r_lr: float
    err_t_rl: float
    err_r_rl: float
    t_ratio: complex

    @property
    def max_err(self) -> float:
        return max(self.err_t_lr, self.err_r_lr, self.err_t_rl, self.err_r_rl)

    def ok(self, tol: float) -> bool:
        return self.max_err < tol


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / abs(b) if b != 0 else abs(a - b)


def verify_point(
    Z: float, L: float, eps: float, k: float, s_match: float | None = None, tol: float = 1e-12
) -> VerifyRow:
    """Compare the oracle amplitudes with the closed forms at one parameter point.

    ``t_ratio`` is numeric over closed-form t_lr; it would expose a constant
    normalization offset if the two conventions disagreed.
    """
    params = PhysParams(Z, L, eps)
    exact = scattering_amplitudes(params, k)
    num = extract_numeric_amplitudes(params, k, s_match=s_match, tol=tol)
    errs = [_rel(n, e) for n, e in zip(num.as_tuple(), exact.as_tuple())]
    return VerifyRow(Z, L, eps, k, *errs, num.t_lr / exact.t_lr)


def worker_count() -> int:
    """Parallel workers: UCOULOMB_THREADS if set, otherwise the CPU count."""
    raw = os.environ.get("UCOULOMB_THREADS")
    if raw is not None:
        try:
            n = int(raw)
        except ValueError as exc:
            raise ValueError(f"UCOULOMB_THREADS must be a positive integer, got {raw!r}") from exc
        if n < 1:
            raise ValueError(f"UCOULOMB_THREADS must be a positive integer, got {raw!r}")
        return n
    return os.cpu_count() or 1


def _verify_star(args: tuple) -> VerifyRow:
    return verify_point(*args)


def verify_grid(
    points: Sequence[tuple[float, float, float, float]],
    s_match: float | None = None,
    tol: float = 1e-12,
    workers: int | None = None,
) -> list[VerifyRow]:
    """verify_point over (Z, L, eps, k) tuples, results in input order."""
    n = worker_count() if workers is None else workers
    jobs = [(Z, L, eps, k, s_match, tol) for Z, L, eps, k in points]
    if n <= 1 or len(jobs) <= 1:
        return [_verify_star(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(n, len(jobs))) as pool:
        return list(pool.map(_verify_star, jobs))


def oracle_grid() -> list[tuple[float, float, float, float]]:
    """The reference grid: Z in {0.5, 1, 2}, L in {0.25, 3.01, 3.75}, eps in {0.005, 0.1}, k in {0.5, 1, 2, 5}."""
    return [
        (Z, L, eps, k)
        for Z in (0.5, 1.0, 2.0)
        for L in (0.25, 3.01, 3.75)
        for eps in (0.005, 0.1)
        for k in (0.5, 1.0, 2.0, 5.0)
    ]

"""Complex special functions: Gamma, log-Gamma, Kummer's 1F1 and the 2F0 asymptotic series.

Everything here works on Python ``complex`` scalars and is pure. The confluent
hypergeometric function is evaluated by one of three routes depending on |z|:

* Maclaurin series (``kummer_1f1``) where it does not cancel badly,
* Taylor re-expansion of Kummer's equation along the ray from the origin,
  used when the Maclaurin sum loses too many digits (z near the imaginary
  axis, where terms grow like e^|z| while the function stays algebraic),
* the large-|z| expansion in terms of two 2F0 series (``hyp1f1_asymptotic``).

``hyp1f1`` picks the route and reports an error estimate with the value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BNonPositiveInteger, NoConvergence, PoleAtNonPositiveInteger

__all__ = [
    "SeriesResult",
    "cgamma",
    "clngamma",
    "rgamma",
    "kummer_1f1",
    "hyp2f0_asymptotic",
    "hyp1f1_asymptotic",
    "hyp1f1",
    "pole_distance",
    "SWITCH_RADIUS",
]

EPS = 2.0**-52
POLE_TOL = 1e-14
SWITCH_RADIUS = 30.0

# Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# B_2, B_4, ..., B_20
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)
_STIRLING_MIN = 15.0


@dataclass(frozen=True)
class SeriesResult:
    """Value of a summed series with an absolute error estimate."""

    value: complex
    est_error: float
    terms_used: int


def pole_distance(z: complex) -> float:
    """Distance from ``z`` to the nearest non-positive integer (inf if Re z > 0.5)."""
    z = complex(z)
    if z.real > 0.5:
        return math.inf
    n = min(0, round(z.real))
    return abs(z - n)


def _sinpi(z: complex) -> complex:
    # sin(pi z) with the integer part removed first, exact zero at integers
    n = round(z.real)
    s = cmath.sin(math.pi * (z - n))
    return -s if n % 2 else s


def cgamma(z: complex) -> complex:
    """Gamma function of a complex argument.

    Lanczos approximation on Re z >= 1/2, reflection formula elsewhere.
    Relative accuracy is about 1e-14 for |z| <= 50.
    """
    z = complex(z)
    if pole_distance(z) <= POLE_TOL:
        raise PoleAtNonPositiveInteger(z)
    if z.real < 0.5:
        return math.pi / (_sinpi(z) * cgamma(1.0 - z))
    z -= 1.0
    acc = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        acc += _LANCZOS_P[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc


def _stirling(w: complex) -> complex:
    res = (w - 0.5) * cmath.log(w) - w + _HALF_LOG_2PI
    inv = 1.0 / w
    inv2 = inv * inv
    p = inv
    for m, b2m in enumerate(_BERNOULLI, start=1):
        res += b2m / (2 * m * (2 * m - 1)) * p
        p *= inv2
    return res


def clngamma(z: complex) -> complex:
    """Logarithm of Gamma on the branch continuous in C minus (-inf, 0].

    Real on the positive real axis. Uses the upward recurrence to move the
    argument into the Stirling region, so the imaginary part is the sum of
    principal logarithms and never jumps by 2*pi away from the cut.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    if pole_distance(z) <= POLE_TOL:
        raise PoleAtNonPositiveInteger(z)
    w = z
    shift = 0j
    if not (w.real >= _STIRLING_MIN or (w.real >= 0.0 and abs(w) >= _STIRLING_MIN)):
        n = math.ceil(_STIRLING_MIN - w.real)
        for j in range(n):
            shift += cmath.log(z + j)
        w = z + n
    return _stirling(w) - shift


def rgamma(z: complex) -> complex:
    """Reciprocal Gamma function, entire (returns 0 at the poles of Gamma)."""
    z = complex(z)
    if z.real < 0.5:
        if pole_distance(z) == 0.0:
            return 0j
        return _sinpi(z) * cgamma(1.0 - z) / math.pi
    return 1.0 / cgamma(z)


def kummer_1f1(
    a: complex, b: complex, z: complex, tol: float = 1e-15, max_terms: int = 10_000
) -> SeriesResult:
    """Maclaurin series of M(a, b, z) = 1F1(a; b; z).

    Terms follow t_{n+1} = t_n (a+n) z / ((b+n)(n+1)). Summation stops once
    three consecutive terms fall below ``tol`` times the partial sum, past the
    hump of the term sequence. The error estimate adds the rounding bound
    eps * sum (n+1)|t_n| (the n-th term carries about n roundings), which
    exposes cancellation for z far from the positive axis.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, b, z = complex(a), complex(b), complex(z)
    if pole_distance(b) <= POLE_TOL:
        raise BNonPositiveInteger(b)
    if z == 0:
        return SeriesResult(1 + 0j, 0.0, 1)
    term = 1 + 0j
    total = 1 + 0j
    mag = 1.0
    small = 0
    n = 0
    absz = abs(z)
    while True:
        if n >= max_terms:
            raise NoConvergence(max_terms)
        term *= (a + n) / (b + n) * z / (n + 1)
        n += 1
        if term == 0:
            return SeriesResult(total, EPS * mag, n)
        total += term
        mag += (n + 1) * abs(term)
        if abs(term) < tol * abs(total):
            small += 1
        else:
            small = 0
        if small >= 3 and n > absz and n > -b.real:
            return SeriesResult(total, abs(term) + EPS * mag, n + 1)


def hyp2f0_asymptotic(
    a: complex, b: complex, w: complex, max_terms: int = 200, tol: float = EPS / 2
) -> SeriesResult:
    """Optimally truncated sum of the divergent series 2F0(a, b; ; w).

    Terms are added while their magnitude decreases; the sum stops at the
    smallest term, at ``max_terms``, or once terms drop below ``tol`` relative
    to the sum. ``est_error`` is the magnitude of the first omitted term.
    """
    a, b, w = complex(a), complex(b), complex(w)
    total = 1 + 0j
    term = 1 + 0j
    for n in range(max_terms):
        nxt = term * (a + n) * (b + n) * w / (n + 1)
        if nxt == 0:
            return SeriesResult(total, 0.0, n + 1)
        if abs(nxt) >= abs(term) or abs(nxt) < tol * abs(total):
            return SeriesResult(total, abs(nxt), n + 1)
        total += nxt
        term = nxt
    nxt = term * (a + max_terms) * (b + max_terms) * w / (max_terms + 1)
    return SeriesResult(total, abs(nxt), max_terms + 1)


def _log_gamma_quotient(num: complex, den: complex) -> complex | None:
    """log(Gamma(num)/Gamma(den)); None when 1/Gamma(den) vanishes."""
    if pole_distance(den) <= POLE_TOL:
        return None
    return clngamma(num) - clngamma(den)


def _asym_error(expo: complex, series: SeriesResult) -> float:
    # Near a Stokes line the optimally truncated error exceeds the first
    # omitted term by a factor growing like sqrt(n), so that factor is
    # included. Rounding in the exponent is amplified by exp, hence the
    # |expo| weight.
    size = math.exp(expo.real)
    rounding = 32 * EPS * (1.0 + abs(expo)) * abs(series.value)
    trunc = 2.0 * (1.0 + math.sqrt(series.terms_used)) * series.est_error
    if series.est_error >= 1.0:
        # terms grow from the start: the sum carries no information at all
        trunc += abs(series.value)
    return size * (trunc + rounding)


def hyp1f1_asymptotic(a: complex, b: complex, z: complex) -> SeriesResult:
    """Large-|z| form of M(a, b, z) built from two 2F0 series.

    M ~ G(b)/G(b-a) (e^{i pi}/z)^a 2F0(a, 1+a-b; -1/z)
        + G(b)/G(a) e^z z^(a-b) 2F0(b-a, 1-a; 1/z)

    The factor (e^{i pi}/z)^a is taken as exp(a (i pi - Log z)) with the
    principal logarithm. Only Im z >= 0 is accepted: below the real axis the
    e^{i pi a} multiplier is wrong by an amount that is not negligible until
    far from arg z = -pi/2.
    """
    a, b, z = complex(a), complex(b), complex(z)
    if z == 0:
        raise ValueError("asymptotic form needs z != 0")
    if z.imag < 0:
        raise ValueError("upper-sign asymptotic form needs Im z >= 0")
    if pole_distance(b) <= POLE_TOL:
        raise BNonPositiveInteger(b)
    logz = cmath.log(z)
    value = 0j
    err = 0.0
    n1 = n2 = 0
    q1 = _log_gamma_quotient(b, b - a)
    if q1 is not None:
        s1 = hyp2f0_asymptotic(a, 1 + a - b, -1.0 / z)
        expo = q1 + a * (1j * math.pi - logz)
        value += cmath.exp(expo) * s1.value
        err += _asym_error(expo, s1)
        n1 = s1.terms_used
    q2 = _log_gamma_quotient(b, a)
    if q2 is not None:
        s2 = hyp2f0_asymptotic(b - a, 1 - a, 1.0 / z)
        expo = q2 + z + (a - b) * logz
        value += cmath.exp(expo) * s2.value
        err += _asym_error(expo, s2)
        n2 = s2.terms_used
    return SeriesResult(value, err, max(1, n1 + n2))


_START_RADII = (12.0, 10.0, 8.0, 6.0, 5.0, 4.0, 3.0, 2.0, 1.5, 1.0, 0.5)


def _taylor_step(a, b, z0, w0, dw0, h):
    # Taylor series of Kummer's equation about z0, with d_n = c_n h^n
    d0, d1 = w0, dw0 * h
    w = d0 + d1
    hdw = d1
    mag = abs(d0) + abs(d1)
    h2 = h * h
    small = 0
    n = 0
    while n < 2000:
        d2 = ((n + a) * d0 * h2 - (n + b - z0) * (n + 1) * d1 * h) / (z0 * (n + 2) * (n + 1))
        w += d2
        hdw += (n + 2) * d2
        mag += abs(d2) * (n + 2)
        n += 1
        if abs(d2) * (n + 2) <= EPS * 0.25 * (abs(w) + abs(hdw)):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        d0, d1 = d1, d2
    return w, hdw / h, EPS * mag, n + 2


def _start_candidates(a: complex, b: complex, z: complex) -> list[tuple[float, float, SeriesResult, SeriesResult]]:
    # Rank Maclaurin start points on the ray by their error after transport.
    # An error at radius r0 rides on the companion solution z^(1-b) M(..),
    # which outgrows M by roughly (r/r0)^(1 - Re b) when Re b < 1.
    r = abs(z)
    u = z / r
    growth = max(0.0, 1.0 - b.real)
    out = []
    for r0 in [c for c in _START_RADII if c < r] or [0.5 * r]:
        s0 = kummer_1f1(a, b, u * r0)
        s1 = kummer_1f1(a + 1, b + 1, u * r0)
        rel0 = s0.est_error / abs(s0.value) if s0.value else math.inf
        rel1 = s1.est_error / abs(s1.value) if s1.value else 0.0
        score = max(rel0, rel1, EPS) * abs(s0.value) * r0 ** (-growth)
        out.append((score, r0, s0, s1))
    out.sort(key=lambda t: t[0])
    return out


def _kummer_continue(
    a: complex, b: complex, z: complex, r0: float, s0: SeriesResult, s1: SeriesResult,
    max_step: float = 1.0,
) -> SeriesResult:
    # Integrate Kummer's equation along the ray from u*r0 to z by Taylor steps.
    r = abs(z)
    u = z / r
    w = s0.value
    dw = a / b * s1.value
    err = s0.est_error
    terms = s0.terms_used + s1.terms_used
    rc = r0
    while rc < r:
        h = min(max_step, 0.5 * rc, r - rc)
        w, dw, e, nt = _taylor_step(a, b, u * rc, w, dw, u * h)
        err += e
        terms += nt
        rc = rc + h if r - rc > h else r
    return SeriesResult(w, err, terms)


def _continued(a: complex, b: complex, z: complex) -> SeriesResult:
    """Taylor continuation of M along the ray with an empirical error estimate.

    Per-step bounds miss how early rounding errors are amplified, so the
    transport is repeated from the second-best start radius with a different
    step size, and the spread of the two results serves as the estimate.
    """
    cands = _start_candidates(a, b, z)
    _, r0, s0, s1 = cands[0]
    first = _kummer_continue(a, b, z, r0, s0, s1)
    if len(cands) == 1:
        return first
    _, r0, s0, s1 = cands[1]
    second = _kummer_continue(a, b, z, r0, s0, s1, max_step=0.7)
    spread = abs(first.value - second.value)
    floor = 32 * EPS * abs(first.value)
    return SeriesResult(first.value, max(first.est_error, spread, floor), first.terms_used + second.terms_used)


def hyp1f1(a: complex, b: complex, z: complex, rtol: float = 1e-13) -> SeriesResult:
    """Kummer's function M(a, b, z) by the best available route.

    |z| > SWITCH_RADIUS uses the asymptotic form (through Kummer's transformation
    M(a, b, z) = e^z M(b-a, b, -z) when Im z < 0); smaller |z| uses the Maclaurin series. Either one is
    replaced by Taylor continuation when its error estimate exceeds ``rtol``,
    unless the continuation's own estimate is worse.
    """
    a, b, z = complex(a), complex(b), complex(z)
    if pole_distance(b) <= POLE_TOL:
        raise BNonPositiveInteger(b)
    if z == 0:
        return SeriesResult(1 + 0j, 0.0, 1)
    if abs(z) > SWITCH_RADIUS:
        if z.imag >= 0:
            res = hyp1f1_asymptotic(a, b, z)
        else:
            t = hyp1f1_asymptotic(b - a, b, -z)
            ez = cmath.exp(z)
            res = SeriesResult(ez * t.value, abs(ez) * t.est_error, t.terms_used)
    else:
        res = kummer_1f1(a, b, z)
    if res.est_error <= rtol * abs(res.value):
        return res
    alt = _continued(a, b, z)
    return alt if alt.est_error < res.est_error else res

"""The U-shaped path below the origin and branch-consistent powers along it.

For a width eps > 0 the path runs down the line Re x = -eps, around the
origin on the lower half of the circle |x| = eps, and up the line Re x = +eps:

    x(s) = -i (s + pi eps/2) - eps          s < -pi eps/2
    x(s) = eps exp(i (s/eps + 3 pi/2))      |s| <= pi eps/2
    x(s) =  i (s - pi eps/2) + eps          s >  pi eps/2

Every piece is unit speed. The argument of x is tracked continuously in
(pi/2, 5 pi/2), so on the right arm it exceeds the principal value by 2 pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NonPositiveEpsilon

__all__ = ["ContourPoint", "contour_point", "branch_power", "contour_log", "junction"]


@dataclass(frozen=True)
class ContourPoint:
    s: float
    x: complex
    dxds: complex
    theta: float
    d2xds2: complex = 0j

    @property
    def branch(self) -> str:
        if self.theta < math.pi:
            return "left"
        if self.theta > 2.0 * math.pi:
            return "right"
        return "circle"


def junction(eps: float) -> float:
    """Path parameter of the right junction, pi*eps/2 (the left one is its negative)."""
    return 0.5 * math.pi * eps


def contour_point(eps: float, s: float) -> ContourPoint:
    """Position, tangent and continuous argument at path parameter ``s``.

    Junctions belong to the circular piece. The circle is written as
    eps (sin u - i cos u), u = s/eps, which keeps x(-s) = -conj(x(s)) exact
    in floating point.
    """
    if not eps > 0 or not math.isfinite(eps):
        raise NonPositiveEpsilon(f"eps must be a positive finite number, got {eps!r}")
    s = float(s)
    sj = junction(eps)
    if s < -sj:
        im = -(s + sj)
        return ContourPoint(s, complex(-eps, im), -1j, math.atan2(im, -eps))
    if s > sj:
        im = s - sj
        return ContourPoint(s, complex(eps, im), 1j, 2.0 * math.pi + math.atan2(im, eps))
    u = s / eps
    su, cu = math.sin(u), math.cos(u)
    dx = complex(cu, su)
    return ContourPoint(s, complex(eps * su, -eps * cu), dx, u + 1.5 * math.pi, 1j * dx / eps)


def contour_log(p: ContourPoint) -> complex:
    """ln|x| + i theta with the continuously tracked argument."""
    return complex(math.log(abs(p.x)), p.theta)


def branch_power(p: ContourPoint, a: complex) -> complex:
    """x**a continued along the path from the left arm.

    On the left arm and circle this is the principal power; on the right arm
    it carries the extra factor exp(2 pi i a).
    """
    return cmath.exp(a * contour_log(p))

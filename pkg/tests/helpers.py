import mpmath as mp

from ucoulomb.contour import contour_point
from ucoulomb.model import PhysParams, potential

mp.mp.dps = 40


def mp_gamma(z):
    return complex(mp.gamma(mp.mpc(z)))


def mp_hyp1f1(a, b, z):
    return complex(mp.hyp1f1(mp.mpc(a), mp.mpc(b), mp.mpc(z)))


def rel(a, b):
    return abs(a - b) / abs(b)


# Parameter sets of the potential and scan figures
FIGURE_PARAMS = [
    PhysParams(1.0, 3.75, 0.005),
    PhysParams(1.0, 3.53, 0.005),
    PhysParams(1.0, 3.10, 0.005),
    PhysParams(1.0, 3.01, 0.005),
]


def fd_residual(P, k, fun, s):
    """Relative residual of the s-form ODE with a five-point fourth-order stencil.

    The step scales with the local length scale min(|x|, 1/k) so truncation
    and rounding errors stay balanced on the circle and far out on the arms.
    """
    p = contour_point(P.eps, s)
    h = 5e-3 * min(abs(p.x), 1 / abs(k))
    f = [fun(P, k, contour_point(P.eps, s + j * h)) for j in (-2, -1, 0, 1, 2)]
    d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
    d1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
    rhs = p.dxds**2 * (potential(P, p) + k * k) * f[2] + (p.d2xds2 / p.dxds) * d1
    return abs(d2 - rhs) / max(abs(d2), abs(rhs))

"""Independent oracles used by the test suite.

These deliberately avoid the code paths they check: harmonic measures are
integrated with adaptive quadrature of the Poisson kernel, and scalar roots
are isolated with 50-digit bisection in mpmath.
"""

import math

import mpmath
from scipy.integrate import quad

mpmath.mp.dps = 50


def poisson_arc_measure(r: float, t: float, phi: float, s: float) -> float:
    """Harmonic measure of the arc (phi-s, phi+s) at r*e^{it} by quadrature."""
    two_pi = 2.0 * math.pi

    def kernel(eta):
        return (1.0 - r * r) / (
            two_pi * (1.0 - 2.0 * r * math.cos(t - eta) + r * r))

    # Shift the kernel peak to its representative nearest the arc so the
    # adaptive rule can subdivide around it when r is close to 1.
    peak = t - two_pi * round((t - phi) / two_pi)
    lo, hi = phi - s, phi + s
    pts = [peak] if lo < peak < hi else None
    value, _ = quad(kernel, lo, hi, points=pts, limit=200,
                    epsabs=1e-13, epsrel=1e-13)
    return value


def mp_scalar_root(A: float, B: float):
    """(U, S(U)) of the scalar zero by 50-digit bisection."""
    A = mpmath.mpf(A)
    B = mpmath.mpf(B)
    k = mpmath.sqrt(1 - A * A)
    e = mpmath.sqrt(1 - B * B)
    P = (1 + A * B) / (B * (A + B))
    shift = k * k / (A * (A + B))

    def g(u):
        return (B * mpmath.cos(mpmath.pi * k * (P - u))
                - A * mpmath.cos(mpmath.pi * e * (u + shift))
                - (A + B) * mpmath.cos(mpmath.pi * u))

    lo = k / (1 + k) * P
    hi = (1 - e * shift) / (1 + e)
    if g(lo) > 0 or g(hi) < 0:
        raise ValueError(f"no bracket for A={A}, B={B}")
    for _ in range(150):
        mid = (lo + hi) / 2
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    u = (lo + hi) / 2
    s = ((A + B) * mpmath.sin(mpmath.pi * u)
         + B * k * mpmath.sin(mpmath.pi * k * (P - u))
         + A * e * mpmath.sin(mpmath.pi * e * (u + shift)))
    return float(u), float(s)

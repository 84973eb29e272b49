"""Harmonic measures of boundary arcs and the distinguished zero point.

The four fixed arcs for arc parameter alpha in (0, pi) are

    I1 = (0, alpha),       I2 = (alpha, pi),
    I3 = (pi, pi+alpha),   I4 = (pi+alpha, 2*pi),

with harmonic measures Omega_j at a point z = r*e^{it} of the unit disk.
For the arc centered at phi with half-length s the measure omega solves

    cot(pi*omega) = ((1+r^2)*cos(s) - 2r*cos(t-phi)) / ((1-r^2)*sin(s)),

and the combinations U = Omega1+Omega3, V = Omega1-Omega3, T = Omega4-Omega2
satisfy the cross-ratio identity

    sin(pi*Omega1) sin(pi*Omega3) / (sin(pi*Omega2) sin(pi*Omega4))
        = tan^2(alpha/2)

for every z.  The distinguished point z0 is the one whose measures realize
the (U, V, T) data of the scalar zero; at z0 the slope-normalized curvature
follows from D0 = 1 + r^2 - 2*sqrt(1-mu^2)*r*cos(t0-delta), where delta is
the phase of the Gauss-map parameter a.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import DegenerateError, DomainError, NonConvergence
from . import weierstrass

if TYPE_CHECKING:
    from .scalar import ScalarZero
    from .params import ScherkParams

_MAX_R = 0.995
_NEWTON_BUDGET = 50


@dataclass(frozen=True)
class DiskPoint:
    """Polar point r*e^{it} with r in [0, 1)."""

    r: float
    t: float

    def __post_init__(self):
        if not (0.0 <= self.r < 1.0):
            raise DomainError(f"require 0 <= r < 1, got r={self.r}")

    def as_complex(self) -> complex:
        return complex(self.r * math.cos(self.t), self.r * math.sin(self.t))


@dataclass(frozen=True)
class ArcSpec:
    """Boundary arc by center angle phi and half-length s in (0, pi)."""

    phi: float
    s: float

    def __post_init__(self):
        if not (0.0 < self.s < math.pi):
            raise DomainError(f"require 0 < s < pi, got s={self.s}")


@dataclass(frozen=True)
class FourMeasures:
    Omega1: float
    Omega2: float
    Omega3: float
    Omega4: float
    U: float
    V: float
    T: float


@dataclass(frozen=True)
class ZeroSolution:
    """The distinguished zero point with its derived curvature data."""

    z: DiskPoint
    measures: FourMeasures
    D0: float
    delta: float
    a_mod: float
    WK: float
    master_lhs: float
    residual: float  # max |Omega_j(z) - target_j| over the four arcs


@dataclass(frozen=True)
class PhaseParam:
    """Gauss-map parameter a with its phase and formula residuals."""

    a: complex
    delta: float
    mod_residual: float  # |a| - sqrt((1-mu)/(1+mu))
    cos_residual: float  # cos(delta-h) + c_p*sqrt(B)/sqrt((1-AB)(A+B))
    sin_residual: float  # sin(delta-h) + d_q*sqrt(A)/sqrt((1-AB)(A+B))


def arc_measure(z: DiskPoint, arc: ArcSpec) -> float:
    """Harmonic measure of the arc at z, in (0, 1).

    atan2 on (numerator, denominator) of the cot formula realizes the
    arccot branch mapping R onto (0, pi); the positive denominator pins
    the value inside (0, 1) continuously across cot = 0.
    """
    num = (1.0 + z.r * z.r) * math.cos(arc.s) - 2.0 * z.r * math.cos(z.t - arc.phi)
    den = (1.0 - z.r * z.r) * math.sin(arc.s)
    return math.atan2(den, num) / math.pi


def measures4(z: DiskPoint, alpha: float) -> FourMeasures:
    """Harmonic measures of the four fixed arcs, plus (U, V, T)."""
    if not (0.0 < alpha < math.pi):
        raise DomainError(f"require 0 < alpha < pi, got {alpha}")
    h = 0.5 * alpha
    half_small = h                      # I1, I3
    half_large = 0.5 * (math.pi - alpha)  # I2, I4
    o1 = arc_measure(z, ArcSpec(h, half_small))
    o2 = arc_measure(z, ArcSpec(h + 0.5 * math.pi, half_large))
    o3 = arc_measure(z, ArcSpec(h + math.pi, half_small))
    o4 = arc_measure(z, ArcSpec(h + 1.5 * math.pi, half_large))
    return FourMeasures(Omega1=o1, Omega2=o2, Omega3=o3, Omega4=o4,
                        U=o1 + o3, V=o1 - o3, T=o4 - o2)


def cross_ratio_residual(z: DiskPoint, alpha: float) -> float:
    """sin(pi O1) sin(pi O3) / (sin(pi O2) sin(pi O4)) - tan^2(alpha/2)."""
    m = measures4(z, alpha)
    ratio = (math.sin(math.pi * m.Omega1) * math.sin(math.pi * m.Omega3)
             / (math.sin(math.pi * m.Omega2) * math.sin(math.pi * m.Omega4)))
    return ratio - math.tan(0.5 * alpha) ** 2


def sinU_identity_residual(z: DiskPoint, alpha: float) -> float:
    """sin(pi U) - (1-r^4) sin(alpha) / (|1-w| |e^{2i alpha}-w|), w = z^2."""
    m = measures4(z, alpha)
    w = z.as_complex() ** 2
    denom = abs(1.0 - w) * abs(cmath.exp(2j * alpha) - w)
    return math.sin(math.pi * m.U) - (1.0 - z.r ** 4) * math.sin(alpha) / denom


def phase_param(params: "ScherkParams") -> PhaseParam:
    """Gauss-map parameter a and its phase delta = arg(a).

        a = (A*d_q - B*c_p - i*sqrt(AB)*(c_p + d_q)) / ((1+sqrt(AB))*(A+B)),

    with |a| = sqrt((1-mu)/(1+mu)).  The residual fields check the two
    closed forms for cos(delta-h) and sin(delta-h) against the computed a.
    Undefined at A*B = 1 (a = 0).
    """
    A, B = params.A, params.B
    if A * B >= 1.0:
        raise DegenerateError("a = 0 at A*B = 1; the phase is undefined")
    if not params.has_angles:
        raise DomainError("phase_param needs angle data on the parameters")
    c_p, d_q, mu, h = params.c_p, params.d_q, params.mu, params.h
    a = complex(A * d_q - B * c_p, -mu * (c_p + d_q)) / ((1.0 + mu) * (A + B))
    delta = cmath.phase(a)
    scale = math.sqrt((1.0 - A * B) * (A + B))
    return PhaseParam(
        a=a,
        delta=delta,
        mod_residual=abs(a) - math.sqrt((1.0 - mu) / (1.0 + mu)),
        cos_residual=math.cos(delta - h) + c_p * math.sqrt(B) / scale,
        sin_residual=math.sin(delta - h) + d_q * math.sqrt(A) / scale,
    )


def _arc_endpoints(alpha: float):
    """Endpoints (a, b) of the four arcs, counterclockwise."""
    pts = (0.0, alpha, math.pi, math.pi + alpha, 2.0 * math.pi)
    return [(cmath.exp(1j * pts[k]), cmath.exp(1j * pts[k + 1]))
            for k in range(4)]


def _measure_gradient(zc: complex, a: complex, b: complex):
    """Gradient of the arc's harmonic measure at zc (analytic completion).

    The measure is Re W with W' = -(i/pi)(b-a)/((a-z)(b-z)); hence
    d/dx = Re W', d/dy = -Im W'.
    """
    wp = (-1j / math.pi) * (b - a) / ((a - zc) * (b - zc))
    return wp.real, -wp.imag


def _measures_xy(x: float, y: float, alpha: float) -> FourMeasures:
    r = math.hypot(x, y)
    t = math.atan2(y, x)
    return measures4(DiskPoint(r=r, t=t), alpha)


def solve_zero_point(params: "ScherkParams", scalar_zero: "ScalarZero",
                     tol: float = 1e-12) -> ZeroSolution:
    """Locate z0 whose four harmonic measures realize the scalar-zero data.

    The targets are Omega1 = (U+V)/2 and Omega2 = (1-U-T)/2 from the scalar
    zero; matching those two pins the remaining measures through the sum
    and cross-ratio constraints (checked and reported as `residual`).

    Damped Newton on (x, y) = (r cos t, r sin t) with the analytic
    Poisson-kernel gradient, starting from the origin, step-clamped to
    r <= 0.995; after a stall, one restart from the best point of a coarse
    polar grid.  Near-boundary answers (r > 0.995) are rejected as
    NonConvergence rather than returned at low accuracy.
    """
    A, B = params.A, params.B
    if A * B >= 1.0:
        # Full symmetry: z0 is the origin, mu = 1 removes the phase term.
        z = DiskPoint(r=0.0, t=0.0)
        m = measures4(z, params.alpha if params.has_angles else 0.5 * math.pi)
        wk = weierstrass.wk_geometric(z, params, 1.0)
        return ZeroSolution(z=z, measures=m, D0=1.0, delta=0.0, a_mod=0.0,
                            WK=wk.value, master_lhs=1.0,
                            residual=abs(m.U - 0.5))

    alpha = params.alpha
    t1 = 0.5 * (scalar_zero.U + scalar_zero.V)
    t2 = 0.5 * (1.0 - scalar_zero.U - scalar_zero.T)
    targets = (t1, t2,
               0.5 * (scalar_zero.U - scalar_zero.V),
               0.5 * (1.0 - scalar_zero.U + scalar_zero.T))
    arcs = _arc_endpoints(alpha)

    def residual_at(x: float, y: float):
        m = _measures_xy(x, y, alpha)
        return m.Omega1 - t1, m.Omega2 - t2

    def norm(f):
        return max(abs(f[0]), abs(f[1]))

    def newton(x: float, y: float):
        f = residual_at(x, y)
        for _ in range(_NEWTON_BUDGET):
            if norm(f) <= tol:
                return x, y, f
            zc = complex(x, y)
            g1x, g1y = _measure_gradient(zc, *arcs[0])
            g2x, g2y = _measure_gradient(zc, *arcs[1])
            det = g1x * g2y - g1y * g2x
            if det == 0.0 or not math.isfinite(det):
                break
            dx = (-f[0] * g2y + f[1] * g1y) / det
            dy = (-f[1] * g1x + f[0] * g2x) / det
            lam = 1.0
            improved = False
            for _ in range(40):
                xn, yn = x + lam * dx, y + lam * dy
                rn = math.hypot(xn, yn)
                if rn > _MAX_R:
                    shrink = _MAX_R / rn
                    xn, yn = xn * shrink, yn * shrink
                fn = residual_at(xn, yn)
                if norm(fn) < norm(f):
                    x, y, f = xn, yn, fn
                    improved = True
                    break
                lam *= 0.5
            if not improved:
                break
        return x, y, f

    x, y, f = newton(0.0, 0.0)
    if norm(f) > tol:
        # Restart from the best point of a coarse polar grid.
        best = (norm(f), x, y)
        for ir in range(1, 20):
            r = 0.05 * ir
            if r > _MAX_R:
                break
            for it in range(64):
                t = 2.0 * math.pi * it / 64
                xg, yg = r * math.cos(t), r * math.sin(t)
                fg = residual_at(xg, yg)
                if norm(fg) < best[0]:
                    best = (norm(fg), xg, yg)
        x, y, f = newton(best[1], best[2])
    if norm(f) > tol:
        raise NonConvergence(
            f"zero-point solve stalled at residual {norm(f)} for "
            f"A={A}, B={B} (target tol {tol})")

    r = math.hypot(x, y)
    if r > _MAX_R:
        raise NonConvergence(
            f"zero point at r={r} > {_MAX_R}; too close to the boundary "
            f"for reliable evaluation (A={A}, B={B})")
    z = DiskPoint(r=r, t=math.atan2(y, x) % (2.0 * math.pi))
    m = measures4(z, alpha)
    resid = max(abs(m.Omega1 - targets[0]), abs(m.Omega2 - targets[1]),
                abs(m.Omega3 - targets[2]), abs(m.Omega4 - targets[3]))

    ph = phase_param(params)
    mu = params.mu
    root1m2 = math.sqrt(max(0.0, 1.0 - mu * mu))
    cos_term = math.cos(z.t - ph.delta)
    D0 = 1.0 + r * r - 2.0 * root1m2 * r * cos_term
    master_lhs = math.sin(math.pi * m.U) * (
        1.0 - root1m2 * (2.0 * r / (1.0 + r * r)) * cos_term)
    wk = weierstrass.wk_geometric(z, params, D0)
    return ZeroSolution(z=z, measures=m, D0=D0, delta=ph.delta,
                        a_mod=abs(ph.a), WK=wk.value,
                        master_lhs=master_lhs, residual=resid)


def master_inequality_check(sol: ZeroSolution, params: "ScherkParams",
                            slack: float = 1e-9):
    """The reduced sharp bound at the solved zero point.

    lhs = sin(pi U)(1 - sqrt(1-mu^2) (2r/(1+r^2)) cos(t0-delta)) must
    dominate rhs = sqrt(2(1+mu^2))/(A+B).
    """
    mu2 = params.mu * params.mu
    rhs = math.sqrt(2.0 * (1.0 + mu2)) / (params.A + params.B)
    return sol.master_lhs, rhs, sol.master_lhs >= rhs - slack


def modulus_consistency_residual(params: "ScherkParams",
                                 m: FourMeasures) -> float:
    """| |(1-U)c_p + i T A| - |U d_q + i V B| | at measured (U, V, T).

    The zero equation multiplies (U d_q + iVB) by a unimodular factor, so
    the two moduli agree whenever the measures come from a true zero point.
    """
    lhs = abs(complex((1.0 - m.U) * params.c_p, m.T * params.A))
    rhs = abs(complex(m.U * params.d_q, m.V * params.B))
    return abs(lhs - rhs)

"""Odd circle lifts and the sharp first-coefficient energy bound.

An odd lift is a nondecreasing theta: R -> R with theta(t+pi) = theta(t)+pi.
The boundary map F = exp(i*theta) then carries only odd Fourier modes, and
the first-mode energy

    S1 = |c_1|^2 + |c_-1|^2

is bounded below by 8/pi^2.  Equality is approached by the four-point
collapse (F locked to the fourth roots of unity), reproduced here as a
mollified staircase.  The averaging route to the bound runs through the
autocorrelation

    C(t) = mean_s cos(theta(s+t) - theta(s-t)),    J = (1 - C)/2,

the pointwise bound J(tau) <= tau, and the weighted averaging inequality
with weight M(tau) = cos(2 tau) on [0, pi/4].

Lifts are sampled on a uniform grid of N = 2^14 points (power of two,
divisible by 8 so that pi/4-aligned quadrature nodes are exact grid
multiples); the second half of every sample array is the first half plus
pi, which makes the odd periodicity exact by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError

DEFAULT_GRID = 2 ** 14
_MONOTONE_TOL = 1e-12
_ODD_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OddLift:
    """Samples of theta on the uniform grid t_k = 2*pi*k/N."""

    samples: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=float)
        n = s.size
        if n < 8 or n & (n - 1):
            raise ValueError(f"grid size must be a power of two >= 8, got {n}")
        object.__setattr__(self, "samples", s)
        diffs = np.diff(s)
        if diffs.min(initial=0.0) < -_MONOTONE_TOL:
            raise ValueError(f"lift not nondecreasing: min step {diffs.min()}")
        if (s[0] + 2.0 * math.pi) - s[-1] < -_MONOTONE_TOL:
            raise ValueError("lift violates theta(2 pi) = theta(0) + 2 pi")
        half = n // 2
        odd_resid = np.abs(s[half:] - s[:half] - math.pi).max()
        if odd_resid > _ODD_TOL:
            raise ValueError(f"odd periodicity violated by {odd_resid}")

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def step(self) -> float:
        return 2.0 * math.pi / self.n

    def grid(self) -> np.ndarray:
        return np.arange(self.n) * self.step

    def shifted(self, m: int) -> np.ndarray:
        """theta(t_k + m*step) for all k, unwrapped by theta(t+2pi)=theta+2pi."""
        idx = np.arange(self.n) + m
        return self.samples[idx % self.n] + 2.0 * math.pi * (idx // self.n)


def _mirror(first_half: np.ndarray) -> np.ndarray:
    return np.concatenate([first_half, first_half + math.pi])


def random_odd_lift(seed: int, modes: int, amplitude: float,
                    n: int = DEFAULT_GRID) -> OddLift:
    """theta(t) = t + sum_k a_k sin(2k t + phi_k), k = 1..modes.

    Even frequencies keep theta(t+pi) = theta(t) + pi; the amplitudes are
    rescaled if needed so that min theta' >= 0.05, which keeps every
    generated lift strictly increasing.
    """
    if modes < 1:
        raise ValueError(f"modes must be >= 1, got {modes}")
    if amplitude < 0.0:
        raise ValueError(f"amplitude must be >= 0, got {amplitude}")
    rng = np.random.default_rng(seed)
    ks = np.arange(1, modes + 1)
    amps = amplitude * rng.uniform(0.2, 1.0, modes) / ks
    phases = rng.uniform(0.0, 2.0 * math.pi, modes)
    deriv_bound = float(np.sum(2.0 * ks * amps))
    if deriv_bound > 0.95:
        amps *= 0.95 / deriv_bound
    t_half = np.arange(n // 2) * (2.0 * math.pi / n)
    pert = np.zeros_like(t_half)
    for k, a, ph in zip(ks, amps, phases):
        pert += a * np.sin(2.0 * k * t_half + ph)
    return OddLift(_mirror(t_half + pert))


def identity_lift(n: int = DEFAULT_GRID) -> OddLift:
    t_half = np.arange(n // 2) * (2.0 * math.pi / n)
    return OddLift(_mirror(t_half))


def _erf_steps(x: np.ndarray) -> np.ndarray:
    """Elementwise erf; beyond |x| = 6 the tail is below double rounding."""
    out = np.sign(x)
    near = np.abs(x) < 6.0
    out[near] = np.fromiter((math.erf(v) for v in x[near]), dtype=float,
                            count=int(near.sum()))
    return out


def extremal_sequence(smoothing: float, n: int = DEFAULT_GRID) -> OddLift:
    """Mollified four-point collapse: steps of pi/2 near t = k*pi/2.

    Uses an error-function profile of width `smoothing`, so the lift stays
    strictly increasing with bounded derivative; as smoothing -> 0 the
    first-mode energy S1 tends to 8/pi^2 (the sharp constant).
    """
    if not (0.0 < smoothing <= 0.1):
        raise ValueError(f"smoothing must be in (0, 0.1], got {smoothing}")
    t_half = np.arange(n // 2) * (2.0 * math.pi / n)
    total = np.zeros_like(t_half)
    # Jumps live at k*pi/2; distant jumps contribute only erf tails.
    for k in range(-8, 10):
        total += 0.5 * (1.0 + _erf_steps((t_half - 0.5 * math.pi * k) / smoothing))
    theta_half = 0.5 * math.pi * total - 4.0 * math.pi
    return OddLift(_mirror(theta_half))


def fourier_mode(lift: OddLift, n: int) -> tuple[complex, complex]:
    """(c_n, c_{-n}) of F = exp(i theta) by the trapezoid rule.

    On a uniform periodic grid the trapezoid rule is the plain mean, and it
    is spectrally accurate for smooth lifts.
    """
    t = lift.grid()
    f = np.exp(1j * lift.samples)
    cn = np.mean(f * np.exp(-1j * n * t))
    cmn = np.mean(f * np.exp(1j * n * t))
    return complex(cn), complex(cmn)


def fourier_S1(lift: OddLift) -> float:
    """First-mode energy S1 = |c_1|^2 + |c_-1|^2, bounded below by 8/pi^2."""
    c1, cm1 = fourier_mode(lift, 1)
    return abs(c1) ** 2 + abs(cm1) ** 2


def fourier_spectrum(lift: OddLift) -> np.ndarray:
    """S_n = |c_n|^2 + |c_-n|^2 for n = 1 .. N/2 - 1, via one FFT."""
    c = np.fft.fft(np.exp(1j * lift.samples)) / lift.n
    half = lift.n // 2
    ns = np.arange(1, half)
    return np.abs(c[ns]) ** 2 + np.abs(c[-ns]) ** 2


def snap_shift(lift: OddLift, t: float) -> int:
    """Nearest grid multiple of t; shifts are evaluated on the grid."""
    return int(round(t / lift.step))


def autocorrelation(lift: OddLift, t: float) -> tuple[float, float]:
    """(C(t), J(t)) with the shift snapped to the nearest grid multiple.

    C(t) = mean_s cos(theta(s+t) - theta(s-t)); J = (1 - C)/2.  Exact grid
    shifts keep the telescoping mean of the phase difference exactly 2t,
    which preserves the pointwise bound J(t) <= t up to rounding.
    """
    m = snap_shift(lift, t)
    diff = lift.shifted(m) - lift.shifted(-m)
    c = float(np.mean(np.cos(diff)))
    return c, 0.5 * (1.0 - c)


def _c_at_shifts(lift: OddLift, ms: np.ndarray,
                 chunk: int = 128) -> np.ndarray:
    """C at many grid shifts, batched to keep the work matrix small."""
    n = lift.n
    mmax = int(np.abs(ms).max(initial=0))
    idx = np.arange(-mmax, n + mmax)
    ext = lift.samples[idx % n] + 2.0 * math.pi * (idx // n)
    base = np.arange(n) + mmax
    out = np.empty(ms.size)
    for start in range(0, ms.size, chunk):
        mc = ms[start:start + chunk, None]
        diff = ext[base[None, :] + mc] - ext[base[None, :] - mc]
        out[start:start + chunk] = np.cos(diff).mean(axis=1)
    return out


@dataclass(frozen=True)
class HallReport:
    """Weighted averaging inequality with weight cos(2 tau) on [0, pi/4]."""

    lhs: float              # integral of cos(2 tau) J(tau) over [0, pi/4]
    rhs: float              # (2/pi) integral of tau cos(2 tau) over [0, pi/4]
    holds: bool
    max_j_minus_tau: float  # max over nodes in [0, pi/2] of J(tau) - tau


def hall_inequality_check(lift: OddLift, slack: float = 1e-9) -> HallReport:
    """Trapezoid quadrature on every grid node of [0, pi/4].

    The weight vanishes beyond pi/4, so both integrals stop there; the
    pointwise bound J <= tau is checked on nodes covering all of [0, pi/2].
    """
    n4 = lift.n // 4   # pi/2 = n4 * step
    n8 = lift.n // 8   # pi/4
    step = lift.step
    shifts = np.arange(n4 + 1)
    js = 0.5 * (1.0 - _c_at_shifts(lift, shifts))
    taus = shifts * step

    weights = np.cos(2.0 * taus[:n8 + 1])
    lhs = float(np.trapezoid(weights * js[:n8 + 1], dx=step))
    rhs = (2.0 / math.pi) * float(np.trapezoid(weights * taus[:n8 + 1],
                                               dx=step))
    max_gap = float((js - taus).max())
    return HallReport(lhs=lhs, rhs=rhs, holds=lhs <= rhs + slack,
                      max_j_minus_tau=max_gap)


def folding_max(lift: OddLift, level: int) -> float:
    """max of L(tau) + L(B - tau) over grid nodes in [0, B/2], L = J - 2t/pi.

    B = (pi/2) / 2^level; the combinatorial bound makes this nonpositive
    for every valid lift.  Levels beyond 3 are proof scaffolding, not
    checked here.
    """
    if level < 1 or lift.n % (2 ** (level + 2)) != 0:
        raise ValueError(f"level {level} incompatible with grid {lift.n}")
    nb = lift.n // (2 ** (level + 2))   # B = nb * step
    step = lift.step
    shifts = np.arange(nb // 2 + 1)
    j_low = 0.5 * (1.0 - _c_at_shifts(lift, shifts))
    j_high = 0.5 * (1.0 - _c_at_shifts(lift, nb - shifts))
    ls = (j_low - 2.0 * (shifts * step) / math.pi
          + j_high - 2.0 * ((nb - shifts) * step) / math.pi)
    return float(ls.max())


@dataclass(frozen=True)
class CentralChainReport:
    """Coefficient-level chain for centrally symmetric graphs."""

    wk: float             # 4|q'(0)|^2 / (|P(0)|^2 (1-r^2)^2 (1+r^2)^2)
    slope_bound: float    # 4 / (|P(0)|^2 (1+r^2)^2), from Schwarz-Pick
    coeff_sum: float      # |a_1|^2 + |b_1|^2 = |P(0)|^2 (1 + r^4)
    wk_le_slope: bool
    slope_le_coeff_bound: bool  # slope_bound <= 4/coeff_sum
    coeff_premise: bool   # coeff_sum >= 8/pi^2
    final_bound: bool     # wk <= pi^2/2 whenever the premise holds


def central_chain_check(P0: complex, q0: complex, q0deriv: complex,
                        slack: float = 1e-12) -> CentralChainReport:
    """Verify the inequality chain from the data (P(0), q(0), q'(0)).

    Preconditions: |q0| < 1 and the Schwarz-Pick bound |q'(0)| <= 1-|q0|^2.
    With b_1 = q(0)^2 P(0), the premise |a_1|^2+|b_1|^2 >= 8/pi^2 upgrades
    the slope bound to wk <= pi^2/2.
    """
    r = abs(q0)
    if r >= 1.0:
        raise PreconditionError(f"require |q0| < 1, got {r}")
    r2 = r * r
    if abs(q0deriv) > 1.0 - r2 + slack:
        raise PreconditionError(
            f"Schwarz-Pick violated: |q'(0)|={abs(q0deriv)} > 1-r^2={1 - r2}")
    if P0 == 0:
        raise PreconditionError("require P(0) != 0")
    p2 = abs(P0) ** 2
    wk = 4.0 * abs(q0deriv) ** 2 / (p2 * (1.0 - r2) ** 2 * (1.0 + r2) ** 2)
    slope_bound = 4.0 / (p2 * (1.0 + r2) ** 2)
    coeff_sum = p2 * (1.0 + r2 * r2)
    sharp = 8.0 / math.pi ** 2
    premise = coeff_sum >= sharp - slack
    return CentralChainReport(
        wk=wk,
        slope_bound=slope_bound,
        coeff_sum=coeff_sum,
        wk_le_slope=wk <= slope_bound + slack,
        slope_le_coeff_bound=slope_bound <= 4.0 / coeff_sum + slack,
        coeff_premise=premise,
        final_bound=(not premise) or wk <= math.pi ** 2 / 2.0 + slack,
    )

"""
Physical model layer: system parameters, normal-mode decomposition, and
damped classical trajectories for two bilinearly coupled oscillators.

All quantities at this level are CGS (g, rad/s, cm^2, K) unless they live
inside a ScaledModel, which carries the nondimensional copy used by the
numerical core (hbar = k_B = M1 = w01 = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CausticTime, OverdampedMode, Unstable
from .units import Scale

# Normalized couplings below this are treated as exactly zero (the mode
# ratios have a removable 0/0 there and are replaced by their limit).
LAMBDA_TINY = 1e-12

# |sin(Omega*t)| below this counts as a caustic: the endpoint-to-amplitude
# map of the boundary value problem is singular.
TOL_CAUSTIC = 1e-9


@dataclass(frozen=True)
class SystemParams:
    """Two damped oscillators with a bilinear position-position coupling.

    M1, M2 : masses (g)
    w01, w02 : bare angular frequencies (rad/s)
    gamma : common damping rate (rad/s), equal for both oscillators
    lam : coupling constant (g/s^2, energy per length^2)
    """

    M1: float
    M2: float
    w01: float
    w02: float
    gamma: float
    lam: float = 0.0

    def __post_init__(self):
        if not (self.M1 > 0 and self.M2 > 0):
            raise ValueError("masses must be positive")
        if not (self.w01 > 0 and self.w02 > 0):
            raise ValueError("bare frequencies must be positive")
        if self.gamma < 0:
            raise ValueError("damping rate must be nonnegative")
        lam_max = self.w01 * self.w02 * math.sqrt(self.M1 * self.M2)
        # tiny slack so lam = lam_max written in floats is accepted
        if abs(self.lam) > lam_max * (1.0 + 1e-12):
            raise Unstable(
                "coupling |lam| = %.6g exceeds the stability bound %.6g"
                % (abs(self.lam), lam_max)
            )


@dataclass(frozen=True)
class BathSpec:
    """Separate Ohmic baths: temperatures (K) and a shared spectral cutoff
    (rad/s) used to regularize the noise quadratures."""

    T1: float
    T2: float
    omega_cutoff: float

    def __post_init__(self):
        if self.T1 < 0 or self.T2 < 0:
            raise ValueError("bath temperatures must be nonnegative")
        if not self.omega_cutoff > 0:
            raise ValueError("omega_cutoff must be positive")


@dataclass(frozen=True)
class InitialState:
    """Initial Gaussian dispersions sigma01^2, sigma02^2 (cm^2) of the two
    factorized single-oscillator states."""

    sigma01_sq: float
    sigma02_sq: float

    def __post_init__(self):
        if not (self.sigma01_sq > 0 and self.sigma02_sq > 0):
            raise ValueError("initial dispersions must be strictly positive")


@dataclass(frozen=True)
class NormalModes:
    """Oscillatory normal modes of the damped coupled system.

    Omega1, Omega2 : mode frequencies (rad/s), Omega1 <= Omega2 for lam != 0
    r1, r2 : dimensionless mode ratios (relative weight of each mode in the
             other oscillator's motion); r1*r2 <= 0
    delta : damping of both modes, equal to gamma
    """

    Omega1: float
    Omega2: float
    r1: float
    r2: float
    delta: float


@dataclass(frozen=True)
class CriticalMap:
    """Effective free-particle-plus-oscillator parameters reached at the
    critical coupling, with the dimensionless scale factors of the variable
    change (J1*J2 = 1)."""

    M_eff: float
    omega_eff: float
    J1: float
    J2: float


def normalized_coupling(p: SystemParams) -> float:
    """Coupling in units of its stability bound, lam/(w01*w02*sqrt(M1*M2))."""
    return p.lam / (p.w01 * p.w02 * math.sqrt(p.M1 * p.M2))


def normal_modes(p: SystemParams, allow_boundary: bool = False) -> NormalModes:
    """Normal-mode frequencies and ratios of the coupled damped system.

    The two squared frequencies are the roots

        Omega_{1,2}^2 = (w01^2 + w02^2 - 2 gamma^2)/2
                        -/+ sqrt((w02^2 - w01^2)^2/4 + lam^2/(M1 M2))

    and the ratios are r1 = M1*(w01^2 - gamma^2 - Omega1^2)/lam,
    r2 = M2*(w02^2 - gamma^2 - Omega2^2)/lam.

    For lam = 0 the coupled expressions are a removable 0/0; the limit
    r1 = r2 = 0 is returned and mode k is assigned to oscillator k, so the
    trajectory expansion stays paired with the physical oscillators.

    Raises OverdampedMode if the lower squared frequency is not positive.
    At the stability boundary |lam_tilde| = 1 the lower mode frequency
    collapses; pass allow_boundary=True to accept Omega1 = 0 there
    (gamma = 0 only; with damping the boundary mode is overdamped).
    """
    lt = normalized_coupling(p)
    if abs(lt) >= 1.0 and not allow_boundary:
        raise Unstable(
            "normalized coupling %.6g is at or beyond the stability "
            "boundary; pass allow_boundary=True for the marginal case" % lt
        )

    g2 = p.gamma * p.gamma
    if abs(lt) < LAMBDA_TINY:
        o1_sq = p.w01 * p.w01 - g2
        o2_sq = p.w02 * p.w02 - g2
        if o1_sq <= 0 or o2_sq <= 0:
            raise OverdampedMode("decoupled oscillator is overdamped")
        return NormalModes(math.sqrt(o1_sq), math.sqrt(o2_sq), 0.0, 0.0, p.gamma)

    half_sum = 0.5 * (p.w01 * p.w01 + p.w02 * p.w02) - g2
    split = math.sqrt(
        0.25 * (p.w02 * p.w02 - p.w01 * p.w01) ** 2 + p.lam * p.lam / (p.M1 * p.M2)
    )
    o1_sq = half_sum - split
    o2_sq = half_sum + split

    if o1_sq <= 0.0:
        # allow a rounding-level negative at the gamma = 0 boundary
        if allow_boundary and o1_sq > -1e-12 * o2_sq:
            o1_sq = 0.0
        else:
            raise OverdampedMode(
                "lower normal mode is not oscillatory (Omega1^2 = %.6g)" % o1_sq
            )

    r1 = p.M1 * (p.w01 * p.w01 - g2 - o1_sq) / p.lam
    r2 = p.M2 * (p.w02 * p.w02 - g2 - o2_sq) / p.lam
    return NormalModes(math.sqrt(o1_sq), math.sqrt(o2_sq), r1, r2, p.gamma)


def critical_coupling_map(p: SystemParams) -> CriticalMap:
    """Parameters of the equivalent free-particle/oscillator pair reached
    when the coupling is tuned to its stability bound."""
    m_eff = math.sqrt(p.M1 * p.M2)
    w_eff = math.sqrt(p.w01 * p.w02)
    j1 = (p.w01 / p.w02) * math.sqrt(p.M1 / p.M2)
    return CriticalMap(M_eff=m_eff, omega_eff=w_eff, J1=j1, J2=1.0 / j1)


@dataclass(frozen=True)
class Endpoints:
    """Boundary positions of a two-oscillator trajectory on [0, t]."""

    Xi1: float
    Xi2: float
    Xf1: float
    Xf2: float


class ClassicalPath:
    """Damped two-oscillator trajectory pinned at both ends.

    The motion is a superposition of the two normal modes,

        X1(tau) = e^(-g*tau) * [a1 sin(O1 tau) + b1 cos(O1 tau)]
                + r2 e^(-g*tau) * [a2 sin(O2 tau) + b2 cos(O2 tau)]
        X2(tau) = r1 * (first bracket) + (second bracket)

    with the four amplitudes fixed by the endpoint conditions. Passing a
    negative damping g produces the anti-damped companion path that the
    backward branch of the propagator requires.
    """

    def __init__(self, t_end, ends: Endpoints, modes: NormalModes, g: float):
        o1, o2 = modes.Omega1, modes.Omega2
        r1, r2 = modes.r1, modes.r2
        s1t = math.sin(o1 * t_end)
        s2t = math.sin(o2 * t_end)
        if abs(s1t) < TOL_CAUSTIC or abs(s2t) < TOL_CAUSTIC:
            raise CausticTime(
                "sin(Omega*t) vanishes at t = %.6g; endpoint map singular" % t_end
            )
        den = 1.0 - r1 * r2
        egt = math.exp(g * t_end)
        c1t = math.cos(o1 * t_end)
        c2t = math.cos(o2 * t_end)

        u1i = (ends.Xi1 - r2 * ends.Xi2) / den
        u2i = (ends.Xi2 - r1 * ends.Xi1) / den
        u1f = (ends.Xf1 - r2 * ends.Xf2) / den
        u2f = (ends.Xf2 - r1 * ends.Xf1) / den

        self.a1 = u1f * egt / s1t - (c1t / s1t) * u1i
        self.b1 = u1i
        self.a2 = u2f * egt / s2t - (c2t / s2t) * u2i
        self.b2 = u2i
        self.modes = modes
        self.g = g
        self.t_end = t_end

    def _mode_parts(self, tau):
        tau = np.asarray(tau, dtype=float)
        env = np.exp(-self.g * tau)
        m = self.modes
        p1 = env * (self.a1 * np.sin(m.Omega1 * tau) + self.b1 * np.cos(m.Omega1 * tau))
        p2 = env * (self.a2 * np.sin(m.Omega2 * tau) + self.b2 * np.cos(m.Omega2 * tau))
        return p1, p2

    def __call__(self, tau):
        """Positions (X1, X2) at time(s) tau."""
        p1, p2 = self._mode_parts(tau)
        return p1 + self.modes.r2 * p2, self.modes.r1 * p1 + p2

    def velocities(self, tau):
        """Analytic velocities (dX1/dtau, dX2/dtau) at time(s) tau."""
        tau = np.asarray(tau, dtype=float)
        env = np.exp(-self.g * tau)
        m, g = self.modes, self.g
        d1 = env * (
            (-g * self.a1 - m.Omega1 * self.b1) * np.sin(m.Omega1 * tau)
            + (m.Omega1 * self.a1 - g * self.b1) * np.cos(m.Omega1 * tau)
        )
        d2 = env * (
            (-g * self.a2 - m.Omega2 * self.b2) * np.sin(m.Omega2 * tau)
            + (m.Omega2 * self.a2 - g * self.b2) * np.cos(m.Omega2 * tau)
        )
        return d1 + m.r2 * d2, m.r1 * d1 + d2


def classical_path(t_end, ends: Endpoints, modes: NormalModes, gamma: float) -> ClassicalPath:
    """Trajectory of the coupled damped pair with both endpoints pinned.

    gamma is the damping entering the envelope e^(-gamma*tau); pass the
    negated value to build the anti-damped backward-branch path.
    """
    return ClassicalPath(t_end, ends, modes, gamma)


def default_cutoff(p: SystemParams, mult: float = 400.0) -> float:
    """Default bath cutoff: mult times the fastest frequency in the problem
    (bare frequencies and upper normal mode).

    The regulator leaves a relative bias of about -w0k/cutoff on the
    stationary variances (the noise spectrum is damped by exp(-w/cutoff)
    right at the resonance it feeds), so mult=400 keeps the bias near
    0.25% and the change under cutoff doubling near 0.1%.
    """
    try:
        o2 = normal_modes(p, allow_boundary=True).Omega2
    except OverdampedMode:
        o2 = 0.0
    return mult * max(p.w01, p.w02, o2)


@dataclass(frozen=True)
class ScaledModel:
    """Nondimensional copy of a full problem definition.

    Units inside: hbar = k_B = 1, M1 = 1, w01 = 1. Lengths^2 are measured
    in hbar/(M1*w01), temperatures as theta = k_B*T/(hbar*w01).

    params : SystemParams with the scaled values (M1 = w01 = 1)
    theta1, theta2 : scaled bath temperatures
    wc : scaled bath cutoff
    s01_sq, s02_sq : scaled initial dispersions
    scale : the Scale used, for converting results back to CGS
    """

    params: SystemParams
    theta1: float
    theta2: float
    wc: float
    s01_sq: float
    s02_sq: float
    scale: Scale

    @classmethod
    def from_cgs(cls, system: SystemParams, baths: BathSpec, init: InitialState):
        if baths.omega_cutoff <= max(system.w01, system.w02):
            raise ValueError("bath cutoff must exceed both bare frequencies")
        scale = Scale(mass=system.M1, freq=system.w01)
        params = SystemParams(
            M1=1.0,
            M2=system.M2 / system.M1,
            w01=1.0,
            w02=system.w02 / system.w01,
            gamma=system.gamma / system.w01,
            lam=system.lam / (system.M1 * system.w01 * system.w01),
        )
        return cls(
            params=params,
            theta1=scale.theta(baths.T1),
            theta2=scale.theta(baths.T2),
            wc=baths.omega_cutoff / system.w01,
            s01_sq=init.sigma01_sq / scale.length_sq,
            s02_sq=init.sigma02_sq / scale.length_sq,
            scale=scale,
        )

    @property
    def a1(self) -> float:
        """Gaussian exponent weight 1/(8*sigma01^2) of the first initial state."""
        return 1.0 / (8.0 * self.s01_sq)

    @property
    def a2(self) -> float:
        return 1.0 / (8.0 * self.s02_sq)

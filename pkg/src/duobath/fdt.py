"""
Frequency-domain stationary moments.

Two independent results live here, both obtained without touching the
propagator pipeline, so they can arbitrate it.

fdt_variance: the textbook stationary variance of one damped oscillator,

    sigma^2 = (hbar/(pi M)) Int_0^inf dw coth(hbar w/(2 kB T))
              * 2 gamma w / [(w^2 - w0^2)^2 + 4 gamma^2 w^2],

convergent without any cutoff (the integrand falls off like
coth(..)/w^3).  It is the normalization denominator for the reduced
"tilde" quantities reported by the CLI.

coupled_spectral_steady: stationary covariance of the coupled pair,
derived from the Langevin equations with local (Ohmic) friction.  Each
oscillator obeys

    M_k x_k'' + 2 M_k gamma x_k' + M_k w0k^2 x_k - lam x_j = F_k(t),

with independent stationary Gaussian forces whose symmetrized spectra
are S_k(w) = 2 M_k gamma hbar w coth(hbar w/(2 kB T_k)).  Fourier
transforming, x_i(w) = sum_k chi_ik(w) F_k(w) with the susceptibility
matrix chi(w) = [K - i w Gamma - w^2 Mmat]^(-1), stiffness
K = [[M1 w01^2, -lam], [-lam, M2 w02^2]] and Gamma = diag(2 M_k gamma).
The equal-time symmetrized moments follow by folding each force
spectrum through its column of chi:

    <x_i x_j> = (hbar/pi) Int_0^inf dw sum_k coth(hbar w/(2 kB T_k))
                * 2 M_k gamma w * Re[chi_ik(w) chi_jk(w)*].

At lam = 0 the matrix is diagonal and the i = j entries reduce to
fdt_variance.  The per-bath split of the integral is kept for
diagnostics.  Both integrals run cutoff-free by default; the scaled
variant accepts the propagator's exponential noise regulator so the two
routes can be compared at matched finite cutoff as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, quad_vec

from .errors import ConfigError, QuadratureNonConvergence, Unstable
from .model import BathSpec, SystemParams, normal_modes, normalized_coupling
from .units import HBAR_CGS, KB_CGS


@dataclass(frozen=True)
class FdtResult:
    """Stationary variance of a single damped oscillator (length^2) with
    the quadrature error estimate."""

    sigma_sq: float
    error: float


@dataclass(frozen=True)
class SteadyCovariance:
    """Stationary second moments of the coupled pair.

    bath1/bath2 hold the per-bath contributions (s1, s2, c) whose sums
    give the totals; useful for diagnosing which reservoir feeds which
    oscillator.
    """

    sigma1_sq: float
    sigma2_sq: float
    cov: float
    bath1: tuple
    bath2: tuple


@dataclass(frozen=True)
class NormalizedMoments:
    """Moments divided by the single-oscillator stationary values:
    sigma_k^2 / sigma_k^2(stationary, own bath) and
    cov / sqrt(product of the two stationary variances)."""

    sigma1_sq: float
    sigma2_sq: float
    cov: float


def _coth(x: float) -> float:
    return 1.0 / math.tanh(x)


def fdt_variance_scaled(m: float, w0: float, gamma: float, theta: float,
                        *, rel_tol: float = 1e-10) -> FdtResult:
    """Scaled-unit (hbar = kB = 1) single-oscillator stationary variance."""
    if not (m > 0.0 and w0 > 0.0 and gamma > 0.0 and theta >= 0.0):
        raise ConfigError("need m, w0, gamma > 0 and theta >= 0")
    gt = gamma / w0
    th = theta / w0

    def integrand(x):
        if x == 0.0:
            return 4.0 * gt * th
        c = 1.0 if th == 0.0 else _coth(x / (2.0 * th))
        return c * 2.0 * gt * x / ((x * x - 1.0) ** 2 + 4.0 * gt * gt * x * x)

    # resonance at x = 1 (width ~ gt) and the thermal knee at x ~ 2*th
    # get their own panels; the tail falls off like 1/x^3
    pts = sorted({0.0, max(0.0, 1.0 - 8.0 * gt), 1.0, 1.0 + 8.0 * gt, 3.0,
                  max(8.0 * th, 10.0)})
    total = 0.0
    err = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        if b <= a:
            continue
        v, e = quad(integrand, a, b, epsabs=0.0, epsrel=rel_tol, limit=500)
        total += v
        err += e
    v, e = quad(integrand, pts[-1], np.inf, epsabs=1e-300, epsrel=rel_tol,
                limit=500)
    total += v
    err += e
    if not (total > 0.0 and err < 1e3 * rel_tol * total):
        raise QuadratureNonConvergence(
            f"stationary variance integral: value {total:g}, error {err:g}")
    return FdtResult(sigma_sq=total / (math.pi * m * w0), error=err / (math.pi * m * w0))


def fdt_variance(M: float, w0: float, gamma: float, T: float,
                 *, rel_tol: float = 1e-10) -> FdtResult:
    """Single-oscillator stationary variance in cm^2.

    M in g, w0 and gamma in rad/s, T in K.
    """
    theta = KB_CGS * T / HBAR_CGS  # temperature as a rate, rad/s
    res = fdt_variance_scaled(1.0, w0 / w0, gamma / w0, theta / w0,
                              rel_tol=rel_tol)
    lsq = HBAR_CGS / (M * w0)
    return FdtResult(sigma_sq=res.sigma_sq * lsq, error=res.error * lsq)


def spectral_steady_scaled(p: SystemParams, theta1: float, theta2: float,
                           *, cutoff: float = 0.0,
                           rel_tol: float = 1e-9) -> SteadyCovariance:
    """Coupled stationary covariance in scaled units (hbar = kB = 1).

    cutoff > 0 multiplies both noise spectra by exp(-w/cutoff), matching
    the regulator the time-domain pipeline uses; cutoff = 0 means none.
    """
    if p.gamma <= 0.0:
        raise ConfigError("spectral steady state needs gamma > 0")
    lt = normalized_coupling(p)
    if lt >= 1.0:
        raise Unstable(f"normalized coupling {lt:g} >= 1")
    modes = normal_modes(p)
    k11 = p.M1 * p.w01 ** 2
    k22 = p.M2 * p.w02 ** 2
    g1 = 2.0 * p.M1 * p.gamma
    g2 = 2.0 * p.M2 * p.gamma

    def weight(w, theta):
        c = 1.0 if theta == 0.0 else _coth(w / (2.0 * theta))
        damp = math.exp(-w / cutoff) if cutoff > 0.0 else 1.0
        return c * damp

    def integrand(w):
        if w == 0.0:
            w = 1e-300
        a11 = k11 - 1j * w * g1 - w * w * p.M1
        a22 = k22 - 1j * w * g2 - w * w * p.M2
        det = a11 * a22 - p.lam * p.lam
        c11 = a22 / det
        c21 = p.lam / det
        c12 = p.lam / det
        c22 = a11 / det
        f1 = weight(w, theta1) * 2.0 * p.M1 * p.gamma * w
        f2 = weight(w, theta2) * 2.0 * p.M2 * p.gamma * w
        return np.array([
            f1 * (c11 * c11.conjugate()).real,
            f1 * (c21 * c21.conjugate()).real,
            f1 * (c11 * c21.conjugate()).real,
            f2 * (c12 * c12.conjugate()).real,
            f2 * (c22 * c22.conjugate()).real,
            f2 * (c12 * c22.conjugate()).real,
        ])

    g = p.gamma
    pts = sorted({max(0.0, modes.Omega1 - 8.0 * g), modes.Omega1,
                  modes.Omega1 + 8.0 * g, max(0.0, modes.Omega2 - 8.0 * g),
                  modes.Omega2, modes.Omega2 + 8.0 * g})
    body = max(4.0 * modes.Omega2, 8.0 * max(theta1, theta2), 20.0)
    val, err = quad_vec(integrand, 0.0, body,
                        points=[x for x in pts if 0.0 < x < body],
                        epsabs=0.0, epsrel=rel_tol, limit=800)
    vtail, etail = quad_vec(integrand, body, np.inf, epsabs=1e-300,
                            epsrel=rel_tol, limit=500)
    val = (val + vtail) / math.pi
    err = (err + etail) / math.pi
    scale = max(abs(val[0] + val[3]), abs(val[1] + val[4]))
    if not (scale > 0.0 and err < 1e3 * rel_tol * scale):
        raise QuadratureNonConvergence(
            f"spectral steady integral error {err:g} on scale {scale:g}")
    b1 = (val[0], val[1], val[2])
    b2 = (val[3], val[4], val[5])
    return SteadyCovariance(sigma1_sq=b1[0] + b2[0], sigma2_sq=b1[1] + b2[1],
                            cov=b1[2] + b2[2], bath1=b1, bath2=b2)


def coupled_spectral_steady(params: SystemParams, baths: BathSpec,
                            *, rel_tol: float = 1e-9) -> SteadyCovariance:
    """Coupled stationary covariance in cm^2 from the spectral route,
    cutoff-free (the Langevin result needs no regulator)."""
    w0 = params.w01
    ps = SystemParams(M1=1.0, M2=params.M2 / params.M1, w01=1.0,
                      w02=params.w02 / w0, gamma=params.gamma / w0,
                      lam=params.lam / (params.M1 * w0 * w0))
    th = KB_CGS / (HBAR_CGS * w0)
    res = spectral_steady_scaled(ps, th * baths.T1, th * baths.T2,
                                 rel_tol=rel_tol)
    lsq = HBAR_CGS / (params.M1 * w0)
    return SteadyCovariance(
        sigma1_sq=res.sigma1_sq * lsq, sigma2_sq=res.sigma2_sq * lsq,
        cov=res.cov * lsq,
        bath1=tuple(x * lsq for x in res.bath1),
        bath2=tuple(x * lsq for x in res.bath2))


def normalize_moments(sigma1_sq: float, sigma2_sq: float, cov: float,
                      params: SystemParams, baths: BathSpec,
                      *, rel_tol: float = 1e-10) -> NormalizedMoments:
    """Divide CGS moments by the single-oscillator stationary scales."""
    f1 = fdt_variance(params.M1, params.w01, params.gamma, baths.T1,
                      rel_tol=rel_tol).sigma_sq
    f2 = fdt_variance(params.M2, params.w02, params.gamma, baths.T2,
                      rel_tol=rel_tol).sigma_sq
    return NormalizedMoments(sigma1_sq=sigma1_sq / f1,
                             sigma2_sq=sigma2_sq / f2,
                             cov=cov / math.sqrt(f1 * f2))

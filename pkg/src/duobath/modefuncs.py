"""
Scalar building blocks for the propagator coefficient tables: the fourteen
time integrals s_k(t) of mode sine/cosine products, the sixteen two-time
trigonometric products f_i(tau, s), and the endpoint mode weights
n, nbar, m, ell.

The cross-mode s-functions have (Omega1^2 - Omega2^2) denominators in their
textbook form; here they are evaluated through exact reformulations in the
mean frequency and the splitting, which stay accurate through the
degenerate-frequency limit. The raw forms are kept for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errata import DEFAULT, Errata
from .errors import CausticTime, DegenerateRatios
from .model import TOL_CAUSTIC, NormalModes


def _sinc(x):
    """sin(x)/x, exact at x = 0."""
    return np.sinc(np.asarray(x) / np.pi)


@dataclass(frozen=True)
class SFuncs:
    """Mode sine/cosine time integrals evaluated at a fixed t.

    s1 + s2 = t and s3 + s4 = t by construction; s7 = s11, s8 = s13,
    s9 = s12, s10 = s14 are stored once and mirrored.
    """

    s1: float
    s2: float
    s3: float
    s4: float
    s5: float
    s6: float
    s7: float
    s8: float
    s9: float
    s10: float

    @property
    def s11(self) -> float:
        return self.s7

    @property
    def s12(self) -> float:
        return self.s9

    @property
    def s13(self) -> float:
        return self.s8

    @property
    def s14(self) -> float:
        return self.s10


def s_funcs(t: float, modes: NormalModes) -> SFuncs:
    """All fourteen s-integrals at time t, degenerate-frequency safe.

    The cross-mode entries are computed from the identities

        s7  = sin(2*wm*t)/(4*wm) + sin(eps*t)/(2*eps)
        s8  = sin^2(eps*t/2)/eps + sin^2(wm*t)/(2*wm)
        s9  = sin^2(wm*t)/(2*wm) - sin^2(eps*t/2)/eps
        s10 = sin(eps*t)/(2*eps) - sin(2*wm*t)/(4*wm)

    with wm = (Omega1+Omega2)/2 and eps = Omega2-Omega1, which are exact
    rearrangements of the difference-of-squares forms and finite at eps = 0.
    """
    o1, o2 = modes.Omega1, modes.Omega2
    s2o1 = math.sin(2.0 * o1 * t)
    s2o2 = math.sin(2.0 * o2 * t)
    sin1 = math.sin(o1 * t)
    sin2 = math.sin(o2 * t)

    s1 = 0.5 * t + s2o1 / (4.0 * o1)
    s2 = 0.5 * t - s2o1 / (4.0 * o1)
    s3 = 0.5 * t + s2o2 / (4.0 * o2)
    s4 = 0.5 * t - s2o2 / (4.0 * o2)
    s5 = sin1 * sin1 / (2.0 * o1)
    s6 = sin2 * sin2 / (2.0 * o2)

    wm = 0.5 * (o1 + o2)
    eps = o2 - o1
    # sin(a*t)/(2a) written as (t/2)*sinc(a*t), safe for a -> 0
    half_sin_eps = 0.5 * t * float(_sinc(eps * t))
    quarter_sin_2wm = 0.5 * t * float(_sinc(2.0 * wm * t))
    # sin^2(eps*t/2)/eps = (eps*t^2/4)*sinc^2(eps*t/2)
    sq_eps = 0.25 * eps * t * t * float(_sinc(0.5 * eps * t)) ** 2
    sin_wm = math.sin(wm * t)
    sq_wm = sin_wm * sin_wm / (2.0 * wm)

    s7 = quarter_sin_2wm + half_sin_eps
    s8 = sq_eps + sq_wm
    s9 = sq_wm - sq_eps
    s10 = half_sin_eps - quarter_sin_2wm
    return SFuncs(s1, s2, s3, s4, s5, s6, s7, s8, s9, s10)


def s_funcs_raw(t: float, modes: NormalModes) -> SFuncs:
    """The cross-mode s-integrals in their difference-of-squares form.

    Catastrophically cancels when Omega1 ~ Omega2; kept only as an
    independent route for testing s_funcs away from degeneracy.
    """
    o1, o2 = modes.Omega1, modes.Omega2
    base = s_funcs(t, modes)
    den = o1 * o1 - o2 * o2
    c1, c2 = math.cos(o1 * t), math.cos(o2 * t)
    sn1, sn2 = math.sin(o1 * t), math.sin(o2 * t)
    s7 = (o1 * c2 * sn1 - o2 * c1 * sn2) / den
    s8 = (-o2 + o2 * c2 * c1 + o1 * sn1 * sn2) / den
    s9 = (o1 - o1 * c2 * c1 - o2 * sn1 * sn2) / den
    s10 = (o2 * c2 * sn1 - o1 * c1 * sn2) / den
    return SFuncs(base.s1, base.s2, base.s3, base.s4, base.s5, base.s6,
                  s7, s8, s9, s10)


@dataclass(frozen=True)
class FFuncs:
    """The sixteen sine/cosine products of two time arguments."""

    f1: float
    f2: float
    f3: float
    f4: float
    f5: float
    f6: float
    f7: float
    f8: float
    f9: float
    f10: float
    f11: float
    f12: float
    f13: float
    f14: float
    f15: float
    f16: float


def f_funcs(tau, s, modes: NormalModes, errata: Errata = DEFAULT) -> FFuncs:
    """Evaluate the f-product table at (tau, s).

    The f14 entry is a duplicate of f16 in its literal form; the validated
    reading completes the mode-2 diagonal pair as cos(Omega2*tau)*
    sin(Omega2*s). Set errata.f14_printed to recover the literal duplicate.
    """
    o1, o2 = modes.Omega1, modes.Omega2
    st1, ct1 = math.sin(o1 * tau), math.cos(o1 * tau)
    st2, ct2 = math.sin(o2 * tau), math.cos(o2 * tau)
    ss1, cs1 = math.sin(o1 * s), math.cos(o1 * s)
    ss2, cs2 = math.sin(o2 * s), math.cos(o2 * s)

    f14 = ct2 * ss1 if errata.f14_printed else ct2 * ss2
    return FFuncs(
        f1=st1 * ss1, f2=st2 * ss2, f3=st1 * ss2, f4=st2 * ss1,
        f5=ct1 * cs1, f6=ct2 * cs2, f7=ct1 * cs2, f8=ct2 * cs1,
        f9=st1 * cs1, f10=ct1 * ss1, f11=st1 * cs2, f12=ct1 * ss2,
        f13=st2 * cs2, f14=f14, f15=st2 * cs1, f16=ct2 * ss1,
    )


@dataclass(frozen=True)
class ModeWeights:
    """Endpoint weights of the pinned-trajectory expansion at time t.

    Stored in an overflow-free split: nhat_k = 1/[(1-r1*r2)*sin(Omega_k*t)]
    and u = exp(-gamma*t), so that n_k = nhat_k/u and nbar_k = nhat_k*u.
    The damped factors m_k = cot(Omega_k*t)/(1-r1*r2) and ell = 1/(1-r1*r2)
    carry no exponential.
    """

    nhat1: float
    nhat2: float
    m1: float
    m2: float
    ell: float
    u: float

    @property
    def n1(self) -> float:
        return self.nhat1 / self.u

    @property
    def n2(self) -> float:
        return self.nhat2 / self.u

    @property
    def nbar1(self) -> float:
        return self.nhat1 * self.u

    @property
    def nbar2(self) -> float:
        return self.nhat2 * self.u


def mode_weights(t: float, modes: NormalModes, gamma: float) -> ModeWeights:
    """Endpoint mode weights at time t.

    Raises CausticTime when either sin(Omega_k*t) falls below tolerance and
    DegenerateRatios when 1 - r1*r2 vanishes (unreachable for admissible
    parameters, where r1*r2 <= 0, but guarded regardless).
    """
    den = 1.0 - modes.r1 * modes.r2
    if abs(den) < 1e-12:
        raise DegenerateRatios("mode ratio product r1*r2 = 1; weights singular")
    sin1 = math.sin(modes.Omega1 * t)
    sin2 = math.sin(modes.Omega2 * t)
    if abs(sin1) < TOL_CAUSTIC or abs(sin2) < TOL_CAUSTIC:
        raise CausticTime("sin(Omega*t) below tolerance at t = %.6g" % t)
    return ModeWeights(
        nhat1=1.0 / (den * sin1),
        nhat2=1.0 / (den * sin2),
        m1=math.cos(modes.Omega1 * t) / (den * sin1),
        m2=math.cos(modes.Omega2 * t) / (den * sin2),
        ell=1.0 / den,
        u=math.exp(-gamma * t),
    )

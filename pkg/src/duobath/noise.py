"""
Thermal noise coefficients of the propagator exponent.

The reduced propagator damps the difference coordinates through ten
time-dependent coefficients A1, A2, B1, B2, C1, C2, E1..E4.  Each is a
double integral over the ordered triangle 0 <= s <= tau <= t of a bilinear
trig combination (the f-product table) against the bath autocorrelation
kernel nu(tau - s), once per bath, with prefactors 2*M_k*gamma/pi.

Layers:

* ThermalKernel -- nu(delta) = int_0^inf dw w coth(w/(2 theta)) cos(w delta)
  exp(-w/wc), evaluated as an image sum over thermal poles with an
  Euler-Maclaurin tail and served from a cubic spline over log(delta)
  (the kernel is smooth on logarithmic scales).
* f_integrals -- the sixteen triangle integrals of the f-products against
  nu.  The substitution delta = tau - s reduces each to one integral
  int_0^t nu(delta) T(delta) d(delta) with an explicit complex window T;
  composite Gauss-Legendre panels with halving refinement do the rest.
* noise_coeffs -- assembles the ten coefficients from the integrated
  f-table exactly as kernel_integrands assembles their pointwise
  integrands from the raw f-products.

Exponential bookkeeping: the defining integrals carry exp[gamma(tau+s)],
unbounded at large t.  Everything here is integrated against
exp[gamma(tau+s-2t)] instead, and the endpoint weights enter through
nhat rather than nbar.  The result lands directly in the rescaled
storage the coefficient tables use: entries multiplying one initial
difference coordinate come out premultiplied by u = exp(-gamma*t) (B1,
B2, E2, E3), entries multiplying two by u^2 (C1, C2, E1), and A1, A2,
E4 are unrescaled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import roots_legendre

from .errata import DEFAULT, Errata
from .errors import QuadratureNonConvergence
from .modefuncs import FFuncs, ModeWeights, f_funcs, mode_weights
from .model import NormalModes, SystemParams

# Explicit thermal images before the Euler-Maclaurin tail takes over.
_IMAGES = 256

# Spline nodes per factor of 2 in delta.
_PER_OCTAVE = 64

# exp(-45) ~ 3e-20: window tails damped below this are dropped.
_EXP_DROP = 45.0

_GL8 = roots_legendre(8)
_GL16 = roots_legendre(16)

_PAIRS = ((1, 1), (2, 2), (1, 2), (2, 1))


def _pole(a, d):
    """Re[1/(a + i*d)^2] in real arithmetic."""
    aa = a * a
    dd = d * d
    den = aa + dd
    return (aa - dd) / (den * den)


class ThermalKernel:
    """Autocorrelation kernel of one Ohmic bath with exponential cutoff.

        nu(delta) = int_0^inf dw w coth(w/(2*theta)) cos(w*delta) e^(-w/wc)

    in scaled units (theta = bath temperature, wc = cutoff).  Expanding
    coth in exp(-n*w/theta) images makes every term the closed pole form
    Re[1/(a_n + i*delta)^2] with a_n = 1/wc + n/theta; the first _IMAGES
    terms are summed explicitly, the remainder by an Euler-Maclaurin tail.
    That stays ~1e-13 accurate from theta = 0 through the classical
    regime.  __call__ serves values from a lazily built cubic spline in
    log(delta); raw() always evaluates the series.
    """

    def __init__(self, theta: float, wc: float):
        if theta < 0:
            raise ValueError("bath temperature must be nonnegative")
        if not wc > 0:
            raise ValueError("cutoff must be positive")
        self.theta = float(theta)
        self.wc = float(wc)
        self._lo = 1e-6 / self.wc
        self._hi = 0.0
        self._spline = None

    def raw(self, delta):
        d = np.abs(np.asarray(delta, dtype=float))
        scalar = d.ndim == 0
        d = np.atleast_1d(d)
        a0 = 1.0 / self.wc
        out = _pole(a0, d)
        th = self.theta
        if th > 0.0:
            n = np.arange(1, _IMAGES)
            out = out + 2.0 * _pole(a0 + n[:, None] / th, d[None, :]).sum(axis=0)
            # images n >= _IMAGES: integral + half endpoint + two
            # Euler-Maclaurin corrections
            zi = 1.0 / (a0 + _IMAGES / th + 1j * d)
            zi2 = zi * zi
            tail = (th * zi.real + 0.5 * zi2.real
                    + (zi2 * zi).real / (6.0 * th)
                    - (zi2 * zi2 * zi).real / (30.0 * th ** 3))
            out = out + 2.0 * tail
        return float(out[0]) if scalar else out

    def ensure(self, delta_max: float) -> None:
        """Extend the spline grid to cover |delta| <= delta_max."""
        need = float(delta_max)
        if self._spline is not None and need <= self._hi:
            return
        hi = 1.3 * max(need, 10.0 * self._lo)
        n = int(math.ceil(math.log2(hi / self._lo) * _PER_OCTAVE)) + 1
        x = np.geomspace(self._lo, hi, n)
        self._spline = CubicSpline(np.log(x), self.raw(x))
        self._hi = hi

    def __call__(self, delta):
        d = np.abs(np.asarray(delta, dtype=float))
        dmax = float(d.max()) if d.size else 1.0
        if self._spline is None or dmax > self._hi:
            self.ensure(dmax)
        return self._spline(np.log(np.clip(d, self._lo, self._hi)))


def thermal_kernel(delta, T, omega_cutoff):
    """One-shot kernel value; T is the scaled bath temperature."""
    return ThermalKernel(T, omega_cutoff).raw(delta)


def _edges(dmax: float, wc: float, osc: float) -> np.ndarray:
    """Panel edges on [0, dmax]: geometric growth out of the kernel peak
    at delta ~ 1/wc, then uniform panels short enough that the fastest
    trig factor advances ~3 radians per panel."""
    width = min(3.0 / osc if osc > 0 else dmax, dmax)
    e = [0.0]
    x = min(1.0 / wc, width)
    while x < width and x < dmax:
        e.append(x)
        x *= 2.0
    if e[-1] < dmax:
        n = int(math.ceil((dmax - e[-1]) / width))
        e.extend(np.linspace(e[-1], dmax, n + 1)[1:])
    return np.asarray(e)


def _refine(edges: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return edges
    a, b = edges[:-1], edges[1:]
    frac = np.linspace(0.0, 1.0, k + 1)[None, :-1]
    inner = (a[:, None] + (b - a)[:, None] * frac).ravel()
    return np.append(inner, edges[-1])


def _panel_nodes(edges, rule):
    x, w = rule
    a, b = edges[:-1, None], edges[1:, None]
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return (mid + half * x[None, :]).ravel(), (half * w[None, :]).ravel()


def _g_table(t, modes, gamma, nodes, wnu):
    """The eight windowed kernel integrals per bath.

    G[a,b,q] = int_0^dmax nu(delta) T(delta) d(delta) where T collects the
    s-integral of exp(i*Omega_a*tau + i*q*Omega_b*s + gamma*(tau+s-2t))
    over the triangle at fixed delta = tau - s.  The two exponential
    windows in T are separately bounded by 1; the near-cancelling regime
    |z| < 0.5 goes through expm1.
    """
    eg = np.exp(-gamma * nodes)
    egr = np.exp(-gamma * (2.0 * t - nodes))
    ex = {1: np.exp(1j * modes.Omega1 * nodes), 2: np.exp(1j * modes.Omega2 * nodes)}
    om = {1: modes.Omega1, 2: modes.Omega2}
    rem = t - nodes
    out = {}
    for a, b in _PAIRS:
        for q in (1, -1):
            w = om[a] + q * om[b]
            den = 2.0 * gamma + 1j * w
            z = den * rem
            x = np.minimum(z.real, 1.0)
            y = z.imag
            em = np.expm1(x) * np.cos(y) - 2.0 * np.sin(0.5 * y) ** 2 \
                + 1j * (np.exp(x) * np.sin(y))
            phi = np.where(z == 0, 1.0, em / np.where(z == 0, 1.0, z))
            ts = ex[a] * egr * rem * phi
            if den == 0:
                tw = ts
            else:
                ebq = np.conj(ex[b]) if q == 1 else ex[b]
                tg = (np.exp(1j * w * t) * ebq * eg - ex[a] * egr) / den
                tw = np.where(np.abs(z) < 0.5, ts, tg)
            out[a, b, q] = np.dot(wnu, tw)
    return out


def _f_table_from_g(g, errata: Errata) -> FFuncs:
    """Real (trig-type, mode-pair) integrals from the complex G table,
    arranged into the f-product order."""
    tv = {}
    for a, b in _PAIRS:
        gp, gm = g[a, b, 1], g[a, b, -1]
        tv["ss", a, b] = -0.5 * (gp - gm).real
        tv["cc", a, b] = 0.5 * (gp + gm).real
        tv["sc", a, b] = 0.5 * (gp + gm).imag
        tv["cs", a, b] = 0.5 * (gp - gm).imag
    f14 = tv["cs", 2, 1] if errata.f14_printed else tv["cs", 2, 2]
    return FFuncs(
        f1=tv["ss", 1, 1], f2=tv["ss", 2, 2], f3=tv["ss", 1, 2], f4=tv["ss", 2, 1],
        f5=tv["cc", 1, 1], f6=tv["cc", 2, 2], f7=tv["cc", 1, 2], f8=tv["cc", 2, 1],
        f9=tv["sc", 1, 1], f10=tv["cs", 1, 1], f11=tv["sc", 1, 2], f12=tv["cs", 1, 2],
        f13=tv["sc", 2, 2], f14=f14, f15=tv["sc", 2, 1], f16=tv["cs", 2, 1],
    )


def f_integrals(t: float, modes: NormalModes, gamma: float, kernel: ThermalKernel,
                *, rel_tol: float = 1e-9, max_levels: int = 6,
                errata: Errata = DEFAULT) -> FFuncs:
    """Triangle integrals of the sixteen f-products against the bath
    kernel, weighted exp[gamma*(tau+s-2t)].

    Convergence is judged on the underlying complex integrals: panels are
    halved until the 8- vs 16-point Gauss difference drops below rel_tol
    of the largest integral in the set.
    """
    if t <= 0.0:
        return FFuncs(*([0.0] * 16))
    dmax = t if gamma * t <= _EXP_DROP else _EXP_DROP / gamma
    kernel.ensure(dmax)
    base = _edges(dmax, kernel.wc, modes.Omega1 + modes.Omega2 + 2.0 * gamma)
    err = math.inf
    for level in range(max_levels + 1):
        edges = _refine(base, 2 ** level)
        n16, w16 = _panel_nodes(edges, _GL16)
        n8, w8 = _panel_nodes(edges, _GL8)
        g16 = _g_table(t, modes, gamma, n16, w16 * kernel(n16))
        g8 = _g_table(t, modes, gamma, n8, w8 * kernel(n8))
        scale = max(max(abs(v) for v in g16.values()), 1e-300)
        err = max(abs(g16[k] - g8[k]) for k in g16)
        if err <= rel_tol * scale:
            return _f_table_from_g(g16, errata)
    raise QuadratureNonConvergence(
        f"f-product integrals at t={t:g}: error estimate {err:.3e} above "
        f"{rel_tol:g} of scale after {max_levels} panel halvings")


def _structures(f: FFuncs, nb1, nb2, m1, m2, ell, r1, r2,
                errata: Errata) -> dict:
    """The twenty noise integrand combinations over an f-table.

    Works identically on pointwise f-products (giving the integrands) and
    on their triangle integrals (giving the assembled coefficients up to
    bath prefactors).  nb1, nb2 select the weight normalization: true
    nbar for the raw integrands, nhat for the rescaled assembly.  Keys
    are 'A1_1'...'E4_2'; suffix _k marks the part integrated against bath
    k's kernel.

    The fourth-power ratio weight on the mirrored squared terms reads
    r1^2*r2^2; errata.noise_r1sq_printed restores the printed r1^2*r1^2.
    """
    r12 = r1 * r2
    quad = r1 * r1 * (r1 * r1 if errata.noise_r1sq_printed else r2 * r2)
    f34 = f.f3 + f.f4
    f910 = f.f9 + f.f10
    f1314 = f.f13 + f.f14
    f1116 = f.f11 + f.f16
    f1215 = f.f12 + f.f15

    q1 = m1 * m1 * f.f1 + ell * ell * f.f5 - m1 * ell * f910
    q2 = m2 * m2 * f.f2 + ell * ell * f.f6 - m2 * ell * f1314
    d = -m1 * m2 * f34 - ell * ell * (f.f7 + f.f8) + m1 * ell * f1116 + m2 * ell * f1215

    qt1 = -2.0 * nb1 * m1 * f.f1 + nb1 * ell * f910
    qt2 = -2.0 * nb2 * m2 * f.f2 + nb2 * ell * f1314
    dt = (nb2 * m1 + nb1 * m2) * f34 - nb1 * ell * f1116 - nb2 * ell * f1215

    qp = 2.0 * nb1 * m1 * f.f1 - nb1 * ell * f910
    qpp = 2.0 * nb2 * m2 * f.f2 - nb2 * ell * f1314
    dp = nb2 * ell * f1215 - nb2 * m1 * f34
    dpp = nb1 * ell * f1116 - nb1 * m2 * f34

    sq1 = nb1 * nb1 * f.f1
    sq2 = nb2 * nb2 * f.f2
    cross = nb1 * nb2 * f34

    return {
        "A1_1": sq1 - r12 * cross + quad * sq2,
        "A1_2": r1 * r1 * (sq1 - cross + sq2),
        "A2_1": r2 * r2 * (sq1 - cross + sq2),
        "A2_2": sq2 - r12 * cross + quad * sq1,
        "B1_1": qt1 + r12 * dt + quad * qt2,
        "B1_2": r1 * r1 * (qt1 + dt + qt2),
        "B2_1": r2 * r2 * (qt1 + dt + qt2),
        "B2_2": qt2 + r12 * dt + quad * qt1,
        "C1_1": q1 + r12 * d + quad * q2,
        "C1_2": r1 * r1 * (q1 + d + q2),
        "C2_1": r2 * r2 * (q1 + d + q2),
        "C2_2": q2 + r12 * d + quad * q1,
        "E1_1": -r2 * (2.0 * q1 + 2.0 * r12 * q2 + (1.0 + r12) * d),
        "E1_2": -r1 * (2.0 * q2 + 2.0 * r12 * q1 + (1.0 + r12) * d),
        "E2_1": r2 * (qp + dp + r12 * (qpp + dpp)),
        "E2_2": r1 * (qpp + dp + r12 * (qp + dpp)),
        "E3_1": r2 * (qp + dpp + r12 * (qpp + dp)),
        "E3_2": r1 * (qpp + dpp + r12 * (qp + dp)),
        "E4_1": r2 * (cross - 2.0 * sq1 + r12 * (cross - sq2)),
        "E4_2": r1 * (cross - 2.0 * sq2 + r12 * (cross - sq1)),
    }


def kernel_integrands(tau: float, s: float, modes: NormalModes,
                      weights: ModeWeights, f: FFuncs | None = None,
                      errata: Errata = DEFAULT) -> dict:
    """Pointwise integrands of the ten noise double integrals at (tau, s),
    keyed 'A1_1'...'E4_2'.

    Uses the true (unrescaled) endpoint weights, matching the defining
    exp[gamma*(tau+s)] measure; intended for direct cross-checks of the
    reduced quadrature.
    """
    if f is None:
        f = f_funcs(tau, s, modes, errata)
    return _structures(f, weights.nbar1, weights.nbar2, weights.m1,
                       weights.m2, weights.ell, modes.r1, modes.r2, errata)


@dataclass(frozen=True)
class NoiseCoeffs:
    """Thermal decay coefficients of the propagator exponent at time t.

    Rescaled storage: B1, B2, E2, E3 carry one factor u = exp(-gamma*t)
    relative to their defining values, C1, C2, E1 carry u^2; A1, A2, E4
    are unrescaled.  A1, A2, C1, C2 are nonnegative for physical
    parameters (their defining values weight full squares in the
    Gaussian decay).
    """

    A1: float
    A2: float
    B1: float
    B2: float
    C1: float
    C2: float
    E1: float
    E2: float
    E3: float
    E4: float


_ZERO_NOISE = NoiseCoeffs(*([0.0] * 10))


def noise_coeffs(t: float, params: SystemParams, modes: NormalModes,
                 kernels, *, rel_tol: float = 1e-9, max_levels: int = 6,
                 errata: Errata = DEFAULT) -> NoiseCoeffs:
    """The ten noise coefficients at time t.

    kernels is the (bath 1, bath 2) pair of ThermalKernel objects; pass
    the same object twice for identical baths to halve the quadrature
    work.  Each coefficient is 2*M1*gamma/pi times its bath-1 part plus
    2*M2*gamma/pi times its bath-2 part.

    Raises QuadratureNonConvergence when panel refinement stalls and
    propagates CausticTime from the endpoint weights.
    """
    if t <= 0.0 or params.gamma == 0.0:
        return _ZERO_NOISE
    w = mode_weights(t, modes, params.gamma)
    k1, k2 = kernels
    table1 = f_integrals(t, modes, params.gamma, k1, rel_tol=rel_tol,
                         max_levels=max_levels, errata=errata)
    table2 = table1 if k2 is k1 else f_integrals(
        t, modes, params.gamma, k2, rel_tol=rel_tol,
        max_levels=max_levels, errata=errata)
    s1 = _structures(table1, w.nhat1, w.nhat2, w.m1, w.m2, w.ell,
                     modes.r1, modes.r2, errata)
    s2 = s1 if table2 is table1 else _structures(
        table2, w.nhat1, w.nhat2, w.m1, w.m2, w.ell,
        modes.r1, modes.r2, errata)
    p1 = 2.0 * params.M1 * params.gamma / math.pi
    p2 = 2.0 * params.M2 * params.gamma / math.pi

    def tot(name: str) -> float:
        return p1 * s1[name + "_1"] + p2 * s2[name + "_2"]

    return NoiseCoeffs(
        A1=tot("A1"), A2=tot("A2"), B1=tot("B1"), B2=tot("B2"),
        C1=tot("C1"), C2=tot("C2"), E1=tot("E1"), E2=tot("E2"),
        E3=tot("E3"), E4=tot("E4"),
    )

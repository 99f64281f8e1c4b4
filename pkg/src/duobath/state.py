"""
Reduced Gaussian state assembly and moment extraction.

The reduced density matrix in sum/difference endpoint coordinates
(X_fk = x_k + x'_k, xi_fk = x_k - x'_k) is the Gaussian

    rho ~ exp{-[g1 X_f1^2 + g2 X_f2^2 + g12 X_f1 X_f2
               + g'1 xi_f1^2 + g'2 xi_f2^2 + g'12 xi_f1 xi_f2
               + g''11 X_f1 xi_f1 + g''21 X_f2 xi_f1
               + g''12 X_f1 xi_f2 + g''22 X_f2 xi_f2]}

obtained by integrating the propagator times the initial Gaussians over
the four initial endpoint coordinates.  exponent_coeffs performs those
four nested Gaussian eliminations in closed form, consuming the rescaled
coefficient tables (action.py, noise.py) so that every intermediate stays
bounded at large gamma*t.  Elimination order: xi_i2, X_i2, xi_i1, X_i1.

The position distribution is the diagonal xi_f = 0, X_fk = 2 x_k, a 2-D
Gaussian with precision matrix [[beta11, beta12], [beta12, beta22]] where
beta11 = 8 g1, beta22 = 8 g2, beta12 = 4 g12; moments() inverts it for
the variances and covariance.

The X-sector g's and the moments are real by construction here.  The
g'' cross sector is pure imaginary (a phase in the density matrix, as
hermiticity requires); it is assembled for the diagnostic log-density
only and never feeds the moments.

Everything is in scaled units (hbar = kB = M1 = w01 = 1); MomentEngine
wraps a ScaledModel and drives single times, grids and the steady-state
search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .action import DCoeffs, PiCoeffs, b_coeffs, d_coeffs, pi_coeffs
from .errata import DEFAULT, Errata
from .errors import DuobathError, NoConvergence, NonNormalizable, SingularAssembly
from .modefuncs import ModeWeights, mode_weights, s_funcs
from .model import (TOL_CAUSTIC, BathSpec, InitialState, NormalModes,
                    ScaledModel, SystemParams, normal_modes)
from .noise import NoiseCoeffs, ThermalKernel, noise_coeffs


@dataclass(frozen=True)
class ExponentCoeffs:
    """The ten exponent coefficients of the reduced Gaussian at time t.

    g1, g2, g12 weight the sum coordinates and carry all moment content;
    gp* weight the difference coordinates; the gpp* cross entries are
    pure imaginary (stored complex; printed-reading switches can make
    them genuinely complex).
    """

    g1: float
    g2: float
    g12: float
    gp1: float
    gp2: float
    gp12: float
    gpp11: complex
    gpp12: complex
    gpp21: complex
    gpp22: complex


@dataclass(frozen=True)
class GaussianMoments:
    """Second moments of the position distribution at time t."""

    sigma1_sq: float
    sigma2_sq: float
    cov: float
    t: float


@dataclass(frozen=True)
class Trajectory:
    """Moments along a time grid.

    nudged lists (requested, evaluated) pairs for grid times that were
    shifted off a caustic of the endpoint-weight map.
    """

    points: tuple
    nudged: tuple = ()


@dataclass(frozen=True)
class SteadyResult:
    """Converged long-time moments with the achieved relative residual."""

    moments: GaussianMoments
    residual: float
    evaluations: int


def exponent_coeffs(d: DCoeffs, pi: PiCoeffs, nz: NoiseCoeffs,
                    weights: ModeWeights, s01_sq: float, s02_sq: float,
                    errata: Errata = DEFAULT) -> ExponentCoeffs:
    """Eliminate the four initial endpoint coordinates.

    All inputs are in the rescaled storage convention (one factor of
    u = exp(-gamma*t) absorbed per initial difference argument, one per
    initial sum argument in the mixed kernels).  The intermediates below
    carry matching powers of u, chosen so every ratio that enters a
    final coefficient is u-free; the resulting g's are the true values.

    z4 and z5 are stored real: the defining chain writes them with an
    overall imaginary unit that cancels in every final combination.  The
    validated z4 carries a -E1*E3/(2*den1) term that the printed form
    lists under z5 instead (errata.z45_printed restores that reading);
    errata.gp12_printed restores the printed difference-sector signs and
    errata.gphase_printed the printed phase-sector entries.
    """
    a1 = 1.0 / (8.0 * s01_sq)
    a2 = 1.0 / (8.0 * s02_sq)
    u = weights.u

    # kernel sums, keyed by the endpoint pair they multiply
    kff11 = d.D1 + pi.Pi1      # X_f1 xi_f1
    kff12 = d.D6 + pi.Pi2      # X_f1 xi_f2
    kff21 = d.D5 + pi.Pi3      # X_f2 xi_f1
    kff22 = d.Dp1 + pi.Pi4     # X_f2 xi_f2
    q5 = d.D3 + pi.Pi5         # X_f1 xi_i1
    q6 = d.D9 + pi.Pi6         # X_f1 xi_i2
    q7 = d.D10 + pi.Pi7        # X_f2 xi_i1
    q8 = d.Dp3 + pi.Pi8        # X_f2 xi_i2
    r9 = d.D2 + pi.Pi9         # X_i1 xi_f1
    r10 = d.D7 + pi.Pi10       # X_i1 xi_f2
    r11 = d.D8 + pi.Pi11       # X_i2 xi_f1
    r12 = d.Dp2 + pi.Pi12      # X_i2 xi_f2
    p1 = d.D4 + pi.Pi13        # X_i1 xi_i1
    p2 = d.Dp4 + pi.Pi16       # X_i2 xi_i2
    w14 = d.D11 + pi.Pi14      # X_i1 xi_i2
    w15 = d.D12 + pi.Pi15      # X_i2 xi_i1

    uu = u * u
    den1 = nz.C2 + a2 * uu
    if not (den1 > 0.0 and math.isfinite(den1)):
        raise SingularAssembly(f"xi_i2 elimination: C2 + a2*u^2 = {den1:g}")
    den2 = 4.0 * a2 * den1 + p2 * p2
    if not (den2 > 0.0 and math.isfinite(den2)):
        raise SingularAssembly(f"X_i2 elimination: denominator {den2:g}")
    rat = den1 / den2

    e1 = r12 - p2 * nz.B2 / (2.0 * den1)
    e2 = r11 - p2 * nz.E3 / (2.0 * den1)
    e3 = w15 - p2 * nz.E1 / (2.0 * den1)
    e4 = w14 * p2 / (2.0 * den1)
    e5 = q8 * p2 / (2.0 * den1)
    e6 = q6 * p2 / (2.0 * den1)

    z1 = nz.C1 + a1 * uu - nz.E1 ** 2 / (4.0 * den1) + e3 * e3 * rat
    if not (z1 > 0.0 and math.isfinite(z1)):
        raise SingularAssembly(f"xi_i1 elimination: Z1 = {z1:g}")
    z2 = q5 - nz.E1 * q6 / (2.0 * den1) - 2.0 * e3 * e6 * rat
    z3 = q7 - nz.E1 * q8 / (2.0 * den1) - 2.0 * e3 * e5 * rat
    z6 = p1 - nz.E1 * w14 / (2.0 * den1) - 2.0 * e3 * e4 * rat
    if errata.z45_printed:
        z4 = nz.B1 + 2.0 * e2 * e3 * rat
        z5 = nz.E2 - nz.E1 * (nz.B2 + nz.E3) / (2.0 * den1) + 2.0 * e1 * e3 * rat
    else:
        z4 = nz.B1 - nz.E1 * nz.E3 / (2.0 * den1) + 2.0 * e2 * e3 * rat
        z5 = nz.E2 - nz.E1 * nz.B2 / (2.0 * den1) + 2.0 * e1 * e3 * rat

    y1 = a1 + w14 * w14 / (4.0 * den1) - e4 * e4 * rat + z6 * z6 / (4.0 * z1)
    if not (y1 > 0.0 and math.isfinite(y1)):
        raise SingularAssembly(f"X_i1 elimination: Y1 = {y1:g}")
    y2 = r9 - w14 * nz.E3 / (2.0 * den1) - 2.0 * e2 * e4 * rat - z6 * z4 / (2.0 * z1)
    y3 = r10 - w14 * nz.B2 / (2.0 * den1) - 2.0 * e1 * e4 * rat - z6 * z5 / (2.0 * z1)
    y4 = q8 * w14 / (2.0 * den1) - 2.0 * e4 * e5 * rat + z3 * z6 / (2.0 * z1)
    y5 = q6 * w14 / (2.0 * den1) - 2.0 * e4 * e6 * rat + z2 * z6 / (2.0 * z1)

    g1 = q6 * q6 / (4.0 * den1) - e6 * e6 * rat + z2 * z2 / (4.0 * z1) \
        - y5 * y5 / (4.0 * y1)
    g2 = q8 * q8 / (4.0 * den1) - e5 * e5 * rat + z3 * z3 / (4.0 * z1) \
        - y4 * y4 / (4.0 * y1)
    g12 = q6 * q8 / (2.0 * den1) - 2.0 * e5 * e6 * rat + z2 * z3 / (2.0 * z1) \
        - y4 * y5 / (2.0 * y1)

    esign = -1.0 if errata.gp12_printed else 1.0
    gp1 = nz.A1 - nz.E3 ** 2 / (4.0 * den1) + esign * e2 * e2 * rat \
        - z4 * z4 / (4.0 * z1) + y2 * y2 / (4.0 * y1)
    gp2 = nz.A2 - nz.B2 ** 2 / (4.0 * den1) + esign * e1 * e1 * rat \
        - z5 * z5 / (4.0 * z1) + y3 * y3 / (4.0 * y1)
    emix = -2.0 * e1 * e1 if errata.gp12_printed else 2.0 * e1 * e2
    gp12 = nz.E4 - nz.E3 * nz.B2 / (2.0 * den1) + emix * rat \
        - z4 * z5 / (2.0 * z1) + y2 * y3 / (2.0 * y1)

    if errata.gphase_printed:
        gpp11 = (-1j * kff11 + 1j * q6 * nz.E3 / (2.0 * den1)
                 + 2.0 * e2 * e6 * rat
                 + 1j * z4 * z6 / (4.0 * z1) + 1j * y2 * y5 / (4.0 * y1))
        gpp21 = (-1j * kff21 + 1j * q8 * nz.E3 / (2.0 * den1)
                 - 2.0 * (e3 / u) * e5 * rat
                 + 1j * z3 * z4 / (2.0 * z1) + 1j * y2 * y4 / (2.0 * y1))
        gpp12 = (-1j * kff12 + 1j * q6 * nz.B2 / (2.0 * den1)
                 - 2.0 * e1 * e6 * rat
                 + 1j * z2 * z5 / (2.0 * z1) + 1j * y3 * y5 / (2.0 * y1))
        gpp22 = (-1j * kff22 + 1j * q8 * nz.B2 / (2.0 * den1)
                 + 2.0 * e1 * e5 * rat
                 + 1j * z3 * z5 / (4.0 * z1) + 1j * y3 * y4 / (4.0 * y1))
    else:
        gpp11 = -1j * (kff11 - q6 * nz.E3 / (2.0 * den1) - 2.0 * e2 * e6 * rat
                       - z2 * z4 / (2.0 * z1) - y2 * y5 / (2.0 * y1))
        gpp21 = -1j * (kff21 - q8 * nz.E3 / (2.0 * den1) - 2.0 * e2 * e5 * rat
                       - z3 * z4 / (2.0 * z1) - y2 * y4 / (2.0 * y1))
        gpp12 = -1j * (kff12 - q6 * nz.B2 / (2.0 * den1) - 2.0 * e1 * e6 * rat
                       - z2 * z5 / (2.0 * z1) - y3 * y5 / (2.0 * y1))
        gpp22 = -1j * (kff22 - q8 * nz.B2 / (2.0 * den1) - 2.0 * e1 * e5 * rat
                       - z3 * z5 / (2.0 * z1) - y3 * y4 / (2.0 * y1))

    return ExponentCoeffs(g1=g1, g2=g2, g12=g12, gp1=gp1, gp2=gp2, gp12=gp12,
                          gpp11=gpp11, gpp12=gpp12, gpp21=gpp21, gpp22=gpp22)


def moments(g: ExponentCoeffs, t: float, errata: Errata = DEFAULT) -> GaussianMoments:
    """Variances and covariance of the position distribution.

    On the diagonal X_fk = 2 x_k the precision matrix entries are
    beta11 = 8 g1, beta22 = 8 g2 and beta12 = 4 g12 (the printed reading
    8 g12 is restored by errata.beta12_printed); inversion gives

        sigma1^2 = beta22 / det,  sigma2^2 = beta11 / det,
        cov = beta12 / (beta12^2 - beta11 beta22) = <x1 x2>.
    """
    b11 = 8.0 * g.g1
    b22 = 8.0 * g.g2
    b12 = (8.0 if errata.beta12_printed else 4.0) * g.g12
    det = b11 * b22 - b12 * b12
    if not (det > 0.0 and b11 > 0.0 and math.isfinite(det)):
        raise NonNormalizable(
            f"position sector not positive definite: beta11={b11:g}, "
            f"beta22={b22:g}, beta12={b12:g}")
    return GaussianMoments(sigma1_sq=b22 / det, sigma2_sq=b11 / det,
                           cov=-b12 / det, t=t)


def eval_log_density(g: ExponentCoeffs, Xf1: float, Xf2: float,
                     xi1: float, xi2: float) -> complex:
    """Log of the unnormalized reduced density at the given endpoint sums
    and differences (diagnostic)."""
    return -(g.g1 * Xf1 ** 2 + g.g2 * Xf2 ** 2 + g.g12 * Xf1 * Xf2
             + g.gp1 * xi1 ** 2 + g.gp2 * xi2 ** 2 + g.gp12 * xi1 * xi2
             + g.gpp11 * Xf1 * xi1 + g.gpp21 * Xf2 * xi1
             + g.gpp12 * Xf1 * xi2 + g.gpp22 * Xf2 * xi2)


class MomentEngine:
    """Moment evaluation for one scaled problem definition.

    Owns the normal modes and the two bath kernel caches; moments_at,
    evolve and steady_state are then pure functions of time.  rel_tol
    controls the noise quadrature refinement target.
    """

    def __init__(self, model: ScaledModel, *, rel_tol: float = 1e-9,
                 errata: Errata = DEFAULT):
        self.model = model
        self.errata = errata
        self.rel_tol = rel_tol
        self.modes = normal_modes(model.params)
        self.kern1 = ThermalKernel(model.theta1, model.wc)
        self.kern2 = (self.kern1 if model.theta2 == model.theta1
                      else ThermalKernel(model.theta2, model.wc))

    def clear_time(self, t: float) -> float:
        """Shift t forward off caustics of either mode (where the
        endpoint-to-amplitude map is singular)."""
        te = t
        for _ in range(8):
            moved = False
            for om in (self.modes.Omega1, self.modes.Omega2):
                if om > 0.0 and abs(math.sin(om * te)) < TOL_CAUSTIC:
                    te += 10.0 * TOL_CAUSTIC / om
                    moved = True
            if not moved:
                return te
        raise DuobathError(f"could not clear caustics near t = {t:g}")

    def exponent_at(self, t: float) -> ExponentCoeffs:
        p = self.model.params
        w = mode_weights(t, self.modes, p.gamma)
        b = b_coeffs(t, p, self.modes)
        s = s_funcs(t, self.modes)
        d = d_coeffs(t, p, self.modes, w, b, self.errata)
        pi = pi_coeffs(t, p, self.modes, w, s, self.errata)
        nz = noise_coeffs(t, p, self.modes, (self.kern1, self.kern2),
                          rel_tol=self.rel_tol, errata=self.errata)
        return exponent_coeffs(d, pi, nz, w, self.model.s01_sq,
                               self.model.s02_sq, self.errata)

    def moments_at(self, t: float) -> GaussianMoments:
        """Moments at scaled time t (t = 0 returns the initial state)."""
        if t == 0.0:
            return GaussianMoments(self.model.s01_sq, self.model.s02_sq,
                                   0.0, 0.0)
        te = self.clear_time(t)
        return moments(self.exponent_at(te), te, self.errata)

    def evolve(self, times) -> Trajectory:
        """Moments on a time grid, in grid order; caustic-nudged times
        are reported in the trajectory metadata."""
        pts = []
        nudged = []
        for t in times:
            try:
                m = self.moments_at(float(t))
            except DuobathError as exc:
                raise type(exc)(f"at t = {t:g}: {exc}") from exc
            if m.t != t:
                nudged.append((float(t), m.t))
            pts.append(m)
        return Trajectory(points=tuple(pts), nudged=tuple(nudged))

    def steady_state(self, *, steady_tol: float = 1e-3) -> SteadyResult:
        """Long-time moments.

        Evaluates at t = 20/nu_m (nu_m the slowest rate in the problem)
        and then at successive factors of 1.5 until variances and the
        scaled covariance move by less than steady_tol, giving up past
        t = 2000/nu_m.
        """
        p = self.model.params
        nu_m = min(p.gamma, self.modes.Omega1, self.modes.Omega2,
                   p.w01, p.w02)
        if nu_m <= 0.0:
            raise NoConvergence("no relaxation: the slowest rate is zero")
        cap = 2000.0 / nu_m
        t = 20.0 / nu_m
        prev = self.moments_at(t)
        evals = 1
        while True:
            t *= 1.5
            cur = self.moments_at(t)
            evals += 1
            cscale = math.sqrt(cur.sigma1_sq * cur.sigma2_sq)
            res = max(abs(cur.sigma1_sq - prev.sigma1_sq) / cur.sigma1_sq,
                      abs(cur.sigma2_sq - prev.sigma2_sq) / cur.sigma2_sq,
                      abs(cur.cov - prev.cov) / cscale)
            if res < steady_tol:
                return SteadyResult(moments=cur, residual=res, evaluations=evals)
            if t > cap:
                raise NoConvergence(
                    f"steady state not reached by t = {cap:g} "
                    f"(residual {res:.3e}, tol {steady_tol:g})")
            prev = cur


def _to_cgs(m: GaussianMoments, model: ScaledModel) -> GaussianMoments:
    lsq = model.scale.length_sq
    return GaussianMoments(sigma1_sq=m.sigma1_sq * lsq,
                           sigma2_sq=m.sigma2_sq * lsq,
                           cov=m.cov * lsq, t=m.t * model.scale.time)


def evolve(system: SystemParams, baths: BathSpec, init: InitialState,
           times, *, rel_tol: float = 1e-9,
           errata: Errata = DEFAULT) -> Trajectory:
    """Moments along a grid of times in seconds; CGS in, CGS out."""
    model = ScaledModel.from_cgs(system, baths, init)
    eng = MomentEngine(model, rel_tol=rel_tol, errata=errata)
    scaled = eng.evolve([t / model.scale.time for t in times])
    return Trajectory(
        points=tuple(_to_cgs(m, model) for m in scaled.points),
        nudged=tuple((a * model.scale.time, b * model.scale.time)
                     for a, b in scaled.nudged))


def steady_state(system: SystemParams, baths: BathSpec, init: InitialState,
                 *, steady_tol: float = 1e-3, rel_tol: float = 1e-9,
                 errata: Errata = DEFAULT) -> SteadyResult:
    """Steady-state moments in CGS units."""
    model = ScaledModel.from_cgs(system, baths, init)
    eng = MomentEngine(model, rel_tol=rel_tol, errata=errata)
    res = eng.steady_state(steady_tol=steady_tol)
    return SteadyResult(moments=_to_cgs(res.moments, model),
                        residual=res.residual, evaluations=res.evaluations)

"""Noise quadratures against direct scipy integration routes.

The thermal kernel is checked against oscillatory-weight quadrature of
the bath spectrum, the f-integral table against nested adaptive and
two-dimensional quadrature of the raw integrands, and the assembled
noise coefficients end to end.  Tolerances are scaled to the largest
table entry because individual entries pass through zero.
"""

import math

import numpy as np
import pytest
from scipy.integrate import dblquad, quad

from duobath.errata import Errata
from duobath.modefuncs import f_funcs, mode_weights
from duobath.model import SystemParams, normal_modes
from duobath.noise import (NoiseCoeffs, ThermalKernel, f_integrals,
                           kernel_integrands, noise_coeffs, thermal_kernel)

WC_SHARP = 85.0
WC_SOFT = 6.0


@pytest.fixture(scope="module")
def asym():
    return SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.12,
                        lam=0.45 * 1.7 * math.sqrt(2.3))


@pytest.fixture(scope="module")
def soft():
    return SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.25,
                        lam=0.45 * 1.7 * math.sqrt(2.3))


@pytest.mark.parametrize("theta", [0.0, 0.37, 3.9, 470.0])
def test_kernel_matches_cosine_weighted_quadrature(theta):
    k = ThermalKernel(theta, WC_SHARP)
    for delta in (0.0, 1e-3, 0.1, 1.0, 10.0):
        if theta == 0.0:
            f = lambda w: w * math.exp(-w / WC_SHARP)
        else:
            f = lambda w: ((2.0 * theta if w == 0.0
                            else w / math.tanh(w / (2.0 * theta)))
                           * math.exp(-w / WC_SHARP))
        if delta == 0.0:
            want, _ = quad(f, 0.0, np.inf, limit=400)
        else:
            want, _ = quad(f, 0.0, np.inf, weight="cos", wvar=delta, limit=400)
        assert abs(k.raw(delta) - want) < 5e-9 * max(abs(want), 1e-300)


def test_kernel_zero_temperature_closed_form():
    wc = WC_SHARP
    for delta in (0.0, 0.003, 0.2, 5.0):
        want = wc ** 2 * (1 - wc ** 2 * delta ** 2) / (1 + wc ** 2 * delta ** 2) ** 2
        assert abs(thermal_kernel(delta, 0.0, wc) - want) < 1e-12 * abs(want)


def test_kernel_classical_limit():
    th = 50.0 * WC_SHARP
    k = ThermalKernel(th, WC_SHARP)
    for delta in (0.0, 0.05, 1.0):
        want = 2.0 * th * WC_SHARP / (1 + WC_SHARP ** 2 * delta ** 2)
        assert abs(k.raw(delta) - want) < 2e-4 * abs(want)


def test_kernel_spline_tracks_raw_values():
    rng = np.random.default_rng(7)
    k = ThermalKernel(3.9, WC_SHARP)
    k.ensure(50.0)
    d = np.exp(rng.uniform(np.log(1e-5), np.log(50.0), 300))
    scale = np.abs(k.raw(d)).max()
    assert np.abs(k(d) - k.raw(d)).max() < 2e-9 * scale


def test_f_integrals_sharp_cutoff_vs_nested_quadrature(asym):
    modes = normal_modes(asym)
    t = 2.7
    k1 = ThermalKernel(0.9, WC_SHARP)
    table = f_integrals(t, modes, asym.gamma, k1, rel_tol=1e-11)
    fscale = max(abs(getattr(table, f"f{i}")) for i in range(1, 17))

    def nested(idx):
        def inner(delta):
            def g(s):
                f = f_funcs(s + delta, s, modes)
                return getattr(f, f"f{idx}") * math.exp(
                    asym.gamma * (2 * s + delta - 2 * t))
            v, _ = quad(g, 0.0, t - delta, limit=300, epsabs=1e-13,
                        epsrel=1e-11)
            return v * k1.raw(delta)
        v, _ = quad(inner, 0.0, t, limit=400, epsabs=1e-12, epsrel=1e-10,
                    points=[1.0 / WC_SHARP, 10.0 / WC_SHARP, 1.0])
        return v

    for idx in (1, 4, 14, 16):
        want = nested(idx)
        got = getattr(table, f"f{idx}")
        assert abs(got - want) / fscale < 1e-8, f"f{idx}"


def test_f_integrals_soft_cutoff_vs_dblquad(soft):
    modes = normal_modes(soft)
    ks = ThermalKernel(1.3, WC_SOFT)
    ts, gs = 1.8, soft.gamma
    tbl = f_integrals(ts, modes, gs, ks, rel_tol=1e-11)
    fscale = max(abs(getattr(tbl, f"f{i}")) for i in range(1, 17))
    for idx in range(1, 17):
        def integrand(s, tau, idx=idx):
            f = f_funcs(tau, s, modes)
            return (getattr(f, f"f{idx}") * ks.raw(tau - s)
                    * math.exp(gs * (tau + s - 2 * ts)))
        want, _ = dblquad(integrand, 0.0, ts, 0.0, lambda x: x,
                          epsabs=1e-11, epsrel=1e-9)
        got = getattr(tbl, f"f{idx}")
        assert abs(got - want) / fscale < 5e-8, f"f{idx}"


def test_f14_printed_duplicates_f16(asym):
    modes = normal_modes(asym)
    k1 = ThermalKernel(0.9, WC_SHARP)
    tp = f_integrals(2.7, modes, asym.gamma, k1, errata=Errata(f14_printed=True))
    assert tp.f14 == tp.f16


def test_noise_coeffs_vs_dblquad(soft):
    modes = normal_modes(soft)
    ks = ThermalKernel(1.3, WC_SOFT)
    ks2 = ThermalKernel(2.6, WC_SOFT)
    ts, gs = 1.8, soft.gamma
    w = mode_weights(ts, modes, gs)
    nc = noise_coeffs(ts, soft, modes, (ks, ks2), rel_tol=1e-11)
    u = w.u
    resc = {"A1": 1.0, "B1": u, "C1": u * u, "E1": u * u, "E2": u, "E4": 1.0}
    p1 = 2.0 * soft.M1 * gs / math.pi
    p2 = 2.0 * soft.M2 * gs / math.pi
    for name, factor in resc.items():
        def raw_part(s, tau, bath):
            vals = kernel_integrands(tau, s, modes, w)
            ker = ks if bath == 1 else ks2
            return (vals[f"{name}_{bath}"] * ker.raw(tau - s)
                    * math.exp(gs * (tau + s)))
        v1, _ = dblquad(lambda s, tau: raw_part(s, tau, 1), 0.0, ts,
                        0.0, lambda x: x, epsabs=1e-11, epsrel=1e-9)
        v2, _ = dblquad(lambda s, tau: raw_part(s, tau, 2), 0.0, ts,
                        0.0, lambda x: x, epsabs=1e-11, epsrel=1e-9)
        want = (p1 * v1 + p2 * v2) * factor
        got = getattr(nc, name)
        assert abs(got - want) < 2e-7 * max(abs(want), 1e-300), name


def test_decoupled_noise_structure():
    p0 = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.12, lam=0.0)
    m0 = normal_modes(p0)
    ncA = noise_coeffs(2.7, p0, m0,
                       (ThermalKernel(0.9, WC_SHARP), ThermalKernel(4.0, WC_SHARP)))
    ncB = noise_coeffs(2.7, p0, m0,
                       (ThermalKernel(0.9, WC_SHARP), ThermalKernel(0.2, WC_SHARP)))
    for nm in ("E1", "E2", "E3", "E4"):
        assert abs(getattr(ncA, nm)) < 1e-14
    # oscillator 1 must not feel the second bath when decoupled
    assert abs(ncA.A1 - ncB.A1) < 1e-13 * abs(ncA.A1)
    assert abs(ncA.C1 - ncB.C1) < 1e-13 * abs(ncA.C1)
    assert abs(ncA.A2 - ncB.A2) > 1e-3 * abs(ncA.A2)


def test_zero_time_and_zero_damping_shortcuts(soft):
    modes = normal_modes(soft)
    ks = ThermalKernel(1.3, WC_SOFT)
    ks2 = ThermalKernel(2.6, WC_SOFT)
    assert noise_coeffs(0.0, soft, modes, (ks, ks2)) == NoiseCoeffs(*([0.0] * 10))
    pg0 = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.0,
                       lam=soft.lam)
    assert noise_coeffs(1.0, pg0, normal_modes(pg0), (ks, ks2)) == \
        NoiseCoeffs(*([0.0] * 10))


def test_noise_monotone_in_temperature(soft):
    modes = normal_modes(soft)
    prev = -1.0
    for th in (0.0, 0.5, 2.0, 8.0):
        v = noise_coeffs(2.7, soft, modes,
                         (ThermalKernel(th, WC_SHARP),
                          ThermalKernel(th, WC_SHARP))).A1
        assert v >= prev
        prev = v


def test_r1sq_switch_scope_and_positivity(soft):
    modes = normal_modes(soft)
    ks = ThermalKernel(1.3, WC_SOFT)
    ks2 = ThermalKernel(2.6, WC_SOFT)
    ncd = noise_coeffs(2.7, soft, modes, (ks, ks2))
    ncp = noise_coeffs(2.7, soft, modes, (ks, ks2),
                       errata=Errata(noise_r1sq_printed=True))
    names = ("A1", "A2", "B1", "B2", "C1", "C2", "E1", "E2", "E3", "E4")
    changed = {nm for nm in names if getattr(ncd, nm) != getattr(ncp, nm)}
    assert changed == {"A1", "A2", "B1", "B2", "C1", "C2"}
    for nm in ("A1", "A2", "C1", "C2"):
        assert getattr(ncd, nm) > 0

"""Frequency-domain reference variances and stationary moments."""

import math

import numpy as np
import pytest

from duobath.fdt import (coupled_spectral_steady, fdt_variance,
                         fdt_variance_scaled, normalize_moments,
                         spectral_steady_scaled)
from duobath.errors import ConfigError, Unstable
from duobath.model import BathSpec, SystemParams
from duobath.units import HBAR_CGS, KB_CGS

M, W0 = 1e-23, 1e13


def test_zero_temperature_weak_damping_anchor():
    r = fdt_variance(M, W0, 1e-4 * W0, 0.0)
    want = HBAR_CGS / (2 * M * W0)
    assert abs(r.sigma_sq - want) < 1e-4 * want


def test_room_temperature_narrow_resonance_anchor():
    r = fdt_variance(M, W0, 1e-3 * W0, 300.0)
    want = (HBAR_CGS / (2 * M * W0)
            / math.tanh(HBAR_CGS * W0 / (2 * KB_CGS * 300.0)))
    assert abs(r.sigma_sq - want) < 1e-2 * want
    # the classic order of magnitude for a molecular-scale oscillator
    assert 4.0e-17 < r.sigma_sq < 4.3e-17


def test_high_temperature_limit_with_quantum_correction():
    th = 80.0
    want = th + 1.0 / (12.0 * th)
    r = fdt_variance_scaled(1.0, 1.0, 1e-3, th)
    assert abs(r.sigma_sq - want) < 1e-6 * want


def test_monotone_in_temperature():
    vals = [fdt_variance_scaled(1.0, 1.0, 0.05, t).sigma_sq
            for t in (0.0, 0.5, 1.0, 2.0, 5.0)]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_decoupled_reduction_to_single_oscillator():
    p0 = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.08, lam=0.0)
    sc = spectral_steady_scaled(p0, 1.4, 0.2)
    f1 = fdt_variance_scaled(1.0, 1.0, 0.08, 1.4).sigma_sq
    f2 = fdt_variance_scaled(2.3, 1.7, 0.08, 0.2).sigma_sq
    assert abs(sc.sigma1_sq - f1) < 1e-7 * f1
    assert abs(sc.sigma2_sq - f2) < 1e-7 * f2
    assert abs(sc.cov) < 1e-12 * math.sqrt(f1 * f2)


def test_classical_coupled_equipartition():
    theta = 70.0
    pc = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.1,
                      lam=0.45 * 1.7 * math.sqrt(2.3))
    sc = spectral_steady_scaled(pc, theta, theta)
    H = np.array([[pc.M1 * pc.w01 ** 2, -pc.lam],
                  [-pc.lam, pc.M2 * pc.w02 ** 2]])
    Sig = theta * np.linalg.inv(H)
    assert abs(sc.sigma1_sq - Sig[0, 0]) < 2e-4 * Sig[0, 0]
    assert abs(sc.sigma2_sq - Sig[1, 1]) < 2e-4 * Sig[1, 1]
    assert abs(sc.cov - Sig[0, 1]) < 2e-4 * Sig[0, 1]


def test_label_swap_symmetry():
    pa = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.08,
                      lam=0.3 * 1.7 * math.sqrt(2.3))
    pb = SystemParams(M1=2.3, M2=1.0, w01=1.7, w02=1.0, gamma=0.08,
                      lam=pa.lam)
    sa = spectral_steady_scaled(pa, 1.4, 0.2)
    sb = spectral_steady_scaled(pb, 0.2, 1.4)
    assert abs(sa.sigma1_sq - sb.sigma2_sq) < 1e-8 * sa.sigma1_sq
    assert abs(sa.sigma2_sq - sb.sigma1_sq) < 1e-8 * sa.sigma2_sq
    assert abs(sa.cov - sb.cov) < 1e-8 * abs(sa.cov)


def test_cgs_wrapper_consistency():
    lt = 0.3
    lam = lt * 1e13 * 1.7e13 * math.sqrt(1e-23 * 2.3e-23)
    pcgs = SystemParams(M1=1e-23, M2=2.3e-23, w01=1e13, w02=1.7e13,
                        gamma=1e11, lam=lam)
    baths = BathSpec(T1=300.0, T2=700.0, omega_cutoff=5e15)
    full = coupled_spectral_steady(pcgs, baths)
    th1 = KB_CGS * 300.0 / (HBAR_CGS * 1e13)
    th2 = KB_CGS * 700.0 / (HBAR_CGS * 1e13)
    ps = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.01,
                      lam=lt * 1.7 * math.sqrt(2.3))
    sc = spectral_steady_scaled(ps, th1, th2)
    lsq = HBAR_CGS / (1e-23 * 1e13)
    assert abs(full.sigma1_sq - sc.sigma1_sq * lsq) < 1e-9 * full.sigma1_sq
    assert abs(full.cov - sc.cov * lsq) < 1e-9 * abs(full.cov)


def test_normalized_equilibrium_weak_coupling():
    lamw = 0.05 * 1e13 * 1.7e13 * math.sqrt(1e-23 * 2.3e-23)
    pw = SystemParams(M1=1e-23, M2=2.3e-23, w01=1e13, w02=1.7e13,
                      gamma=1e11, lam=lamw)
    bw = BathSpec(T1=300.0, T2=300.0, omega_cutoff=5e15)
    scw = coupled_spectral_steady(pw, bw)
    nm = normalize_moments(scw.sigma1_sq, scw.sigma2_sq, scw.cov, pw, bw)
    assert abs(nm.sigma1_sq - 1.0) < 5e-3
    assert abs(nm.sigma2_sq - 1.0) < 5e-3
    assert abs(nm.cov) < 0.1


def test_spectral_route_guards():
    p = SystemParams(M1=1.0, M2=1.0, w01=1.0, w02=1.0, gamma=0.0, lam=0.5)
    with pytest.raises(ConfigError):
        spectral_steady_scaled(p, 1.0, 1.0)
    pb = SystemParams(M1=1.0, M2=1.0, w01=1.0, w02=1.0, gamma=0.1, lam=1.0)
    with pytest.raises(Unstable):
        spectral_steady_scaled(pb, 1.0, 1.0)

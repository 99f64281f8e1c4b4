"""Parameter validation, normal-mode algebra, and classical trajectories."""

import math

import numpy as np
import pytest

from duobath.errors import CausticTime, OverdampedMode, Unstable
from duobath.model import (Endpoints, ScaledModel, SystemParams, BathSpec,
                           InitialState, classical_path, critical_coupling_map,
                           default_cutoff, normal_modes, normalized_coupling)


def params_for(lt, *, M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.12):
    lam = lt * w01 * w02 * math.sqrt(M1 * M2)
    return SystemParams(M1=M1, M2=M2, w01=w01, w02=w02, gamma=gamma, lam=lam)


def test_params_validation():
    with pytest.raises(ValueError):
        SystemParams(M1=-1.0, M2=1.0, w01=1.0, w02=1.0, gamma=0.0, lam=0.0)
    with pytest.raises(ValueError):
        SystemParams(M1=1.0, M2=1.0, w01=0.0, w02=1.0, gamma=0.0, lam=0.0)
    with pytest.raises(ValueError):
        SystemParams(M1=1.0, M2=1.0, w01=1.0, w02=1.0, gamma=-0.1, lam=0.0)
    with pytest.raises(Unstable):
        SystemParams(M1=1.0, M2=1.0, w01=1.0, w02=1.0, gamma=0.0, lam=1.01)
    with pytest.raises(ValueError):
        BathSpec(T1=-1.0, T2=0.0, omega_cutoff=1.0)
    with pytest.raises(ValueError):
        InitialState(sigma01_sq=0.0, sigma02_sq=1.0)


def test_identical_pair_ratios_exact():
    for lt in (0.1, 0.3, 0.5, 0.7, 0.9):
        p = params_for(lt, M2=1.0, w02=1.0, gamma=0.05)
        nm = normal_modes(p)
        assert abs(nm.r1 - 1.0) < 1e-12
        assert abs(nm.r2 + 1.0) < 1e-12


def test_mode_frequency_sum_and_product():
    rng = np.random.default_rng(42)
    for _ in range(100):
        M1, M2 = rng.uniform(0.5, 3.0, 2)
        w01 = rng.uniform(0.5, 2.0)
        w02 = w01 * rng.uniform(1.0, 2.5)
        gamma = rng.uniform(0.0, 0.25) * w01
        lt = rng.uniform(0.0, 0.9)
        p = SystemParams(M1=M1, M2=M2, w01=w01, w02=w02, gamma=gamma,
                         lam=lt * w01 * w02 * math.sqrt(M1 * M2))
        nm = normal_modes(p)
        ssum = nm.Omega1 ** 2 + nm.Omega2 ** 2
        want_sum = w01 ** 2 + w02 ** 2 - 2.0 * gamma ** 2
        sprod = nm.Omega1 ** 2 * nm.Omega2 ** 2
        want_prod = ((w01 ** 2 - gamma ** 2) * (w02 ** 2 - gamma ** 2)
                     - p.lam ** 2 / (M1 * M2))
        assert abs(ssum - want_sum) < 1e-12 * abs(want_sum)
        assert abs(sprod - want_prod) < 1e-12 * max(abs(want_prod), w01 ** 4)


def test_ratio_product_nonpositive():
    rng = np.random.default_rng(3)
    for _ in range(50):
        p = params_for(rng.uniform(1e-3, 0.95),
                       M2=rng.uniform(0.3, 3.0),
                       w02=rng.uniform(1.0, 3.0),
                       gamma=rng.uniform(0.0, 0.2))
        nm = normal_modes(p)
        assert nm.r1 * nm.r2 <= 1e-15


def test_decoupled_limit():
    p = params_for(0.0, gamma=0.12)
    nm = normal_modes(p)
    assert nm.r1 == 0.0 and nm.r2 == 0.0
    assert abs(nm.Omega1 - math.sqrt(1.0 - 0.12 ** 2)) < 1e-15
    assert abs(nm.Omega2 - math.sqrt(1.7 ** 2 - 0.12 ** 2)) < 1e-15


def test_boundary_coupling_soft_mode():
    p = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.0,
                     lam=1.0 * 1.7 * math.sqrt(2.3))
    nm = normal_modes(p, allow_boundary=True)
    assert abs(nm.Omega1) <= 1e-10 * nm.Omega2
    with pytest.raises(Unstable):
        normal_modes(p)


def test_overdamped_rejected():
    p = params_for(0.5, M2=1.0, w02=1.0, gamma=0.8)
    with pytest.raises(OverdampedMode):
        normal_modes(p)


def test_normalized_coupling_roundtrip():
    p = params_for(0.37)
    assert abs(normalized_coupling(p) - 0.37) < 1e-14


def test_critical_map_scales():
    p = params_for(0.9)
    cm = critical_coupling_map(p)
    assert abs(cm.J1 * cm.J2 - 1.0) < 1e-14
    assert abs(cm.M_eff - math.sqrt(p.M1 * p.M2)) < 1e-14 * cm.M_eff
    assert abs(cm.omega_eff - math.sqrt(p.w01 * p.w02)) < 1e-14 * cm.omega_eff


def test_classical_path_endpoints_and_eom():
    p = params_for(0.45)
    modes = normal_modes(p)
    t_end = 2.7
    ends = Endpoints(Xi1=0.3, Xi2=-0.7, Xf1=1.1, Xf2=0.4)
    path = classical_path(t_end, ends, modes, p.gamma)
    X1_0, X2_0 = path(0.0)
    X1_t, X2_t = path(t_end)
    assert abs(X1_0 - ends.Xi1) < 1e-12
    assert abs(X2_0 - ends.Xi2) < 1e-12
    assert abs(X1_t - ends.Xf1) < 1e-12
    assert abs(X2_t - ends.Xf2) < 1e-12

    # interior equations of motion by central differences
    tau = np.linspace(0.3, 2.4, 9)
    h = 1e-5
    X1, X2 = path(tau)
    X1p, X2p = path(tau + h)
    X1m, X2m = path(tau - h)
    acc1 = (X1p - 2 * X1 + X1m) / h ** 2
    acc2 = (X2p - 2 * X2 + X2m) / h ** 2
    V1, V2 = path.velocities(tau)
    res1 = p.M1 * acc1 + 2 * p.M1 * p.gamma * V1 + p.M1 * p.w01 ** 2 * X1 - p.lam * X2
    res2 = p.M2 * acc2 + 2 * p.M2 * p.gamma * V2 + p.M2 * p.w02 ** 2 * X2 - p.lam * X1
    scale = p.M1 * p.w01 ** 2 * np.abs(X1).max()
    assert np.abs(res1).max() < 1e-5 * scale
    assert np.abs(res2).max() < 1e-5 * scale

    # velocities against central differences
    V1n = (X1p - X1m) / (2 * h)
    V2n = (X2p - X2m) / (2 * h)
    assert np.abs(V1 - V1n).max() < 1e-8 * max(1.0, np.abs(V1).max())
    assert np.abs(V2 - V2n).max() < 1e-8 * max(1.0, np.abs(V2).max())


def test_classical_path_caustic():
    p = params_for(0.45)
    modes = normal_modes(p)
    ends = Endpoints(Xi1=0.0, Xi2=0.0, Xf1=1.0, Xf2=0.0)
    with pytest.raises(CausticTime):
        classical_path(math.pi / modes.Omega1, ends, modes, p.gamma)


def test_default_cutoff_tracks_fastest_frequency():
    p = params_for(0.5, w02=1.7)
    nm = normal_modes(p)
    assert default_cutoff(p) == 400.0 * max(1.7, nm.Omega2)
    assert default_cutoff(p, mult=50.0) == 50.0 * max(1.7, nm.Omega2)


def test_scaled_model_from_cgs():
    system = SystemParams(M1=1e-23, M2=2.3e-23, w01=1e13, w02=1.7e13,
                          gamma=1.2e11,
                          lam=0.45 * 1e13 * 1.7e13 * math.sqrt(2.3) * 1e-23)
    baths = BathSpec(T1=300.0, T2=700.0, omega_cutoff=5e15)
    init = InitialState(sigma01_sq=4e-18, sigma02_sq=9e-19)
    m = ScaledModel.from_cgs(system, baths, init)
    assert m.params.M1 == 1.0 and m.params.w01 == 1.0
    assert abs(m.params.M2 - 2.3) < 1e-14
    assert abs(m.params.w02 - 1.7) < 1e-14
    assert abs(m.params.gamma - 0.012) < 1e-15
    assert abs(normalized_coupling(m.params) - 0.45) < 1e-12
    assert abs(m.wc - 500.0) < 1e-12
    # theta = k_B T / (hbar w01): 300 K at 1e13 rad/s is about 3.93
    assert abs(m.theta1 - 3.9267) < 1e-3
    assert abs(m.s01_sq * m.scale.length_sq - 4e-18) < 1e-30
    assert abs(m.a1 - 1.0 / (8.0 * m.s01_sq)) < 1e-18
    with pytest.raises(ValueError):
        ScaledModel.from_cgs(system, BathSpec(T1=300.0, T2=700.0,
                                              omega_cutoff=1e13), init)

"""
Named parameter sets reproducing the reference figure data.

Each preset bundles one or more parameter cases (the individual curves
of a figure) with the sweep or time grid the figure uses.  All values
are in CGS + Kelvin.  The common anchor oscillator is M1 = 1e-23 g,
w01 = 1e13 rad/s; mismatch cases scale the partner oscillator off it.
Initial spreads default to the isolated zero-temperature value
hbar/(2 M w0) per oscillator unless a case says otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .model import BathSpec, InitialState, SystemParams, default_cutoff
from .units import HBAR_CGS

M1_REF = 1e-23
W1_REF = 1e13


def ground_spread(M: float, w0: float) -> float:
    """Zero-temperature spread hbar/(2 M w0) of an isolated oscillator, cm^2."""
    return HBAR_CGS / (2.0 * M * w0)


def pair(m_fac: float, w_fac: float, *, M1: float = M1_REF,
         w01: float = W1_REF, gamma_tilde: float, lambda_tilde: float = 0.0
         ) -> SystemParams:
    """Oscillator pair with the partner scaled off the anchor values."""
    lam = lambda_tilde * w01 * (w01 * w_fac) * M1 * math.sqrt(m_fac)
    return SystemParams(M1=M1, M2=M1 * m_fac, w01=w01, w02=w01 * w_fac,
                        gamma=gamma_tilde * w01, lam=lam)


@dataclass(frozen=True)
class PresetCase:
    """One curve of a figure: a full CGS problem definition."""

    name: str
    params: SystemParams
    baths: BathSpec
    init: InitialState


@dataclass(frozen=True)
class FigurePreset:
    """A figure's worth of runs.

    kind selects the computation: "modes" (mode ratios over the coupling
    sweep), "steady" (stationary moments over the sweep axis) or
    "evolve" (moments over the time grid, seconds).
    axis is "lambda_tilde" or "gamma_tilde" for sweeps, None for evolve.
    """

    name: str
    kind: str
    cases: tuple
    axis: str | None = None
    axis_values: tuple = ()
    times: tuple = ()


def _case(name, m_fac, w_fac, *, gamma_tilde, lambda_tilde, T1, T2,
          M1=M1_REF, w01=W1_REF, s1_fac=1.0, s2_fac=1.0):
    p = pair(m_fac, w_fac, M1=M1, w01=w01, gamma_tilde=gamma_tilde,
             lambda_tilde=lambda_tilde)
    baths = BathSpec(T1=T1, T2=T2, omega_cutoff=default_cutoff(p))
    init = InitialState(
        sigma01_sq=s1_fac * ground_spread(p.M1, p.w01),
        sigma02_sq=s2_fac * ground_spread(p.M2, p.w02))
    return PresetCase(name=name, params=p, baths=baths, init=init)


def _times(lo_cycles: float, hi_cycles: float, n: int) -> tuple:
    """Log-spaced time grid in seconds, bounds given in units of 1/w01."""
    return tuple(float(t) for t in np.geomspace(lo_cycles, hi_cycles, n) / W1_REF)


_L_GRID_FULL = tuple(float(x) for x in np.linspace(0.02, 0.98, 49))
_L_GRID_STEADY = (0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.75, 0.9, 0.95)
_G_GRID = (0.01, 0.02, 0.05, 0.1, 0.2, 0.35, 0.5)


def _build() -> dict:
    presets = {}

    # mode-ratio sweep: 1% / 10% / large parameter deviations
    fig1a_cases = (
        _case("pct1", 1.01, 1.01, gamma_tilde=0.01, lambda_tilde=0.0,
              T1=300.0, T2=700.0),
        _case("pct10", 1.1, 1.1, gamma_tilde=0.01, lambda_tilde=0.0,
              T1=300.0, T2=700.0),
        _case("large", 1.0 / 3.0, 10.0, gamma_tilde=0.01, lambda_tilde=0.0,
              T1=300.0, T2=700.0, M1=3e-23, w01=0.8e13),
    )
    presets["fig1a"] = FigurePreset(
        name="fig1a", kind="modes", cases=fig1a_cases,
        axis="lambda_tilde", axis_values=_L_GRID_FULL)

    # stationary normalized moments vs coupling, T1=300K / T2=700K
    presets["fig1b"] = FigurePreset(
        name="fig1b", kind="steady", cases=fig1a_cases,
        axis="lambda_tilde", axis_values=_L_GRID_STEADY)

    # stationary normalized moments vs damping at lambda_tilde = 0.1
    fig1c_cases = (
        _case("identical", 1.0, 1.0, gamma_tilde=0.01, lambda_tilde=0.1,
              T1=300.0, T2=700.0),
        _case("pct10", 1.1, 1.1, gamma_tilde=0.01, lambda_tilde=0.1,
              T1=300.0, T2=700.0),
    )
    presets["fig1c"] = FigurePreset(
        name="fig1c", kind="steady", cases=fig1c_cases,
        axis="gamma_tilde", axis_values=_G_GRID)

    # relaxation at lambda_tilde = 0.1, T1=300K / T2=900K, cold start
    presets["fig2a"] = FigurePreset(
        name="fig2a", kind="evolve",
        cases=(
            _case("identical", 1.0, 1.0, gamma_tilde=0.01, lambda_tilde=0.1,
                  T1=300.0, T2=900.0),
            _case("pct10", 1.1, 1.1, gamma_tilde=0.01, lambda_tilde=0.1,
                  T1=300.0, T2=900.0),
            _case("pct20", 1.2, 1.2, gamma_tilde=0.01, lambda_tilde=0.1,
                  T1=300.0, T2=900.0),
        ),
        times=_times(0.1, 600.0, 44))

    # same but a 10x hotter first spread and stronger damping
    presets["fig2b"] = FigurePreset(
        name="fig2b", kind="evolve",
        cases=(
            _case("identical", 1.0, 1.0, gamma_tilde=0.1, lambda_tilde=0.1,
                  T1=300.0, T2=900.0, s1_fac=10.0),
            _case("pct10", 1.1, 1.1, gamma_tilde=0.1, lambda_tilde=0.1,
                  T1=300.0, T2=900.0, s1_fac=10.0),
            _case("pct20", 1.2, 1.2, gamma_tilde=0.1, lambda_tilde=0.1,
                  T1=300.0, T2=900.0, s1_fac=10.0),
        ),
        times=_times(0.05, 100.0, 44))

    # low-temperature relaxation, lambda_tilde = 0.2, doubled second spread
    fig3_kw = dict(gamma_tilde=0.05, lambda_tilde=0.2, s2_fac=2.0)
    presets["fig3a"] = FigurePreset(
        name="fig3a", kind="evolve",
        cases=(
            _case("identical", 1.0, 1.0, T1=0.0, T2=0.0, **fig3_kw),
            _case("pct20", 1.2, 1.2, T1=0.0, T2=0.0, **fig3_kw),
            _case("pct50", 1.5, 1.5, T1=0.0, T2=0.0, **fig3_kw),
        ),
        times=_times(0.1, 300.0, 44))
    presets["fig3b"] = FigurePreset(
        name="fig3b", kind="evolve",
        cases=(
            _case("identical", 1.0, 1.0, T1=0.0, T2=100.0, **fig3_kw),
            _case("pct20", 1.2, 1.2, T1=0.0, T2=100.0, **fig3_kw),
            _case("pct50", 1.5, 1.5, T1=0.0, T2=100.0, **fig3_kw),
        ),
        times=_times(0.1, 300.0, 44))

    return presets


PRESETS = _build()


def get_preset(name: str) -> FigurePreset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}")


def preset_with_coupling(case: PresetCase, lambda_tilde: float) -> PresetCase:
    """Copy of a case at a different normalized coupling."""
    p = case.params
    lam = lambda_tilde * p.w01 * p.w02 * math.sqrt(p.M1 * p.M2)
    newp = SystemParams(M1=p.M1, M2=p.M2, w01=p.w01, w02=p.w02,
                        gamma=p.gamma, lam=lam)
    baths = BathSpec(T1=case.baths.T1, T2=case.baths.T2,
                     omega_cutoff=default_cutoff(newp))
    return PresetCase(name=case.name, params=newp, baths=baths, init=case.init)


def preset_with_damping(case: PresetCase, gamma_tilde: float) -> PresetCase:
    """Copy of a case at a different normalized damping, same coupling."""
    p = case.params
    newp = SystemParams(M1=p.M1, M2=p.M2, w01=p.w01, w02=p.w02,
                        gamma=gamma_tilde * p.w01, lam=p.lam)
    baths = BathSpec(T1=case.baths.T1, T2=case.baths.T2,
                     omega_cutoff=default_cutoff(newp))
    return PresetCase(name=case.name, params=newp, baths=baths, init=case.init)

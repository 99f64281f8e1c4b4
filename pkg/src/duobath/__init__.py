"""
Exact Gaussian dynamics of two coupled damped oscillators, each attached
to its own thermal bath.

The central objects are the time-dependent second moments (variances and
covariance of the two coordinates) propagated from a factorized Gaussian
initial state, their stationary limit, and the single-oscillator
fluctuation-dissipation reference variance used to normalize them.
"""

from .errata import DEFAULT, Errata, parse_errata
from .errors import (CausticTime, ConfigError, DegenerateRatios,
                     DuobathError, NoConvergence, NonNormalizable,
                     OverdampedMode, QuadratureNonConvergence,
                     SingularAssembly, Unstable)
from .fdt import (FdtResult, NormalizedMoments, SteadyCovariance,
                  coupled_spectral_steady, fdt_variance,
                  fdt_variance_scaled, normalize_moments,
                  spectral_steady_scaled)
from .model import (BathSpec, InitialState, NormalModes, ScaledModel,
                    SystemParams, critical_coupling_map, default_cutoff,
                    normal_modes, normalized_coupling)
from .presets import (PRESETS, FigurePreset, PresetCase, get_preset,
                      ground_spread, preset_with_coupling,
                      preset_with_damping)
from .state import (ExponentCoeffs, GaussianMoments, MomentEngine,
                    SteadyResult, Trajectory, evolve, steady_state)

__version__ = "0.1.0"

__all__ = [
    "BathSpec",
    "CausticTime",
    "ConfigError",
    "DEFAULT",
    "DegenerateRatios",
    "DuobathError",
    "Errata",
    "ExponentCoeffs",
    "FdtResult",
    "FigurePreset",
    "GaussianMoments",
    "InitialState",
    "MomentEngine",
    "NoConvergence",
    "NonNormalizable",
    "NormalModes",
    "NormalizedMoments",
    "OverdampedMode",
    "PRESETS",
    "PresetCase",
    "QuadratureNonConvergence",
    "ScaledModel",
    "SingularAssembly",
    "SteadyCovariance",
    "SteadyResult",
    "SystemParams",
    "Trajectory",
    "Unstable",
    "coupled_spectral_steady",
    "critical_coupling_map",
    "default_cutoff",
    "evolve",
    "fdt_variance",
    "fdt_variance_scaled",
    "get_preset",
    "ground_spread",
    "normal_modes",
    "normalize_moments",
    "normalized_coupling",
    "parse_errata",
    "preset_with_coupling",
    "preset_with_damping",
    "spectral_steady_scaled",
    "steady_state",
    "__version__",
]

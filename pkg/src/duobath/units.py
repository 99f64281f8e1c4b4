"""Unit handling.

All core numerics run in oscillator-1 units: hbar = M1 = w01 = 1, so times are
measured in 1/w01, squared lengths in hbar/(M1*w01), and temperatures enter as
theta = kB*T/(hbar*w01).  Physical inputs and outputs are CGS + Kelvin and are
converted only here, at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

HBAR_CGS = 1.054571817e-27  # erg * s
KB_CGS = 1.380649e-16       # erg / K


@dataclass(frozen=True)
class Scale:
    """Conversion factors between CGS and internal units for one system."""

    mass: float      # g per internal mass unit (= M1)
    freq: float      # rad/s per internal frequency unit (= w01)

    @property
    def time(self) -> float:
        """Seconds per internal time unit."""
        return 1.0 / self.freq

    @property
    def length_sq(self) -> float:
        """cm^2 per internal squared-length unit, hbar/(M1*w01)."""
        return HBAR_CGS / (self.mass * self.freq)

    def theta(self, temperature_K: float) -> float:
        """Dimensionless temperature kB*T/(hbar*w01)."""
        if temperature_K < 0.0:
            raise ValueError("temperature must be >= 0 K")
        return KB_CGS * temperature_K / (HBAR_CGS * self.freq)

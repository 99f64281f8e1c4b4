"""Alternate readings of the propagator coefficient tables.

A small number of spots in the coefficient tables admit two candidate
transcriptions (a duplicated index, a dropped factor, a misplaced term).
Each such spot is gated behind a named flag.  The default for every flag is
the reading validated by the independent oracles in the test suite (direct
quadrature of the classical action for the endpoint tables, frequency-domain
steady-state calculation for the assembled moments); setting a flag to True
restores the alternate printed reading so the difference can be reproduced.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Errata:
    """Printed-vs-validated reading switches.  False = validated reading."""

    # 14th two-time trig product written with the mode-1 second argument,
    # duplicating the 16th product, instead of the mode-2 argument.
    f14_printed: bool = False
    # quartic ratio factor written r1^2*r1^2 instead of r1^2*r2^2 in the
    # same-oscillator noise integrand combinations.
    noise_r1sq_printed: bool = False
    # final-position/final-phase coefficient second bracket, 6th term:
    # duplicated index 13 instead of the mode-exchanged index 1.
    d2_tail_printed: bool = False
    # initial-phase coupling coefficient second bracket: indices 7, 13, 15
    # instead of the mode-exchanged 8, 1, 3.
    d3_tail_printed: bool = False
    # initial-phase diagonal coefficient: one cosine-cosine cross term in
    # each bracket weighted r1^2 instead of r1 (its transpose partner and
    # the mirrored coefficient both carry the single power).
    d4_weight_printed: bool = False
    # cross initial-phase sum: second bracket weighted by the first mass
    # instead of the second.
    d12_mass_printed: bool = False
    # cross initial-phase sum: amplitude-weight factor ell dropped from one
    # term of each bracket.
    d12_ell_printed: bool = False
    # cross initial-phase sum, second bracket: index 15 instead of the
    # mode-exchanged index 3.
    d12_tail_printed: bool = False
    # coupling-action coefficient 9: one mixed-mode term weighted r2 where
    # the amplitude-gradient product gives r1 (every other term of the same
    # coefficient carries r1).
    pi9_weight_printed: bool = False
    # coupling-action coefficient 10: weight written r1*r1^2 instead of r1*r2.
    pi10_weight_printed: bool = False
    # position-sector cross coefficient of the quadratic form: printed with
    # the same factor 8 as the squares, while the endpoint substitution gives 4.
    beta12_printed: bool = False
    # phase-sector elimination chain: one cross term dropped from the
    # fourth link and merged into the fifth.
    z45_printed: bool = False
    # phase-sector cross coefficient written with a duplicated factor
    # (e1*e1 instead of e1*e2).
    gp12_printed: bool = False
    # position-phase cross coefficients: printed without the imaginary unit
    # on the elimination cross terms and with halved link products.
    gphase_printed: bool = False

    def describe(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFAULT = Errata()

_NAMES = tuple(f.name for f in fields(Errata))


def parse_errata(spec: str | None) -> Errata:
    """Build an Errata set from a comma-separated list of flag names.

    Each entry is a flag name (enables the printed reading) or name=0/1.
    Unknown names raise ValueError listing the valid flags.
    """
    if not spec:
        return DEFAULT
    values: dict[str, bool] = {}
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" in chunk:
            name, _, raw = chunk.partition("=")
            name = name.strip()
            flag = raw.strip() not in ("0", "false", "False", "off")
        else:
            name, flag = chunk, True
        if name not in _NAMES:
            raise ValueError(
                f"unknown errata flag {name!r}; valid flags: {', '.join(_NAMES)}"
            )
        values[name] = flag
    return Errata(**values)

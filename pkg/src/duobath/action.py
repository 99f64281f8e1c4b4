"""Endpoint bilinear coefficients of the damped two-oscillator propagator.

The homogeneous (noise-free) part of the propagator exponent is a bilinear
form in the eight endpoint arguments: initial and final centre coordinates
X_i1, X_i2, X_f1, X_f2 and difference coordinates xi_i1, xi_i2, xi_f1,
xi_f2.  Three coefficient families build it up:

* ``b_coeffs``  -- single-time trig integrals of the two normal modes,
  bundled with the damping-shifted frequencies and the amplitude ratios.
* ``d_coeffs``  -- kinetic + potential contributions, one entry per
  endpoint pair (the cross pairs are only ever needed as sums and are
  stored summed).
* ``pi_coeffs`` -- coupling contributions, one entry per endpoint pair.

Which endpoint pair an entry multiplies:

====== ============   ====== ============
entry  pair           entry  pair
====== ============   ====== ============
D1     X_f1 xi_f1     Pi1    X_f1 xi_f1
Dp1    X_f2 xi_f2     Pi2    X_f1 xi_f2
D2     X_i1 xi_f1     Pi3    X_f2 xi_f1
Dp2    X_i2 xi_f2     Pi4    X_f2 xi_f2
D3     X_f1 xi_i1     Pi5    X_f1 xi_i1
Dp3    X_f2 xi_i2     Pi6    X_f1 xi_i2
D4     X_i1 xi_i1     Pi7    X_f2 xi_i1
Dp4    X_i2 xi_i2     Pi8    X_f2 xi_i2
D5     X_f2 xi_f1     Pi9    X_i1 xi_f1
D6     X_f1 xi_f2     Pi10   X_i1 xi_f2
D7     X_i1 xi_f2     Pi11   X_i2 xi_f1
D8     X_i2 xi_f1     Pi12   X_i2 xi_f2
D9     X_f1 xi_i2     Pi13   X_i1 xi_i1
D10    X_f2 xi_i1     Pi14   X_i1 xi_i2
D11    X_i1 xi_i2     Pi15   X_i2 xi_i1
D12    X_i2 xi_i1     Pi16   X_i2 xi_i2
====== ============   ====== ============

Overflow control: entries that multiply one initial difference argument
(xi_i1 or xi_i2) are stored premultiplied by u = exp(-gamma*t); all other
entries are stored at their true values.  The growing weight
n = exp(gamma*t)/((1 - r1*r2)*sin(Omega*t)) never appears: rows linear in n
are evaluated with the bounded hatted weight nhat = n*u instead (which is
exactly the premultiplication), final-final rows use the identity
n*nbar = nhat**2, and rows linear in the decaying nbar keep it as is.
The downstream Gaussian elimination consumes these rescaled combinations
directly, so no intermediate ever holds exp(+gamma*t).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errata import DEFAULT, Errata
from .model import NormalModes, SystemParams
from .modefuncs import ModeWeights, SFuncs, s_funcs


@dataclass(frozen=True)
class BCoeffs:
    """Mode trig integrals weighted by frequencies and amplitude ratios.

    b1..b16 carry the first oscillator's damping-shifted frequency, bp1..bp16
    the second's.  Equal pairs by construction: b2 == b3, b14 == b15 (and the
    primed twins); b9..b12 duplicate b5..b8 up to the bookkeeping split of the
    two-mode integrals (numerically b9 == b5, b10 == b7, b11 == b6, b12 == b8).
    """

    b1: float
    b2: float
    b3: float
    b4: float
    b5: float
    b6: float
    b7: float
    b8: float
    b9: float
    b10: float
    b11: float
    b12: float
    b13: float
    b14: float
    b15: float
    b16: float
    bp1: float
    bp2: float
    bp3: float
    bp4: float
    bp5: float
    bp6: float
    bp7: float
    bp8: float
    bp9: float
    bp10: float
    bp11: float
    bp12: float
    bp13: float
    bp14: float
    bp15: float
    bp16: float


def b_coeffs(t: float, params: SystemParams, modes: NormalModes) -> BCoeffs:
    """Trig-integral coefficient table at time t.

    Decoupled limit: the amplitude ratios vanish, so b5..b16 and bp5..bp16
    are all zero and each oscillator keeps only its own quartet.
    """
    s = s_funcs(t, modes)
    g = params.gamma
    o1 = modes.Omega1
    o2 = modes.Omega2
    r1 = modes.r1
    r2 = modes.r2
    wt1 = params.w01 * params.w01 - g * g
    wt2 = params.w02 * params.w02 - g * g

    b1 = o1 * o1 * s.s1 - wt1 * s.s2 - 2.0 * o1 * g * s.s5
    b2 = -o1 * o1 * s.s5 - wt1 * s.s5 - o1 * g * (s.s1 - s.s2)
    b3 = b2
    b4 = o1 * o1 * s.s2 - wt1 * s.s1 + 2.0 * o1 * g * s.s5
    b5 = r2 * (o1 * o2 * s.s7 - wt1 * s.s10 - o1 * g * s.s8 - o2 * g * s.s9)
    b6 = r2 * (-o1 * o2 * s.s8 - wt1 * s.s9 - o1 * g * s.s7 + o2 * g * s.s10)
    b7 = r2 * (-o1 * o2 * s.s9 - wt1 * s.s8 + o1 * g * s.s10 - o2 * g * s.s7)
    b8 = r2 * (o1 * o2 * s.s10 - wt1 * s.s7 + o1 * g * s.s9 + o2 * g * s.s8)
    b9 = r2 * (o1 * o2 * s.s11 - wt1 * s.s14 - o2 * g * s.s12 - o1 * g * s.s13)
    b10 = r2 * (-o1 * o2 * s.s12 - wt1 * s.s13 - o2 * g * s.s11 + o1 * g * s.s14)
    b11 = r2 * (-o1 * o2 * s.s13 - wt1 * s.s12 + o2 * g * s.s14 - o1 * g * s.s11)
    b12 = r2 * (o1 * o2 * s.s14 - wt1 * s.s11 + o2 * g * s.s13 + o1 * g * s.s12)
    b13 = r2 * r2 * (o2 * o2 * s.s3 - wt1 * s.s4 - 2.0 * o2 * g * s.s6)
    b14 = r2 * r2 * (-o2 * o2 * s.s6 - wt1 * s.s6 + o2 * g * (s.s4 - s.s3))
    b15 = b14
    b16 = r2 * r2 * (o2 * o2 * s.s4 - wt1 * s.s3 + 2.0 * o2 * g * s.s6)

    bp1 = o2 * o2 * s.s3 - wt2 * s.s4 - 2.0 * o2 * g * s.s6
    bp2 = -o2 * o2 * s.s6 - wt2 * s.s6 - o2 * g * (s.s3 - s.s4)
    bp3 = bp2
    bp4 = o2 * o2 * s.s4 - wt2 * s.s3 + 2.0 * o2 * g * s.s6
    bp5 = r1 * (o1 * o2 * s.s7 - wt2 * s.s10 - o1 * g * s.s8 - o2 * g * s.s9)
    bp6 = r1 * (-o1 * o2 * s.s8 - wt2 * s.s9 - o1 * g * s.s7 + o2 * g * s.s10)
    bp7 = r1 * (o1 * o2 * s.s10 - wt2 * s.s7 + o1 * g * s.s9 + o2 * g * s.s8)
    bp8 = r1 * (-o1 * o2 * s.s9 - wt2 * s.s8 + o1 * g * s.s10 - o2 * g * s.s7)
    bp9 = r1 * (o1 * o2 * s.s11 - wt2 * s.s14 - o2 * g * s.s12 - o1 * g * s.s13)
    bp10 = r1 * (-o1 * o2 * s.s12 - wt2 * s.s13 - o2 * g * s.s11 + o1 * g * s.s14)
    bp11 = r1 * (-o1 * o2 * s.s13 - wt2 * s.s12 + o2 * g * s.s14 - o1 * g * s.s11)
    bp12 = r1 * (o1 * o2 * s.s14 - wt2 * s.s11 + o2 * g * s.s13 + o1 * g * s.s12)
    bp13 = r1 * r1 * (o1 * o1 * s.s1 - wt2 * s.s2 - 2.0 * o1 * g * s.s5)
    bp14 = r1 * r1 * (-o1 * o1 * s.s5 - wt2 * s.s5 + o1 * g * (s.s2 - s.s1))
    bp15 = bp14
    bp16 = r1 * r1 * (o1 * o1 * s.s2 - wt2 * s.s1 + 2.0 * o1 * g * s.s5)

    return BCoeffs(
        b1, b2, b3, b4, b5, b6, b7, b8, b9, b10, b11, b12, b13, b14, b15, b16,
        bp1, bp2, bp3, bp4, bp5, bp6, bp7, bp8,
        bp9, bp10, bp11, bp12, bp13, bp14, bp15, bp16,
    )


@dataclass(frozen=True)
class DCoeffs:
    """Kinetic + potential endpoint coefficients (rescaled storage).

    D3, Dp3, D4, Dp4, D9, D10, D11, D12 multiply one initial difference
    argument and are stored times u = exp(-gamma*t); the rest are true values.
    """

    D1: float
    Dp1: float
    D2: float
    Dp2: float
    D3: float
    Dp3: float
    D4: float
    Dp4: float
    D5: float
    D6: float
    D7: float
    D8: float
    D9: float
    D10: float
    D11: float
    D12: float


def d_coeffs(
    t: float,
    params: SystemParams,
    modes: NormalModes,
    weights: ModeWeights,
    b: BCoeffs,
    errata: Errata = DEFAULT,
) -> DCoeffs:
    M1h = 0.5 * params.M1
    M2h = 0.5 * params.M2
    r1 = modes.r1
    r2 = modes.r2
    r1sq = r1 * r1
    r2sq = r2 * r2
    m1 = weights.m1
    m2 = weights.m2
    ell = weights.ell
    u = weights.u

    # --- final-final rows: n*nbar products collapse to nhat**2 exactly ---
    n1 = weights.nhat1
    n2 = weights.nhat2
    nb1 = weights.nhat1
    nb2 = weights.nhat2

    D1 = M1h * (n1 * nb1 * b.b1 - r1 * n1 * nb2 * b.b9
                - r1 * n2 * nb1 * b.b5 + r1sq * n2 * nb2 * b.b13) \
        + M2h * (n1 * nb1 * b.bp13 - r1 * n1 * nb2 * b.bp9
                 - r1 * n2 * nb1 * b.bp5 + r1sq * n2 * nb2 * b.bp1)
    Dp1 = M1h * (r2sq * n1 * nb1 * b.b1 - r2 * n1 * nb2 * b.b9
                 - r2 * n2 * nb1 * b.b5 + n2 * nb2 * b.b13) \
        + M2h * (r2sq * n1 * nb1 * b.bp13 - r2 * n1 * nb2 * b.bp9
                 - r2 * n2 * nb1 * b.bp5 + n2 * nb2 * b.bp1)
    D5 = M1h * (-r2 * n1 * nb1 * b.b1 + r1 * r2 * n1 * nb2 * b.b9
                + n2 * nb1 * b.b5 - r1 * n2 * nb2 * b.b13) \
        + M2h * (-r2 * n1 * nb1 * b.bp13 + r1 * r2 * n1 * nb2 * b.bp9
                 + n2 * nb1 * b.bp5 - r1 * n2 * nb2 * b.bp1)
    D6 = M1h * (-r2 * n1 * nb1 * b.b1 + n1 * nb2 * b.b9
                + r1 * r2 * n2 * nb1 * b.b5 - r1 * n2 * nb2 * b.b13) \
        + M2h * (-r2 * n1 * nb1 * b.bp13 + n1 * nb2 * b.bp9
                 + r1 * r2 * n2 * nb1 * b.bp5 - r1 * n2 * nb2 * b.bp1)

    # --- initial-position / final-difference rows: true decaying weights ---
    nb1 = weights.nbar1
    nb2 = weights.nbar2

    d2_tail = b.bp13 if errata.d2_tail_printed else b.bp1
    D2 = M1h * (-m1 * nb1 * b.b1 + r1 * m1 * nb2 * b.b9
                + nb1 * ell * b.b2 - r1 * nb2 * ell * b.b10
                + r1 * m2 * nb1 * b.b5 - r1sq * m2 * nb2 * b.b13
                - r1 * nb1 * ell * b.b6 + r1sq * nb2 * ell * b.b14) \
        + M2h * (-m1 * nb1 * b.bp13 + r1 * m1 * nb2 * b.bp9
                 + nb1 * ell * b.bp14 - r1 * nb2 * ell * b.bp10
                 + r1 * m2 * nb1 * b.bp5 - r1sq * m2 * nb2 * d2_tail
                 - r1 * nb1 * ell * b.bp6 + r1sq * nb2 * ell * b.bp2)
    Dp2 = M1h * (-r2sq * m1 * nb1 * b.b1 + r2 * m1 * nb2 * b.b9
                 + r2sq * nb1 * ell * b.b2 - r2 * nb2 * ell * b.b10
                 + r2 * m2 * nb1 * b.b5 - m2 * nb2 * b.b13
                 - r2 * nb1 * ell * b.b6 + nb2 * ell * b.b14) \
        + M2h * (-r2sq * m1 * nb1 * b.bp13 + r2 * m1 * nb2 * b.bp9
                 + r2sq * nb1 * ell * b.bp14 - r2 * nb2 * ell * b.bp10
                 + r2 * m2 * nb1 * b.bp5 - m2 * nb2 * d2_tail
                 - r2 * nb1 * ell * b.bp6 + nb2 * ell * b.bp2)
    D7 = M1h * (r2 * m1 * nb1 * b.b1 - m1 * nb2 * b.b9
                - r2 * nb1 * ell * b.b2 + nb2 * ell * b.b10
                - r1 * r2 * m2 * nb1 * b.b5 + r1 * m2 * nb2 * b.b13
                + r1 * r2 * nb1 * ell * b.b6 - r1 * nb2 * ell * b.b14) \
        + M2h * (r2 * m1 * nb1 * b.bp13 - m1 * nb2 * b.bp9
                 - r2 * nb1 * ell * b.bp14 + nb2 * ell * b.bp10
                 - r1 * r2 * m2 * nb1 * b.bp5 + r1 * m2 * nb2 * b.bp1
                 + r1 * r2 * nb1 * ell * b.bp6 - r1 * nb2 * ell * b.bp2)
    D8 = M1h * (r2 * m1 * nb1 * b.b1 - r1 * r2 * m1 * nb2 * b.b9
                - r2 * nb1 * ell * b.b2 + r1 * r2 * nb2 * ell * b.b10
                - m2 * nb1 * b.b5 + r1 * m2 * nb2 * b.b13
                + nb1 * ell * b.b6 - r1 * nb2 * ell * b.b14) \
        + M2h * (r2 * m1 * nb1 * b.bp13 - r1 * r2 * m1 * nb2 * b.bp9
                 - r2 * nb1 * ell * b.bp14 + r1 * r2 * nb2 * ell * b.bp10
                 - m2 * nb1 * b.bp5 + r1 * m2 * nb2 * b.bp1
                 + nb1 * ell * b.bp6 - r1 * nb2 * ell * b.bp2)

    # --- final-position / initial-difference rows: hatted, stored times u ---
    n1 = weights.nhat1
    n2 = weights.nhat2

    d3_6 = b.bp7 if errata.d3_tail_printed else b.bp8
    d3_7 = b.bp13 if errata.d3_tail_printed else b.bp1
    d3_8 = b.bp15 if errata.d3_tail_printed else b.bp3
    D3 = M1h * (-m1 * n1 * b.b1 + n1 * ell * b.b3
                + r1 * m2 * n1 * b.b9 - r1 * n1 * ell * b.b11
                + r1 * m1 * n2 * b.b5 - r1 * n2 * ell * b.b7
                - r1sq * m2 * n2 * b.b13 + r1sq * n2 * ell * b.b15) \
        + M2h * (-m1 * n1 * b.bp13 + n1 * ell * b.bp15
                 + r1 * m2 * n1 * b.bp9 - r1 * n1 * ell * b.bp11
                 + r1 * m1 * n2 * b.bp5 - r1 * n2 * ell * d3_6
                 - r1sq * m2 * n2 * d3_7 + r1sq * n2 * ell * d3_8)
    Dp3 = M1h * (-r2sq * m1 * n1 * b.b1 + r2sq * n1 * ell * b.b3
                 + r2 * m2 * n1 * b.b9 - r2 * n1 * ell * b.b11
                 + r2 * m1 * n2 * b.b5 - r2 * n2 * ell * b.b7
                 - m2 * n2 * b.b13 + n2 * ell * b.b15) \
        + M2h * (-r2sq * m1 * n1 * b.bp13 + r2sq * n1 * ell * b.bp15
                 + r2 * m2 * n1 * b.bp9 - r2 * n1 * ell * b.bp11
                 + r2 * m1 * n2 * b.bp5 - r2 * n2 * ell * d3_6
                 - m2 * n2 * d3_7 + n2 * ell * d3_8)
    D9 = M1h * (r2 * m1 * n1 * b.b1 - r2 * n1 * ell * b.b3
                - m2 * n1 * b.b9 + n1 * ell * b.b11
                - r1 * r2 * m1 * n2 * b.b5 + r1 * r2 * n2 * ell * b.b7
                + r1 * m2 * n2 * b.b13 - r1 * n2 * ell * b.b15) \
        + M2h * (r2 * m1 * n1 * b.bp13 - r2 * n1 * ell * b.bp15
                 - m2 * n1 * b.bp9 + n1 * ell * b.bp11
                 - r1 * r2 * m1 * n2 * b.bp5 + r1 * r2 * n2 * ell * b.bp8
                 + r1 * m2 * n2 * b.bp1 - r1 * n2 * ell * b.bp3)
    D10 = M1h * (r2 * m1 * n1 * b.b1 - r2 * n1 * ell * b.b3
                 - r1 * r2 * m2 * n1 * b.b9 + r1 * r2 * n1 * ell * b.b11
                 - m1 * n2 * b.b5 + n2 * ell * b.b7
                 + r1 * m2 * n2 * b.b13 - r1 * n2 * ell * b.b15) \
        + M2h * (r2 * m1 * n1 * b.bp13 - r2 * n1 * ell * b.bp15
                 - r1 * r2 * m2 * n1 * b.bp9 + r1 * r2 * n1 * ell * b.bp11
                 - m1 * n2 * b.bp5 + n2 * ell * b.bp8
                 + r1 * m2 * n2 * b.bp1 - r1 * n2 * ell * b.bp3)

    # --- initial-initial rows: no oscillatory weight, stored times u ---
    w4 = r1sq if errata.d4_weight_printed else r1
    D4 = u * (
        M1h * (m1 * m1 * b.b1 - m1 * ell * b.b3
               - r1 * m1 * m2 * b.b9 + r1 * m1 * ell * b.b11
               - m1 * ell * b.b2 + ell * ell * b.b4
               + r1 * m2 * ell * b.b10 - w4 * ell * ell * b.b12
               - r1 * m1 * m2 * b.b5 + r1 * m2 * ell * b.b7
               + r1sq * m2 * m2 * b.b13 - r1sq * m2 * ell * b.b15
               + r1 * m1 * ell * b.b6 - r1 * ell * ell * b.b8
               - r1sq * m2 * ell * b.b14 + r1sq * ell * ell * b.b16)
        + M2h * (m1 * m1 * b.bp13 - m1 * ell * b.bp15
                 - r1 * m1 * m2 * b.bp9 + r1 * m1 * ell * b.bp11
                 - m1 * ell * b.bp14 + ell * ell * b.bp16
                 + r1 * m2 * ell * b.bp10 - w4 * ell * ell * b.bp12
                 - r1 * m1 * m2 * b.bp5 + r1 * m2 * ell * b.bp8
                 + r1sq * m2 * m2 * b.bp1 - r1sq * m2 * ell * b.bp3
                 + r1 * m1 * ell * b.bp6 - r1 * ell * ell * b.bp7
                 - r1sq * m2 * ell * b.bp2 + r1sq * ell * ell * b.bp4)
    )
    Dp4 = u * (
        M1h * (r2sq * m1 * m1 * b.b1 - r2sq * m1 * ell * b.b3
               - r2 * m1 * m2 * b.b9 + r2 * m1 * ell * b.b11
               - r2sq * m1 * ell * b.b2 + r2sq * ell * ell * b.b4
               + r2 * m2 * ell * b.b10 - r2 * ell * ell * b.b12
               - r2 * m1 * m2 * b.b5 + r2 * m2 * ell * b.b7
               + m2 * m2 * b.b13 - m2 * ell * b.b15
               + r2 * m1 * ell * b.b6 - r2 * ell * ell * b.b8
               - m2 * ell * b.b14 + ell * ell * b.b16)
        + M2h * (r2sq * m1 * m1 * b.bp13 - r2sq * m1 * ell * b.bp15
                 - r2 * m1 * m2 * b.bp9 + r2 * m1 * ell * b.bp11
                 - r2sq * m1 * ell * b.bp14 + r2sq * ell * ell * b.bp16
                 + r2 * m2 * ell * b.bp10 - r2 * ell * ell * b.bp12
                 - r2 * m1 * m2 * b.bp5 + r2 * m2 * ell * b.bp8
                 + m2 * m2 * b.bp1 - m2 * ell * b.bp3
                 + r2 * m1 * ell * b.bp6 - r2 * ell * ell * b.bp7
                 - m2 * ell * b.bp2 + ell * ell * b.bp4)
    )
    D11 = u * (
        M1h * (-r2 * m1 * m1 * b.b1 + r2 * m1 * ell * b.b3
               + m2 * m1 * b.b9 - m1 * ell * b.b11
               + r2 * m1 * ell * b.b2 - r2 * ell * ell * b.b4
               - m2 * ell * b.b10 + ell * ell * b.b12
               + r1 * r2 * m1 * m2 * b.b5 - r1 * r2 * m2 * ell * b.b7
               - r1 * m2 * m2 * b.b13 + r1 * m2 * ell * b.b15
               - r1 * r2 * m1 * ell * b.b6 + r1 * r2 * ell * ell * b.b8
               + r1 * m2 * ell * b.b14 - r1 * ell * ell * b.b16)
        + M2h * (-r2 * m1 * m1 * b.bp13 + r2 * m1 * ell * b.bp15
                 + m2 * m1 * b.bp9 - m1 * ell * b.bp11
                 + r2 * m1 * ell * b.bp14 - r2 * ell * ell * b.bp16
                 - m2 * ell * b.bp10 + ell * ell * b.bp12
                 + r1 * r2 * m1 * m2 * b.bp5 - r1 * r2 * m2 * ell * b.bp8
                 - r1 * m2 * m2 * b.bp1 + r1 * m2 * ell * b.bp3
                 - r1 * r2 * m1 * ell * b.bp6 + r1 * r2 * ell * ell * b.bp7
                 + r1 * m2 * ell * b.bp2 - r1 * ell * ell * b.bp4)
    )
    ell12 = 1.0 if errata.d12_ell_printed else ell
    m12_2 = M1h if errata.d12_mass_printed else M2h
    d12_tail = b.bp15 if errata.d12_tail_printed else b.bp3
    D12 = u * (
        M1h * (-r2 * m1 * m1 * b.b1 + r2 * m1 * ell * b.b3
               + r1 * r2 * m2 * m1 * b.b9 - r1 * r2 * m1 * ell * b.b11
               + r2 * m1 * ell * b.b2 - r2 * ell * ell * b.b4
               - r1 * r2 * m2 * ell * b.b10 + r1 * r2 * ell * ell * b.b12
               + m1 * m2 * b.b5 - m2 * ell * b.b7
               - r1 * m2 * m2 * b.b13 + r1 * m2 * ell12 * b.b15
               - m1 * ell * b.b6 + ell * ell * b.b8
               + r1 * m2 * ell * b.b14 - r1 * ell * ell * b.b16)
        + m12_2 * (-r2 * m1 * m1 * b.bp13 + r2 * m1 * ell * b.bp15
                   + r1 * r2 * m2 * m1 * b.bp9 - r1 * r2 * m1 * ell * b.bp11
                   + r2 * m1 * ell * b.bp14 - r2 * ell * ell * b.bp16
                   - r1 * r2 * m2 * ell * b.bp10 + r1 * r2 * ell * ell * b.bp12
                   + m1 * m2 * b.bp5 - m2 * ell * b.bp8
                   - r1 * m2 * m2 * b.bp1 + r1 * m2 * ell12 * d12_tail
                   - m1 * ell * b.bp6 + ell * ell * b.bp7
                   + r1 * m2 * ell * b.bp2 - r1 * ell * ell * b.bp4)
    )

    return DCoeffs(D1, Dp1, D2, Dp2, D3, Dp3, D4, Dp4,
                   D5, D6, D7, D8, D9, D10, D11, D12)


@dataclass(frozen=True)
class PiCoeffs:
    """Coupling endpoint coefficients (rescaled storage).

    Pi5..Pi8 and Pi13..Pi16 multiply one initial difference argument and are
    stored times u = exp(-gamma*t); the rest are true values.  All entries
    vanish with the coupling.
    """

    Pi1: float
    Pi2: float
    Pi3: float
    Pi4: float
    Pi5: float
    Pi6: float
    Pi7: float
    Pi8: float
    Pi9: float
    Pi10: float
    Pi11: float
    Pi12: float
    Pi13: float
    Pi14: float
    Pi15: float
    Pi16: float


def pi_coeffs(
    t: float,
    params: SystemParams,
    modes: NormalModes,
    weights: ModeWeights,
    s: SFuncs,
    errata: Errata = DEFAULT,
) -> PiCoeffs:
    lam = params.lam
    r1 = modes.r1
    r2 = modes.r2
    r1sq = r1 * r1
    r2sq = r2 * r2
    opr = 1.0 + r1 * r2
    m1 = weights.m1
    m2 = weights.m2
    ell = weights.ell
    u = weights.u

    # --- final-final rows: n*nbar -> nhat**2 ---
    n1 = weights.nhat1
    n2 = weights.nhat2
    nb1 = weights.nhat1
    nb2 = weights.nhat2

    Pi1 = lam * (r1 * n1 * nb1 * s.s2 - 0.5 * r1 * opr * n1 * nb2 * s.s14
                 - 0.5 * r1 * opr * n2 * nb1 * s.s10 + r2 * r1sq * n2 * nb2 * s.s4)
    Pi2 = lam * (-r1 * r2 * n1 * nb1 * s.s2 + 0.5 * opr * n1 * nb2 * s.s14
                 + 0.5 * r1 * r2 * opr * n2 * nb1 * s.s10 - r1 * r2 * n2 * nb2 * s.s4)
    Pi3 = lam * (-r1 * r2 * n1 * nb1 * s.s2 + 0.5 * r1 * r2 * opr * n1 * nb2 * s.s14
                 + 0.5 * opr * n2 * nb1 * s.s10 - r1 * r2 * n2 * nb2 * s.s4)
    Pi4 = lam * (r1 * r2sq * n1 * nb1 * s.s2 - 0.5 * r2 * opr * n1 * nb2 * s.s14
                 - 0.5 * r2 * opr * n2 * nb1 * s.s10 + r2 * n2 * nb2 * s.s4)

    # --- final-position / initial-difference rows: hatted (times u) ---
    Pi5 = lam * (-r1 * n1 * m1 * s.s2 + r1 * n1 * ell * s.s5
                 + 0.5 * r1 * opr * n1 * m2 * s.s14 - 0.5 * r1 * opr * n1 * ell * s.s12
                 + 0.5 * r1 * opr * n2 * m1 * s.s10 - 0.5 * r1 * opr * n2 * ell * s.s8
                 - r2 * r1sq * n2 * m2 * s.s4 + r2 * r1sq * n2 * ell * s.s6)
    Pi6 = lam * (r1 * r2 * n1 * m1 * s.s2 - r1 * r2 * n1 * ell * s.s5
                 - 0.5 * opr * n1 * m2 * s.s14 + 0.5 * opr * n1 * ell * s.s12
                 - 0.5 * r1 * r2 * opr * n2 * m1 * s.s10
                 + 0.5 * r1 * r2 * opr * n2 * ell * s.s8
                 + r1 * r2 * n2 * m2 * s.s4 - r1 * r2 * n2 * ell * s.s6)
    Pi7 = lam * (r1 * r2 * n1 * m1 * s.s2 - r1 * r2 * n1 * ell * s.s5
                 - 0.5 * r1 * r2 * opr * n1 * m2 * s.s14
                 + 0.5 * r1 * r2 * opr * n1 * ell * s.s12
                 - 0.5 * opr * n2 * m1 * s.s10 + 0.5 * opr * n2 * ell * s.s8
                 + r1 * r2 * n2 * m2 * s.s4 - r1 * r2 * n2 * ell * s.s6)
    Pi8 = lam * (-r1 * r2sq * n1 * m1 * s.s2 + r1 * r2sq * n1 * ell * s.s5
                 + 0.5 * r2 * opr * n1 * m2 * s.s14 - 0.5 * r2 * opr * n1 * ell * s.s12
                 + 0.5 * r2 * opr * n2 * m1 * s.s10 - 0.5 * r2 * opr * n2 * ell * s.s8
                 - r2 * n2 * m2 * s.s4 + r2 * n2 * ell * s.s6)

    # --- initial-position / final-difference rows: true decaying weights ---
    nb1 = weights.nbar1
    nb2 = weights.nbar2

    w9 = r2 if errata.pi9_weight_printed else r1
    Pi9 = lam * (-r1 * m1 * nb1 * s.s2 + 0.5 * r1 * opr * m1 * nb2 * s.s14
                 + r1 * nb1 * ell * s.s5 - 0.5 * r1 * opr * nb2 * ell * s.s13
                 + 0.5 * r1 * opr * m2 * nb1 * s.s10 - r2 * r1sq * m2 * nb2 * s.s4
                 - 0.5 * w9 * opr * nb1 * ell * s.s9 + r2 * r1sq * nb2 * ell * s.s6)
    w10 = r1 * r1sq if errata.pi10_weight_printed else r1 * r2
    Pi10 = lam * (r1 * r2 * m1 * nb1 * s.s2 - 0.5 * opr * m1 * nb2 * s.s14
                  - r1 * r2 * nb1 * ell * s.s5 + 0.5 * opr * nb2 * ell * s.s13
                  - 0.5 * r1 * r2 * opr * m2 * nb1 * s.s10 + w10 * m2 * nb2 * s.s4
                  + 0.5 * r1 * r2 * opr * nb1 * ell * s.s9 - r1 * r2 * nb2 * ell * s.s6)
    Pi11 = lam * (r1 * r2 * m1 * nb1 * s.s2 - 0.5 * r1 * r2 * opr * m1 * nb2 * s.s14
                  - r1 * r2 * nb1 * ell * s.s5 + 0.5 * r1 * r2 * opr * nb2 * ell * s.s13
                  - 0.5 * opr * m2 * nb1 * s.s10 + r1 * r2 * m2 * nb2 * s.s4
                  + 0.5 * opr * nb1 * ell * s.s9 - r1 * r2 * nb2 * ell * s.s6)
    Pi12 = lam * (-r1 * r2sq * m1 * nb1 * s.s2 + 0.5 * r2 * opr * m1 * nb2 * s.s14
                  + r1 * r2sq * nb1 * ell * s.s5 - 0.5 * r2 * opr * nb2 * ell * s.s13
                  + 0.5 * r2 * opr * m2 * nb1 * s.s10 - r2 * m2 * nb2 * s.s4
                  - 0.5 * r2 * opr * nb1 * ell * s.s9 + r2 * nb2 * ell * s.s6)

    # --- initial-initial rows: stored times u ---
    Pi13 = u * lam * (
        r1 * m1 * m1 * s.s2 - 2.0 * r1 * m1 * ell * s.s5
        - 0.5 * r1 * opr * m1 * m2 * s.s14 + 0.5 * r1 * opr * m1 * ell * s.s12
        + r1 * ell * ell * s.s1 + 0.5 * r1 * opr * m2 * ell * s.s13
        - 0.5 * r1 * opr * ell * ell * s.s11 - 0.5 * r1 * opr * m1 * m2 * s.s10
        + 0.5 * r1 * opr * m2 * ell * s.s8 + r2 * r1sq * m2 * m2 * s.s4
        - 2.0 * r2 * r1sq * m2 * ell * s.s6 + 0.5 * r1 * opr * m1 * ell * s.s9
        - 0.5 * r1 * opr * ell * ell * s.s7 + r2 * r1sq * ell * ell * s.s3
    )
    Pi14 = u * lam * (
        -r1 * r2 * m1 * m1 * s.s2 + 2.0 * r1 * r2 * m1 * ell * s.s5
        + 0.5 * opr * m1 * m2 * s.s14 - 0.5 * opr * m1 * ell * s.s12
        - r1 * r2 * ell * ell * s.s1 - 0.5 * opr * m2 * ell * s.s13
        + 0.5 * opr * ell * ell * s.s11 + 0.5 * r1 * r2 * opr * m1 * m2 * s.s10
        - 0.5 * r1 * r2 * opr * m2 * ell * s.s8 - r1 * r2 * m2 * m2 * s.s4
        + 2.0 * r1 * r2 * m2 * ell * s.s6 - 0.5 * r1 * r2 * opr * m1 * ell * s.s9
        + 0.5 * r1 * r2 * opr * ell * ell * s.s7 - r1 * r2 * ell * ell * s.s3
    )
    Pi15 = u * lam * (
        -r1 * r2 * m1 * m1 * s.s2 + 2.0 * r1 * r2 * m1 * ell * s.s5
        + 0.5 * r1 * r2 * opr * m1 * m2 * s.s14 - 0.5 * r1 * r2 * opr * m1 * ell * s.s12
        - r1 * r2 * ell * ell * s.s1 - 0.5 * r1 * r2 * opr * m2 * ell * s.s13
        + 0.5 * r1 * r2 * opr * ell * ell * s.s11 + 0.5 * opr * m1 * m2 * s.s10
        - 0.5 * opr * m2 * ell * s.s8 - r1 * r2 * m2 * m2 * s.s4
        + 2.0 * r1 * r2 * m2 * ell * s.s6 - 0.5 * opr * m1 * ell * s.s9
        + 0.5 * opr * ell * ell * s.s7 - r1 * r2 * ell * ell * s.s3
    )
    Pi16 = u * lam * (
        r1 * r2sq * m1 * m1 * s.s2 - 2.0 * r1 * r2sq * m1 * ell * s.s5
        - 0.5 * r2 * opr * m1 * m2 * s.s14 + 0.5 * r2 * opr * m1 * ell * s.s12
        + r1 * r2sq * ell * ell * s.s1 + 0.5 * r2 * opr * m2 * ell * s.s13
        - 0.5 * r2 * opr * ell * ell * s.s11 - 0.5 * r2 * opr * m1 * m2 * s.s10
        + 0.5 * r2 * opr * m2 * ell * s.s8 + r2 * m2 * m2 * s.s4
        - 2.0 * r2 * m2 * ell * s.s6 + 0.5 * r2 * opr * m1 * ell * s.s9
        - 0.5 * r2 * opr * ell * ell * s.s7 + r2 * ell * ell * s.s3
    )

    return PiCoeffs(Pi1, Pi2, Pi3, Pi4, Pi5, Pi6, Pi7, Pi8,
                    Pi9, Pi10, Pi11, Pi12, Pi13, Pi14, Pi15, Pi16)

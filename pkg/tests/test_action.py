"""Action coefficient tables against two independent constructions.

Route 1 (slot products): expand both pinned trajectories of the forward
and backward branches in the endpoint basis, then contract the bilinear
kernel of the cross action with the two gradient vectors slot by slot.
Route 2 (quadrature): integrate the cross Lagrangian along the actual
classical paths with unit endpoint excitations.  Either route must
reproduce every table entry, in true (unhatted) normalization.
"""

import math

import numpy as np
import pytest

from duobath.action import b_coeffs, d_coeffs, pi_coeffs
from duobath.errata import Errata
from duobath.model import Endpoints, SystemParams, classical_path, normal_modes
from duobath.modefuncs import mode_weights, s_funcs

PAIRS = [
    ("f1", "f1"), ("f2", "f2"), ("i1", "f1"), ("i2", "f2"),
    ("f1", "i1"), ("f2", "i2"), ("i1", "i1"), ("i2", "i2"),
    ("f2", "f1"), ("f1", "f2"), ("i1", "f2"), ("i2", "f1"),
    ("f1", "i2"), ("f2", "i1"), ("i1", "i2"), ("i2", "i1"),
]


def build_tables(p, t):
    modes = normal_modes(p)
    w = mode_weights(t, modes, p.gamma)
    s = s_funcs(t, modes)
    b = b_coeffs(t, p, modes)
    D = d_coeffs(t, p, modes, w, b)
    Pi = pi_coeffs(t, p, modes, w, s)
    u = w.u
    table = {
        ("f1", "f1"): D.D1 + Pi.Pi1,
        ("f2", "f2"): D.Dp1 + Pi.Pi4,
        ("i1", "f1"): D.D2 + Pi.Pi9,
        ("i2", "f2"): D.Dp2 + Pi.Pi12,
        ("f1", "i1"): (D.D3 + Pi.Pi5) / u,
        ("f2", "i2"): (D.Dp3 + Pi.Pi8) / u,
        ("i1", "i1"): (D.D4 + Pi.Pi13) / u,
        ("i2", "i2"): (D.Dp4 + Pi.Pi16) / u,
        ("f2", "f1"): D.D5 + Pi.Pi3,
        ("f1", "f2"): D.D6 + Pi.Pi2,
        ("i1", "f2"): D.D7 + Pi.Pi10,
        ("i2", "f1"): D.D8 + Pi.Pi11,
        ("f1", "i2"): (D.D9 + Pi.Pi6) / u,
        ("f2", "i1"): (D.D10 + Pi.Pi7) / u,
        ("i1", "i2"): (D.D11 + Pi.Pi14) / u,
        ("i2", "i1"): (D.D12 + Pi.Pi15) / u,
    }
    return modes, w, s, b, D, Pi, table


def slot_value(p, modes, w, s, b, a, bgt):
    n1t, n2t = w.n1, w.n2
    nb1, nb2 = w.nbar1, w.nbar2
    m1, m2, ell = w.m1, w.m2, w.ell
    r1, r2 = modes.r1, modes.r2
    gx = {
        "f1": (n1t, 0.0, -r1 * n2t, 0.0),
        "f2": (-r2 * n1t, 0.0, n2t, 0.0),
        "i1": (-m1, ell, r1 * m2, -r1 * ell),
        "i2": (r2 * m1, -r2 * ell, -m2, ell),
    }
    gxi = {
        "f1": (nb1, 0.0, -r1 * nb2, 0.0),
        "f2": (-r2 * nb1, 0.0, nb2, 0.0),
        "i1": gx["i1"],
        "i2": gx["i2"],
    }
    M1h, M2h = 0.5 * p.M1, 0.5 * p.M2
    bK = [[M1h * b.b1 + M2h * b.bp13, M1h * b.b2 + M2h * b.bp14,
           M1h * b.b5 + M2h * b.bp5, M1h * b.b6 + M2h * b.bp6],
          [M1h * b.b3 + M2h * b.bp15, M1h * b.b4 + M2h * b.bp16,
           M1h * b.b7 + M2h * b.bp8, M1h * b.b8 + M2h * b.bp7],
          [M1h * b.b9 + M2h * b.bp9, M1h * b.b10 + M2h * b.bp10,
           M1h * b.b13 + M2h * b.bp1, M1h * b.b14 + M2h * b.bp2],
          [M1h * b.b11 + M2h * b.bp11, M1h * b.b12 + M2h * b.bp12,
           M1h * b.b15 + M2h * b.bp3, M1h * b.b16 + M2h * b.bp4]]
    lam = p.lam
    h = 0.5 * (1.0 + r1 * r2) * lam
    pK = [[lam * r1 * s.s2, lam * r1 * s.s5, h * s.s10, h * s.s9],
          [lam * r1 * s.s5, lam * r1 * s.s1, h * s.s8, h * s.s7],
          [h * s.s10, h * s.s8, lam * r2 * s.s4, lam * r2 * s.s6],
          [h * s.s9, h * s.s7, lam * r2 * s.s6, lam * r2 * s.s3]]
    va, vb = gx[a], gxi[bgt]
    return sum(va[i] * vb[j] * (bK[i][j] + pK[i][j])
               for i in range(4) for j in range(4))


def action_quadrature(p, modes, t, a, bgt):
    nodes, wts = np.polynomial.legendre.leggauss(400)
    tau = 0.5 * t * (nodes + 1.0)
    qw = 0.5 * t * wts

    def unit_ends(name):
        vals = dict(Xi1=0.0, Xi2=0.0, Xf1=0.0, Xf2=0.0)
        vals[{"i1": "Xi1", "i2": "Xi2", "f1": "Xf1", "f2": "Xf2"}[name]] = 1.0
        return Endpoints(**vals)

    g = p.gamma
    px = classical_path(t, unit_ends(a), modes, g)
    pxi = classical_path(t, unit_ends(bgt), modes, -g)
    X1, X2 = px(tau)
    V1, V2 = px.velocities(tau)
    Y1, Y2 = pxi(tau)
    W1, W2 = pxi.velocities(tau)
    L = (0.5 * p.M1 * V1 * W1 - 0.5 * p.M1 * p.w01 ** 2 * X1 * Y1
         - p.M1 * g * V1 * Y1
         + 0.5 * p.M2 * V2 * W2 - 0.5 * p.M2 * p.w02 ** 2 * X2 * Y2
         - p.M2 * g * V2 * Y2
         + 0.5 * p.lam * (X1 * Y2 + X2 * Y1))
    return float(np.sum(qw * L))


@pytest.fixture(scope="module")
def asym():
    return SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.12,
                        lam=0.45 * 1.7 * math.sqrt(2.3))


@pytest.mark.parametrize("t", [0.9, 2.7, 7.3])
def test_table_matches_slot_products(asym, t):
    modes, w, s, b, D, Pi, table = build_tables(asym, t)
    for key, tv in table.items():
        sv = slot_value(asym, modes, w, s, b, *key)
        scale = max(abs(tv), abs(sv), 1e-300)
        assert abs(tv - sv) / scale < 1e-12, key


def test_table_matches_action_quadrature(asym):
    t = 2.7
    modes, w, s, b, D, Pi, table = build_tables(asym, t)
    for key, tv in table.items():
        qv = action_quadrature(asym, modes, t, *key)
        scale = max(abs(tv), abs(qv), 1e-300)
        assert abs(tv - qv) / scale < 1e-10, key


def test_decoupled_cross_entries_vanish():
    p0 = SystemParams(M1=1.0, M2=2.3, w01=1.0, w02=1.7, gamma=0.12, lam=0.0)
    _, _, _, _, _, _, table = build_tables(p0, 2.7)
    diag_scale = abs(table[("f1", "f1")]) + abs(table[("f2", "f2")])
    for a, bgt in PAIRS:
        if a[-1] != bgt[-1]:
            assert abs(table[(a, bgt)]) < 1e-13 * diag_scale, (a, bgt)


@pytest.mark.parametrize("flag,fields", [
    ("d2_tail_printed", {"D2", "Dp2"}),
    ("d3_tail_printed", {"D3", "Dp3"}),
    ("d4_weight_printed", {"D4"}),
    ("d12_mass_printed", {"D12"}),
    ("d12_ell_printed", {"D12"}),
    ("d12_tail_printed", {"D12"}),
])
def test_d_errata_touch_exactly_their_entries(asym, flag, fields):
    t = 2.7
    modes = normal_modes(asym)
    w = mode_weights(t, modes, asym.gamma)
    b = b_coeffs(t, asym, modes)
    D = d_coeffs(t, asym, modes, w, b)
    Dx = d_coeffs(t, asym, modes, w, b, Errata(**{flag: True}))
    names = ("D1 Dp1 D2 Dp2 D3 Dp3 D4 Dp4 D5 D6 D7 D8 D9 D10 D11 D12").split()
    changed = {f for f in names if getattr(Dx, f) != getattr(D, f)}
    assert changed == fields


@pytest.mark.parametrize("flag,fields", [
    ("pi9_weight_printed", {"Pi9"}),
    ("pi10_weight_printed", {"Pi10"}),
])
def test_pi_errata_touch_exactly_their_entries(asym, flag, fields):
    t = 2.7
    modes = normal_modes(asym)
    w = mode_weights(t, modes, asym.gamma)
    s = s_funcs(t, modes)
    Pi = pi_coeffs(t, asym, modes, w, s)
    Px = pi_coeffs(t, asym, modes, w, s, Errata(**{flag: True}))
    changed = {f"Pi{k}" for k in range(1, 17)
               if getattr(Px, f"Pi{k}") != getattr(Pi, f"Pi{k}")}
    assert changed == fields

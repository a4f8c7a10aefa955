import math
from fractions import Fraction

import numpy as np
import pytest

from eqstates import (
    BetaExpansion,
    BetaTransformMap,
    DifferencePotential,
    GeometricPotential,
    MPMap,
    cylinder_interval,
    diagnostics,
    itinerary,
    kneading_sequence,
    mp_decompose,
    pressure_curve,
    symbolic_model,
    transfer_envelope_upper,
    x_ladder,
)
from eqstates.errors import InputError


def test_beta_map_itinerary():
    pm = BetaTransformMap("3/2")
    assert itinerary(pm, 0.7, 3) == (1, 0, 0)


def test_itinerary_matches_cylinder():
    pm = BetaTransformMap("3/2")
    for x in (0.1, 0.45, 0.7, 0.9):
        w = itinerary(pm, x, 6)
        lo, hi = cylinder_interval(pm, w)
        assert lo - 1e-12 <= x <= hi + 1e-12


def test_cylinder_interval_values():
    pm = BetaTransformMap("3/2")
    lo, hi = cylinder_interval(pm, (1,))
    assert abs(lo - 2.0 / 3.0) < 1e-9 and abs(hi - 1.0) < 1e-9
    # f([2/3,1]) = [0,1/2) stays in branch 0, so [10] is all of [1]
    lo, hi = cylinder_interval(pm, (1, 0))
    assert abs(lo - 2.0 / 3.0) < 1e-9 and abs(hi - 1.0) < 1e-9


def test_kneading_matches_greedy_digits():
    # certifiable length shrinks with beta: interval width grows like beta^n
    for beta, k in (("3/2", 30), ("5/2", 22), ("1.8", 30), ("golden", 30)):
        pm = BetaTransformMap(beta)
        dig = BetaExpansion(beta)
        assert kneading_sequence(pm, k) == dig.prefix(k)


def test_kneading_raises_beyond_float_precision():
    with pytest.raises(Exception) as ei:
        kneading_sequence(BetaTransformMap("5/2"), 60)
    assert "stalled" in str(ei.value)


def test_symbolic_model_of_beta_map():
    m = symbolic_model(BetaTransformMap("3/2"))
    assert m.contains((1, 0))
    assert not m.contains((1, 1))


def test_mp_map_full_branches_when_gamma_one():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    assert pm.full_branches
    m = symbolic_model(pm)
    assert m.count_words(5) == 32


def test_mp_fixed_boundary_value():
    # x0 solves x + x^(3/2) = 1
    pm = MPMap(Fraction(1), Fraction(1, 2))
    lad = x_ladder(pm, 5)
    x0 = lad.xs[0]
    assert abs(x0 + x0**1.5 - 1.0) < 1e-10
    assert abs(x0 - 0.5698402910) < 1e-8


def test_ladder_is_backward_orbit():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    lad = x_ladder(pm, 40)
    for n in range(1, 40):
        assert abs(pm.F(lad.xs[n]) - lad.xs[n - 1]) < 1e-9
    # gaps x_n - x_{n+1} decay like n^-3 for eps = 1/2
    fit = lad.decay_fit(20, 38)
    assert -3.6 < fit < -2.4


def test_itinerary_zero_block_lands_in_ladder_cell():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    lad = x_ladder(pm, 12)
    # the cylinder [0^n 1] is exactly the ladder cell [x_n, x_{n-1})
    for n in range(1, 8):
        lo, hi = cylinder_interval(pm, (0,) * n + (1,))
        assert abs(lo - lad.xs[n]) < 1e-9
        assert abs(hi - lad.xs[n - 1]) < 1e-9


def test_geometric_potential_first_coefficient():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    dec = mp_decompose(pm, 32)
    a0 = dec["a"][0]
    x0 = dec["ladder"].xs[0]
    assert abs(a0 + math.log(pm.dF(x0))) < 1e-12
    assert abs(a0 - (-0.7572)) < 1e-3


def test_geometric_potential_brackets_contain_point_values():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    pot = GeometricPotential(pm, 1.0)
    m = symbolic_model(pm)
    for w in [(0,), (1,), (0, 1), (1, 0, 0)]:
        lo, hi = cylinder_interval(pm, w)
        x = 0.5 * (lo + hi)
        s = 0.0
        y = x
        for _ in range(len(w)):
            s += -math.log(pm.dF(y))
            y = pm.f(y)
        sup = pot.sup_interval(m, w)
        inf = pot.inf_interval(m, w)
        assert inf.lo - 1e-9 <= s <= sup.hi + 1e-9


def test_difference_potential_cancels():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    pot = GeometricPotential(pm, 1.0)
    d = DifferencePotential(pot, pot)
    m = symbolic_model(pm)
    w = (0, 1, 0)
    iv = d.sup_interval(m, w)
    # the difference bracket is built from opposite endpoints so it contains
    # zero with width at most the cylinder oscillation of each operand
    assert iv.lo <= 1e-9 and iv.hi >= -1e-9
    osc = pot.sup_interval(m, w).hi - pot.inf_interval(m, w).lo
    assert iv.hi - iv.lo <= 2 * osc + 1e-9


def test_diagnostics_deterministic():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    d1 = diagnostics(pm, n=20, samples=100, seed=3)
    d2 = diagnostics(pm, n=20, samples=100, seed=3)
    assert d1 == d2


def test_envelope_upper_at_t_zero_is_log2():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    ups = transfer_envelope_upper(pm, [0.0], n_steps=40)
    assert abs(ups[0] - math.log(2)) < 1e-9


def test_envelope_upper_decreasing_in_t():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    ups = transfer_envelope_upper(pm, [0.0, 0.5, 1.0], n_steps=60)
    assert ups[0] >= ups[1] >= ups[2]


def test_pressure_curve_shape():
    pm = MPMap(Fraction(1), Fraction(1, 2))
    pc = pressure_curve(pm, [0.0, 0.5, 1.0], n=8)
    assert len(pc.ts) == 3
    for lo, hi in zip(pc.lowers, pc.uppers):
        assert lo <= hi + 1e-12
    # P(0) = log 2 up to the bracket
    assert pc.lowers[0] - 1e-9 <= math.log(2) <= pc.uppers[0] + 1e-9


def test_mp_rejects_bad_parameters():
    with pytest.raises(InputError):
        MPMap(Fraction(0), Fraction(1, 2))

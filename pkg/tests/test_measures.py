import math

from eqstates import (
    BasicBetaDecomposition,
    BetaExpansion,
    BetaShift,
    FullShift,
    LocallyConstant,
    ZeroPotential,
    cesaro_measure,
    cylinder_mass,
    gibbs_report,
    periodic_orbit_measure,
    pressure_bracket,
)
from eqstates.beta import TrivialDecomposition


def bernoulli_potential(p=0.3):
    return LocallyConstant(1, {(0,): math.log(p), (1,): math.log(1 - p)})


def test_periodic_measure_total_mass():
    m = FullShift(2)
    meas = periodic_orbit_measure(m, bernoulli_potential(), 6)
    assert abs(meas.total - 1.0) < 1e-12


def test_periodic_measure_product_masses():
    # weights e^{S_n phi} on period-n orbits reproduce the product measure
    p = 0.3
    m = FullShift(2)
    meas = periodic_orbit_measure(m, bernoulli_potential(p), 8)
    for u in [(0,), (1,), (0, 1), (1, 1, 0)]:
        expect = 1.0
        for s in u:
            expect *= p if s == 0 else 1 - p
        assert abs(cylinder_mass(meas, u) - expect) < 1e-12


def test_periodic_measure_shift_invariance():
    # mass of [u] equals the mass of the one-step preimage union [0u] + [1u]
    m = FullShift(2)
    meas = periodic_orbit_measure(m, bernoulli_potential(0.4), 7)
    for u in [(0,), (1, 0), (0, 1, 1)]:
        pre = sum(cylinder_mass(meas, (s,) + u) for s in range(2))
        assert abs(cylinder_mass(meas, u) - pre) < 1e-12


def test_cesaro_measure_uniform_on_beta():
    # zero potential, n=3 on the 3/2-shift: 5 words, weight 1/5 each,
    # averaged over 3 shift offsets; mass of [1] counts words with a 1 in
    # each window position
    dig = BetaExpansion("3/2")
    m = BetaShift(dig)
    meas = cesaro_measure(m, ZeroPotential(), 3)
    assert abs(meas.total - 1.0) < 1e-12
    # hand count: words 000,001,010,100,101; 1s appear in 5 of the 15
    # (word, offset) windows
    assert abs(cylinder_mass(meas, (1,)) - 5.0 / 15.0) < 1e-12


def test_gibbs_ratios_bernoulli_are_one():
    p = 0.3
    m = FullShift(2)
    pot = bernoulli_potential(p)
    dec = TrivialDecomposition(m, 0)
    pb = pressure_bracket(m, pot, dec, 8)
    meas = periodic_orbit_measure(m, pot, 8)
    rep = gibbs_report(meas, pot, pb, dec, 1, 4)
    assert rep.zero_mass == []
    for _, _, lo, hi in rep.rows:
        assert abs(lo - 1.0) < 1e-9 and abs(hi - 1.0) < 1e-9


def test_dump_is_deterministic():
    m = BetaShift(BetaExpansion("3/2"))
    a = "\n".join(cesaro_measure(m, ZeroPotential(), 4).dump_json_lines())
    b = "\n".join(cesaro_measure(m, ZeroPotential(), 4).dump_json_lines())
    assert a == b


def test_beta_cesaro_respects_language():
    dig = BetaExpansion("3/2")
    m = BetaShift(dig)
    meas = cesaro_measure(m, ZeroPotential(), 4)
    assert cylinder_mass(meas, (1, 1)) == 0.0

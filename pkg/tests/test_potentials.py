import math

from eqstates import (
    BetaExpansion,
    BetaShift,
    FullShift,
    GridCoefficients,
    GridLevelDecomposition,
    GridPotential,
    LocallyConstant,
    ScaledPotential,
    SumPotential,
    ZeroPotential,
    grid_bowen_criterion,
    phi_n,
    variation_diagnostic,
)


def harmonic_coeffs():
    return GridCoefficients(a=lambda k: 1.0 / (k + 1), sup_tail=lambda K: 1.0 / (K + 1))


def geometric_coeffs(r=0.5):
    return GridCoefficients(a=lambda k: r**k, sup_tail=lambda K: r**K)


def test_zero_potential():
    m = FullShift(2)
    iv = phi_n(ZeroPotential(), m, (0, 1, 0))
    assert iv.lo == iv.hi == 0.0


def test_locally_constant_exact_bernoulli():
    # depth-1 table log p / log(1-p): Birkhoff sums are exact, interval width 0
    p = 0.3
    pot = LocallyConstant(1, {(0,): math.log(p), (1,): math.log(1 - p)})
    m = FullShift(2)
    w = (0, 1, 1, 0)
    iv = phi_n(pot, m, w)
    expect = 2 * math.log(p) + 2 * math.log(1 - p)
    assert iv.lo == iv.hi
    assert abs(iv.lo - expect) < 1e-14


def test_locally_constant_depth2_sup_is_exact():
    # the length-3 sup-Birkhoff value over [101] is the max over the single
    # undetermined window, so the bracket collapses to the exact sup
    table = {w: 0.1 * w[0] - 0.3 * w[1] for w in [(0, 0), (0, 1), (1, 0), (1, 1)]}
    pot = LocallyConstant(2, table)
    m = FullShift(2)
    w = (1, 0, 1)
    iv = phi_n(pot, m, w)
    truth = max(
        sum(table[(w + (s,))[i : i + 2]] for i in range(3)) for s in (0, 1)
    )
    assert iv.lo == iv.hi
    assert abs(iv.lo - truth) < 1e-14


def test_grid_harmonic_block_hull():
    # word 0000: each position contributes a(m) with m the remaining zeros
    # until the terminating 1.  A terminating 1 right after the word gives
    # a(1)+a(2)+a(3)+a(4); an all-zero continuation drives contributions to 0.
    # The hull must contain both scenarios.
    pot = GridPotential(harmonic_coeffs())
    m = FullShift(2)
    iv = phi_n(pot, m, (0, 0, 0, 0))
    immediate = sum(1.0 / (k + 1) for k in (1, 2, 3, 4))
    assert iv.lo - 1e-12 <= 0.0
    assert iv.hi + 1e-12 >= immediate
    assert iv.hi - iv.lo <= immediate + 1e-12


def test_grid_visible_runs_exact():
    # 0011: both zero positions see their terminating 1 inside the word and
    # the 1s contribute a(0); no tail uncertainty remains
    pot = GridPotential(harmonic_coeffs())
    m = FullShift(2)
    iv = phi_n(pot, m, (0, 0, 1, 1))
    expect = 1.0 / 3.0 + 1.0 / 2.0 + 1.0 + 1.0
    assert abs(iv.lo - expect) < 1e-12
    assert abs(iv.hi - expect) < 1e-12


def test_sum_and_scale_wrappers():
    m = FullShift(2)
    g = GridPotential(geometric_coeffs())
    z = ZeroPotential()
    s = SumPotential([g, z])
    sc = ScaledPotential(g, 2.0)
    w = (0, 0, 1)
    assert abs(s.sup_interval(m, w).hi - g.sup_interval(m, w).hi) < 1e-12
    assert abs(sc.sup_interval(m, w).hi - 2 * g.sup_interval(m, w).hi) < 1e-10


def test_bowen_criterion_verdicts():
    assert grid_bowen_criterion(geometric_coeffs())["verdict"] == "bowen"
    alt = GridCoefficients(
        a=lambda k: (-1.0) ** k / (k + 1), sup_tail=lambda K: 1.0 / (K + 1)
    )
    assert grid_bowen_criterion(alt)["verdict"] == "bowen"
    harm = grid_bowen_criterion(harmonic_coeffs())
    assert harm["verdict"] == "not-bowen"
    # frozen oracle: 256-term partial harmonic sum
    expect = sum(1.0 / k for k in range(1, 257))
    assert abs(harm["partial_sums"][-1] - expect) < 1e-9


def test_variation_bounded_for_geometric():
    m = FullShift(2)
    pot = GridPotential(geometric_coeffs())
    d = variation_diagnostic(pot, m, lambda w: True, 8)
    assert d["verdict"] == "bounded"
    assert all(v >= -1e-12 for v in d["V"])


def test_variation_growing_for_harmonic():
    m = FullShift(2)
    pot = GridPotential(harmonic_coeffs())
    d = variation_diagnostic(pot, m, lambda w: True, 10)
    assert d["verdict"] == "growing"


def test_grid_level_decomposition_split():
    m = FullShift(2)
    dec = GridLevelDecomposition(m, None, 1)
    for w in m.enumerate_words(5):
        g, s = dec.split(w)
        assert g + s == w
        if dec.in_G(w):
            assert s == ()


def test_grid_level_good_dominated_by_language():
    m = BetaShift(BetaExpansion("3/2"))
    dec = GridLevelDecomposition(m, None, 1)
    for n in range(1, 7):
        good = [w for w in m.enumerate_words(n) if dec.in_G(w)]
        assert len(good) <= m.count_words(n)

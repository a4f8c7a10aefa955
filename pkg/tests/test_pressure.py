import math

import numpy as np

from eqstates import (
    BasicBetaDecomposition,
    BetaExpansion,
    BetaShift,
    FullShift,
    LocallyConstant,
    SFT,
    TrivialDecomposition,
    ZeroPotential,
    condition_III_diagnostic,
    partition_sum,
    pressure_bracket,
)


def classify_all(w):
    return True


def test_full_shift_partition_sum_counts():
    m = FullShift(2)
    ps = partition_sum(m, ZeroPotential(), classify_all, 5)
    assert ps.count == 32
    assert abs(ps.lo - 32.0) < 1e-9
    assert abs(ps.hi - 32.0) < 1e-9


def test_beta_partition_sum_counts():
    m = BetaShift(BetaExpansion("3/2"))
    ps = partition_sum(m, ZeroPotential(), classify_all, 3)
    assert ps.count == 5
    assert abs(ps.lo - 5.0) < 1e-9


def test_bernoulli_partition_sum_is_one():
    # sum over all words of prod p_i = 1 exactly for a probability vector
    p = 0.3
    pot = LocallyConstant(1, {(0,): math.log(p), (1,): math.log(1 - p)})
    m = FullShift(2)
    ps = partition_sum(m, pot, classify_all, 4)
    assert abs(ps.lo - 1.0) < 1e-12
    assert abs(ps.hi - 1.0) < 1e-12


def golden_mean_entropy_oracle():
    # top eigenvalue of [[1,1],[1,0]]
    return float(np.log(np.max(np.linalg.eigvals(np.array([[1.0, 1.0], [1.0, 0.0]]))).real))


def test_sft_entropy_bracket_contains_transfer_matrix_value():
    m = SFT(2, [(1, 1)])
    dec = TrivialDecomposition(m, 1)
    pb = pressure_bracket(m, ZeroPotential(), dec, 12)
    h = golden_mean_entropy_oracle()
    assert pb.lower - 1e-12 <= h <= pb.upper + 1e-12
    assert pb.upper - pb.lower < 0.15


def test_full_shift_pressure_exact_log2():
    m = FullShift(2)
    dec = TrivialDecomposition(m, 0)
    pb = pressure_bracket(m, ZeroPotential(), dec, 8)
    assert abs(pb.upper - math.log(2)) < 1e-12
    assert abs(pb.lower - math.log(2)) < 1e-9


def test_beta_pressure_bracket_contains_log_beta():
    m = BetaShift(BetaExpansion("3/2"))
    dec = BasicBetaDecomposition(m.digits)
    pb = pressure_bracket(m, ZeroPotential(), dec, 12)
    assert pb.lower - 1e-12 <= math.log(1.5) <= pb.upper + 1e-12


def test_upper_sequence_submultiplicative():
    # (1/k) log Lambda_k is nonincreasing along doubling for the full language
    m = BetaShift(BetaExpansion("5/2"))
    vals = []
    for k in (3, 6):
        ps = partition_sum(m, ZeroPotential(), classify_all, k)
        vals.append(math.log(ps.hi) / k)
    assert vals[1] <= vals[0] + 1e-12


def test_lambda_pairwise_inequality():
    # Lambda_{m+n} <= Lambda_m Lambda_n for sup-type sums over the language
    m = FullShift(2)
    pot = LocallyConstant(1, {(0,): -0.2, (1,): 0.4})
    lam = {}
    for k in range(1, 7):
        lam[k] = partition_sum(m, pot, classify_all, k).hi
    for a in range(1, 4):
        for b in range(1, 4):
            assert lam[a + b] <= lam[a] * lam[b] * (1 + 1e-12)


def test_condition_iii_summable_for_beta():
    m = BetaShift(BetaExpansion("3/2"))
    dec = BasicBetaDecomposition(m.digits)
    pb = pressure_bracket(m, ZeroPotential(), dec, 9)
    res = condition_III_diagnostic(m, ZeroPotential(), dec, pb, 9)
    assert res["verdict"] == "summable-like"

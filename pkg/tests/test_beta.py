from fractions import Fraction

import pytest

from eqstates import (
    BasicBetaDecomposition,
    BetaExpansion,
    BetaShift,
    RefinedBetaDecomposition,
    greedy_expansion,
    parse_beta,
    return_path,
    tau,
)
from eqstates.beta import QuadReal
from eqstates.errors import InputError


def rational_greedy_oracle(beta: Fraction, k: int):
    """Greedy digits by exact rational recursion: d_n = floor(beta r), r <- beta r - d_n."""
    r = Fraction(1)
    out = []
    for _ in range(k):
        br = beta * r
        d = br.numerator // br.denominator
        out.append(d)
        r = br - d
    return tuple(out)


@pytest.mark.parametrize("beta", [Fraction(3, 2), Fraction(5, 2), Fraction(9, 5)])
def test_greedy_matches_rational_oracle(beta):
    dig = BetaExpansion(beta)
    assert dig.prefix(20) == rational_greedy_oracle(beta, 20)


def test_known_prefixes():
    assert BetaExpansion("3/2").prefix(9) == (1, 0, 1, 0, 0, 0, 0, 0, 1)
    assert BetaExpansion("5/2").prefix(6) == (2, 1, 0, 1, 1, 1)


def test_golden_ratio_periodic():
    dig = BetaExpansion("golden")
    # (1 + sqrt 5)/2 has expansion 11 000...; the remainder cycle is exact
    assert dig.prefix(6) == (1, 1, 0, 0, 0, 0)
    hint = dig.exact_period()
    assert hint is not None


def test_parse_beta_forms():
    assert parse_beta("3/2") == Fraction(3, 2)
    q = parse_beta("golden")
    assert isinstance(q, QuadReal) or q is not None
    with pytest.raises(InputError):
        BetaExpansion("1")
    with pytest.raises(InputError):
        BetaExpansion("2")


def test_greedy_expansion_helper():
    assert greedy_expansion("3/2", 9).prefix(9) == (1, 0, 1, 0, 0, 0, 0, 0, 1)


def test_alphabet_size():
    assert BetaExpansion("3/2").alphabet_size == 2
    assert BetaExpansion("5/2").alphabet_size == 3


def test_return_path_and_tau():
    dig = BetaExpansion("3/2")
    # from vertex v_2 (after reading prefix "1") a single 0 returns to v_1
    # at follower depth <= 2; tau grows with the vertex index M
    t1 = tau(dig, 1)
    t2 = tau(dig, 2)
    assert t1 >= 0 and t2 >= t1
    p = return_path(dig, 2)
    assert isinstance(p, tuple)


def test_basic_decomposition_splits():
    dig = BetaExpansion("3/2")
    dec = BasicBetaDecomposition(dig)
    model = BetaShift(dig)
    for n in range(1, 7):
        for w in model.enumerate_words(n):
            g, s = dec.split(w)
            assert g + s == w
            if len(g):
                assert dec.in_G(g)
            # suffix must be a prefix of the expansion digit path
            assert dec.in_Cs(s)


def test_refined_decomposition_contains_basic_good_words():
    dig = BetaExpansion("3/2")
    basic = BasicBetaDecomposition(dig)
    refined = RefinedBetaDecomposition(dig)
    model = BetaShift(dig)
    for n in range(1, 7):
        for w in model.enumerate_words(n):
            if basic.in_G(w) and w and w[-1] != 0:
                assert refined.in_G(w)

import itertools

import pytest

from eqstates import SFT, BetaExpansion, BetaShift, FullShift, word_from_string
from eqstates.errors import InputError


def brute_sft_contains(forbidden, w):
    return not any(
        w[i : i + len(f)] == f for f in forbidden for i in range(len(w) - len(f) + 1)
    )


def test_full_shift_counts_and_order():
    m = FullShift(3)
    ws = m.enumerate_words(2)
    assert len(ws) == 9
    assert ws == sorted(ws)
    assert m.count_words(5) == 3**5


def test_sft_vs_brute_force():
    forb = [word_from_string("11")]
    m = SFT(2, forb)
    for n in range(1, 9):
        mine = set(m.enumerate_words(n))
        brute = {
            w for w in itertools.product(range(2), repeat=n) if brute_sft_contains(forb, w)
        }
        assert mine == brute


def test_sft_counts_fibonacci():
    # |L_n| for the golden-mean shift is F_{n+2}
    m = SFT(2, [word_from_string("11")])
    fib = [1, 2, 3, 5, 8, 13, 21, 34, 55]
    for n in range(1, len(fib)):
        assert m.count_words(n) == fib[n]


def test_beta_shift_membership_examples():
    m = BetaShift(BetaExpansion("3/2"))
    assert m.contains(word_from_string("10"))
    assert not m.contains(word_from_string("11"))
    assert m.contains(word_from_string("1010000010"))
    assert not m.contains(word_from_string("101001"))


def test_beta_shift_counts():
    m = BetaShift(BetaExpansion("3/2"))
    assert m.count_words(1) == 2
    assert m.count_words(2) == 3
    assert m.count_words(3) == 5


def test_periodic_words_full_shift():
    m = FullShift(2)
    per = m.periodic_words(2)
    assert set(per) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert m.is_periodic_word((0, 1))


def test_extend_minimal_admissible():
    m = BetaShift(BetaExpansion("3/2"))
    w = word_from_string("1")
    ext = m.extend_minimal(w, 6)
    assert len(ext) == 6
    assert ext[: len(w)] == w
    assert m.contains(ext)


def test_bad_alphabet_rejected():
    with pytest.raises(InputError):
        FullShift(1)

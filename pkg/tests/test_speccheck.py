from eqstates import (
    BasicBetaDecomposition,
    BetaExpansion,
    BetaShift,
    FullShift,
    SFT,
    check_specification,
    dump_witnesses,
    min_gap,
)


def test_full_shift_glues_with_no_gap():
    m = FullShift(2)
    t, v = min_gap(m, None, range(1, 4), "S")
    assert t == 0
    assert v.holds


def test_golden_mean_sft_gap():
    # any word ending in 1 must insert a 0 before a word starting with 1
    m = SFT(2, [(1, 1)])
    t, v = min_gap(m, None, range(1, 4), "S")
    assert t == 1


def test_weak_variant_never_harder_than_strong():
    m = SFT(2, [(1, 1)])
    for t in range(0, 3):
        vs = check_specification(m, None, range(1, 4), t, "S")
        vw = check_specification(m, None, range(1, 4), t, "W")
        if vs.holds:
            assert vw.holds


def test_periodic_variant_closes_orbits():
    m = FullShift(2)
    v = check_specification(m, None, range(1, 3), 1, "Per")
    assert v.holds
    for w1, conn, w2, closing in v.witnesses[:5]:
        assert m.is_periodic_word(w1 + conn + w2 + closing)


def test_counterexample_reported_when_gap_too_small():
    m = SFT(2, [(1, 1)])
    v = check_specification(m, None, range(1, 3), 0, "S")
    assert not v.holds
    assert v.counterexample is not None
    w1, w2 = v.counterexample
    assert w1[-1] == 1 and w2[0] == 1


def test_good_set_glues_freely_where_full_language_does_not():
    # gluing after a long expansion-digit prefix needs a long run of zeros,
    # but words returning to the base vertex concatenate with no gap at all
    dig = BetaExpansion("3/2")
    m = BetaShift(dig)
    dec = BasicBetaDecomposition(dig)
    t_all, _ = min_gap(m, None, range(1, 5), "S")
    t_good, _ = min_gap(m, lambda w: dec.in_GM(w, 1), range(1, 5), "S")
    assert t_good == 0
    assert t_all is not None and t_all > 0


def test_witness_dump_format():
    m = FullShift(2)
    v = check_specification(m, None, range(1, 3), 0, "S")
    lines = dump_witnesses(v)
    assert lines
    assert all(isinstance(s, str) for s in lines)


def test_coverage_reported_under_budget():
    m = FullShift(2)
    v = check_specification(m, None, range(1, 6), 0, "S", pair_budget=50)
    assert v.checked_pairs <= 50
    assert v.partial
    assert 0 < v.coverage < 1

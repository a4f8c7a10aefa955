"""Brute-force specification checks: which pairs of words glue, at what gap?

The full 2-shift glues anything with no connector.  The golden-mean shift
needs one symbol.  Beta-shifts generally fail specification on the whole
language -- a word ending deep inside the expansion-digit path can force a
long run of zeros -- but the good set of a decomposition glues freely.
"""

from eqstates import (
    BasicBetaDecomposition,
    BetaExpansion,
    BetaShift,
    FullShift,
    SFT,
    check_specification,
    min_gap,
    word_to_string,
)

print("minimal gluing gap t (strong variant, connector length exactly t):")
for name, model in (("full 2-shift", FullShift(2)), ("golden-mean SFT", SFT(2, [(1, 1)]))):
    t, v = min_gap(model, None, range(1, 5), "S")
    print(f"  {name:16s} t = {t}   ({v.describe()})")

dig = BetaExpansion("3/2")
m = BetaShift(dig)
dec = BasicBetaDecomposition(dig)
t_all, _ = min_gap(m, None, range(1, 5), "S")
t_good, v_good = min_gap(m, lambda w: dec.in_GM(w, 1), range(1, 5), "S")
print(f"  beta 3/2 (all)   t = {t_all}")
print(f"  beta 3/2 (good)  t = {t_good}   ({v_good.describe()})")

# a failing check names the offending pair
print()
v = check_specification(SFT(2, [(1, 1)]), None, range(1, 4), 0, "S")
w1, w2 = v.counterexample
print(f"golden-mean at t=0 fails on the pair ({word_to_string(w1)}, {word_to_string(w2)})")

# the periodic variant also closes the loop into a periodic orbit
v = check_specification(FullShift(2), None, range(1, 3), 1, "Per")
w1, conn, w2, closing = v.witnesses[0]
print(
    "periodic witness:",
    word_to_string(w1), "+", word_to_string(conn) or "-",
    "+", word_to_string(w2), "+", word_to_string(closing) or "-",
)

"""Greedy expansions of 1 and the languages they carve out.

Every real beta > 1 comes with a coding of [0, 1) by the map x -> beta x
mod 1.  The lexicographically maximal itinerary is the greedy expansion of
1, and a word is admissible exactly when every shifted tail stays at or
below that sequence.
"""

from eqstates import BetaExpansion, BetaShift, word_to_string

for spec in ("3/2", "5/2", "1.8", "golden"):
    dig = BetaExpansion(spec)
    print(f"beta = {spec:8s}  digits = {word_to_string(dig.prefix(20), dig.alphabet_size)}")
    hint = dig.exact_period()
    if hint:
        pre, per = hint
        print(f"{'':19s}eventually periodic: preperiod {pre}, period {per}")

# language growth: |L_n| should grow like beta^n
print()
print("word counts per length (growth rate ~ beta):")
for spec in ("3/2", "5/2"):
    m = BetaShift(BetaExpansion(spec))
    counts = [m.count_words(n) for n in range(1, 11)]
    ratios = [counts[i + 1] / counts[i] for i in range(len(counts) - 1)]
    print(f"  beta = {spec}: counts {counts}")
    print(f"             tail ratio {ratios[-1]:.4f}")

# membership queries are exact: no float round-off can flip a verdict
m = BetaShift(BetaExpansion("3/2"))
for w in ((1, 0), (1, 1), (1, 0, 1, 0, 0, 0, 0, 0, 1), (1, 0, 1, 0, 0, 1)):
    print(f"  {word_to_string(w):12s} admissible: {m.contains(w)}")

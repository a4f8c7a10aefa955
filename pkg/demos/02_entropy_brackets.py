"""Certified two-sided entropy brackets from finite word counts.

Upper bounds come free from submultiplicativity of the word counts.  Lower
bounds need a gluing argument: a subset of words that concatenate freely
(possibly after a bounded connector) generates at least its own growth
rate, discounted by the connector length.
"""

import math

import numpy as np

from eqstates import (
    BasicBetaDecomposition,
    BetaExpansion,
    BetaShift,
    SFT,
    TrivialDecomposition,
    ZeroPotential,
    pressure_bracket,
)

# --- golden-mean shift: forbid the word 11 --------------------------------
m = SFT(2, [(1, 1)])
dec = TrivialDecomposition(m, 1)  # a single 0 glues any two words
oracle = math.log(max(np.linalg.eigvals(np.array([[1.0, 1.0], [1.0, 0.0]]))).real)
print("golden-mean shift, transfer-matrix entropy =", f"{oracle:.6f}")
for n in (6, 10, 14):
    pb = pressure_bracket(m, ZeroPotential(), dec, n)
    ok = pb.lower - 1e-12 <= oracle <= pb.upper + 1e-12
    print(f"  n={n:2d}  [{pb.lower:.6f}, {pb.upper:.6f}]  width {pb.upper - pb.lower:.4f}  contains oracle: {ok}")

# --- beta-shift for beta = 3/2: entropy is log beta -----------------------
dig = BetaExpansion("3/2")
mb = BetaShift(dig)
decb = BasicBetaDecomposition(dig)
print()
print("beta = 3/2 shift, log beta =", f"{math.log(1.5):.6f}")
for n in (8, 11, 14):
    pb = pressure_bracket(mb, ZeroPotential(), decb, n)
    print(f"  n={n:2d}  [{pb.lower:.6f}, {pb.upper:.6f}]  width {pb.upper - pb.lower:.4f}")

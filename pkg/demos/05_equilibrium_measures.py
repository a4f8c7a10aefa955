"""Empirical equilibrium states and the Gibbs property.

Weighting period-n orbits by e^{S_n phi} gives an exactly shift-invariant
measure.  For a depth-1 potential on the full shift the construction
reproduces the Bernoulli product measure on the nose, and every Gibbs
ratio mu([w]) e^{nP - phi_n(w)} equals 1.
"""

import math

from eqstates import (
    FullShift,
    LocallyConstant,
    TrivialDecomposition,
    cylinder_mass,
    gibbs_report,
    periodic_orbit_measure,
    pressure_bracket,
    word_to_string,
)

p = 0.3
pot = LocallyConstant(1, {(0,): math.log(p), (1,): math.log(1 - p)})
m = FullShift(2)

meas = periodic_orbit_measure(m, pot, 8)
print(f"period-8 orbit measure for the ({p}, {1 - p}) weights")
print(f"  total mass     {meas.total:.15f}")
for u in ((0,), (1,), (0, 1), (1, 1, 0)):
    expect = math.prod(p if s == 0 else 1 - p for s in u)
    got = cylinder_mass(meas, u)
    print(f"  mu([{word_to_string(u)}]) = {got:.12f}   product value {expect:.12f}")

# shift invariance: mass of [u] vs mass of the preimage cylinders
u = (1, 0)
pre = sum(cylinder_mass(meas, (s,) + u) for s in range(2))
print(f"  invariance defect on [10]: {abs(cylinder_mass(meas, u) - pre):.2e}")

# Gibbs ratios, using the certified pressure bracket (here P = 0 exactly)
dec = TrivialDecomposition(m, 0)
pb = pressure_bracket(m, pot, dec, 8)
rep = gibbs_report(meas, pot, pb, dec, 1, 4)
print()
print(f"pressure bracket [{pb.lower:.2e}, {pb.upper:.2e}]")
print(f"Gibbs ratios over all level-4 words: [{rep.min_lo:.12f}, {rep.max_hi:.12f}]")

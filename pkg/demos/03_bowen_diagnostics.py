"""When does a potential have summable variations?

Potentials supported on the zero-run structure ("grid" potentials, value
a(m) on the cylinder 0^m 1) make the question concrete: the Bowen property
comes down to summability and cancellation patterns of the coefficients.
The diagnostic inspects partial sums and per-length oscillation bounds.
"""

from eqstates import (
    FullShift,
    GridCoefficients,
    GridPotential,
    grid_bowen_criterion,
    variation_diagnostic,
)

cases = {
    "geometric a_k = 2^-k": GridCoefficients(
        a=lambda k: 0.5**k, sup_tail=lambda K: 0.5**K
    ),
    "alternating a_k = (-1)^k/(k+1)": GridCoefficients(
        a=lambda k: (-1.0) ** k / (k + 1), sup_tail=lambda K: 1.0 / (K + 1)
    ),
    "harmonic a_k = 1/(k+1)": GridCoefficients(
        a=lambda k: 1.0 / (k + 1), sup_tail=lambda K: 1.0 / (K + 1)
    ),
}

for name, coeffs in cases.items():
    res = grid_bowen_criterion(coeffs)
    print(f"{name:34s} -> {res['verdict']:10s} ({res['reason']})")
    print(f"{'':34s}    partial sums tail: {[round(v, 4) for v in res['partial_sums'][-3:]]}")

# oscillation bounds V_n over all level-n cylinders
print()
m = FullShift(2)
for name in ("geometric a_k = 2^-k", "harmonic a_k = 1/(k+1)"):
    pot = GridPotential(cases[name])
    d = variation_diagnostic(pot, m, lambda w: True, 10)
    print(f"{name:34s} V_n = {[round(v, 3) for v in d['V']]}")
    print(f"{'':34s} verdict: {d['verdict']}")

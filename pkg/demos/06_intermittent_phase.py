"""Phase structure of the intermittent family x -> x + x^(3/2) mod 1.

The neutral fixed point at 0 makes the geometric potential -t log f' lose
the Bowen property: its zero-run coefficients decay only polynomially.
The pressure curve t -> P(-t log f') stays strictly positive up to t = 1
and hits zero there with a kink -- the hallmark of the phase transition.
"""

from fractions import Fraction

from eqstates import (
    MPMap,
    diagnostics,
    grid_bowen_criterion,
    mp_decompose,
    pressure_curve,
    x_ladder,
)

pm = MPMap(Fraction(1), Fraction(1, 2))

# backward orbit of the boundary point: x_n -> 0 polynomially
lad = x_ladder(pm, 520)
print(f"x_0 = {lad.xs[0]:.10f}  (solves x + x^(3/2) = 1)")
print(f"gap decay exponent (log-log fit): {lad.decay_fit(50, 500):.3f}  (expect -3)")

# the induced zero-run coefficients are not summable
dec = mp_decompose(pm, 256)
print(f"a_0 = {dec['a'][0]:.4f}, a_10 = {dec['a'][10]:.4f}, a_100 = {dec['a'][100]:.4f}")
res = grid_bowen_criterion(dec["coeffs"], 200)
print(f"coefficient verdict: {res['verdict']} ({res['reason']})")

# Monte-Carlo Lyapunov picture: almost no mass near zero exponent
d = diagnostics(pm, n=50, samples=2000, seed=0)
print(f"mean Lyapunov estimate {d['mean_lyapunov']:.4f}; "
      f"fraction below 0.05: {d['lyapunov'][0.05]:.3f}")

# certified pressure curve: positive below t=1, bracket straddling 0 at t=1
print()
print("t      P lower    P upper")
curve = pressure_curve(pm, [0.0, 0.25, 0.5, 0.75, 1.0, 1.25], n=12)
for t, lo, hi in zip(curve.ts, curve.lowers, curve.uppers):
    print(f"{t:.2f}  {lo:9.4f}  {hi:9.4f}")
print(f"kink location estimate: t = {curve.kink_estimate}")

"""Piecewise monotone interval maps and their symbolic coding.

Built-in kinds: the beta-transformation x -> beta*x (mod 1) and the
intermittent family f(x) = x + gamma*x^(1+eps) (mod 1), expanding except at
the neutral fixed point 0.  Enclosures use plain floats with small outward
padding; this is diagnostics-grade, not directed rounding, and the padding
constants are deliberately generous relative to double precision.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .beta import BetaExpansion, DigitSequence, parse_beta, tau as beta_tau
from .errors import BudgetError, InputError, PrecisionError
from .potentials import PhiInterval, PotentialSpec, GridCoefficients, GridPotential
from .words import BetaShift, SubshiftModel, Word

PAD = 1e-11
BISECT_ITERS = 80


class PiecewiseMap:
    """Increasing branches on [a_i, a_{i+1}); symbols are branch indices."""

    kind: str
    breakpoints: List[float]  # a_0 = 0 < ... < a_p = 1

    @property
    def branch_count(self) -> int:
        return len(self.breakpoints) - 1

    def f_branch(self, i: int, x: float) -> float:
        raise NotImplementedError

    def df_branch(self, i: int, x: float) -> float:
        raise NotImplementedError

    def inv_branch(self, i: int, y: float) -> float:
        """Preimage of y under branch i, clamped to the branch domain."""
        lo, hi = self.breakpoints[i], self.breakpoints[i + 1]
        flo, fhi = self.f_branch(i, lo), self.f_branch(i, min(hi, 1.0 - 1e-16))
        if y <= flo:
            return lo
        if y >= fhi:
            return hi
        for _ in range(BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if self.f_branch(i, mid) < y:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def branch_of_point(self, x: float) -> Optional[int]:
        """Branch whose half-open domain [a_i, a_{i+1}) contains x; None on
        an interior breakpoint (coding undefined there)."""
        if not (0.0 <= x < 1.0):
            raise InputError(f"point {x} outside [0, 1)")
        for i in range(self.branch_count):
            if x == self.breakpoints[i]:
                return i if i == 0 else None
            if self.breakpoints[i] < x < self.breakpoints[i + 1]:
                return i
        return None

    def branch_of_interval(self, lo: float, hi: float) -> Optional[int]:
        """Branch strictly containing [lo, hi]; None if a breakpoint is hit
        or straddled (interior breakpoints make the coding ambiguous)."""
        for i in range(self.branch_count):
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            if (lo > a or i == 0) and lo >= a and hi < b:
                return i
        return None

    def f(self, x: float) -> float:
        i = self.branch_of_point(x)
        if i is None:
            raise PrecisionError(f"point {x} is an interior breakpoint")
        y = self.f_branch(i, x)
        return min(max(y, 0.0), math.nextafter(1.0, 0.0))

    def describe(self) -> str:
        raise NotImplementedError


class BetaTransformMap(PiecewiseMap):
    kind = "BetaTransform"

    def __init__(self, beta):
        self.beta_exact = parse_beta(beta) if isinstance(beta, (str, Fraction, int)) else beta
        self.beta = float(self.beta_exact)
        if self.beta <= 1.0:
            raise InputError("need beta > 1")
        b = math.ceil(self.beta)  # integer beta: b full branches
        self.breakpoints = [i / self.beta for i in range(b)] + [1.0]

    def f_branch(self, i, x):
        return self.beta * x - i

    def df_branch(self, i, x):
        return self.beta

    def inv_branch(self, i, y):
        lo, hi = self.breakpoints[i], self.breakpoints[i + 1]
        return min(max((y + i) / self.beta, lo), hi)

    def inv_branch_array(self, i, y):
        lo, hi = self.breakpoints[i], self.breakpoints[i + 1]
        return np.clip((y + i) / self.beta, lo, hi)

    def digit_sequence(self) -> DigitSequence:
        return BetaExpansion(self.beta_exact)

    def describe(self):
        return f"beta-transform:{self.beta!r}"


class FullBranchDigits(DigitSequence):
    """Constant maximal digit sequence (p-1)^inf for full-branch maps."""

    def __init__(self, p: int):
        self.alphabet_size = p
        self._digits = [p - 1] * 64

    def ensure(self, k):
        while len(self._digits) < k:
            self._digits.append(self.alphabet_size - 1)

    def exact_period(self):
        return (0, 1)

    def describe(self):
        return f"const:{self.alphabet_size - 1}"


class MPMap(PiecewiseMap):
    """f(x) = x + gamma x^(1+eps) (mod 1); neutral fixed point at 0."""

    kind = "MP"

    def __init__(self, gamma, eps):
        self.gamma_exact = Fraction(gamma)
        self.eps_exact = Fraction(eps)
        self.gamma = float(self.gamma_exact)
        self.eps = float(self.eps_exact)
        if self.gamma <= 0:
            raise InputError("need gamma > 0")
        if self.eps <= 0:
            raise InputError("need eps > 0")
        if self.eps >= 1:
            warnings.warn("eps >= 1: expansion diagnostics lose their meaning")
        p = math.ceil(1.0 + self.gamma)  # F(1) = 1 + gamma
        self.full_branches = (1 + self.gamma_exact).denominator == 1
        bps = [0.0]
        for k in range(1, p):
            bps.append(self._solve_F(float(k)))
        bps.append(1.0)
        self.breakpoints = bps

    def F(self, x: float) -> float:
        return x + self.gamma * x ** (1.0 + self.eps)

    def dF(self, x: float) -> float:
        return 1.0 + self.gamma * (1.0 + self.eps) * x**self.eps

    def _solve_F(self, target: float) -> float:
        lo, hi = 0.0, 1.0
        for _ in range(BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if self.F(mid) < target:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def f_branch(self, i, x):
        return self.F(x) - i

    def df_branch(self, i, x):
        return self.dF(x)

    def inv_branch_array(self, i, y):
        lo = np.full_like(y, self.breakpoints[i])
        hi = np.full_like(y, self.breakpoints[i + 1])
        t = np.asarray(y) + i
        for _ in range(BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            below = mid + self.gamma * mid ** (1.0 + self.eps) < t
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        return 0.5 * (lo + hi)

    def digit_sequence(self) -> DigitSequence:
        if self.full_branches:
            return FullBranchDigits(self.branch_count)
        return KneadingDigits(self)

    def describe(self):
        return f"mp:gamma={self.gamma_exact}:eps={self.eps_exact}"


# ---------------------------------------------------------------------------
# coding
# ---------------------------------------------------------------------------


def itinerary(pmap: PiecewiseMap, x: float, n: int) -> Word:
    lo = hi = float(x)
    out = []
    for k in range(n):
        i = None
        if lo == hi:
            i = pmap.branch_of_point(lo)
        else:
            i = pmap.branch_of_interval(lo, hi)
        if i is None:
            raise PrecisionError(f"coding error: breakpoint hit/straddled at step {k}")
        out.append(i)
        lo2 = pmap.f_branch(i, lo) - PAD
        hi2 = pmap.f_branch(i, hi) + PAD
        lo, hi = max(lo2, 0.0), min(hi2, math.nextafter(1.0, 0.0))
    return tuple(out)


def cylinder_interval(pmap: PiecewiseMap, w: Word) -> Tuple[float, float]:
    """Outer enclosure of the x-interval coded by w (backward iteration)."""
    if not w:
        return (0.0, 1.0)
    for s in w:
        if not (0 <= s < pmap.branch_count):
            raise InputError(f"symbol {s} is not a branch index")
    lo, hi = pmap.breakpoints[w[-1]], pmap.breakpoints[w[-1] + 1]
    for s in reversed(w[:-1]):
        lo = pmap.inv_branch(s, lo)
        hi = pmap.inv_branch(s, hi)
        a, b = pmap.breakpoints[s], pmap.breakpoints[s + 1]
        lo, hi = max(lo - PAD, a), min(hi + PAD, b)
    return (max(lo - PAD, 0.0), min(hi + PAD, 1.0))


def kneading_sequence(pmap: PiecewiseMap, k: int) -> Word:
    """Digits of the lexicographically maximal coded sequence, certified by
    interval iteration on [1 - delta, 1) with shrinking delta.

    When the iterated interval's supremum lands on an interior breakpoint
    (orbit of 1 hits a branch endpoint exactly, e.g. the golden ratio), the
    maximal-element convention applies: take the upper branch, whose value at
    its own left endpoint is 0, and continue from there."""
    best: Tuple[int, ...] = ()
    delta = 1e-4
    while delta >= 1e-15:
        lo, hi = 1.0 - delta, math.nextafter(1.0, 0.0)
        out = []
        ok = True
        for _ in range(k):
            i = pmap.branch_of_interval(lo, hi)
            if i is None and hi - lo <= 64 * PAD:
                tie_tol = 8 * PAD
                tie = next(
                    (
                        j
                        for j in range(1, pmap.branch_count)
                        if lo < pmap.breakpoints[j]
                        and abs(hi - pmap.breakpoints[j]) <= tie_tol
                    ),
                    None,
                )
                if tie is not None:
                    out.append(tie)
                    lo, hi = 0.0, tie_tol
                    continue
            if i is None:
                ok = False
                break
            out.append(i)
            lo2 = pmap.f_branch(i, lo) - PAD
            hi2 = pmap.f_branch(i, hi) + PAD
            lo, hi = max(lo2, 0.0), min(hi2, math.nextafter(1.0, 0.0))
        if ok and len(out) == k:
            return tuple(out)
        if len(out) > len(best):
            best = tuple(out)
        delta *= 1e-2
    raise PrecisionError(
        f"kneading certification stalled at {len(best)} of {k} digits"
    )


class KneadingDigits(DigitSequence):
    """Digit sequence backed by left-limit interval iteration of a map."""

    def __init__(self, pmap: PiecewiseMap):
        self.pmap = pmap
        self.alphabet_size = pmap.branch_count
        self._digits: list = []

    def ensure(self, k):
        if len(self._digits) < k:
            self._digits = list(kneading_sequence(self.pmap, k))

    def describe(self):
        return f"kneading({self.pmap.describe()})"


def symbolic_model(pmap: PiecewiseMap) -> BetaShift:
    return BetaShift(pmap.digit_sequence())


# ---------------------------------------------------------------------------
# geometric potential
# ---------------------------------------------------------------------------


class GeometricPotential(PotentialSpec):
    """phi = -t log f' along the coding; brackets from cylinder endpoints.

    Branch derivatives are nondecreasing in x for the built-in kinds, so the
    left endpoint of a cylinder maximizes the Birkhoff sum and the right
    endpoint minimizes it; the enclosure padding is folded into the interval.
    """

    def __init__(self, pmap: PiecewiseMap, t: float = 1.0):
        if t < 0:
            raise InputError("need t >= 0")
        self.pmap = pmap
        self.t = float(t)
        top = math.nextafter(1.0, 0.0)
        self.sup_norm_bound = self.t * abs(
            math.log(pmap.df_branch(pmap.branch_count - 1, top))
        )
        self._cyl_cache = {}

    def _cyl(self, w):
        if w not in self._cyl_cache:
            self._cyl_cache[w] = cylinder_interval(self.pmap, w)
        return self._cyl_cache[w]

    def _log_df_sum(self, w: Word, x: float) -> float:
        total = 0.0
        for s in w:
            total += math.log(max(self.pmap.df_branch(s, x), 1.0))
            x = self.pmap.f_branch(s, x)
            a, b = self.pmap.breakpoints[s], self.pmap.breakpoints[s + 1]
            # the true image lives in [0, 1); clamp float drift
            x = min(max(x, 0.0), math.nextafter(1.0, 0.0))
        return total

    def sup_interval(self, model, w):
        a, _ = self._cyl(w)
        v = -self.t * self._log_df_sum(w, a)
        pad = PAD * (1 + len(w))
        return PhiInterval(v - pad, min(v + pad, 0.0))

    def inf_interval(self, model, w):
        _, b = self._cyl(w)
        v = -self.t * self._log_df_sum(w, min(b, math.nextafter(1.0, 0.0)))
        pad = PAD * (1 + len(w))
        return PhiInterval(v - pad, min(v + pad, 0.0))

    def point_birkhoff(self, model, w):
        # minimal extension w 0^inf codes the left endpoint of the cylinder
        return self.sup_interval(model, w)

    def periodic_birkhoff(self, model, w):
        """Birkhoff sum at the interval-map periodic point in the cyclic
        cylinder, isolated by refining the cylinder of w repeated."""
        reps = max(2, 64 // max(1, len(w)) + 1)
        a, b = self._cyl(w * reps)
        lo = -self.t * self._log_df_sum(w, a)
        hi = -self.t * self._log_df_sum(w, b)
        lo, hi = min(lo, hi), max(lo, hi)
        pad = PAD * (1 + len(w))
        return PhiInterval(lo - pad, min(hi + pad, 0.0))

    def describe(self):
        return f"geom:t={self.t}:{self.pmap.describe()}"


class DifferencePotential(PotentialSpec):
    """minuend - subtrahend, for the regular part phi_r = phi - phi_0."""

    def __init__(self, minuend: PotentialSpec, subtrahend: PotentialSpec):
        self.minuend = minuend
        self.subtrahend = subtrahend
        self.sup_norm_bound = minuend.sup_norm_bound + subtrahend.sup_norm_bound

    def point_birkhoff(self, model, w):
        m = self.minuend.point_birkhoff(model, w)
        s = self.subtrahend.point_birkhoff(model, w)
        return PhiInterval(m.lo - s.hi, m.hi - s.lo)

    def sup_interval(self, model, w):
        hi = self.minuend.sup_interval(model, w).hi - self.subtrahend.inf_interval(model, w).lo
        lo = self.point_birkhoff(model, w).lo
        return PhiInterval(min(lo, hi), hi)

    def inf_interval(self, model, w):
        lo = self.minuend.inf_interval(model, w).lo - self.subtrahend.sup_interval(model, w).hi
        hi = self.point_birkhoff(model, w).hi
        return PhiInterval(lo, max(lo, hi))

    def periodic_birkhoff(self, model, w):
        m = self.minuend.periodic_birkhoff(model, w)
        s = self.subtrahend.periodic_birkhoff(model, w)
        return PhiInterval(m.lo - s.hi, m.hi - s.lo)

    def describe(self):
        return f"({self.minuend.describe()})-({self.subtrahend.describe()})"


# ---------------------------------------------------------------------------
# the intermittent ladder and decomposition
# ---------------------------------------------------------------------------


@dataclass
class Ladder:
    xs: List[float]  # x_0 > x_1 > ...
    residuals: List[float]  # |f(x_{n+1}) - x_n|

    def decay_fit(self, n_lo: int = 50, n_hi: int = 500) -> float:
        """Least-squares slope of log(x_n - x_{n+1}) against log n."""
        n_hi = min(n_hi, len(self.xs) - 2)
        ns = np.arange(n_lo, n_hi + 1)
        gaps = np.array([self.xs[n] - self.xs[n + 1] for n in ns])
        slope = np.polyfit(np.log(ns), np.log(gaps), 1)[0]
        return float(slope)

    def dump_csv_lines(self):
        out = ["n,x_n,residual"]
        for n, (x, r) in enumerate(zip(self.xs, self.residuals)):
            out.append(f"{n},{x!r},{r!r}")
        return out


def x_ladder(pmap: MPMap, N: int) -> Ladder:
    """x_0 solves x + gamma x^(1+eps) = 1; x_{n-1} = f(x_n) going down."""
    if pmap.kind != "MP":
        raise InputError("ladder is defined for the intermittent kind")
    x0 = pmap._solve_F(1.0)
    xs = [x0]
    residuals = [abs(pmap.F(x0) - 1.0)]
    for _ in range(N):
        target = xs[-1]
        lo, hi = 0.0, xs[-1]
        for _ in range(BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if pmap.F(mid) < target:
                lo = mid
            else:
                hi = mid
        nxt = 0.5 * (lo + hi)
        residuals.append(abs(pmap.F(nxt) - target))
        xs.append(nxt)
    for a, b in zip(xs, xs[1:]):
        if not b < a:
            raise PrecisionError("ladder lost strict monotonicity")
    return Ladder(xs=xs, residuals=residuals)


def mp_decompose(pmap: MPMap, N: int = 256) -> dict:
    """Split the geometric potential into grid part (coefficients
    a_n = -log f'(x_n) on the cells 0^n z) and regular part phi_r."""
    ladder = x_ladder(pmap, N)
    a = [-math.log(pmap.dF(x)) for x in ladder.xs]
    abs_a = [abs(v) for v in a]

    def coeff(k):
        return a[min(k, N)]

    def sup_tail(K):
        return abs_a[min(K, N)]  # |a_k| decreasing along the ladder

    coeffs = GridCoefficients(a=coeff, sup_tail=sup_tail, sup_abs=abs_a[0])
    grid = GridPotential(coeffs)
    phi = GeometricPotential(pmap, 1.0)
    return {
        "ladder": ladder,
        "a": a,
        "coeffs": coeffs,
        "grid": grid,
        "phi": phi,
        "phi_r": DifferencePotential(phi, grid),
    }


def diagnostics(pmap: MPMap, n: int = 50, samples: int = 2000, seed: int = 0) -> dict:
    """Empirical distortion / variation / expansion summaries.

    young_L_estimate: max over sampled pairs in a ladder interval of
      |log (f^i)'(x) - log (f^i)'(y)| * (x_{n-i} - x_{n-i+1}) / |f^i x - f^i y|.
    bowen_variation: widths of the regular part over itinerary cylinders.
    lyapunov: fraction of uniform points with (1/n) log (f^n)' below theta.
    """
    rng = np.random.default_rng(seed)
    dec = mp_decompose(pmap, max(n + 2, 64))
    xs = dec["ladder"].xs

    young = 0.0
    for _ in range(min(samples, 200)):
        u, v = sorted(rng.uniform(xs[n + 1], xs[n], size=2))
        if u == v:
            continue
        lg_u = lg_v = 0.0
        for i in range(1, n + 1):
            lg_u += math.log(pmap.dF(u))
            lg_v += math.log(pmap.dF(v))
            u, v = pmap.F(u), pmap.F(v)  # stays in branch 0 below x_0
            denom = abs(v - u)
            if denom > 0 and n - i + 1 < len(xs):
                young = max(
                    young, abs(lg_u - lg_v) * (xs[n - i] - xs[n - i + 1]) / denom
                )
    model = symbolic_model(pmap)
    phi_r = dec["phi_r"]
    widths = []
    for m in range(2, min(n, 16)):
        wmax = 0.0
        for _ in range(20):
            x = float(rng.uniform(0.0, 1.0))
            try:
                w = itinerary(pmap, x, m)
            except PrecisionError:
                continue
            s = phi_r.sup_interval(model, w)
            i2 = phi_r.inf_interval(model, w)
            wmax = max(wmax, s.hi - i2.lo)
        widths.append(wmax)
    half = widths[len(widths) // 2 :]
    if len(widths) >= 4 and max(half) > 1.25 * max(widths[: len(widths) // 2]) + 0.5:
        bowen_verdict = "growing"
    else:
        bowen_verdict = "bounded"

    pts = rng.uniform(0.0, 1.0, size=samples)
    lam = np.zeros(samples)
    for _ in range(n):
        lam += np.log(1.0 + pmap.gamma * (1.0 + pmap.eps) * pts**pmap.eps)
        pts = pts + pmap.gamma * pts ** (1.0 + pmap.eps)
        pts = np.mod(pts, 1.0)
    lam /= n
    lyap = {th: float(np.mean(lam < th)) for th in (0.01, 0.05)}
    return {
        "young_L_estimate": young,
        "bowen_variation": widths,
        "bowen_verdict": bowen_verdict,
        "lyapunov": lyap,
        "mean_lyapunov": float(np.mean(lam)),
    }


# ---------------------------------------------------------------------------
# pressure curve
# ---------------------------------------------------------------------------


def transfer_envelope_upper(
    pmap: MPMap,
    ts,
    n_steps: int = 300,
    ladder_depth: int = 600,
    grid_cells: int = 1200,
) -> List[float]:
    """Upper bounds for P(t phi) from a piecewise-constant upper envelope of
    transfer-operator iterates.

    With u_i the branch inverses, the sup-type partition sum at length n is
    exactly (L_t^n 1)(0) for L_t g(x) = sum_i u_i'(x)^t g(u_i x), because the
    left endpoint of each cylinder is the inverse-branch image of 0.  The
    envelope dominates L_t^n 1 cell-wise: per step, each cell takes
    sup(u_i'^t) times the max of the previous envelope over the cells covered
    by u_i(cell).  Every cell value is a sum/max/product of exponentials
    e^{t a}, hence log-convex and nonincreasing in t, so the resulting upper
    curve keeps both shape properties.  The partition merges ladder points
    (resolving the neutral region) with a uniform grid.
    """
    if pmap.kind != "MP" or not pmap.full_branches:
        raise InputError("envelope bound implemented for full-branch MP maps")
    xs = x_ladder(pmap, ladder_depth).xs
    bps = np.unique(
        np.concatenate(
            [np.array([0.0] + xs[::-1] + [1.0]), np.linspace(0.0, 1.0, grid_cells + 1)]
        )
    )
    nc = len(bps) - 1
    a_cells, b_cells = bps[:-1], bps[1:]
    pad = 1e-12
    pre = []
    for i in range(pmap.branch_count):
        ua = pmap.inv_branch_array(i, a_cells) - pad
        ub = pmap.inv_branch_array(i, b_cells) + pad
        # u' = 1/f' decreases in x, so its sup over the cell is at the left
        dup = (1.0 + pmap.gamma * (1.0 + pmap.eps) * np.clip(ua, 0.0, 1.0) ** pmap.eps)
        dup = (1.0 / dup) * (1.0 + 1e-12)
        lo_idx = np.clip(np.searchsorted(bps, ua, side="right") - 1, 0, nc - 1)
        hi_idx = np.clip(np.searchsorted(bps, ub, side="left") - 1, 0, nc - 1)
        pre.append((dup, lo_idx, hi_idx))
    uppers = []
    for t in ts:
        h = np.ones(nc)
        for _ in range(n_steps):
            hn = np.zeros(nc)
            for dup, lo_idx, hi_idx in pre:
                mx = np.array(
                    [h[l : r + 1].max() for l, r in zip(lo_idx, hi_idx)]
                )
                hn += dup**t * mx
            h = hn
        uppers.append(math.log(h[0]) / n_steps)
    return uppers


@dataclass
class PressureCurve:
    ts: List[float]
    lowers: List[float]
    uppers: List[float]
    n: int
    kink_estimate: Optional[float]
    meta: dict = field(default_factory=dict)

    def dump_csv_lines(self):
        out = ["t,P_lo,P_hi,n"]
        for t, lo, hi in zip(self.ts, self.lowers, self.uppers):
            out.append(f"{t!r},{lo!r},{hi!r},{self.n}")
        return out


def _full_shift_phi_table(pmap: PiecewiseMap, n: int):
    """For full-branch maps: per length-k word (lex order), endpoint Birkhoff
    sums of log f', built by prepending branch inverses level by level.

    Returns {k: (Slo_k, Shi_k, good_mask_k)} where Slo is the sum along the
    left-endpoint orbit (minimizing log f'), Shi along the right, and
    good_mask marks words ending in (0, p-1) — the refined good set for the
    constant maximal digit sequence.
    """
    p = pmap.branch_count
    lo = np.array([pmap.breakpoints[s] for s in range(p)])
    hi = np.array([pmap.breakpoints[s + 1] for s in range(p)])
    branch = np.arange(p)

    def logdf(arr):
        if pmap.kind == "MP":
            return np.log(1.0 + pmap.gamma * (1.0 + pmap.eps) * np.clip(arr, 0.0, 1.0) ** pmap.eps)
        return np.full_like(arr, math.log(pmap.beta))

    Slo = logdf(lo)
    Shi = logdf(hi)
    last = branch.copy()  # last symbol per word
    prev = np.full(p, -1)  # second-to-last symbol
    out = {1: (Slo.copy(), Shi.copy(), (last == p - 1) & (prev == 0))}
    for k in range(2, n + 1):
        nlo, nhi, nSlo, nShi, nlast, nprev = [], [], [], [], [], []
        for s in range(p):
            ilo = pmap.inv_branch_array(s, lo)
            ihi = pmap.inv_branch_array(s, hi)
            nlo.append(ilo)
            nhi.append(ihi)
            nSlo.append(logdf(ilo) + Slo)
            nShi.append(logdf(ihi) + Shi)
            nlast.append(last)
            nprev.append(prev if k > 2 else np.full(p, s))
        lo = np.concatenate(nlo)
        hi = np.concatenate(nhi)
        Slo = np.concatenate(nSlo)
        Shi = np.concatenate(nShi)
        last = np.concatenate(nlast)
        prev = np.concatenate(nprev)
        out[k] = (Slo.copy(), Shi.copy(), (last == p - 1) & (prev == 0))
    return out


def pressure_curve(
    pmap: PiecewiseMap,
    t_grid,
    n: int,
    n_lower: Optional[int] = None,
    budget: int = 10**7,
) -> PressureCurve:
    """Bracket P(t phi), phi the geometric potential, over the t grid.

    The upper envelope uses one fixed length n (a log-sum-exp of affine
    functions of t, hence convex and, since phi <= 0, nonincreasing); the
    lower bound glues refined good words of length n_lower with a one-step
    connector, discounting the empirical variation over the good set.
    """
    ts = [float(t) for t in t_grid]
    if any(t < 0 for t in ts):
        raise InputError("t grid must be nonnegative")
    digits = pmap.digit_sequence()
    if not isinstance(digits, FullBranchDigits):
        raise InputError("fast pressure curve needs a full-branch map")
    p = pmap.branch_count
    if p**n > budget:
        raise BudgetError(f"{p}^{n} cylinders exceed budget {budget}")
    n_lower = n_lower or n
    table = _full_shift_phi_table(pmap, n)
    pad = PAD * (1 + n)

    Slo_n, _, _ = table[n]
    phi_hi_n = np.minimum(-Slo_n + pad, 0.0)  # phi <= 0: df >= 1 everywhere

    Slo_g, Shi_g, good = table[n_lower]
    phi_lo_g = -Shi_g[good] - pad  # inf over each good cylinder
    # report the empirical variation over good cylinders (not needed for the
    # lower bound, which glues inf-endpoint values directly)
    V = 0.0
    for k in range(1, n_lower + 1):
        Sl, Sh, g = table[k]
        if g.any():
            V = max(V, float(np.max(Sh[g] - Sl[g])) + 2 * pad)
    # connector: one symbol returns any good word to the base vertex
    tau = beta_tau(digits, 3)
    sup_norm = abs(math.log(pmap.df_branch(p - 1, math.nextafter(1.0, 0.0))))

    envelope = None
    if pmap.kind == "MP" and getattr(pmap, "full_branches", False):
        envelope = transfer_envelope_upper(pmap, ts)

    lowers, uppers = [], []
    for j, t in enumerate(ts):
        hi_terms = np.exp(t * phi_hi_n)
        upper = math.log(math.fsum(hi_terms.tolist())) / n
        if envelope is not None:
            upper = envelope[j]  # deeper bound; keeps convexity in t
        if good.any():
            lo_terms = np.exp(t * phi_lo_g)
            lam_lo = math.fsum(lo_terms.tolist())
            lower = (math.log(lam_lo) - tau * t * sup_norm) / (n_lower + tau)
        else:
            lower = -math.inf
        lowers.append(min(lower, upper))
        uppers.append(upper)

    kink = None
    if len(ts) >= 3:
        second = [
            (uppers[i + 1] - uppers[i]) / (ts[i + 1] - ts[i])
            - (uppers[i] - uppers[i - 1]) / (ts[i] - ts[i - 1])
            for i in range(1, len(ts) - 1)
        ]
        near = [i for i in range(1, len(ts) - 1) if abs(ts[i] - 1.0) <= 0.5]
        pool = near or list(range(1, len(ts) - 1))
        kink = ts[max(pool, key=lambda i: second[i - 1])]
    return PressureCurve(
        ts=ts,
        lowers=lowers,
        uppers=uppers,
        n=n,
        kink_estimate=kink,
        meta={"n_lower": n_lower, "V": V, "tau": tau, "good_count": int(good.sum())},
    )

"""Partition sums and pressure brackets.

The upper bound uses submultiplicativity of the full-language sums; the lower
bound glues level-M words through return paths, paying the gap length and a
variation bound.  All sums are compensated (math.fsum) in lexicographic order
so reruns are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import InputError
from .potentials import (
    GridPotential,
    LocallyConstant,
    PotentialSpec,
    ZeroPotential,
)
from .words import DEFAULT_BUDGET, SubshiftModel, Word


@dataclass(frozen=True)
class PartitionSum:
    n: int
    lo: float
    hi: float
    count: int
    classifier_id: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise InputError("partition sum bracket inverted")
        if self.count > 0 and self.lo <= 0:
            raise InputError("positive count requires positive lower sum")


def partition_sum(
    model: SubshiftModel,
    pot: PotentialSpec,
    classifier: Optional[Callable[[Word], bool]],
    n: int,
    budget: int = DEFAULT_BUDGET,
    classifier_id: str = "all",
) -> PartitionSum:
    """Sum of e^{phi_n(w)} over classified length-n words, as a bracket."""
    los, his = [], []
    for w in model.enumerate_words(n, budget):
        if classifier is not None and not classifier(w):
            continue
        iv = pot.sup_interval(model, w)
        los.append(math.exp(iv.lo))
        his.append(math.exp(iv.hi))
    return PartitionSum(n, math.fsum(los), math.fsum(his), len(los), classifier_id)


def variation_bound(
    model: SubshiftModel,
    pot: PotentialSpec,
    classifier: Optional[Callable[[Word], bool]],
    n_max: int,
    budget: int = DEFAULT_BUDGET,
):
    """(V, grade): bound on sup-inf of Birkhoff sums over classified cylinders.

    Exact for depth-k tables (only the last k-1 windows are undetermined) and
    for the zero potential; otherwise the empirical max over n <= n_max,
    labeled diagnostic-grade.
    """
    if isinstance(pot, ZeroPotential):
        return 0.0, "certified"
    if isinstance(pot, LocallyConstant):
        if pot.depth == 1:
            return 0.0, "certified"
        return 2.0 * (pot.depth - 1) * pot.sup_norm_bound, "certified"
    v = 0.0
    for n in range(1, n_max + 1):
        for w in model.enumerate_words(n, budget):
            if classifier is not None and not classifier(w):
                continue
            s = pot.sup_interval(model, w)
            i = pot.inf_interval(model, w)
            v = max(v, s.hi - i.lo)
    return v, "diagnostic"


@dataclass
class PressureBracket:
    lower: float
    upper: float
    n_used: dict
    method: dict
    lambda_cache: dict = field(default_factory=dict, repr=False)

    def as_row(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "n_used": self.n_used,
            "method": self.method,
        }


def pressure_bracket(
    model: SubshiftModel,
    pot: PotentialSpec,
    dec,
    n: int,
    M: int = 1,
    budget: int = DEFAULT_BUDGET,
    variation: Optional[float] = None,
    variation_grade: str = "supplied",
) -> PressureBracket:
    """upper = min_k (1/k) log Lambda_k(L).hi; lower via gluing of G(M)_k
    words through tau(M)-step connectors, discounting the variation bound and
    the connector's worst Birkhoff contribution."""
    if n < 1:
        raise InputError("need n >= 1")
    tau = dec.tau(M)
    if variation is None:
        variation, variation_grade = variation_bound(
            model, pot, lambda w: dec.in_GM(w, M), min(n, 8), budget
        )
    cache = {}
    upper = math.inf
    upper_n = None
    uppers = []
    for k in range(1, n + 1):
        ps = partition_sum(model, pot, None, k, budget, "L")
        cache[("L", k)] = ps
        u = math.log(ps.hi) / k
        uppers.append(u)
        if u < upper:
            upper, upper_n = u, k
    lower = -math.inf
    lower_n = None
    for k in range(1, n + 1):
        ps = partition_sum(
            model, pot, lambda w: dec.in_GM(w, M), k, budget, f"G({M})"
        )
        cache[(f"G({M})", k)] = ps
        if ps.count == 0:
            continue
        l = (math.log(ps.lo) - variation - tau * pot.sup_norm_bound) / (k + tau)
        if l > lower:
            lower, lower_n = l, k
    if lower > upper:
        # only numerically possible at epsilon scale; keep the order invariant
        if lower - upper > 1e-9 * max(1.0, abs(upper)):
            raise InputError(
                f"bracket inverted beyond roundoff: lower={lower} upper={upper}"
            )
        lower = upper
    return PressureBracket(
        lower=lower,
        upper=upper,
        n_used={"upper": upper_n, "lower": lower_n, "n_max": n},
        method={
            "upper": "submultiplicative",
            "lower": f"gluing M={M} tau={tau} V={variation:.6g} ({variation_grade})",
            "upper_sequence": uppers,
        },
        lambda_cache=cache,
    )


def condition_III_diagnostic(
    model: SubshiftModel,
    pot: PotentialSpec,
    dec,
    phat: PressureBracket,
    n_max: int,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Summability surrogate: terms Lambda_n(Cp u Cs).hi e^{-n P.lower}.

    ratio_estimate is the mean term ratio over the last half; verdict
    "summable-like" when it sits below 1 by a clear margin.  Also reports the
    running (1/n)-Birkhoff average along the kneading word when the model
    carries one, for comparison against P.lower.
    """
    classifier = lambda w: dec.in_Cs(w) or dec.in_Cp(w)
    terms, partial = [], []
    acc = 0.0
    for k in range(1, n_max + 1):
        ps = partition_sum(model, pot, classifier, k, budget, "Cs+Cp")
        t = ps.hi * math.exp(-k * phat.lower)
        terms.append(t)
        acc += t
        partial.append(acc)
    nonzero = [t for t in terms if t > 0]
    ratio = None
    half = nonzero[len(nonzero) // 2 :]
    if len(half) >= 2:
        rs = [half[i + 1] / half[i] for i in range(len(half) - 1)]
        ratio = sum(rs) / len(rs)
    if ratio is not None and ratio < 1.0 - 1e-3:
        verdict = "summable-like"
    else:
        verdict = "inconclusive"
    out = {
        "terms": terms,
        "partial_sums": partial,
        "ratio_estimate": ratio,
        "verdict": verdict,
    }
    digits = getattr(model, "digits", None)
    if digits is not None:
        rows = []
        for k in range(1, n_max + 1):
            prefix = tuple(digits.prefix(k))
            if not model.contains(prefix):
                break
            iv = pot.sup_interval(model, prefix)
            rows.append((k, iv.hi / k, phat.lower))
        out["kneading_average"] = rows
    return out


def _verdict(lhs_lo, lhs_hi, rhs_lo, rhs_hi):
    """Check lhs < rhs given brackets for both sides."""
    if lhs_hi < rhs_lo:
        return "satisfied"
    if lhs_lo >= rhs_hi:
        return "violated"
    return "undecided"


def gap_checks(
    model: SubshiftModel,
    pot_r: PotentialSpec,
    grid: GridPotential,
    dec,
    n: int = 8,
    M: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Three sufficient-gap diagnostics for the split potential phi_r + phi_0.

    thmB:   phi at the all-zero fixed point vs the pressure bracket of phi.
    BR:     -inf phi_0 vs P(X, phi_r) - P(Y, phi_r), Y the reference shift.
    factor: sup phi - inf phi vs the entropy bracket of X.
    """
    from .potentials import SumPotential

    pot = SumPotential([pot_r, grid])
    coeffs = grid.coeffs

    # phi at 0^inf: one Birkhoff step of the periodic word (0)
    p0 = pot.periodic_birkhoff(model, (0,))
    phat = pressure_bracket(model, pot, dec, n, M, budget)
    thmb = {
        "lhs": (p0.lo, p0.hi),
        "rhs": (phat.lower, phat.upper),
        "verdict": _verdict(p0.lo, p0.hi, phat.lower, phat.upper),
    }

    # inf phi_0 over the grid cells up to the tail horizon, padded by the tail
    if callable(coeffs.a):
        vals = [coeffs.value_by_zeros(k) for k in range(grid.tail_horizon)]
    else:
        vals = list(map(float, coeffs.a.values()))
    tail = coeffs.sup_tail(grid.tail_horizon)
    inf_lo = min(min(vals), -tail, 0.0)
    inf_hi = min(min(vals), 0.0)
    px_r = pressure_bracket(model, pot_r, dec, n, M, budget)
    if coeffs.y_model is not None:
        from .beta import TrivialDecomposition

        py_r = pressure_bracket(
            coeffs.y_model, pot_r, TrivialDecomposition(coeffs.y_model, 0), n, M, budget
        )
        py_lo, py_hi = py_r.lower, py_r.upper
    else:
        # Y = {0}: a single fixed point, so the pressure is phi_r at 0^inf
        q = pot_r.periodic_birkhoff(model, (0,))
        py_lo, py_hi = q.lo, q.hi
    br = {
        "lhs": (-inf_hi, -inf_lo),
        "rhs": (px_r.lower - py_hi, px_r.upper - py_lo),
        "verdict": _verdict(-inf_hi, -inf_lo, px_r.lower - py_hi, px_r.upper - py_lo),
    }

    # sup phi - inf phi from one-symbol cylinder brackets
    sup_lo = -math.inf
    sup_hi = -math.inf
    i_lo = math.inf
    i_hi = math.inf
    for s in range(model.alphabet_size):
        w = (s,)
        if not model.contains(w):
            continue
        siv = pot.sup_interval(model, w)
        iiv = pot.inf_interval(model, w)
        sup_lo, sup_hi = max(sup_lo, siv.lo), max(sup_hi, siv.hi)
        i_lo, i_hi = min(i_lo, iiv.lo), min(i_hi, iiv.hi)
    osc_lo, osc_hi = sup_lo - i_hi, sup_hi - i_lo
    htop = pressure_bracket(model, ZeroPotential(), dec, n, M, budget)
    factor = {
        "lhs": (osc_lo, osc_hi),
        "rhs": (htop.lower, htop.upper),
        "verdict": _verdict(osc_lo, osc_hi, htop.lower, htop.upper),
    }
    return {"thmB": thmb, "BR": br, "factor": factor, "pressure": phat.as_row()}


def report_row(op: str, model, pot, n: int, lo: float, hi: float, verdict: str = ""):
    return {
        "op": op,
        "model": model.describe(),
        "potential": pot.describe(),
        "n": n,
        "lo": lo,
        "hi": hi,
        "verdict": verdict,
    }

"""Potentials evaluated on cylinders as certified brackets.

phi_n(w) brackets sup over the cylinder of the n-step Birkhoff sum; the same
machinery brackets the inf, so oscillation diagnostics come for free.
Locally constant potentials are exact once admissible extensions are
enumerated; grid potentials (constant on the minimal-forbidden-word cells of
a reference subshift Y) are exact on positions whose cell is visible and
bracketed through a certified tail bound on the coefficients elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import InputError
from .words import SubshiftModel, Word

GRID_TAIL_HORIZON = 64


@dataclass(frozen=True)
class PhiInterval:
    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi + 1e-15:
            raise InputError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def scale(self, c: float) -> "PhiInterval":
        if c >= 0:
            return PhiInterval(c * self.lo, c * self.hi)
        return PhiInterval(c * self.hi, c * self.lo)


def _all_extensions(model: SubshiftModel, w: Word, m: int):
    """All admissible words w+e with |e| = m (depth-first, lexicographic)."""
    state = model.initial_state()
    for s in w:
        state = model.child(state, s)
        if state is None:
            raise InputError(f"word {w} not admissible")
    out = []
    stack = [((), state)]
    while stack:
        e, st = stack.pop()
        if len(e) == m:
            out.append(w + e)
            continue
        for s in range(model.alphabet_size - 1, -1, -1):
            c = model.child(st, s)
            if c is not None:
                stack.append((e + (s,), c))
    return out


class PotentialSpec:
    """Common interface: bracket sup/inf Birkhoff sums over a cylinder."""

    sup_norm_bound: float

    def sup_interval(self, model, w: Word) -> PhiInterval:
        raise NotImplementedError

    def inf_interval(self, model, w: Word) -> PhiInterval:
        raise NotImplementedError

    def point_birkhoff(self, model, w: Word) -> PhiInterval:
        """S_n at the lexicographically minimal extension representative."""
        raise NotImplementedError

    def periodic_birkhoff(self, model, w: Word) -> PhiInterval:
        """S_n at the periodic point w^inf (exact for symbolic variants)."""
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


def phi_n(pot: PotentialSpec, model: SubshiftModel, w: Word) -> PhiInterval:
    """Bracket of phi_n(w) = sup over the cylinder of the Birkhoff sum."""
    if not model.contains(w):
        raise InputError(f"word {w} not admissible")
    return pot.sup_interval(model, w)


class ZeroPotential(PotentialSpec):
    sup_norm_bound = 0.0

    def sup_interval(self, model, w):
        return PhiInterval(0.0, 0.0)

    inf_interval = sup_interval
    point_birkhoff = sup_interval
    periodic_birkhoff = sup_interval

    def describe(self):
        return "zero"


class LocallyConstant(PotentialSpec):
    """Depth-k potential given by a total table on length-k words."""

    def __init__(self, depth: int, table: dict):
        if depth < 1:
            raise InputError("depth must be >= 1")
        self.depth = depth
        self.table = {tuple(k): float(v) for k, v in table.items()}
        for k in self.table:
            if len(k) != depth:
                raise InputError(f"table key {k} has length != {depth}")
        self.sup_norm_bound = max(abs(v) for v in self.table.values())

    def _value(self, window: Word) -> float:
        try:
            return self.table[window]
        except KeyError:
            raise InputError(f"table missing admissible window {window}") from None

    def _sums_over_extensions(self, model, w):
        n, k = len(w), self.depth
        head = sum(self._value(w[i : i + k]) for i in range(max(0, n - k + 1)))
        if k == 1 or n == 0:
            return head, head
        tails = []
        for ext in _all_extensions(model, w, k - 1):
            t = sum(
                self._value(ext[i : i + k]) for i in range(max(0, n - k + 1), n)
            )
            tails.append(t)
        return head + min(tails), head + max(tails)

    def sup_interval(self, model, w):
        _, hi = self._sums_over_extensions(model, w)
        return PhiInterval(hi, hi)

    def inf_interval(self, model, w):
        lo, _ = self._sums_over_extensions(model, w)
        return PhiInterval(lo, lo)

    def point_birkhoff(self, model, w):
        n, k = len(w), self.depth
        x = model.extend_minimal(w, n + k - 1)
        v = sum(self._value(x[i : i + k]) for i in range(n))
        return PhiInterval(v, v)

    def periodic_birkhoff(self, model, w):
        n, k = len(w), self.depth
        x = w * (1 + -(-k // max(1, n)))
        v = sum(self._value(x[i : i + k]) for i in range(n))
        return PhiInterval(v, v)

    def describe(self):
        return f"locconst:d={self.depth}"


class GridCoefficients:
    """Coefficient data for a grid function on the partition induced by Y.

    For Y = {0} (y_model is None) `a` maps the leading-zero count k to the
    value on the cell [0^k z].  `sup_tail(K)` must dominate sup_{k >= K} |a_k|.
    For a general subshift Y, `a` maps minimal forbidden words to values.
    """

    def __init__(
        self,
        a,
        sup_tail: Callable[[int], float],
        y_model: Optional[SubshiftModel] = None,
        sup_abs: Optional[float] = None,
    ):
        self.y_model = y_model
        self.a = a
        self.sup_tail = sup_tail
        if sup_abs is None:
            if callable(a):
                sup_abs = max(
                    max(abs(a(k)) for k in range(GRID_TAIL_HORIZON)), sup_tail(0)
                )
            else:
                sup_abs = max((abs(v) for v in a.values()), default=0.0)
        self.sup_abs = float(sup_abs)

    def value_by_zeros(self, k: int) -> float:
        if not callable(self.a):
            raise InputError("coefficients are word-keyed; use value_by_word")
        return float(self.a(k))

    def value_by_word(self, w: Word) -> float:
        if callable(self.a):
            # Y = {0}: forbidden words are 0^k z
            return float(self.a(len(w) - 1))
        try:
            return float(self.a[tuple(w)])
        except KeyError:
            raise InputError(f"no coefficient for forbidden word {w}") from None

    def in_LY(self, w: Word) -> bool:
        if self.y_model is None:
            return all(c == 0 for c in w)
        return self.y_model.contains(w)

    def vanishing_check(self, lengths=(8, 16, 32, 64)) -> bool:
        """Tail bound must shrink (coefficients vanish in word length)."""
        vals = [self.sup_tail(n) for n in lengths]
        return all(b >= 0 for b in vals) and vals[-1] <= vals[0]


class GridPotential(PotentialSpec):
    """phi_0 = sum of a_w over the minimal-forbidden-word cells of Y."""

    def __init__(self, coeffs: GridCoefficients, tail_horizon: int = GRID_TAIL_HORIZON):
        self.coeffs = coeffs
        self.tail_horizon = tail_horizon
        self.sup_norm_bound = coeffs.sup_abs

    # -- Y = {0} ------------------------------------------------------------

    def _zeros_profile(self, w: Word):
        """(exact visible sum, trailing zero-block length)."""
        n = len(w)
        z = 0
        while z < n and w[n - 1 - z] == 0:
            z += 1
        visible = 0.0
        for i in range(n - z):
            m = 0
            while w[i + m] == 0:
                m += 1
            visible += self.coeffs.value_by_zeros(m)
        return visible, z

    def _block_hull(self, z: int, n: int):
        """Hull of the trailing block's contribution over extension scenarios."""
        if z == 0:
            return 0.0, 0.0
        lo = hi = 0.0  # the all-zero extension contributes 0
        i0 = n - z
        for m in range(n, n + self.tail_horizon + 1):
            t = sum(self.coeffs.value_by_zeros(m - i) for i in range(i0, n))
            lo, hi = min(lo, t), max(hi, t)
        beyond = z * self.coeffs.sup_tail(self.tail_horizon + 2)
        return min(lo, -beyond), max(hi, beyond)

    # -- general Y ----------------------------------------------------------

    def _general_bounds(self, w: Word):
        n = len(w)
        lo = hi = 0.0
        for i in range(n):
            cell = None
            for j in range(i + 1, n + 1):
                if not self.coeffs.in_LY(w[i:j]):
                    cell = w[i:j]
                    break
            if cell is not None:
                v = self.coeffs.value_by_word(cell)
                lo += v
                hi += v
            else:
                b = self.coeffs.sup_tail(n - i + 1)
                lo -= b
                hi += b
        return lo, hi

    def _bounds(self, w: Word):
        if self.coeffs.y_model is None and callable(self.coeffs.a):
            visible, z = self._zeros_profile(w)
            blo, bhi = self._block_hull(z, len(w))
            return visible + blo, visible + bhi
        return self._general_bounds(w)

    def sup_interval(self, model, w):
        lo, hi = self._bounds(w)
        p = self.point_birkhoff(model, w)
        return PhiInterval(max(lo, p.lo), hi)

    def inf_interval(self, model, w):
        lo, hi = self._bounds(w)
        p = self.point_birkhoff(model, w)
        return PhiInterval(lo, min(hi, p.hi))

    def point_birkhoff(self, model, w):
        """Exact value at the minimal extension (trailing zeros contribute 0
        when the minimal extension is all zeros)."""
        n = len(w)
        x = model.extend_minimal(w, n + self.tail_horizon)
        total = 0.0
        tail_pad = 0.0
        for i in range(n):
            cell = None
            for j in range(i + 1, len(x) + 1):
                if not self.coeffs.in_LY(x[i:j]):
                    cell = x[i:j]
                    break
            if cell is not None:
                total += self.coeffs.value_by_word(cell)
            elif any(c != 0 for c in x[i:]) or self.coeffs.y_model is not None:
                tail_pad = max(tail_pad, self.coeffs.sup_tail(len(x) - i))
            # else: the minimal extension is 0^inf, contribution exactly 0
        return PhiInterval(total - tail_pad, total + tail_pad)

    def periodic_birkhoff(self, model, w):
        n = len(w)
        if all(c == 0 for c in w):
            return PhiInterval(0.0, 0.0)
        reps = 2 + (self.tail_horizon // max(1, n))
        x = w * reps
        total = 0.0
        for i in range(n):
            for j in range(i + 1, len(x) + 1):
                if not self.coeffs.in_LY(x[i:j]):
                    total += self.coeffs.value_by_word(x[i:j])
                    break
            else:  # pragma: no cover - nonzero word always leaves L(Y)
                raise InputError("periodic word never leaves the reference shift")
        return PhiInterval(total, total)

    def describe(self):
        return "grid"


class ScaledPotential(PotentialSpec):
    def __init__(self, inner: PotentialSpec, c: float):
        self.inner = inner
        self.c = float(c)
        self.sup_norm_bound = abs(self.c) * inner.sup_norm_bound

    def sup_interval(self, model, w):
        base = self.inner.sup_interval(model, w) if self.c >= 0 else self.inner.inf_interval(model, w)
        return base.scale(self.c)

    def inf_interval(self, model, w):
        base = self.inner.inf_interval(model, w) if self.c >= 0 else self.inner.sup_interval(model, w)
        return base.scale(self.c)

    def point_birkhoff(self, model, w):
        return self.inner.point_birkhoff(model, w).scale(self.c)

    def periodic_birkhoff(self, model, w):
        return self.inner.periodic_birkhoff(model, w).scale(self.c)

    def describe(self):
        return f"{self.c}*{self.inner.describe()}"


class SumPotential(PotentialSpec):
    def __init__(self, parts):
        self.parts = list(parts)
        self.sup_norm_bound = sum(p.sup_norm_bound for p in self.parts)

    def sup_interval(self, model, w):
        hi = sum(p.sup_interval(model, w).hi for p in self.parts)
        lo = sum(p.point_birkhoff(model, w).lo for p in self.parts)
        return PhiInterval(min(lo, hi), hi)

    def inf_interval(self, model, w):
        lo = sum(p.inf_interval(model, w).lo for p in self.parts)
        hi = sum(p.point_birkhoff(model, w).hi for p in self.parts)
        return PhiInterval(lo, max(lo, hi))

    def point_birkhoff(self, model, w):
        lo = sum(p.point_birkhoff(model, w).lo for p in self.parts)
        hi = sum(p.point_birkhoff(model, w).hi for p in self.parts)
        return PhiInterval(lo, hi)

    def periodic_birkhoff(self, model, w):
        lo = sum(p.periodic_birkhoff(model, w).lo for p in self.parts)
        hi = sum(p.periodic_birkhoff(model, w).hi for p in self.parts)
        return PhiInterval(lo, hi)

    def describe(self):
        return "+".join(p.describe() for p in self.parts)


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------


def variation_diagnostic(
    pot: PotentialSpec,
    model: SubshiftModel,
    classifier,
    n_max: int,
    budget: int = 10**6,
) -> dict:
    """Per-length oscillation bounds V_n over classified cylinders.

    V_n = max over classified words of (sup_hi - inf_lo); verdict "growing"
    when the last quarter strictly increases with increments that do not
    decay geometrically (ratio >= 0.9), else "bounded".
    """
    vs = []
    for n in range(1, n_max + 1):
        vmax = 0.0
        for w in model.enumerate_words(n, budget):
            if not classifier(w):
                continue
            s = pot.sup_interval(model, w)
            i = pot.inf_interval(model, w)
            vmax = max(vmax, s.hi - i.lo)
        vs.append(vmax)
    verdict = "bounded"
    if len(vs) >= 4:
        q = max(2, len(vs) // 4)
        tail = vs[-q:]
        if all(b > a for a, b in zip(tail, tail[1:])):
            incs = [b - a for a, b in zip(vs, vs[1:]) if b > a]
            ratios = [b / a for a, b in zip(incs, incs[1:]) if a > 0]
            if ratios and max(ratios[-3:]) >= 0.9:
                verdict = "growing"
    return {"V": vs, "verdict": verdict}


def grid_bowen_criterion(
    coeffs: GridCoefficients, tail_terms: int = 256, cauchy_tol: float = 1e-9
) -> dict:
    """Convergence diagnostic for sum a_{0^k z} (Y = {0} coefficients).

    Verdicts are heuristics over `tail_terms` terms: geometric or Cauchy
    decay and alternating Leibniz tails read "bowen"; same-signed terms with
    k*|a_k| bounded below read "not-bowen"; anything else "inconclusive".
    """
    a = [coeffs.value_by_zeros(k) for k in range(tail_terms)]
    partial = []
    s = 0.0
    for v in a:
        s += v
        partial.append(s)
    half = partial[tail_terms // 2 :]
    spread = max(half) - min(half)
    scale = max(1.0, max(abs(p) for p in partial))
    if spread <= cauchy_tol * scale:
        return {"verdict": "bowen", "reason": "cauchy", "partial_sums": partial}
    tail = a[tail_terms // 2 :]
    absa = [abs(v) for v in tail]
    if all(v > 0 for v in absa):
        ratios = [absa[i + 1] / absa[i] for i in range(len(absa) - 1)]
        if max(ratios) < 0.9:
            return {"verdict": "bowen", "reason": "geometric", "partial_sums": partial}
        signs = [math.copysign(1, v) for v in tail]
        alternating = all(s1 == -s2 for s1, s2 in zip(signs, signs[1:]))
        decreasing = all(b <= a_ for a_, b in zip(absa, absa[1:]))
        if alternating and decreasing and absa[-1] < absa[0]:
            return {"verdict": "bowen", "reason": "leibniz", "partial_sums": partial}
        same_sign = all(s1 == s2 for s1, s2 in zip(signs, signs[1:]))
        ks = range(tail_terms // 2, tail_terms)
        if same_sign and min(k * av for k, av in zip(ks, absa)) > 1e-3:
            return {
                "verdict": "not-bowen",
                "reason": "harmonic-or-slower",
                "partial_sums": partial,
            }
    return {"verdict": "inconclusive", "reason": "no rule fired", "partial_sums": partial}


class GridLevelDecomposition:
    """Window classifiers G^l / C^{s,l} for a reference subshift Y inside X."""

    cp_empty = True

    def __init__(self, model: SubshiftModel, coeffs_or_y, level: int, t: int = 0):
        if level < 1:
            raise InputError("window length must be >= 1")
        self.model = model
        if isinstance(coeffs_or_y, GridCoefficients):
            self._in_LY = coeffs_or_y.in_LY
        elif coeffs_or_y is None:
            self._in_LY = lambda w: all(c == 0 for c in w)
        else:
            self._in_LY = coeffs_or_y.contains
        self.level = level
        self.t = t

    def in_G(self, w: Word) -> bool:
        l = self.level
        return len(w) >= l and not self._in_LY(w[-l:])

    def in_Cs(self, w: Word) -> bool:
        l = self.level
        return all(self._in_LY(w[k : k + l]) for k in range(max(0, len(w) - l + 1)))

    def in_Cp(self, w: Word) -> bool:
        return False

    def in_GM(self, w: Word, M: int) -> bool:
        for j in range(len(w), max(-1, len(w) - M - 1), -1):
            g, s = w[:j], w[j:]
            if (len(g) == 0 or self.in_G(g)) and self.in_Cs(s):
                return True
        return False

    def tau(self, M: int) -> int:
        return self.t

    def split(self, w: Word):
        for j in range(len(w), -1, -1):
            if (j == 0 or self.in_G(w[:j])) and self.in_Cs(w[j:]):
                return w[:j], w[j:]
        raise InputError(f"word {w} admits no window decomposition")

    def describe(self):
        return f"gridlevel:{self.level}"


def grid_classifiers(model: SubshiftModel, y_spec, level: int, t: int = 0):
    return GridLevelDecomposition(model, y_spec, level, t)


def minimal_forbidden_words(
    model: SubshiftModel, y_spec, n_max: int, budget: int = 10**6
):
    """F(X, Y) up to length n_max: shortest windows of X-words leaving L(Y)."""
    if y_spec is None:
        in_LY = lambda w: all(c == 0 for c in w)
    elif isinstance(y_spec, GridCoefficients):
        in_LY = y_spec.in_LY
    else:
        in_LY = y_spec.contains
    out = []
    for n in range(1, n_max + 1):
        for w in model.enumerate_words(n, budget):
            if not in_LY(w) and (n == 1 or in_LY(w[:-1])):
                out.append(w)
    return out

"""Certified greedy beta-expansions and the countable graph presentation.

The expansion of 1 in base beta follows the recursion r_0 = 1,
d_n = floor(beta * r_{n-1}), r_n = beta * r_{n-1} - d_n.  All arithmetic is
exact (rationals, quadratic integers) or interval-based with certified
floors, so digits never depend on float rounding.

The graph presentation has vertices v_1, v_2, ...; at v_i the forward edge
carries digit i and the drop edges to v_1 carry the smaller symbols.  Words
are paths from v_1; the terminal vertex classifies a word into the
decompositions used for pressure bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PrecisionError
from .words import BetaShift, Word


# ---------------------------------------------------------------------------
# exact / certified number types for the greedy recursion
# ---------------------------------------------------------------------------


class QuadReal:
    """Exact element a + b*sqrt(D) of a real quadratic field (D > 1 nonsquare)."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b, D: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.D = int(D)

    def __mul__(self, other):
        if isinstance(other, QuadReal):
            if other.D != self.D:
                raise InputError("mixed quadratic fields")
            return QuadReal(
                self.a * other.a + self.b * other.b * self.D,
                self.a * other.b + self.b * other.a,
                self.D,
            )
        return QuadReal(self.a * other, self.b * other, self.D)

    def __sub__(self, k: int):
        return QuadReal(self.a - k, self.b, self.D)

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs = a * a
        rhs = b * b * self.D
        if a > 0:  # b < 0
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)  # a < 0, b > 0

    def cmp_int(self, k: int) -> int:
        return (self - k).sign()

    def floor(self) -> int:
        m = math.floor(float(self.a) + float(self.b) * math.sqrt(self.D))
        # correct the float guess exactly
        while self.cmp_int(m) < 0:
            m -= 1
        while self.cmp_int(m + 1) >= 0:
            m += 1
        return m

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def key(self):
        return (self.a, self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        return f"QuadReal({self.a}, {self.b}, {self.D})"


@dataclass(frozen=True)
class RatInterval:
    """Closed rational interval; floors must be certified (endpoints agree)."""

    lo: Fraction
    hi: Fraction

    def __mul__(self, other: "RatInterval") -> "RatInterval":
        prods = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return RatInterval(min(prods), max(prods))

    def __sub__(self, k: int) -> "RatInterval":
        return RatInterval(self.lo - k, self.hi - k)

    def floor(self) -> int:
        flo, fhi = math.floor(self.lo), math.floor(self.hi)
        if flo != fhi:
            raise PrecisionError(
                f"floor undecidable on interval [{self.lo}, {self.hi}]; "
                "supply beta with a smaller radius"
            )
        return flo

    def is_zero(self) -> bool:
        return self.lo == 0 and self.hi == 0

    def key(self):
        return (self.lo, self.hi)

    def __float__(self):
        return float((self.lo + self.hi) / 2)


def parse_beta(spec):
    """Accept Fraction/int/str ('3/2', '1.8', 'golden') or QuadReal/RatInterval."""
    if isinstance(spec, (QuadReal, RatInterval)):
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        if s == "golden":
            return QuadReal(Fraction(1, 2), Fraction(1, 2), 5)
        if s.startswith("sqrt"):
            return QuadReal(0, 1, int(s[4:]))
        if "+-" in s:  # decimal with explicit radius, e.g. "1.8+-1e-12"
            mid, rad = s.split("+-")
            c, r = Fraction(mid), Fraction(rad)
            return RatInterval(c - r, c + r)
        return Fraction(s)
    if isinstance(spec, float):
        raise InputError(
            "float beta is ambiguous; pass a Fraction, a decimal string, "
            "or 'mid+-radius'"
        )
    return Fraction(spec)


# ---------------------------------------------------------------------------
# digit sequences
# ---------------------------------------------------------------------------


class DigitSequence:
    """Growable certified digit sequence interface.

    digit(i) is 1-based and extends the buffer on demand.  exact_period()
    returns (preperiod, period) when eventual periodicity is *proven*,
    else None.
    """

    alphabet_size: int

    def digit(self, i: int) -> int:
        self.ensure(i)
        return self._digits[i - 1]

    def ensure(self, k: int) -> None:
        raise NotImplementedError

    @property
    def certified_len(self) -> int:
        return len(self._digits)

    def exact_period(self):
        return None

    def prefix(self, n: int) -> Word:
        self.ensure(n)
        return tuple(self._digits[:n])

    def describe(self) -> str:
        raise NotImplementedError


class BetaExpansion(DigitSequence):
    """Greedy beta-expansion of 1 with certified digits.

    ev_periodic_hint is (preperiod, period) when a cycle in the exact
    remainders is found; a hit means the shift is sofic but changes nothing
    in how membership queries are answered.
    """

    def __init__(self, beta, initial_digits: int = 32):
        beta = parse_beta(beta)
        self.beta = beta
        lo = beta.lo if isinstance(beta, RatInterval) else beta
        if (lo <= 1) if isinstance(lo, Fraction) else (beta.cmp_int(1) <= 0):
            raise InputError("beta must be > 1")
        if isinstance(beta, Fraction) and beta.denominator == 1:
            raise InputError(
                "integer beta gives a degenerate expansion; use FullShift instead"
            )
        if isinstance(beta, Fraction):
            self.alphabet_size = math.ceil(beta)
        elif isinstance(beta, QuadReal):
            self.alphabet_size = beta.floor() + (0 if beta.cmp_int(beta.floor()) == 0 else 1)
        else:
            cl, ch = math.ceil(beta.lo), math.ceil(beta.hi)
            if cl != ch:
                raise PrecisionError("ceil(beta) undecidable at given radius")
            self.alphabet_size = cl
        self._digits: list = []
        self._r = self._one()
        self._seen = {self._key(self._r): 0}
        self.ev_periodic_hint = None
        self._terminated_at = None
        self.ensure(initial_digits)

    def _one(self):
        b = self.beta
        if isinstance(b, Fraction):
            return Fraction(1)
        if isinstance(b, QuadReal):
            return QuadReal(1, 0, b.D)
        return RatInterval(Fraction(1), Fraction(1))

    @staticmethod
    def _key(r):
        return r.key() if hasattr(r, "key") else r

    def ensure(self, k: int) -> None:
        while len(self._digits) < k:
            if self._terminated_at is not None:
                self._digits.append(0)
                continue
            prod = self.beta * self._r if not isinstance(self.beta, Fraction) else None
            if isinstance(self.beta, Fraction):
                x = self.beta * self._r
                d = math.floor(x)
                r = x - d
                zero = r == 0
            else:
                x = prod
                d = x.floor()
                r = x - d
                zero = r.is_zero()
            self._digits.append(d)
            self._r = r
            if zero:
                self._terminated_at = len(self._digits)
                self.ev_periodic_hint = (len(self._digits), 1)
                continue
            key = self._key(r)
            if not isinstance(self.beta, RatInterval):
                if key in self._seen and self.ev_periodic_hint is None:
                    pre = self._seen[key]
                    self.ev_periodic_hint = (pre, len(self._digits) - pre)
                self._seen.setdefault(key, len(self._digits))

    def exact_period(self):
        # exact arithmetic only; interval remainders can collide spuriously
        if isinstance(self.beta, RatInterval):
            return None
        return self.ev_periodic_hint

    def recompute_check(self, k: int) -> bool:
        """Recompute from scratch and compare the first k digits (recertification)."""
        fresh = BetaExpansion(self.beta, initial_digits=k)
        return fresh.prefix(k) == self.prefix(k)

    def describe(self) -> str:
        b = self.beta
        if isinstance(b, Fraction):
            return str(b)
        if isinstance(b, QuadReal):
            return f"{b.a}+{b.b}*sqrt{b.D}"
        return f"[{b.lo},{b.hi}]"

    def dump(self) -> str:
        ds = " ".join(str(d) for d in self._digits)
        return f"beta={self.describe()} digits={ds} certified={len(self._digits)}"


def greedy_expansion(beta, k: int) -> BetaExpansion:
    """First k certified digits of the greedy expansion of 1."""
    if k < 1:
        raise InputError("digit count must be >= 1")
    return BetaExpansion(beta, initial_digits=k)


# ---------------------------------------------------------------------------
# follower-vertex walk and decompositions
# ---------------------------------------------------------------------------


def follower_vertex(digits: DigitSequence, w: Word):
    """Terminal vertex of the walk from v_1, or None on rejection.

    At v_i: symbol equal to digit i advances, smaller drops to v_1 (symbol
    consumed), larger rejects.  Rejection iff the word is inadmissible.
    """
    v = 1
    for s in w:
        d = digits.digit(v)
        if s == d:
            v += 1
        elif s < d:
            v = 1
        else:
            return None
    return v


def walk_vertices(digits: DigitSequence, w: Word):
    """Vertex after each step (length |w|+1 including the start at v_1)."""
    v = 1
    out = [1]
    for s in w:
        d = digits.digit(v)
        if s == d:
            v += 1
        elif s < d:
            v = 1
        else:
            return None
        out.append(v)
    return out


def return_path(digits: DigitSequence, i: int, max_search: int = 10**6):
    """Shortest label word leading from v_i back to v_1 (empty for i = 1)."""
    if i == 1:
        return ()
    j = i
    path = []
    while digits.digit(j) == 0:
        path.append(0)
        j += 1
        if j - i > max_search:  # pragma: no cover
            raise PrecisionError("no nonzero digit found within search bound")
    path.append(0)  # drop edge below the first nonzero digit
    return tuple(path)


def tau(digits: DigitSequence, M: int) -> int:
    """Max over i <= M of the shortest return-path length from v_i to v_1."""
    if M < 1:
        raise InputError("level M must be >= 1")
    return max(len(return_path(digits, i)) for i in range(1, M + 1))


class Decomposition:
    """Classifier triple (C^p, G, C^s) with level-M fattening G(M)."""

    cp_empty = True

    def in_G(self, w: Word) -> bool:
        raise NotImplementedError

    def in_Cs(self, w: Word) -> bool:
        raise NotImplementedError

    def in_Cp(self, w: Word) -> bool:
        return False  # prefixes unused for one-sided examples

    def in_GM(self, w: Word, M: int) -> bool:
        """True iff w = g s with g in G and s in C^s, |s| <= M."""
        for j in range(len(w), max(-1, len(w) - M - 1), -1):
            if self.in_G(w[:j]) and self.in_Cs(w[j:]):
                return True
        return False

    def tau(self, M: int) -> int:
        raise NotImplementedError

    def split(self, w: Word):
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


class TrivialDecomposition(Decomposition):
    """G = L with a fixed specification gap (full shifts, SFTs with spec)."""

    def __init__(self, model, t: int = 0):
        self.model = model
        self.t = t

    def in_G(self, w):
        return self.model.contains(w)

    def in_Cs(self, w):
        return len(w) == 0

    def in_GM(self, w, M):
        return self.model.contains(w)

    def tau(self, M):
        return self.t

    def split(self, w):
        return w, ()

    def describe(self):
        return f"trivial:t={self.t}"


class BasicBetaDecomposition(Decomposition):
    """G = return loops to v_1, C^s = prefixes of the digit sequence."""

    def __init__(self, digits: DigitSequence):
        self.digits = digits

    def in_G(self, w):
        return follower_vertex(self.digits, w) == 1

    def in_Cs(self, w):
        return w == self.digits.prefix(len(w))

    def in_GM(self, w, M):
        v = follower_vertex(self.digits, w)
        return v is not None and v <= M

    def terminal_vertex(self, w):
        return follower_vertex(self.digits, w)

    def tau(self, M):
        return tau(self.digits, M)

    def split(self, w: Word):
        """Split at the last visit to v_1: unique (g, s) with minimal suffix."""
        vs = walk_vertices(self.digits, w)
        if vs is None:
            raise InputError(f"word {w} not admissible")
        j = max(i for i, v in enumerate(vs) if v == 1)
        return w[:j], w[j:]

    def describe(self):
        return "basic"


class RefinedBetaDecomposition(Decomposition):
    """Good words end at v_1 with nonzero last symbol, or end at v_2.

    Suffixes are digit-prefix * letter * 0^l (full or shifted-by-one digit
    prefix) or a bare block of 0s.
    """

    def __init__(self, digits: DigitSequence):
        self.digits = digits

    def in_G(self, w):
        v = follower_vertex(self.digits, w)
        if v is None:
            return False
        if len(w) == 0:
            return True
        if v == 1 and w[-1] != 0:
            return True
        return v == 2

    def cs_component(self, w: Word):
        """1/2/3 for membership in C^{s,1..3}, else None."""
        if all(c == 0 for c in w):
            return 3
        core = w
        while core and core[-1] == 0:
            core = core[:-1]
        m = len(core) - 1  # digit-prefix length before the free letter
        if m >= 1 and core[:m] == self.digits.prefix(m):
            return 1
        if m >= 1:
            shifted = tuple(self.digits.digit(j) for j in range(2, m + 2))
            if core[:m] == shifted:
                return 2
        return None

    def in_Cs(self, w):
        return self.cs_component(w) is not None

    def tau(self, M):
        # words of G(M) terminate within the first M+2 vertices
        return tau(self.digits, M + 2)

    def split(self, w: Word):
        for j in range(len(w), -1, -1):
            if self.in_G(w[:j]) and self.in_Cs(w[j:]):
                return w[:j], w[j:]
        raise InputError(f"word {w} admits no refined decomposition")

    def describe(self):
        return "refined"


def classify(digits: DigitSequence, dec: Decomposition, w: Word) -> dict:
    """Classification report: G membership, minimal G(M) level, split."""
    v = follower_vertex(digits, w)
    if v is None:
        raise InputError(f"word {w} not admissible")
    g, s = dec.split(w)
    level = None
    if isinstance(dec, BasicBetaDecomposition):
        level = v
    else:
        for M in range(0, len(w) + 1):
            if dec.in_GM(w, M):
                level = M
                break
    return {"in_G": dec.in_G(w), "in_GM_level": level, "split": (g, s)}


def tau_and_glue(digits: DigitSequence, M: int, words) -> dict:
    """Glue G(M)-words with connecting words of length exactly tau_M.

    Each connector is the shortest return path from the terminal vertex,
    padded with 0s at v_1.  The period check closes the cycle with one more
    connector and tests the periodic word.
    """
    t = tau(digits, M)
    model = BetaShift(digits)
    glued = []
    connectors = []
    for w in words:
        v = follower_vertex(digits, w)
        if v is None or v > M:
            raise InputError(f"word {w} is not in G({M})")
        ret = return_path(digits, v)
        pad = ret + (0,) * (t - len(ret))
        connectors.append(pad)
        glued.append(w)
    pieces = []
    for i, w in enumerate(glued):
        pieces.append(w)
        if i < len(glued) - 1:
            pieces.append(connectors[i])
    joined = tuple(c for p in pieces for c in p)
    cycle = joined + connectors[-1] if glued else ()
    period_check = model.is_periodic_word(cycle) if cycle else True
    return {"tau": t, "glued": joined, "period_check": period_check}

"""Finite words, word sets and subshift membership/enumeration oracles.

Words are plain tuples of small nonnegative ints.  Lexicographic order on
tuples is the single canonical order everywhere; enumeration output is always
sorted and duplicate-free.

Three model variants are provided:

* ``FullShift(b)``           -- every word over {0..b-1} is admissible.
* ``SFT(b, forbidden)``      -- no forbidden word occurs as a factor.
* ``BetaShift(digits)``      -- every suffix is lexicographically <= the
  maximal digit sequence (greedy beta-expansion of 1, or the kneading
  sequence of an interval map).  ``digits`` is any object with the
  ``DigitSequence`` interface from :mod:`eqstates.beta`.
"""

from __future__ import annotations

import itertools

from .errors import BudgetError, InputError, PrecisionError

Word = tuple  # tuple of ints

DEFAULT_BUDGET = 10**7

# horizon multiplier for certifying periodic-orbit admissibility in beta shifts
PERIODIC_HORIZON_FACTOR = 4
PERIODIC_HORIZON_CAP = 4096


def word_from_string(s: str) -> Word:
    """Parse '0110' or '0,1,1,0' into a word tuple."""
    s = s.strip()
    if "," in s:
        return tuple(int(t) for t in s.split(","))
    return tuple(int(c) for c in s)


def word_to_string(w: Word, alphabet_size: int = 2) -> str:
    if alphabet_size <= 10:
        return "".join(str(c) for c in w)
    return ",".join(str(c) for c in w)


def rotations(w: Word):
    return [w[i:] + w[:i] for i in range(len(w))]


class SubshiftModel:
    """Membership + enumeration oracle for a one-sided shift space."""

    alphabet_size: int

    def check_symbols(self, w: Word) -> None:
        for c in w:
            if not (0 <= c < self.alphabet_size):
                raise InputError(
                    f"symbol {c} outside alphabet [0, {self.alphabet_size})"
                )

    def contains(self, w: Word) -> bool:
        raise NotImplementedError

    # -- incremental interface used by prefix-tree enumeration ---------------
    # A state summarises everything needed to decide admissible one-symbol
    # extensions.  child(state, s) returns the successor state or None.

    def initial_state(self):
        raise NotImplementedError

    def child(self, state, s: int):
        raise NotImplementedError

    def enumerate_words(self, n: int, budget: int = DEFAULT_BUDGET) -> list:
        """All admissible words of length n, lexicographically sorted."""
        if n < 0:
            raise InputError("length must be >= 0")
        out = []
        stack = [((), self.initial_state())]
        while stack:
            w, state = stack.pop()
            if len(w) == n:
                out.append(w)
                if len(out) > budget:
                    raise BudgetError(f"enumeration budget {budget} exceeded at n={n}")
                continue
            # push children in reverse so pops come out lexicographically
            for s in range(self.alphabet_size - 1, -1, -1):
                st = self.child(state, s)
                if st is not None:
                    stack.append((w + (s,), st))
        return out

    def count_words(self, n: int, budget: int = DEFAULT_BUDGET) -> int:
        return len(self.enumerate_words(n, budget))

    def is_periodic_word(self, w: Word) -> bool:
        """True iff the periodic sequence w^inf lies in the shift space."""
        raise NotImplementedError

    def periodic_words(self, n: int, budget: int = DEFAULT_BUDGET) -> list:
        if n < 1:
            raise InputError("period must be >= 1")
        return [w for w in self.enumerate_words(n, budget) if self.is_periodic_word(w)]

    def extend_minimal(self, w: Word, length: int) -> Word:
        """Lexicographically minimal admissible extension of w to `length`."""
        state = self.initial_state()
        for s in w:
            state = self.child(state, s)
            if state is None:
                raise InputError(f"word {w} not admissible")
        out = list(w)
        while len(out) < length:
            for s in range(self.alphabet_size):
                st = self.child(state, s)
                if st is not None:
                    out.append(s)
                    state = st
                    break
            else:  # pragma: no cover - every admissible word is extendable
                raise InputError(f"word {tuple(out)} has no admissible extension")
        return tuple(out)

    def describe(self) -> str:
        raise NotImplementedError


class FullShift(SubshiftModel):
    def __init__(self, b: int):
        if b < 2:
            raise InputError("alphabet size must be >= 2")
        self.alphabet_size = b

    def contains(self, w: Word) -> bool:
        self.check_symbols(w)
        return True

    def initial_state(self):
        return 0

    def child(self, state, s):
        return 0 if 0 <= s < self.alphabet_size else None

    def is_periodic_word(self, w: Word) -> bool:
        return True

    def enumerate_words(self, n, budget=DEFAULT_BUDGET):
        if n < 0:
            raise InputError("length must be >= 0")
        if self.alphabet_size**n > budget:
            raise BudgetError(f"enumeration budget {budget} exceeded at n={n}")
        return [w for w in itertools.product(range(self.alphabet_size), repeat=n)]

    def describe(self):
        return f"full:{self.alphabet_size}"


class SFT(SubshiftModel):
    """Shift of finite type given by a list of forbidden words."""

    def __init__(self, b: int, forbidden):
        if b < 1:
            raise InputError("alphabet size must be >= 1")
        self.alphabet_size = b
        self.forbidden = sorted({tuple(f) for f in forbidden})
        for f in self.forbidden:
            if len(f) == 0:
                raise InputError("forbidden words must be nonempty")
            self.check_symbols(f)
        self.maxlen = max((len(f) for f in self.forbidden), default=1)

    def contains(self, w: Word) -> bool:
        self.check_symbols(w)
        for f in self.forbidden:
            k = len(f)
            for i in range(len(w) - k + 1):
                if w[i : i + k] == f:
                    return False
        return True

    # state: last (maxlen - 1) symbols
    def initial_state(self):
        return ()

    def child(self, state, s):
        if not (0 <= s < self.alphabet_size):
            return None
        ext = state + (s,)
        for f in self.forbidden:
            if len(ext) >= len(f) and ext[-len(f) :] == f:
                return None
        return ext[-(self.maxlen - 1) :] if self.maxlen > 1 else ()

    def is_periodic_word(self, w: Word) -> bool:
        reps = -(-self.maxlen // len(w)) + 1  # enough copies to expose every window
        return self.contains(w * reps)

    def describe(self):
        words = ";".join(word_to_string(f, self.alphabet_size) for f in self.forbidden)
        return f"sft:{self.alphabet_size}:{words}"


def _compare_periodic_vs_digits(rot: Word, digits, horizon: int):
    """Sign of (rot^inf - digit sequence), or 0 if tied through `horizon`."""
    n = len(rot)
    for j in range(horizon):
        d = digits.digit(j + 1)
        c = rot[j % n]
        if c != d:
            return -1 if c < d else 1
    return 0


class BetaShift(SubshiftModel):
    """Shift defined by a lexicographically maximal digit sequence."""

    def __init__(self, digits):
        self.digits = digits
        self.alphabet_size = digits.alphabet_size

    def contains(self, w: Word) -> bool:
        self.check_symbols(w)
        self.digits.ensure(len(w))
        for k in range(len(w)):
            for j in range(len(w) - k):
                d = self.digits.digit(j + 1)
                c = w[k + j]
                if c < d:
                    break
                if c > d:
                    return False
        return True

    # state: current follower vertex (1-based); matches prefix digits of depth
    # state-1.  Admissible next symbols at vertex i: 0..digit(i).
    def initial_state(self):
        return 1

    def child(self, state, s):
        if not (0 <= s < self.alphabet_size):
            return None
        d = self.digits.digit(state)
        if s == d:
            return state + 1
        if s < d:
            return 1
        return None

    def is_periodic_word(self, w: Word) -> bool:
        if not self.contains(w):
            return False
        n = len(w)
        horizon = max(PERIODIC_HORIZON_FACTOR * n, 16)
        for rot in rotations(w):
            while True:
                period = self.digits.exact_period()
                if period is not None:
                    pre, per = period
                    # two eventually periodic sequences agreeing this far agree forever
                    bound = pre + n * per + n + per
                    self.digits.ensure(bound)
                    if _compare_periodic_vs_digits(rot, self.digits, bound) > 0:
                        return False
                    break
                self.digits.ensure(horizon)
                cmp = _compare_periodic_vs_digits(rot, self.digits, horizon)
                if cmp > 0:
                    return False
                if cmp < 0:
                    break
                if horizon >= PERIODIC_HORIZON_CAP:
                    raise PrecisionError(
                        f"tie with digit sequence persists past horizon "
                        f"{horizon}; extend the expansion"
                    )
                horizon *= 2
        return True

    def describe(self):
        return f"beta:{self.digits.describe()}"


def dump_wordset(words, alphabet_size: int = 2) -> str:
    """One word per line; digits if the alphabet fits, comma-separated otherwise."""
    return "\n".join(word_to_string(w, alphabet_size) for w in words)

"""Brute-force gluing checks for specification with a fixed gap size.

Everything here is finite: verdicts only ever mean "verified for the word
lengths given" and say so.  Three variants, from weakest to strongest:
  W   connector v with |v| <= t makes w1 v w2 admissible;
  S   connector of length exactly t;
  Per as S, plus a closing connector of length t making the whole cycle a
      periodic point of the shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional

from .errors import InputError
from .words import DEFAULT_BUDGET, SubshiftModel, Word

VARIANTS = ("W", "S", "Per")


@dataclass
class SpecVerdict:
    variant: str
    t: int
    holds: bool
    witnesses: list  # (w1, v, w2) triples; for Per the closing word rides along
    counterexample: Optional[tuple]
    checked_pairs: int
    total_pairs: int
    n_range: tuple

    @property
    def coverage(self) -> float:
        return self.checked_pairs / self.total_pairs if self.total_pairs else 1.0

    @property
    def partial(self) -> bool:
        return self.checked_pairs < self.total_pairs

    def describe(self) -> str:
        tag = "holds" if self.holds else "fails"
        scope = f"verified up to n={self.n_range[-1]}"
        if self.partial:
            scope += f" (partial, coverage {self.coverage:.2f})"
        return f"({self.variant}) t={self.t}: {tag}, {scope}"


def _connectors(model: SubshiftModel, t: int, variant: str):
    lengths = range(t + 1) if variant == "W" else [t]
    for l in lengths:
        yield from product(range(model.alphabet_size), repeat=l)


def _glue_pair(model: SubshiftModel, w1: Word, w2: Word, t: int, variant: str):
    """Connector making w1 v w2 admissible (and the cycle periodic for Per)."""
    for v in _connectors(model, t, variant):
        joined = w1 + v + w2
        if not model.contains(joined):
            continue
        if variant != "Per":
            return v, None
        for u in _connectors(model, t, "S"):
            cyc = joined + u
            if model.is_periodic_word(cyc):
                return v, u
    return None


def check_specification(
    model: SubshiftModel,
    classifier: Optional[Callable[[Word], bool]],
    n_range: Iterable[int],
    t: int,
    variant: str,
    pair_budget: int = 20000,
    word_budget: int = DEFAULT_BUDGET,
) -> SpecVerdict:
    if variant not in VARIANTS:
        raise InputError(f"variant must be one of {VARIANTS}")
    n_range = tuple(n_range)
    words = []
    for n in n_range:
        for w in model.enumerate_words(n, word_budget):
            if classifier is None or classifier(w):
                words.append(w)
    total = len(words) * len(words)
    pairs = [(a, b) for a in words for b in words]
    if total > pair_budget:
        # deterministic thinning by lexicographic rank: fixed stride
        stride = -(-total // pair_budget)
        pairs = pairs[::stride]
    holds = True
    witnesses = []
    counterexample = None
    checked = 0
    for w1, w2 in pairs:
        got = _glue_pair(model, w1, w2, t, variant)
        checked += 1
        if got is None:
            holds = False
            counterexample = (w1, w2)
            break
        witnesses.append((w1, got[0], w2) if got[1] is None else (w1, got[0], w2, got[1]))
    return SpecVerdict(
        variant=variant,
        t=t,
        holds=holds,
        witnesses=witnesses,
        counterexample=counterexample,
        checked_pairs=checked,
        total_pairs=total,
        n_range=n_range,
    )


def min_gap(
    model: SubshiftModel,
    classifier: Optional[Callable[[Word], bool]],
    n_range: Iterable[int],
    variant: str,
    t_max: int = 8,
    pair_budget: int = 20000,
):
    """Least t in [0, t_max] for which the check passes, else None."""
    n_range = tuple(n_range)
    for t in range(t_max + 1):
        v = check_specification(model, classifier, n_range, t, variant, pair_budget)
        if v.holds:
            return t, v
    return None, None


def dump_witnesses(verdict: SpecVerdict, limit: int = 50):
    from .words import word_to_string as s

    lines = []
    for wit in verdict.witnesses[:limit]:
        if len(wit) == 3:
            w1, v, w2 = wit
            lines.append(f"{s(w1)} | {s(v)} | {s(w2)}")
        else:
            w1, v, w2, u = wit
            lines.append(f"{s(w1)} | {s(v)} | {s(w2)} | close {s(u)}")
    return lines

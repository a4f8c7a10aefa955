"""Finite approximations to equilibrium states.

Two constructions: weights on periodic words proportional to the exponential
of the Birkhoff sum around the cycle, and the Cesaro averaging of a weighted
point mass on one representative per cylinder.  Both expose cylinder-mass
queries; the weak-Gibbs report compares masses against e^{phi_n - n P}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional

from .errors import InputError, PrecisionError
from .potentials import PotentialSpec
from .pressure import PressureBracket
from .words import DEFAULT_BUDGET, SubshiftModel, Word, word_to_string


@dataclass
class Atom:
    word: Word  # construction word
    offset: int  # shift offset into the representative sequence
    weight: float
    periodic: bool

    @property
    def atom_id(self) -> str:
        base = word_to_string(self.word)
        if self.periodic:
            return f"({base})^inf"
        return f"x({base})+{self.offset}"


@dataclass
class EmpiricalMeasure:
    kind: str  # "PeriodicOrbit" | "Cesaro"
    n: int
    model: SubshiftModel
    pot: PotentialSpec
    atoms: List[Atom] = field(default_factory=list)
    weight_width: float = 0.0  # max bracket width of the weight exponents

    @property
    def total(self) -> float:
        return math.fsum(a.weight for a in self.atoms)

    def normalize(self):
        z = self.total
        if z <= 0:
            raise InputError("cannot normalize a zero-mass measure")
        for a in self.atoms:
            a.weight /= z
        return self

    def _atom_prefix(self, atom: Atom, length: int) -> Word:
        need = atom.offset + length
        if atom.periodic:
            w = atom.word
            reps = -(-need // len(w))
            seq = w * reps
        else:
            seq = self.model.extend_minimal(atom.word, need)
            if len(seq) < need:
                raise PrecisionError(
                    f"representative of {atom.word} not extendable to {need}"
                )
        return seq[atom.offset : atom.offset + length]

    def cylinder_mass(self, u: Word) -> float:
        u = tuple(u)
        return math.fsum(
            a.weight for a in self.atoms if self._atom_prefix(a, len(u)) == u
        )

    def dump_json_lines(self) -> List[str]:
        import json

        return [
            json.dumps({"atom": a.atom_id, "weight": a.weight}, sort_keys=True)
            for a in self.atoms
        ]


def cylinder_mass(meas: EmpiricalMeasure, u: Word) -> float:
    return meas.cylinder_mass(u)


def periodic_orbit_measure(
    model: SubshiftModel,
    pot: PotentialSpec,
    n: int,
    budget: int = DEFAULT_BUDGET,
) -> EmpiricalMeasure:
    """Weight e^{S_n phi(w^inf)} on each length-n periodic word, normalized."""
    per = model.periodic_words(n, budget)
    if not per:
        raise InputError(f"no periodic words of length {n}")
    meas = EmpiricalMeasure(kind="PeriodicOrbit", n=n, model=model, pot=pot)
    width = 0.0
    for w in per:
        iv = pot.periodic_birkhoff(model, w)
        width = max(width, iv.hi - iv.lo)
        meas.atoms.append(
            Atom(word=w, offset=0, weight=math.exp(0.5 * (iv.lo + iv.hi)), periodic=True)
        )
    meas.weight_width = width
    return meas.normalize()


def cesaro_measure(
    model: SubshiftModel,
    pot: PotentialSpec,
    n: int,
    budget: int = DEFAULT_BUDGET,
) -> EmpiricalMeasure:
    """nu_n weights e^{phi_n(w)} on minimal-extension representatives; the
    returned measure is the average of nu_n pushed through shifts 0..n-1."""
    words = model.enumerate_words(n, budget)
    if not words:
        raise InputError(f"no words of length {n}")
    meas = EmpiricalMeasure(kind="Cesaro", n=n, model=model, pot=pot)
    width = 0.0
    for w in words:
        iv = pot.sup_interval(model, w)
        width = max(width, iv.hi - iv.lo)
        base = math.exp(iv.hi)
        for k in range(n):
            meas.atoms.append(Atom(word=w, offset=k, weight=base / n, periodic=False))
    meas.weight_width = width
    return meas.normalize()


@dataclass
class GibbsReport:
    M: int
    n: int
    rows: list  # (word, mass, ratio_lo, ratio_hi)
    zero_mass: list
    min_lo: Optional[float]
    max_hi: Optional[float]

    def dump_csv_lines(self) -> List[str]:
        out = ["word,ratio_lo,ratio_hi"]
        for w, _, lo, hi in self.rows:
            out.append(f"{word_to_string(w)},{lo!r},{hi!r}")
        return out


def gibbs_report(
    meas: EmpiricalMeasure,
    pot: PotentialSpec,
    phat: PressureBracket,
    dec,
    M: int,
    n: int,
    budget: int = DEFAULT_BUDGET,
) -> GibbsReport:
    """Per-word intervals for mu([w]) e^{n P - phi_n(w)} over level-M words."""
    rows, zero_mass = [], []
    model = meas.model
    for w in model.enumerate_words(n, budget):
        if not dec.in_GM(w, M):
            continue
        mass = meas.cylinder_mass(w)
        if mass <= 0:
            zero_mass.append(w)
            continue
        iv = pot.sup_interval(model, w)
        lo = mass * math.exp(n * phat.lower - iv.hi)
        hi = mass * math.exp(n * phat.upper - iv.lo)
        rows.append((w, mass, lo, hi))
    min_lo = min((r[2] for r in rows), default=None)
    max_hi = max((r[3] for r in rows), default=None)
    return GibbsReport(M=M, n=n, rows=rows, zero_mass=zero_mass, min_lo=min_lo, max_hi=max_hi)

"""Pressure brackets and equilibrium-state constructions on shift spaces.

Subpackage map:
  words         subshift models (full shifts, SFTs, beta-type shifts)
  beta          exact beta arithmetic, greedy expansions, decompositions
  potentials    interval-valued Birkhoff potentials and grid splittings
  pressure      certified partition sums and pressure brackets
  speccheck     brute-force specification (gluing) checks
  measures      periodic-orbit and Cesaro measures, Gibbs-ratio reports
  interval_maps piecewise expanding maps, kneading, intermittent family
  suites        named invariant suites shared by tests and `eqstates verify`
"""

__version__ = "0.1.0"

from .beta import (
    BasicBetaDecomposition,
    BetaExpansion,
    RefinedBetaDecomposition,
    TrivialDecomposition,
    greedy_expansion,
    parse_beta,
    return_path,
    tau,
)
from .errors import BudgetError, InputError, PrecisionError
from .interval_maps import (
    BetaTransformMap,
    DifferencePotential,
    GeometricPotential,
    MPMap,
    cylinder_interval,
    diagnostics,
    itinerary,
    kneading_sequence,
    mp_decompose,
    pressure_curve,
    symbolic_model,
    transfer_envelope_upper,
    x_ladder,
)
from .measures import (
    EmpiricalMeasure,
    cesaro_measure,
    cylinder_mass,
    gibbs_report,
    periodic_orbit_measure,
)
from .potentials import (
    GridCoefficients,
    GridLevelDecomposition,
    GridPotential,
    LocallyConstant,
    PhiInterval,
    ScaledPotential,
    SumPotential,
    ZeroPotential,
    grid_bowen_criterion,
    minimal_forbidden_words,
    phi_n,
    variation_diagnostic,
)
from .pressure import (
    PressureBracket,
    condition_III_diagnostic,
    gap_checks,
    partition_sum,
    pressure_bracket,
    variation_bound,
)
from .speccheck import check_specification, dump_witnesses, min_gap
from .suites import SUITES, run_suite
from .words import SFT, BetaShift, FullShift, word_from_string, word_to_string

__all__ = [
    "BasicBetaDecomposition",
    "BetaExpansion",
    "BetaShift",
    "BetaTransformMap",
    "BudgetError",
    "DifferencePotential",
    "EmpiricalMeasure",
    "FullShift",
    "GeometricPotential",
    "GridCoefficients",
    "GridLevelDecomposition",
    "GridPotential",
    "InputError",
    "LocallyConstant",
    "MPMap",
    "PhiInterval",
    "PrecisionError",
    "PressureBracket",
    "RefinedBetaDecomposition",
    "SFT",
    "SUITES",
    "ScaledPotential",
    "SumPotential",
    "TrivialDecomposition",
    "ZeroPotential",
    "cesaro_measure",
    "check_specification",
    "condition_III_diagnostic",
    "cylinder_interval",
    "cylinder_mass",
    "diagnostics",
    "dump_witnesses",
    "gap_checks",
    "gibbs_report",
    "greedy_expansion",
    "grid_bowen_criterion",
    "itinerary",
    "kneading_sequence",
    "min_gap",
    "minimal_forbidden_words",
    "mp_decompose",
    "parse_beta",
    "partition_sum",
    "periodic_orbit_measure",
    "phi_n",
    "pressure_bracket",
    "pressure_curve",
    "return_path",
    "run_suite",
    "symbolic_model",
    "tau",
    "transfer_envelope_upper",
    "variation_bound",
    "variation_diagnostic",
    "word_from_string",
    "word_to_string",
    "x_ladder",
]

"""Exact, budgeted tooling for regressive pair colorings and their thresholds.

The package has four mathematical layers and a command line front end:

* :mod:`.hierarchy` - metered evaluation of a square-root-paced fast-growing
  hierarchy and the Ackermann approximations, with certified lower bounds on
  budget overrun and early-exit threshold comparisons;
* :mod:`.coloring` - orbit ladders, level distances, and the explicit
  regressive pair coloring they induce on [4k^2, F(k, 4k^2));
* :mod:`.search` - exhaustive and branch-and-bound searches for maximum
  min-homogeneous subsets, exact forced-threshold decisions on {1..N}, and
  DIMACS CNF export of the avoidance problem;
* :mod:`.reduction` - the two-color triple lift and its pigeonhole bounds.
"""

__version__ = "0.1.0"

from .coloring import (
    BudgetExhausted,
    ColorCode,
    Construction,
    ConstructionParams,
    Interval,
    Ladder,
    build_ladder,
    cantor_pair,
    cantor_unpair,
    construction_interval,
    verify_regressive,
    verify_sqrt_bound,
)
from .hierarchy import (
    EvalBudget,
    EvalResult,
    MonotoneReport,
    Tristate,
    ackermann_value,
    bounded_value,
    exceeds_threshold,
    hierarchy_iterate,
    hierarchy_value,
    isqrt_half,
    verify_monotone,
)
from .reduction import (
    BlueBoundReport,
    TripleColor,
    TripleColoring,
    blue_bound_check,
    extract_min_homog,
    lift_to_triples,
)
from .search import (
    CnfDocument,
    MinHomogWitness,
    NuCertificate,
    PairColoring,
    SearchLimitExceeded,
    SearchOutcome,
    brute_force_max,
    export_cnf,
    is_min_homogeneous,
    max_min_homog,
    nu_decision,
    nu_value,
    random_regressive,
)

__all__ = [
    "BlueBoundReport",
    "BudgetExhausted",
    "CnfDocument",
    "ColorCode",
    "Construction",
    "ConstructionParams",
    "EvalBudget",
    "EvalResult",
    "Interval",
    "Ladder",
    "MinHomogWitness",
    "MonotoneReport",
    "NuCertificate",
    "PairColoring",
    "SearchLimitExceeded",
    "SearchOutcome",
    "TripleColor",
    "TripleColoring",
    "Tristate",
    "ackermann_value",
    "blue_bound_check",
    "bounded_value",
    "brute_force_max",
    "build_ladder",
    "cantor_pair",
    "cantor_unpair",
    "construction_interval",
    "exceeds_threshold",
    "export_cnf",
    "extract_min_homog",
    "hierarchy_iterate",
    "hierarchy_value",
    "is_min_homogeneous",
    "isqrt_half",
    "lift_to_triples",
    "max_min_homog",
    "nu_decision",
    "nu_value",
    "random_regressive",
    "verify_monotone",
    "verify_regressive",
    "verify_sqrt_bound",
]

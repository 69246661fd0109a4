"""Critical hole sizes for periodic points of beta-transformations.

For beta in {2, golden ratio, tribonacci} this package computes, in exact
arithmetic over Q(beta), the largest hole [0, t) whose survivor set still
contains a point of smallest period p - by exhaustive search, by the known
critical words, and by closed forms - and cross-checks the three paths.
"""

from .expansions import (
    AdmissibilityReport,
    greedy_digits,
    is_admissible,
    orbit_min,
    quasi_greedy_digits,
    survives,
    t_beta,
)
from .numberfield import (
    BetaContext,
    BetaKind,
    FieldElement,
    eval_eventually_periodic,
    eval_periodic,
    make_context,
)
from .survivor import (
    CrossCheckReport,
    SurvivorRecord,
    brute_force_S,
    closed_form,
    cross_check,
    limit_value,
    theorem_word,
)
from .words import (
    PeriodicSeq,
    lex_compare,
    lex_min_rotation,
    primitive_representatives,
    rotations,
    shift,
    smallest_period,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "BetaContext",
    "BetaKind",
    "CrossCheckReport",
    "FieldElement",
    "PeriodicSeq",
    "SurvivorRecord",
    "brute_force_S",
    "closed_form",
    "cross_check",
    "eval_eventually_periodic",
    "eval_periodic",
    "greedy_digits",
    "is_admissible",
    "lex_compare",
    "lex_min_rotation",
    "limit_value",
    "make_context",
    "orbit_min",
    "primitive_representatives",
    "quasi_greedy_digits",
    "rotations",
    "shift",
    "smallest_period",
    "survives",
    "t_beta",
    "theorem_word",
]

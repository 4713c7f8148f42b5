"""Exact computations with covers of the integers by residue classes.

Covering numbers are the n for which Z can be covered by residue classes
with distinct moduli greater than one, all dividing n; primitive covering
numbers have no covering proper divisor.  The package verifies covers
exactly, builds explicit covers from exponent plans, decides (primitive)
covering numbers by complete backtracking search with exact filters, and
enumerates minimal covers and primitive covering numbers.
"""

from .cache import DecisionCache
from .catalog import (
    CatalogEntry,
    PrimitiveCatalog,
    admissible_ordering,
    enumerate_primitive,
    full_divisor_set_check,
)
from .construct import (
    ExponentPlan,
    PlanPreconditionError,
    build_cover,
    build_cover_ordered,
    covering_condition,
    covering_condition_ordered,
    family_number,
    greedy_exponents,
    plan_for_exponents,
    primitive_plan,
)
from .decide import (
    DecisionRecord,
    SearchBudget,
    decide_covering,
    density_filter,
    divisor_count_bound_holds,
    enumerate_minimal_covers,
    is_primitive_covering,
    totient_filter,
    znam_simpson_holds,
)
from .numtheory import (
    Factorization,
    crt_solve,
    divisors,
    factor,
    is_prime,
    mycielski,
    num_divisors,
    phi,
    sigma,
)
from .search import BudgetExceeded, NodeTracker, enumerate_irredundant, find_cover
from .systems import (
    CoverReport,
    CoverSystem,
    ResidueClass,
    SieveBoundExceeded,
    coprime_totient_sum,
    density_without_top,
    total_density,
    verify_cover,
)

__all__ = [
    "BudgetExceeded",
    "CatalogEntry",
    "CoverReport",
    "CoverSystem",
    "DecisionCache",
    "DecisionRecord",
    "ExponentPlan",
    "Factorization",
    "NodeTracker",
    "PlanPreconditionError",
    "PrimitiveCatalog",
    "ResidueClass",
    "SearchBudget",
    "SieveBoundExceeded",
    "admissible_ordering",
    "build_cover",
    "build_cover_ordered",
    "coprime_totient_sum",
    "covering_condition",
    "covering_condition_ordered",
    "crt_solve",
    "decide_covering",
    "density_filter",
    "density_without_top",
    "divisor_count_bound_holds",
    "divisors",
    "enumerate_irredundant",
    "enumerate_minimal_covers",
    "enumerate_primitive",
    "factor",
    "family_number",
    "find_cover",
    "full_divisor_set_check",
    "greedy_exponents",
    "is_prime",
    "is_primitive_covering",
    "mycielski",
    "num_divisors",
    "phi",
    "plan_for_exponents",
    "primitive_plan",
    "sigma",
    "total_density",
    "totient_filter",
    "verify_cover",
    "znam_simpson_holds",
]

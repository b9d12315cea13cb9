"""Exact tools for the k-sum multiset reconstruction problem.

The package answers, with exact rational arithmetic throughout, when a
multiset of n numbers is determined by the multiset of its k-element
sums: symmetric-function identities linking the power sums of the k-sums
to those of the base set, an elimination pipeline that reduces the
(n, k) = (12, 4) case to a quadratic, residual checks certifying known
ambiguous pairs, and a bounded exhaustive collision search.
"""

from .algebra import (
    Monomial,
    Poly,
    Rational,
    UnboundVariableError,
    Var,
    evar,
    parse_rational,
    svar,
)
from .elimination import (
    EliminationTables,
    NonLinearPivotError,
    QuadraticInS6,
    build_elimination_tables,
    coefficient_report,
    fourteenth_quadratic,
    quadratic_at,
    residual_equation_indices,
    residual_relations,
    second_root,
    s7_linear_condition,
    solve_quadratic,
)
from .known import COLLISION_FIRST, COLLISION_PAIR, COLLISION_SECOND, DOUBLE_ROOT_SET
from .multisets import (
    BadKError,
    NumberMultiset,
    PowerSumVector,
    SumMultiset,
    affine_image,
    as_multiset,
    canonical_orbit,
    format_multiset,
    ksums,
    multiset_equal,
    normalize_affine,
    parse_multiset,
    power_sum,
    power_sum_vector,
)
from .search import (
    CollisionRecord,
    SearchSpec,
    collision_class_key,
    dedupe_records,
    enumerate_candidates,
    find_collisions,
    verify_record,
)
from .symfunc import (
    BadRangeError,
    TooManyPartsError,
    composition,
    e_expansion,
    e_power_sums,
    elementary_in_power_sums,
    identity_fixture_lines,
    load_identity_fixtures,
    macmahon_reduce,
    monomial_power_sum_direct,
    newton_extend,
    partitions_max_parts,
    reduce_high_powers,
    reduce_monomial,
)

__version__ = "1.0.0"

__all__ = [
    "BadKError",
    "BadRangeError",
    "COLLISION_FIRST",
    "COLLISION_PAIR",
    "COLLISION_SECOND",
    "CollisionRecord",
    "DOUBLE_ROOT_SET",
    "EliminationTables",
    "Monomial",
    "NonLinearPivotError",
    "NumberMultiset",
    "Poly",
    "PowerSumVector",
    "QuadraticInS6",
    "Rational",
    "SearchSpec",
    "SumMultiset",
    "TooManyPartsError",
    "UnboundVariableError",
    "Var",
    "affine_image",
    "as_multiset",
    "build_elimination_tables",
    "canonical_orbit",
    "coefficient_report",
    "collision_class_key",
    "composition",
    "dedupe_records",
    "e_expansion",
    "e_power_sums",
    "elementary_in_power_sums",
    "enumerate_candidates",
    "evar",
    "find_collisions",
    "format_multiset",
    "fourteenth_quadratic",
    "identity_fixture_lines",
    "ksums",
    "load_identity_fixtures",
    "macmahon_reduce",
    "monomial_power_sum_direct",
    "multiset_equal",
    "newton_extend",
    "normalize_affine",
    "parse_multiset",
    "parse_rational",
    "partitions_max_parts",
    "power_sum",
    "power_sum_vector",
    "quadratic_at",
    "reduce_high_powers",
    "reduce_monomial",
    "residual_equation_indices",
    "residual_relations",
    "second_root",
    "s7_linear_condition",
    "solve_quadratic",
    "svar",
    "verify_record",
]

"""Distinct-entry tuple sets over finite groups.

For a finite group G and arity k, the set of k-tuples with pairwise
distinct entries sits inside the direct power G^k.  This package counts
and enumerates those sets, decides whether they generate the power,
builds the Cayley graphs they define, analyzes their linear span over
prime fields, and audits the rebasing quotient onto identity-free
tuples.  The `confset` CLI wraps it all in deterministic reports.
"""

from ._version import __version__
from .cayley import (
    CayleyGraph,
    build_cayley,
    component_summary,
    connected_components,
    distance_from_identity,
    distances_from_identity,
    export_dot,
    factorization_to_path,
    path_to_factorization,
    shortest_path_from_identity,
)
from .closure import (
    SubgroupCarrier,
    abelian_norm_obstruction,
    closure,
    diagonal_subgroup,
    factor_diagonal_k2,
    factor_standard_generator,
    index,
    is_generating,
)
from .configsets import (
    augmented_config_property,
    config_contains,
    config_count,
    config_iter,
    falling_factorial,
    format_tuple_set,
    has_configuration_property,
    norm,
    norm_is_homomorphism,
    project,
    punctured_config_count,
    punctured_config_iter,
    standard_generators,
)
from .errors import GroupSpecError, OracleDisagreement, OrderCapExceeded
from .groups import (
    CyclicGroup,
    DihedralGroup,
    DirectPowerGroup,
    DirectProductGroup,
    Group,
    SymmetricGroup,
    TableGroup,
    build_group,
    direct_power,
    hom_power_transport,
    parse_group_spec,
    perm_rank,
    perm_unrank,
    tuple_inv,
    tuple_mul,
    verify_homomorphism,
)
from .modp import (
    BasisReport,
    ModPMatrix,
    claimed_basis,
    config_matrix,
    config_span_dim,
    dependent_columns_demo,
    norm_kernel_embedding,
    norm_kernel_membership,
    solve_homogeneous,
    span_contains,
)
from .punctured import (
    FiberSet,
    QuotientAudit,
    fiber,
    literal_quotient_audit,
    orbit_quotient_check,
    product_bijection_check,
    rebase,
    rebase_homomorphism_iff_abelian,
    rebase_image_check,
)
from .report import (
    AnalysisReport,
    CheckEntry,
    run_analyze,
    run_cayley,
    run_punctured,
    run_verify_all,
    run_zp,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

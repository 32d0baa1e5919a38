"""Exact combinatorics of non-crossing partitions and rooted trees, with the
pre-Lie calculus of multilinear functionals and all directed conversions
among moments and free, Boolean and monotone cumulants."""

from .cumulants import (
    CumulantFamily,
    boolean_from_free,
    boolean_from_monotone,
    convert,
    cumulants_from_moments,
    free_from_boolean,
    free_from_monotone,
    moments_from,
    monotone_from_boolean,
    monotone_from_free,
)
from .partitions import (
    BlockSubset,
    MonotonePartition,
    NCPartition,
    enumerate_monotone_irr,
    enumerate_nc,
    enumerate_nc_irr,
    irreducible_components,
    is_interval,
    min_max_lt,
    monotone_count_partition,
    nesting_forest,
    nesting_lt,
    sub_families,
    v_components,
)
from .prelie import (
    Functional,
    PreLieMonomial,
    TruncationError,
    effective_degree,
    eval_blocks,
    exp_left,
    left_power,
    magnus,
    magnus_inverse,
    prelie_product,
    right_power,
)
from .trees import (
    Forest,
    RootedTree,
    TreeParseError,
    bernoulli,
    encode_tree,
    forest_factorial,
    leaf_removals,
    monotone_count,
    omega,
    omega_forest,
    omega_k,
    omega_recursive,
    parse_tree,
    tree_factorial,
    trees_of_size,
    trees_up_to,
)

__version__ = "0.1.0"

__all__ = [
    "BlockSubset",
    "CumulantFamily",
    "Forest",
    "Functional",
    "MonotonePartition",
    "NCPartition",
    "PreLieMonomial",
    "RootedTree",
    "TreeParseError",
    "TruncationError",
    "bernoulli",
    "boolean_from_free",
    "boolean_from_monotone",
    "convert",
    "cumulants_from_moments",
    "effective_degree",
    "encode_tree",
    "enumerate_monotone_irr",
    "enumerate_nc",
    "enumerate_nc_irr",
    "eval_blocks",
    "exp_left",
    "forest_factorial",
    "free_from_boolean",
    "free_from_monotone",
    "irreducible_components",
    "is_interval",
    "leaf_removals",
    "left_power",
    "magnus",
    "magnus_inverse",
    "min_max_lt",
    "moments_from",
    "monotone_count",
    "monotone_count_partition",
    "monotone_from_boolean",
    "monotone_from_free",
    "nesting_forest",
    "nesting_lt",
    "omega",
    "omega_forest",
    "omega_k",
    "omega_recursive",
    "parse_tree",
    "prelie_product",
    "right_power",
    "sub_families",
    "tree_factorial",
    "trees_of_size",
    "trees_up_to",
    "v_components",
]

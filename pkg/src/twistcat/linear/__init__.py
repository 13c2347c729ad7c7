"""Exact-rational linear structures: algebras, coalgebras, bialgebras and linear categories."""

from .constructions import (
    algebra_twisting_as_simple,
    assemble_coalgebra_map,
    bialgebra_category,
    double_cross_product,
    flip_twisting,
    linear_twisted_product,
    linearize,
    matched_pair_twisting_map,
    smash_product,
    smash_twisting_data,
    split_coalgebra_map,
    tensor_algebra,
    tensor_bialgebra,
    tensor_coalgebra,
    twisted_tensor_algebra,
    twisting_map_actions,
    validate_bialgebra_matched_pair,
    validate_coalgebra_map,
    validate_linear_simple_twisting,
    validate_twisting_map,
)
from .matrix import KRONECKER_CONVENTION, format_rational, matrix, rational
from .structures import (
    FinDimAlgebra,
    FinDimBialgebra,
    FinDimCoalgebra,
    HModuleAction,
    LinearCategory,
    group_algebra,
    group_like_coalgebra,
    trivial_action,
    truncated_polynomial,
    validate_algebra,
    validate_bialgebra,
    validate_coalgebra,
    validate_linear_category,
    validate_linear_structure,
    validate_module_category,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Finite categories, twisting systems and twisted tensor products, with exact linear analogues."""

from .category import (
    FiniteCategory,
    Functor,
    Morphism,
    find_isomorphism,
    from_group,
    from_monoid,
    from_preorder,
    identity_functor,
    is_groupoid,
    is_thin,
    subcategory,
    validate_category,
    wide_subcategory_check,
)
from .errors import (
    AxiomError,
    FactorizationError,
    MalformedError,
    NotGroupoidError,
    NotThinError,
    SearchSpaceError,
    ShapeError,
    TwistcatError,
    ValidationReport,
    Violation,
)
from .product import (
    Factorization,
    TwistedProduct,
    bicrossed_groupoid_inverse,
    check_factorization,
    derive_twisting,
    semidirect_matched_pair,
    semidirect_product,
    twisted_tensor_product,
)
from .thin import (
    BracketFunction,
    bracket_to_twisting,
    compute_T,
    construct_CST,
    default_poset_bracket,
    enumerate_brackets,
    twisting_to_bracket,
    validate_bracket,
    validate_poset_bracket,
)
from .twisting import (
    MatchedPair,
    SimpleTwisting,
    TwistingSystem,
    enumerate_twisting_systems,
    extract_simple,
    iter_twisting_systems,
    matched_pair_to_twisting,
    sample_twisting_system,
    twisting_search_bound,
    twisting_to_matched_pair,
    validate_matched_pair,
    validate_twisting_system,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

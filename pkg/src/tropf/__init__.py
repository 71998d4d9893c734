"""Exact cluster-pattern mutation, tropical points, pointed elements and F-invariants."""

from .errors import (
    DimensionError,
    DirectionError,
    InvalidExtension,
    InvariantBreach,
    MissingConstantTerm,
    NegativeCoefficientAt,
    NonExactDivision,
    NotAClusterMonomial,
    NotAMonomial,
    NotCompatible,
    NotFullRank,
    NotPointed,
    NotPointedAt,
    NotSkewSymmetrizable,
    ParseError,
    TropfError,
    TropicalMismatchAt,
)
from .invariant import (
    check_seed_independence,
    f_compatibility_degree,
    f_invariant,
    is_log_canonical,
    is_product_cluster_monomial,
    pairing,
    poisson_bracket,
    trop_eval,
)
from .laurent import LaurentPoly, exact_divide, format_laurent, multiply, parse_laurent, substitute_monomials
from .pointed import (
    DominanceOrder,
    c_matrix,
    certificate_at,
    certify_good,
    certify_pointed,
    detect_cluster_monomial,
    dominance_leq,
    g_matrix,
)
from .seeds import (
    CompatiblePair,
    MutationMatrix,
    RootConfig,
    Seed,
    YSeed,
    build_lambda,
    check_compatible_pair,
    e_matrix,
    f_matrix,
    find_skew_symmetrizer,
    mutate_matrix,
    mutate_pair,
    mutate_seed,
    mutate_yseed,
    yhat_variables,
)
from .tropical import (
    TropicalPointX,
    TropicalPointY,
    are_compatible,
    transport_x,
    transport_y,
    uplus,
    x_to_y,
    y_to_x,
)

__version__ = "0.1.0"

__all__ = [
    "CompatiblePair",
    "DimensionError",
    "DirectionError",
    "DominanceOrder",
    "InvalidExtension",
    "InvariantBreach",
    "LaurentPoly",
    "MissingConstantTerm",
    "MutationMatrix",
    "NegativeCoefficientAt",
    "NonExactDivision",
    "NotAClusterMonomial",
    "NotAMonomial",
    "NotCompatible",
    "NotFullRank",
    "NotPointed",
    "NotPointedAt",
    "NotSkewSymmetrizable",
    "ParseError",
    "RootConfig",
    "Seed",
    "TropfError",
    "TropicalMismatchAt",
    "TropicalPointX",
    "TropicalPointY",
    "YSeed",
    "are_compatible",
    "build_lambda",
    "c_matrix",
    "certificate_at",
    "certify_good",
    "certify_pointed",
    "check_compatible_pair",
    "check_seed_independence",
    "detect_cluster_monomial",
    "dominance_leq",
    "e_matrix",
    "exact_divide",
    "f_compatibility_degree",
    "f_invariant",
    "f_matrix",
    "find_skew_symmetrizer",
    "format_laurent",
    "g_matrix",
    "is_log_canonical",
    "is_product_cluster_monomial",
    "multiply",
    "mutate_matrix",
    "mutate_pair",
    "mutate_seed",
    "mutate_yseed",
    "pairing",
    "parse_laurent",
    "poisson_bracket",
    "substitute_monomials",
    "transport_x",
    "transport_y",
    "trop_eval",
    "uplus",
    "x_to_y",
    "y_to_x",
    "yhat_variables",
]

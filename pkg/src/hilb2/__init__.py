"""Exact intersection-theory calculator for P^{n[2]}, the Hilbert scheme of
two points on projective n-space.

Everything is exact: coefficients are arbitrary-precision rationals and no
floating point enters any computation.  See the README for an overview and
the ``hilb2`` command line tool for the same functionality from a shell.
"""

from .chow import (
    BasisId,
    BasisSymbol,
    Family,
    GradedClass,
    chow_rank,
    enumerate_basis,
    linear_combine,
    validate_symbol,
)
from .chern_secant import (
    SecantProblem,
    TautBundle,
    chern_taut,
    secant_degree,
    secant_degree_mu_closed,
    secant_degree_mu_intersection,
    secant_oracle,
)
from .errors import (
    Hilb2Error,
    InvalidExponent,
    InvalidGrading,
    InvalidIndex,
    InvalidInput,
    MixedAmbient,
    NotComplementary,
    NotHomogeneous,
    ParseError,
    UnsupportedBasisPair,
    UnsupportedError,
    UnsupportedFamily,
    UnsupportedFamilyPair,
    UnsupportedMonomial,
    UnsupportedTerm,
    ValidationError,
    WrongBasis,
)
from .fixed_points import (
    IdealKind,
    MonomialIdealDescriptor,
    bb_cell_of,
    enumerate_fixed_points,
)
from .pairing import (
    DEFAULT_CONFIG,
    IntersectionMatrix,
    PairingConfig,
    dual_generator,
    effectivity_pairings,
    has_complementary_indices,
    intersection_matrix,
    is_effective,
    is_nef,
    pair_classes,
    pair_symbols,
    partner_indices,
)
from .products import (
    MonomialSpec,
    bprime_top_power,
    eval_monomial,
    mul_bprime_top,
    mul_c_top,
    to_ms,
)
from .serialize import (
    class_to_json,
    emit_class,
    format_class,
    format_symbol,
    parse_class,
    parse_symbol,
)

__version__ = "0.1.0"

__all__ = [
    "BasisId",
    "BasisSymbol",
    "DEFAULT_CONFIG",
    "Family",
    "GradedClass",
    "Hilb2Error",
    "IdealKind",
    "IntersectionMatrix",
    "InvalidExponent",
    "InvalidGrading",
    "InvalidIndex",
    "InvalidInput",
    "MixedAmbient",
    "MonomialIdealDescriptor",
    "MonomialSpec",
    "NotComplementary",
    "NotHomogeneous",
    "PairingConfig",
    "ParseError",
    "SecantProblem",
    "TautBundle",
    "UnsupportedBasisPair",
    "UnsupportedError",
    "UnsupportedFamily",
    "UnsupportedFamilyPair",
    "UnsupportedMonomial",
    "UnsupportedTerm",
    "ValidationError",
    "WrongBasis",
    "bb_cell_of",
    "bprime_top_power",
    "chern_taut",
    "chow_rank",
    "class_to_json",
    "dual_generator",
    "effectivity_pairings",
    "emit_class",
    "enumerate_basis",
    "enumerate_fixed_points",
    "eval_monomial",
    "format_class",
    "format_symbol",
    "has_complementary_indices",
    "intersection_matrix",
    "is_effective",
    "is_nef",
    "linear_combine",
    "mul_bprime_top",
    "mul_c_top",
    "pair_classes",
    "pair_symbols",
    "parse_class",
    "parse_symbol",
    "partner_indices",
    "secant_degree",
    "secant_degree_mu_closed",
    "secant_degree_mu_intersection",
    "secant_oracle",
    "to_ms",
    "validate_symbol",
]

"""Index of reducibility, decompositions and socles of monomial ideals."""

from .asymptotics import (
    NotStabilized,
    RationalPolynomial,
    ResourceCapExceeded,
    ScanReport,
    analytic_spread,
    ass_stabilization,
    fit_polynomial,
    ir_polynomial,
    ir_sequence,
    mu_sequence,
    symbolic_ir_polynomial,
    symbolic_power,
)
from .core import (
    IdealError,
    MonomialIdeal,
    ParseError,
    VariableSet,
    colon,
    contains,
    intersect,
    minimalize,
    multiply,
    parse_ideal,
    power,
    radical,
    saturate,
    standard_monomials_below,
    sum_ideals,
)
from .decomposition import (
    Decomposition,
    IrreducibleComponent,
    PrimaryComponent,
    PrimeSupport,
    associated_primes,
    bight,
    canonical_primary_decomposition,
    embedded_primes,
    ir_at_prime,
    ir_components,
    irreducible_decomposition,
    is_irredundant_primary_decomposition,
    is_maximal_embedded_component,
    minimal_primes,
)
from .socle import ir, ir_socle, localize_at, socle_dimension_at

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "analytic_spread",
    "ass_stabilization",
    "associated_primes",
    "bight",
    "canonical_primary_decomposition",
    "colon",
    "contains",
    "Decomposition",
    "embedded_primes",
    "fit_polynomial",
    "IdealError",
    "intersect",
    "ir",
    "ir_at_prime",
    "ir_components",
    "ir_polynomial",
    "ir_sequence",
    "ir_socle",
    "irreducible_decomposition",
    "IrreducibleComponent",
    "is_irredundant_primary_decomposition",
    "is_maximal_embedded_component",
    "localize_at",
    "minimal_primes",
    "minimalize",
    "MonomialIdeal",
    "mu_sequence",
    "multiply",
    "NotStabilized",
    "parse_ideal",
    "ParseError",
    "power",
    "PrimaryComponent",
    "PrimeSupport",
    "radical",
    "RationalPolynomial",
    "ResourceCapExceeded",
    "saturate",
    "ScanReport",
    "socle_dimension_at",
    "standard_monomials_below",
    "sum_ideals",
    "symbolic_ir_polynomial",
    "symbolic_power",
    "VariableSet",
]

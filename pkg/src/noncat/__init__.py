"""Classify complete local rings K[[x1..xv]]/I by which local domains and
unique factorization domains can have them as completions, with checkable
witnesses: minimal and associated primes, noncatenarity profiles, depth
certificates and saturated avoidance chains."""

from .analyzer import (
    AnalysisConfig,
    AnalysisReport,
    UfdWitness,
    analyze,
    check_domain_completion,
    check_forced_catenary,
    check_noncat_domain,
    check_noncat_ufd,
    check_regularity_at_min,
    check_ufd_completion,
    check_universal_catenarity_obstruction,
    find_ufd_witness_prime,
)
from .dsl import Script, parse_script, render_script
from .errors import (
    BudgetExceededError,
    ChainInfeasibleError,
    ContextMismatchError,
    DegenerateInputError,
    EmptyLocalizationError,
    FamilyParameterError,
    NoncatError,
    ParseError,
    UnitIdealError,
    UnsupportedInputError,
)
from .families import FamilySpec, expected_mismatches, instantiate
from .groebner import DepthResult, IdealHandle, buchberger, s_polynomial
from .monomial import MonomialIdeal, MonomialPrime
from .poly import (
    GREVLEX,
    LEX,
    FieldDescriptor,
    Monomial,
    Polynomial,
    RingPresentation,
    VariableContext,
    compare_monomials,
    divide,
    variables,
)
from .spectra import (
    PrimeChain,
    SpecPoset,
    build_poset,
    chain_dot,
    construct_chain,
    noncat_profile,
    poset_dot,
    verify_chain,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig", "AnalysisReport", "UfdWitness", "analyze",
    "check_domain_completion", "check_forced_catenary", "check_noncat_domain",
    "check_noncat_ufd", "check_regularity_at_min", "check_ufd_completion",
    "check_universal_catenarity_obstruction", "find_ufd_witness_prime",
    "Script", "parse_script", "render_script",
    "BudgetExceededError", "ChainInfeasibleError", "ContextMismatchError",
    "DegenerateInputError", "EmptyLocalizationError", "FamilyParameterError",
    "NoncatError", "ParseError", "UnitIdealError", "UnsupportedInputError",
    "FamilySpec", "expected_mismatches", "instantiate",
    "DepthResult", "IdealHandle", "buchberger", "s_polynomial",
    "MonomialIdeal", "MonomialPrime",
    "GREVLEX", "LEX", "FieldDescriptor", "Monomial", "Polynomial",
    "RingPresentation", "VariableContext", "compare_monomials", "divide",
    "variables",
    "PrimeChain", "SpecPoset", "build_poset", "chain_dot", "construct_chain",
    "noncat_profile", "poset_dot", "verify_chain",
]

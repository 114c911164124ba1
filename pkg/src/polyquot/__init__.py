"""Monomial ideals: exchange properties, linear quotients, tight bivariate
structure, and capped-ideal extension chains."""

from .ideal import (
    DEGREE_GUARD,
    DegreeGuardError,
    Monomial,
    MonomialIdeal,
    ZeroIdealError,
    bounded_compositions,
    colon_by_monomial,
    compositions,
    contains,
    deflate,
    graded_component,
    maximal_ideal,
    minimalize,
    product,
    translate,
    unit_ideal,
    veronese,
    zero_ideal,
)
from .exchange import (
    ComponentCheck,
    DualExchangeViolationError,
    ExchangeCheck,
    ExchangeWitness,
    NotEquigeneratedError,
    NotPolymatroidalError,
    exchange_walk,
    is_componentwise_polymatroidal,
    is_componentwise_sep,
    is_polymatroidal,
    satisfies_nonpure_dual_exchange,
    satisfies_nonpure_exchange,
    satisfies_strong_exchange,
)
from .quotients import (
    BUDGET_EXCEEDED,
    DEFAULT_BUDGET,
    EXHAUSTED,
    FOUND,
    AdmissibilityCheck,
    ComponentwiseLQ,
    GeneratorOrder,
    SearchOutcome,
    extends_by_linear_quotients,
    find_admissible_order,
    has_componentwise_linear_quotients,
    is_admissible_order,
    order_colon_variables,
)
from .bivariate import (
    NOT_TIGHT,
    STRICT_YX_TIGHT,
    X_TIGHT,
    XY_TIGHT,
    Y_TIGHT,
    StructuralCheck,
    TightClass,
    classify_tight,
    cwp_structural,
    lex_order,
    tight_factorization,
    valley_order,
)
from .chains import (
    ChainVerificationError,
    ExtensionChain,
    ReconstructionError,
    VeroneseSpec,
    chain_absorb_maximal_ideal,
    chain_absorb_monomial,
    chain_absorb_variable,
    chain_raise_caps,
    concat_chains,
    sep_admissible_order,
    sep_factorization,
    translate_chain,
    verify_chain,
)
from .textio import IdealFormatError, ParsedIdeal, parse_ideal, parse_ideal_details, serialize_ideal

__version__ = "0.1.0"

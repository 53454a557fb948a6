"""Finite-model engine for graded commutative rings and modules.

Builds explicit-table carriers, decides the graded prime-family predicates
with re-checkable witnesses, and stress-tests a catalog of claims over
enumerated instance corpora.
"""

from .core import (
    AlgebraicSubset,
    BoundExceededError,
    CarrierError,
    ConstructionError,
    EngineError,
    FiniteModule,
    FiniteRing,
    IntegrityError,
    build_module,
    build_ring,
    colon_into_module,
    colon_into_ring,
    cyclic_ring,
    explicit_module,
    explicit_ring,
    group_ring,
    product_module,
    product_ring,
    ring_as_module,
    span,
    subset_product,
)
from .grading import (
    GradedModule,
    GradedRing,
    GradingError,
    GradingGroup,
    component_of,
    graded_ideals,
    graded_module,
    graded_radical_ideal,
    graded_radical_submodule,
    graded_ring,
    graded_submodules,
    graded_zero_divisors,
    homogeneous_of,
    is_graded_subset,
    validate_grading,
)
from .predicates import (
    ImproperComponentError,
    ImproperIdealError,
    ImproperSubmoduleError,
    Verdict,
    Witness,
    is_e_ie_prime_ideal,
    is_g_ie_prime,
    is_g_prime,
    is_graded_ie_prime,
    is_graded_prime,
    is_graded_weakly_prime,
    is_multiplication,
)
from .constructions import (
    Localization,
    MultiplicativeSet,
    MultiplicativeSetError,
    NotMultiplicationError,
    direct_product,
    element_product,
    localize,
    multiplicative_closure,
    quotient_module,
    submodule_product,
)
from .claims import (
    CLAIM_IDS,
    DEFAULT_REQUIRED,
    ClaimReport,
    CorpusConfig,
    Instance,
    MissingExtrasError,
    SuiteConfig,
    SuiteReport,
    check_claim,
    enumerate_corpus,
    run_suite,
    verify_witness,
)

__version__ = "0.1.0"

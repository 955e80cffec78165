"""
qbch: BCH codes, their dual-containment thresholds and the quantum codes
they yield, with a brute-force oracle that checks every formula.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BchError,
    CoefficientOutsideSubfield,
    DeltaOutOfRange,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    HypothesisViolated,
    NotApplicable,
    NotCoprime,
    NotNested,
    NotPrime,
    NotPrimePower,
    WrongOrder,
)
from .gf import FieldElement, FieldSpec, Polynomial, extension_field, field_create, field_of_order  # noqa: E402
from .cyclotomic import all_cosets, context, coset, defining_set, multiplicative_order  # noqa: E402
from .duality import (  # noqa: E402
    ThresholdReport,
    euclid_exact_threshold,
    euclid_necessary,
    euclid_order_one_threshold,
    euclid_sufficient,
    euclidean_dual_containing,
    hermitian_dual_containing,
    hermitian_family_bound,
    hermitian_sufficient,
    kappa,
    threshold_report,
)
from .bch import (  # noqa: E402
    BchCode,
    construct,
    dimension_formula,
    farr_verdict,
    generator_matrix,
    generator_polynomial,
    parity_check_matrix,
)
from .quantum import (  # noqa: E402
    QuantumCodeParams,
    css_general,
    euclid_css,
    expanded_family,
    hermitian_family,
    nested_css,
)

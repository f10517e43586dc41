"""Exact analysis of Boolean nested canalizing functions.

Truth tables and algebraic normal forms, the unique canonical layer
decomposition, certificate complexity and sensitivity (closed form and
brute force), symmetry classification, and exhaustive enumeration
cross-validated against closed-form counts.
"""

from .core import (
    MAX_TABLE_ARITY,
    BooleanFunction,
    GuardExceededError,
    InvalidInputError,
    NcflabError,
    ParseError,
    Word,
    index_of,
    word_at,
    words,
)
from .anf import AnfPolynomial
from .ncf import (
    LayerDecomposition,
    NcfClassification,
    NotNcfReason,
    canalizing_pairs,
    compose,
    decompose,
    format_decomposition,
    layer_structure,
    parse_decomposition,
)
from .complexity import (
    MAX_BLOCK_SENSITIVITY_ARITY,
    MAX_CERTIFICATE_ARITY,
    CertificateWitness,
    ComplexityProfile,
    block_sensitivity,
    cert_profile,
    certificate_at,
    ncf_cert_formula,
    sensitivity,
    sensitivity_at,
)
from .symmetry import (
    MAX_AUTOMORPHISM_ARITY,
    NcfSymmetryChecks,
    SymmetryPartition,
    SymmetryReport,
    cycle_notation,
    equivalent,
    is_strongly_asymmetric,
    ncf_symmetry_checks,
    partition,
    symmetry_level,
    symmetry_report,
)
from .enumeration import (
    MAX_ENUMERATION_ARITY,
    CheckResult,
    CountTable,
    VerificationReport,
    count_by_layers,
    count_s_symmetric,
    count_strongly_asym_max_layers,
    count_table,
    count_total,
    enumerate_ncfs,
    layer_structures,
    pell_like,
    s_symmetric_triple_sum,
    strongly_asymmetric_structure_sum,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "AnfPolynomial",
    "BooleanFunction",
    "CertificateWitness",
    "CheckResult",
    "ComplexityProfile",
    "CountTable",
    "GuardExceededError",
    "InvalidInputError",
    "LayerDecomposition",
    "MAX_AUTOMORPHISM_ARITY",
    "MAX_BLOCK_SENSITIVITY_ARITY",
    "MAX_CERTIFICATE_ARITY",
    "MAX_ENUMERATION_ARITY",
    "MAX_TABLE_ARITY",
    "NcfClassification",
    "NcfSymmetryChecks",
    "NcflabError",
    "NotNcfReason",
    "ParseError",
    "SymmetryPartition",
    "SymmetryReport",
    "VerificationReport",
    "Word",
    "block_sensitivity",
    "canalizing_pairs",
    "cert_profile",
    "certificate_at",
    "compose",
    "count_by_layers",
    "count_s_symmetric",
    "count_strongly_asym_max_layers",
    "count_table",
    "count_total",
    "cycle_notation",
    "decompose",
    "enumerate_ncfs",
    "equivalent",
    "format_decomposition",
    "index_of",
    "is_strongly_asymmetric",
    "layer_structure",
    "layer_structures",
    "ncf_cert_formula",
    "ncf_symmetry_checks",
    "parse_decomposition",
    "partition",
    "pell_like",
    "s_symmetric_triple_sum",
    "sensitivity",
    "sensitivity_at",
    "strongly_asymmetric_structure_sum",
    "symmetry_level",
    "symmetry_report",
    "verify",
    "word_at",
    "words",
]

"""Generalized tensor transforms: fast n-fold tensor powers of a small
unitary, the matching continuous basis functions, compression and filtering
protocols simulated at the statevector level, and a fidelity-driven angle
optimizer for function encoding."""

from .basis import (
    SeriesExpansion,
    eval_basis,
    eval_normalized_basis,
    sample_matrix,
    series_coefficients,
    series_reconstruct,
)
from .core import (
    DEFAULT_DENSE_CAP,
    UNITARITY_TOL,
    GTTOperator,
    OpCounter,
    dense_gtt_matrix,
    dft_matrix,
    digit_counts,
    gtt_apply,
    gtt_element,
    gtt_inverse_apply,
    hadamard,
    make_base_matrix,
    u3,
)
from .encode import (
    EncodingReport,
    U3Params,
    compare_transforms,
    default_restarts,
    discretize_midpoints,
    encode_fidelity,
    optimize_theta,
)
from .errors import (
    BadCutoff,
    BadK,
    BadSampleCount,
    BadSelection,
    BadShape,
    DomainError,
    EmptySelection,
    GTTError,
    IndexOutOfRange,
    LengthMismatch,
    NotNormalized,
    NotUnitary,
    TooLarge,
    ZeroVector,
)
from .protocols import (
    CompressionResult,
    FilterOutput,
    QuantumSimOutcome,
    SparseSelection,
    compress_fully_quantum,
    compress_hybrid,
    fidelity,
    filter_natural,
    make_selection,
    reconstruct_from_classical,
    top_k_indices,
)
from .signals import builtin_signal, perturbed_polynomial

__version__ = "1.0.0"

__all__ = [
    "BadCutoff",
    "BadK",
    "BadSampleCount",
    "BadSelection",
    "BadShape",
    "CompressionResult",
    "DEFAULT_DENSE_CAP",
    "DomainError",
    "EmptySelection",
    "EncodingReport",
    "FilterOutput",
    "GTTError",
    "GTTOperator",
    "IndexOutOfRange",
    "LengthMismatch",
    "NotNormalized",
    "NotUnitary",
    "OpCounter",
    "QuantumSimOutcome",
    "SeriesExpansion",
    "SparseSelection",
    "TooLarge",
    "U3Params",
    "UNITARITY_TOL",
    "ZeroVector",
    "builtin_signal",
    "compare_transforms",
    "compress_fully_quantum",
    "compress_hybrid",
    "default_restarts",
    "dense_gtt_matrix",
    "dft_matrix",
    "digit_counts",
    "discretize_midpoints",
    "encode_fidelity",
    "eval_basis",
    "eval_normalized_basis",
    "fidelity",
    "filter_natural",
    "gtt_apply",
    "gtt_element",
    "gtt_inverse_apply",
    "hadamard",
    "make_base_matrix",
    "make_selection",
    "optimize_theta",
    "perturbed_polynomial",
    "reconstruct_from_classical",
    "sample_matrix",
    "series_coefficients",
    "series_reconstruct",
    "top_k_indices",
    "u3",
]

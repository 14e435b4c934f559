"""Welch-type inequalities for finite vector sets, via kernel Gram matrices.

The toolkit generates vector sets, evaluates polynomial and gaussian kernel
Gram matrices, checks the classical coherence / power-sum bounds together
with their rank and shifted generalizations, embeds vectors through the
explicit symmetric-tensor feature map, minimizes the frame potential, and
scans numerical Gram ranks against the predicted embedding dimensions.
"""

from .bounds import (
    BoundReport,
    CoherenceBound,
    coherence,
    coherence_report,
    generalized_report,
    gram_rank_report,
    power_sum_report,
    shifted_report,
    shifted_unit_report,
    sum_power_lhs,
    welch_coherence_bound,
    welch_sum_bound,
)
from .errors import (
    AllZeroVectorsError,
    CombinatorialOverflowError,
    DimensionMismatchError,
    InvalidConfigError,
    InvalidScanError,
    NoConvergenceError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
    NotUnitNormError,
    TooFewVectorsError,
    UnsupportedKernelError,
    WelchKitError,
)
from .features import (
    FeatureMatrix,
    binomial,
    embed_homogeneous,
    embed_shifted,
    embedding_dim,
    feature_matrix,
    monomial_basis,
    multinomial,
)
from .frames import (
    OptimizeResult,
    OptimizerConfig,
    frame_potential,
    minimize_frame_potential,
    orthonormal_frame,
    potential_gradient,
    random_unit_vectors,
    simplex_frame,
)
from .kernels import (
    GramMatrix,
    KernelSpec,
    VectorSet,
    eval_kernel,
    gram_matrix,
    inner_product,
)
from .linalg import (
    EigenSpectrum,
    clamp_psd,
    hermitian_eigenvalues,
    numerical_rank,
)
from .rank_scan import (
    DEFAULT_EPSILON,
    RankProfile,
    ScanResult,
    epsilon_rank_profile,
    rank_scan,
    scan_csv,
    scan_summary_dict,
)
from .serialize import (
    canonical_json,
    format_float,
    read_vector_set,
    write_vector_set,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroVectorsError",
    "BoundReport",
    "CoherenceBound",
    "CombinatorialOverflowError",
    "DEFAULT_EPSILON",
    "DimensionMismatchError",
    "EigenSpectrum",
    "FeatureMatrix",
    "GramMatrix",
    "InvalidConfigError",
    "InvalidScanError",
    "KernelSpec",
    "NoConvergenceError",
    "NotHermitianError",
    "NotPSDError",
    "NotSquareError",
    "NotUnitNormError",
    "OptimizeResult",
    "OptimizerConfig",
    "RankProfile",
    "ScanResult",
    "TooFewVectorsError",
    "UnsupportedKernelError",
    "VectorSet",
    "WelchKitError",
    "binomial",
    "canonical_json",
    "clamp_psd",
    "coherence",
    "coherence_report",
    "embed_homogeneous",
    "embed_shifted",
    "embedding_dim",
    "epsilon_rank_profile",
    "eval_kernel",
    "feature_matrix",
    "format_float",
    "frame_potential",
    "generalized_report",
    "gram_matrix",
    "gram_rank_report",
    "hermitian_eigenvalues",
    "inner_product",
    "minimize_frame_potential",
    "monomial_basis",
    "multinomial",
    "numerical_rank",
    "orthonormal_frame",
    "potential_gradient",
    "power_sum_report",
    "random_unit_vectors",
    "rank_scan",
    "read_vector_set",
    "scan_csv",
    "scan_summary_dict",
    "shifted_report",
    "shifted_unit_report",
    "simplex_frame",
    "sum_power_lhs",
    "welch_coherence_bound",
    "welch_sum_bound",
    "write_vector_set",
]

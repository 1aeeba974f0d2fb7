"""Stopping distances, stopping redundancy, and erasure-failure analysis
for small linear codes over GF(q)."""

from .bounds import (BoundEntry, BoundsReport, bounds_report,
                     combination_upper, coverage_lower, decaen_lower,
                     mds_bounds, rm_count_identity, rm_row_count,
                     rm_upper_bound, schonheim_lower)
from .construct import (NotMDSError, combination_pcm, direct_sum_pcm,
                        extend_pcm, full_dual_pcm, graham_sloane_partition,
                        mds_pcm, pruned_mds_pcm, rm_generator,
                        rm_stopping_pcm, uu_pcm,
                        weight_one_combination_depth)
from .erasure import (PeelOutcome, PsiProfile, failure_curve,
                      iterative_decode, ml_decode, psi_ml, psi_stop)
from .field import (FieldSpec, UnsupportedOrderError, make_field,
                    parse_symbol, render_symbol)
from .greedy import RedundancyResult, exact_stopping_redundancy, greedy_construct
from .linalg import (EnumerationTooLargeError, LinearCode, Matrix,
                     dual_codewords, enumerate_codewords, min_distance,
                     nullspace, rank)
from .stopping import (StoppingReport, covers, is_stopping_set,
                       stopping_distance, verify_full_stopping)

__all__ = [
    "BoundEntry", "BoundsReport", "EnumerationTooLargeError", "FieldSpec",
    "LinearCode", "Matrix", "NotMDSError", "PeelOutcome", "PsiProfile",
    "RedundancyResult", "StoppingReport", "UnsupportedOrderError",
    "bounds_report", "combination_pcm", "combination_upper",
    "coverage_lower", "covers", "decaen_lower", "direct_sum_pcm",
    "dual_codewords", "enumerate_codewords", "exact_stopping_redundancy",
    "extend_pcm", "failure_curve", "full_dual_pcm",
    "graham_sloane_partition", "greedy_construct", "is_stopping_set",
    "iterative_decode", "make_field", "mds_bounds", "mds_pcm",
    "min_distance", "ml_decode", "nullspace", "parse_symbol",
    "pruned_mds_pcm", "psi_ml", "psi_stop", "rank", "render_symbol",
    "rm_count_identity", "rm_generator", "rm_row_count",
    "rm_stopping_pcm", "rm_upper_bound", "schonheim_lower",
    "stopping_distance", "uu_pcm", "verify_full_stopping",
    "weight_one_combination_depth",
]

__version__ = "0.1.0"

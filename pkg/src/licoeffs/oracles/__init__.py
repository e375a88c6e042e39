"""Independent verification paths for the main pipeline: truncated sums
over published zeta-zero ordinates, Cauchy contour evaluation of the
defining derivative, limit-definition estimates of the constants, and
exact symbolic expansion with partition-count checks.

Nothing here shares code with the quantities it verifies beyond the
arbitrary-precision substrate and the shared contour extractor.
"""

from .zeros import ZeroTable, ZeroSumResult, lambda_from_zeros, parse_zero_table
from .cauchy import lambda_cauchy, log_xi_samples
from .limits import eta_limit_estimate, gamma_limit_estimate, von_mangoldt_sieve
from .symbolic import (
    SymbolicPoly,
    eval_symbolic,
    expand_eta_symbolic,
    expand_lambda_osc_symbolic,
    partition_count,
    term_count,
)

__all__ = [
    "ZeroTable",
    "ZeroSumResult",
    "lambda_from_zeros",
    "parse_zero_table",
    "lambda_cauchy",
    "log_xi_samples",
    "eta_limit_estimate",
    "gamma_limit_estimate",
    "von_mangoldt_sieve",
    "SymbolicPoly",
    "eval_symbolic",
    "expand_eta_symbolic",
    "expand_lambda_osc_symbolic",
    "partition_count",
    "term_count",
]
